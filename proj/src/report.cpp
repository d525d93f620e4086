#include "mrg/report.hpp"

#include <cstdio>
#include <sstream>

namespace mrg {

namespace {

using nlohmann::json;

template <typename T>
json opt_string(const std::optional<T>& v) {
  return v ? json(to_string(*v)) : json(nullptr);
}

json one_based(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

json places_json(const PlaceSet& s) {
  json arr = json::array();
  for (const auto& v : s.places()) arr.push_back(v.to_string());
  return arr;
}

json ff_point_json(const FFPoint& p) {
  return {{"n", p.n},         {"G", p.G},       {"mu_G", p.mu_G}, {"term_exponents", p.term_exponents},
          {"min_term", p.min_term}, {"rhs", p.rhs}};
}

// Key/value block with keys padded to a common width.
class Table {
 public:
  void row(const std::string& k, const std::string& v) { rows_.emplace_back(k, v); }
  std::string str() const {
    std::size_t w = 0;
    for (const auto& [k, v] : rows_) w = std::max(w, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows_) os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string subsets_to_string(const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<std::string> parts;
  for (const auto& s : sets) {
    std::vector<std::string> idx;
    for (auto i : s) idx.push_back(std::to_string(i + 1));
    parts.push_back("{" + join(idx, ",") + "}");
  }
  return parts.empty() ? "-" : join(parts, " ");
}

std::string bool_str(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_log2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string point_to_string(const IntPoint& n) {
  std::vector<std::string> xs;
  for (long x : n) xs.push_back(std::to_string(x));
  return "(" + join(xs, ", ") + ")";
}

json to_json(const BoundReport& r) {
  return {{"name", r.name},
          {"mode", to_string(r.mode)},
          {"exact_value", opt_string(r.exact_value)},
          {"rational_value", opt_string(r.rational_value)},
          {"log2_value", r.log2_value ? json(round6(*r.log2_value)) : json(nullptr)},
          {"log_natural_exponent", opt_string(r.log_natural_exponent)},
          {"cofactor", opt_string(r.cofactor)},
          {"addend", opt_string(r.addend)},
          {"inputs", r.inputs}};
}

json to_json(const VerifyReport& r) {
  json out = {{"kind", r.kind},
              {"params", r.params},
              {"mode", r.mode ? json(to_string(*r.mode)) : json(nullptr)},
              {"counts", r.counts},
              {"pass", r.pass}};
  if (r.kind == "nf-enumeration") {
    json sols = json::array();
    for (const auto& s : r.solutions) {
      json p = {{"n", s.n}, {"G", to_string(s.G)}, {"lead", to_string(s.lead)}};
      if (r.classified) {
        p["in_S"] = one_based(s.in_S);
        json van = json::array(), mini = json::array();
        for (const auto& I : s.vanishing) van.push_back(one_based(I));
        for (const auto& I : s.minimal_vanishing) mini.push_back(one_based(I));
        p["vanishing"] = van;
        p["minimal_vanishing"] = mini;
        p["in_A"] = s.in_A.value_or(false);
      }
      sols.push_back(std::move(p));
    }
    out["solutions"] = std::move(sols);
    out["s1_points"] = r.s1_points;
    out["classified"] = r.classified;
    if (r.a_count) out["a_count"] = *r.a_count;
    if (r.a_bound) out["a_bound"] = to_json(*r.a_bound);
  } else {
    out["C5"] = opt_string(r.C5);
    out["C6"] = opt_string(r.C6);
    json v = json::array(), b = json::array();
    for (const auto& p : r.violations) v.push_back(ff_point_json(p));
    for (const auto& p : r.below_threshold) b.push_back(ff_point_json(p));
    out["violations"] = std::move(v);
    out["below_threshold"] = std::move(b);
    out["g_zero_points"] = r.g_zero_points;
  }
  return out;
}

json to_json(const BMReport& r) {
  return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"S", places_json(r.S)}, {"weighted_S", r.S.weighted_size()}, {"pass", r.pass}};
}

json to_json(const ZannierReport& r) {
  json per = json::array();
  for (const auto& [v, c] : r.per_place) per.push_back({{"place", v.to_string()}, {"contribution", c}});
  return {{"lhs", r.lhs},
          {"rhs", r.rhs},
          {"delta", r.delta.to_string()},
          {"S", places_json(r.S)},
          {"weighted_S", r.S.weighted_size()},
          {"per_place", per},
          {"pass", r.pass}};
}

json to_json(const Lemma61Report& r) {
  json b = json::array();
  for (const auto& x : r.bounds) b.push_back(to_string(x));
  return {{"alpha0", r.alpha0.to_string()}, {"bounds", b}, {"pass", r.pass}};
}

json to_json(const C7Report& r) {
  json pr = json::array(), dr = json::array();
  for (const auto& x : r.poly_roots) pr.push_back(to_string(x));
  for (const auto& x : r.delta_roots) dr.push_back(to_string(x));
  return {{"C11", r.c11}, {"C12", r.c12}, {"C7", r.c7}, {"poly_roots", pr}, {"delta_roots", dr}};
}

std::string to_text(const BoundReport& r) {
  Table t;
  t.row("name", r.name);
  t.row("mode", to_string(r.mode));
  if (r.exact_value) t.row("exact_value", to_string(*r.exact_value));
  if (r.log_natural_exponent) {
    t.row("form", "addend + exp(N) * cofactor");
    t.row("N", to_string(*r.log_natural_exponent));
    if (r.cofactor) t.row("cofactor", to_string(*r.cofactor));
    if (r.addend) t.row("addend", to_string(*r.addend));
  }
  t.row("log2_value", r.log2_value ? format_log2(*r.log2_value) : "-");
  for (const auto& [k, v] : r.inputs.items()) t.row("  " + k, v.is_string() ? v.get<std::string>() : v.dump());
  return t.str();
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  Table t;
  t.row("kind", r.kind);
  if (r.mode) t.row("mode", to_string(*r.mode));
  for (const auto& [k, v] : r.params.items()) t.row(k, v.is_string() ? v.get<std::string>() : v.dump());
  if (r.C5) t.row("C5", to_string(*r.C5));
  if (r.C6) t.row("C6", to_string(*r.C6));
  for (const auto& [k, v] : r.counts) t.row(k, std::to_string(v));
  if (r.a_bound) t.row("a_bound", r.a_bound->exact_value ? to_string(*r.a_bound->exact_value)
                                                          : "2^" + format_log2(*r.a_bound->log2_value));
  t.row("pass", bool_str(r.pass));
  os << t.str();

  if (r.kind == "nf-enumeration") {
    os << "\nsolutions\n";
    for (const auto& s : r.solutions) {
      os << "  " << point_to_string(s.n) << "  G = " << to_string(s.G);
      if (r.classified) {
        std::vector<std::string> si;
        for (auto i : s.in_S) si.push_back("S" + std::to_string(i + 1));
        os << "  in_A = " << bool_str(s.in_A.value_or(false)) << "  vanishing = " << subsets_to_string(s.vanishing)
           << "  minimal = " << subsets_to_string(s.minimal_vanishing);
        if (!si.empty()) os << "  " << join(si, ",");
      }
      os << '\n';
    }
    if (!r.s1_points.empty()) {
      os << "\nS1 points (designated coefficient vanishes)\n";
      for (const auto& n : r.s1_points) os << "  " << point_to_string(n) << '\n';
    }
  } else {
    auto dump = [&](const char* title, const std::vector<FFPoint>& pts) {
      if (pts.empty()) return;
      os << '\n' << title << '\n';
      for (const auto& p : pts) {
        std::vector<std::string> te;
        for (long x : p.term_exponents) te.push_back(std::to_string(x));
        os << "  " << point_to_string(p.n) << "  mu(G) = " << p.mu_G << "  > C6 + min = " << p.rhs
           << "  terms = [" << join(te, ", ") << "]  G = " << p.G << '\n';
      }
    };
    dump("violations", r.violations);
    dump("violations below the C5 threshold (informational)", r.below_threshold);
  }
  return os.str();
}

std::string to_text(const BMReport& r) {
  Table t;
  std::vector<std::string> s;
  for (const auto& v : r.S.places()) s.push_back(v.to_string());
  t.row("lhs", std::to_string(r.lhs));
  t.row("rhs", std::to_string(r.rhs));
  t.row("S", "{" + join(s, ", ") + "}");
  t.row("pass", bool_str(r.pass));
  return t.str();
}

std::string to_text(const ZannierReport& r) {
  Table t;
  t.row("delta", r.delta.to_string());
  for (const auto& [v, c] : r.per_place) t.row("  " + v.to_string(), std::to_string(c));
  t.row("lhs", std::to_string(r.lhs));
  t.row("rhs", std::to_string(r.rhs));
  t.row("pass", bool_str(r.pass));
  return t.str();
}

std::string to_text(const Lemma61Report& r) {
  Table t;
  std::vector<std::string> b;
  for (const auto& x : r.bounds) b.push_back(to_string(x));
  t.row("alpha0", r.alpha0.to_string());
  t.row("bounds", join(b, ", "));
  t.row("pass", bool_str(r.pass));
  return t.str();
}

}  // namespace mrg
