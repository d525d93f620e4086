// mrg: command-line front end for the multi-recurrence toolkit.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mrg/bounds.hpp"
#include "mrg/errors.hpp"
#include "mrg/independence.hpp"
#include "mrg/model.hpp"
#include "mrg/parse.hpp"
#include "mrg/place.hpp"
#include "mrg/report.hpp"
#include "mrg/verify.hpp"

using namespace mrg;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kNegative = 1, kUsage = 2;

struct Options {
  std::string spec_path;
  std::string epsilon;
  long box = -1;
  bool nonneg = false;
  std::string place;
  std::string mode = "conservative";
  std::optional<unsigned long> d, s;
  bool as_json = false;
  unsigned workers = 1;
  std::string field = "Q(z)";
  unsigned genus = 0;
  std::size_t r_idx = 0;
  bool r_idx_set = false;
  std::vector<std::string> extra_places;
  std::vector<std::string> exprs;
  std::vector<std::string> basis;
  std::string k;
  std::string which = "all";
  std::size_t term = 1;
};

Place parse_place(const std::string& text) {
  if (text == "inf") return Place::infinite();
  RatFunc f = parse_expr(text);
  if (!f.is_polynomial()) throw DomainError("place '" + text + "' is not a polynomial");
  return Place::finite(f.num());
}

Rational parse_epsilon(const std::string& text) {
  if (text.empty()) throw DomainError("--epsilon is required");
  Rational e = parse_rational(text);
  if (e <= 0) throw DomainError("epsilon must be positive");
  return e;
}

std::vector<RatFunc> parse_all(const std::vector<std::string>& xs) {
  std::vector<RatFunc> out;
  for (const auto& x : xs) out.push_back(parse_expr(x));
  return out;
}

IVec parse_ivec(const std::string& text) {
  IVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) throw DomainError("bad integer '" + item + "' in --k");
    out.push_back(v);
  }
  return out;
}

MultiRecSpec need_spec(const Options& o) {
  if (o.spec_path.empty()) throw DomainError("--spec is required");
  return load_spec_file(o.spec_path);
}

Box need_box(const Options& o) {
  if (o.box < 0) throw DomainError("--box is required");
  return Box{o.box, o.nonneg};
}

Place need_place(const Options& o) {
  if (o.place.empty()) throw DomainError("--place is required");
  return parse_place(o.place);
}

void emit(const Options& o, const json& doc, const std::string& text) {
  if (o.as_json)
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_height(const Options& o) {
  if (o.exprs.empty()) throw DomainError("height needs at least one expression");
  std::vector<RatFunc> fs = parse_all(o.exprs);
  std::string value;
  if (o.field == "Q") {
    std::vector<Rational> xs;
    for (const auto& f : fs) {
      if (!f.is_constant()) throw DomainError("non-constant expression under field Q");
      xs.push_back(f.constant_value());
    }
    value = to_string(xs.size() == 1 ? rational_height(xs[0]) : rational_height(xs));
  } else if (o.field == "Q(z)") {
    value = std::to_string(fs.size() == 1 ? ff_height(fs[0]) : ff_height(fs));
  } else {
    throw DomainError("--field must be Q or Q(z)");
  }
  emit(o, json{{"field", o.field}, {"height", value}}, "H = " + value + "\n");
  return kPass;
}

int cmd_indep(const Options& o) {
  MultiRecSpec spec = need_spec(o);
  if (spec.field == FieldTag::Q) {
    GTrivialReport g = check_G_trivial(spec);
    json doc = {{"field", "Q"}, {"G_trivial", g.trivial}};
    std::string text = std::string("G trivial  ") + (g.trivial ? "yes" : "no") + "\n";
    if (!g.trivial) {
      doc["pair"] = {g.pair->first + 1, g.pair->second + 1};
      json w = json::array();
      std::string ws;
      for (const auto& x : *g.witness) {
        w.push_back(to_string(x));
        ws += (ws.empty() ? "" : ", ") + to_string(x);
      }
      doc["witness"] = w;
      text += "pair       (" + std::to_string(g.pair->first + 1) + ", " + std::to_string(g.pair->second + 1) + ")\n";
      text += "witness    (" + ws + ")\n";
    }
    emit(o, doc, text);
    return g.trivial ? kPass : kNegative;
  }
  bool all = true;
  json pairs = json::array();
  std::string text;
  for (const auto& p : pairwise_independent(spec)) {
    json jp = {{"i", p.i + 1}, {"j", p.j + 1}, {"independent", p.independent}};
    text += "(" + std::to_string(p.i + 1) + ", " + std::to_string(p.j + 1) + ")  " +
            (p.independent ? "independent" : "dependent");
    if (p.witness) {
      json w = json::array();
      std::string ws;
      for (const auto& x : *p.witness) {
        w.push_back(to_string(x));
        ws += (ws.empty() ? "" : ", ") + to_string(x);
      }
      jp["witness"] = w;
      text += "  witness (" + ws + ")";
    }
    text += "\n";
    all = all && p.independent;
    pairs.push_back(std::move(jp));
  }
  emit(o, json{{"field", "Q(z)"}, {"pairs", pairs}, {"all_independent", all}}, text);
  return all ? kPass : kNegative;
}

int emit_reports(const Options& o, const std::vector<BoundReport>& reps) {
  json arr = json::array();
  std::string text;
  for (const auto& r : reps) {
    arr.push_back(to_json(r));
    text += (text.empty() ? "" : "\n") + to_text(r);
  }
  emit(o, reps.size() == 1 ? arr[0] : json{{"reports", arr}}, text);
  return kPass;
}

int cmd_bounds_nf(const Options& o) {
  MultiRecSpec spec = need_spec(o);
  Rational eps = parse_epsilon(o.epsilon);
  BoundParamsNF p = nf_params(spec, o.d, o.s);
  std::vector<BoundReport> reps;
  bool all_const = std::all_of(p.m.begin(), p.m.end(), [](unsigned m) { return m == 0; });
  if (o.which == "all" || o.which == "thm21") reps.push_back(thm21_bound(p, eps));
  if (o.which == "all" || o.which == "cor23") reps.push_back(cor23_bound(p, eps));
  if ((o.which == "all" && all_const) || o.which == "rem24") reps.push_back(rem24_bound(p, eps));
  if (reps.empty()) throw DomainError("--which must be thm21, cor23, rem24 or all");
  return emit_reports(o, reps);
}

int cmd_bounds_ff(const Options& o) {
  MultiRecSpec spec = need_spec(o);
  Mode mode = parse_mode(o.mode);
  Place mu = need_place(o);
  std::vector<BoundReport> reps{ff_C5(spec, mode), ff_C6(spec, mu, mode)};
  if (spec.t == 1) reps.push_back(ff_C8(spec, mu, mode));
  return emit_reports(o, reps);
}

int cmd_verify_nf(const Options& o) {
  MultiRecSpec spec = need_spec(o);
  Rational eps = parse_epsilon(o.epsilon);
  if (o.term < 1) throw DomainError("--term is 1-based");
  VerifyReport rep = enumerate_nf_solutions(spec, eps, need_box(o), o.term - 1, o.workers);
  rep = classify_nf(std::move(rep), spec);
  emit(o, to_json(rep), to_text(rep));
  return rep.pass ? kPass : kNegative;
}

int cmd_verify_ff(const Options& o) {
  MultiRecSpec spec = need_spec(o);
  Mode mode = parse_mode(o.mode);
  VerifyReport rep = verify_ff_growth(spec, need_place(o), need_box(o), mode, o.workers);
  emit(o, to_json(rep), to_text(rep));
  return rep.pass ? kPass : kNegative;
}

int cmd_wronskian(const Options& o) {
  MultiRecSpec spec = need_spec(o);
  DeltaPoly d = build_delta(spec);
  json doc = {{"q", d.q}, {"delta", d.delta.to_string()}};
  std::string text = "q      " + std::to_string(d.q) + "\nDelta  " + d.delta.to_string() + "\n";
  if (d.delta.is_zero()) {
    doc["degenerate"] = true;
    text += "Delta vanishes identically\n";
    emit(o, doc, text);
    return kNegative;
  }
  C7Report c7 = c7_threshold(spec);
  doc["C7"] = to_json(c7);
  auto roots = [](const std::vector<Integer>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + to_string(x);
    return "{" + s + "}";
  };
  text += "C11    " + std::to_string(c7.c11) + "  roots " + roots(c7.poly_roots) + "\n";
  text += "C12    " + std::to_string(c7.c12) + "  roots " + roots(c7.delta_roots) + "\n";
  text += "C7     " + std::to_string(c7.c7) + "\n";
  emit(o, doc, text);
  return kPass;
}

int cmd_check_bm(const Options& o) {
  std::vector<RatFunc> us = parse_all(o.exprs);
  BMReport rep = check_bm(us, o.genus);
  emit(o, to_json(rep), to_text(rep));
  return rep.pass ? kPass : kNegative;
}

int cmd_check_zannier(const Options& o) {
  std::vector<RatFunc> rhos = parse_all(o.exprs);
  PlaceSet extra;
  for (const auto& p : o.extra_places) extra.insert(parse_place(p));
  std::size_t r_idx = o.r_idx_set ? o.r_idx : rhos.size();
  ZannierReport rep = check_zannier(rhos, r_idx, extra, parse_mode(o.mode), o.genus);
  emit(o, to_json(rep), to_text(rep));
  return rep.pass ? kPass : kNegative;
}

int cmd_check_lemma61(const Options& o) {
  std::vector<RatFunc> basis = parse_all(o.basis);
  if (basis.empty()) throw DomainError("--basis is required");
  Lemma61Report rep = check_lemma61(basis, parse_ivec(o.k));
  emit(o, to_json(rep), to_text(rep));
  return rep.pass ? kPass : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for multi-recurrences: heights, independence, explicit bounds, verification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sc) { sc->add_flag("--json", o.as_json, "Emit a JSON document"); };
  auto add_spec = [&](CLI::App* sc) { sc->add_option("--spec", o.spec_path, "Spec file (JSON)"); };
  auto add_mode = [&](CLI::App* sc) {
    sc->add_option("--mode", o.mode, "conservative | as-printed")->check(CLI::IsMember({"conservative", "as-printed"}));
  };
  auto add_box = [&](CLI::App* sc) {
    sc->add_option("--box", o.box, "Box half-width N");
    sc->add_flag("--nonneg", o.nonneg, "Use [0, N]^t");
    sc->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* height = app.add_subcommand("height", "Height of an element (or projective height of a vector)");
  height->add_option("exprs", o.exprs, "Expressions")->required();
  height->add_option("--field", o.field, "Q(z) (default) or Q");
  add_common(height);

  auto* indep = app.add_subcommand("indep", "Pairwise independence (Q(z)) or G-triviality (Q)");
  add_spec(indep);
  add_common(indep);

  auto* bnf = app.add_subcommand("bounds-nf", "Number-field cardinality bounds");
  add_spec(bnf);
  bnf->add_option("--epsilon", o.epsilon, "Positive rational p/q");
  bnf->add_option("--d", o.d, "Degree override");
  bnf->add_option("--s", o.s, "|S| override");
  bnf->add_option("--which", o.which, "thm21 | cor23 | rem24 | all");
  add_common(bnf);

  auto* bff = app.add_subcommand("bounds-ff", "Function-field constants C5, C6 (and C8 when t = 1)");
  add_spec(bff);
  bff->add_option("--place", o.place, "Monic irreducible polynomial or inf");
  add_mode(bff);
  add_common(bff);

  auto* vnf = app.add_subcommand("verify-nf", "Enumerate and classify solutions of the inequality over Q");
  add_spec(vnf);
  vnf->add_option("--epsilon", o.epsilon, "Positive rational p/q");
  vnf->add_option("--term", o.term, "Designated term (1-based, default 1)");
  add_box(vnf);
  add_common(vnf);

  auto* vff = app.add_subcommand("verify-ff", "Check valuation growth over Q(z) on a box");
  add_spec(vff);
  vff->add_option("--place", o.place, "Monic irreducible polynomial or inf");
  add_mode(vff);
  add_box(vff);
  add_common(vff);

  auto* wr = app.add_subcommand("wronskian", "Delta(x) and the threshold C7 of a recurrence (t = 1)");
  add_spec(wr);
  add_common(wr);

  auto* bm = app.add_subcommand("check-bm", "Height inequality for a vanishing sum");
  bm->add_option("exprs", o.exprs, "Summands")->required();
  bm->add_option("--genus", o.genus, "Genus");
  add_common(bm);

  auto* zn = app.add_subcommand("check-zannier", "Valuation-sum inequality for independent elements");
  zn->add_option("exprs", o.exprs, "Elements")->required();
  zn->add_option("--r-idx", o.r_idx, "Number of leading elements whose zeros join S (default all)")
      ->each([&](const std::string&) { o.r_idx_set = true; });
  zn->add_option("--extra-place", o.extra_places, "Additional place (repeatable)")->allow_extra_args(false);
  zn->add_option("--genus", o.genus, "Genus");
  add_mode(zn);
  add_common(zn);

  auto* lm = app.add_subcommand("check-lemma61", "Exponent bounds for a power product of a basis");
  lm->add_option("--basis", o.basis, "Basis element (repeatable)")->allow_extra_args(false);
  lm->add_option("--k", o.k, "Comma-separated exponents")->required();
  add_common(lm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*height) return cmd_height(o);
    if (*indep) return cmd_indep(o);
    if (*bnf) return cmd_bounds_nf(o);
    if (*bff) return cmd_bounds_ff(o);
    if (*vnf) return cmd_verify_nf(o);
    if (*vff) return cmd_verify_ff(o);
    if (*wr) return cmd_wronskian(o);
    if (*bm) return cmd_check_bm(o);
    if (*zn) return cmd_check_zannier(o);
    if (*lm) return cmd_check_lemma61(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
