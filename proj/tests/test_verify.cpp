#include "doctest.h"

#include <algorithm>

#include "mrg/errors.hpp"
#include "mrg/report.hpp"
#include "mrg/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mrg;
using testing_support::F;
using testing_support::load;
using testing_support::spec_from;
using testing_support::V;

namespace {

Rational Q(long p, long q = 1) {
  Rational x(p, q);
  x.canonicalize();
  return x;
}

std::vector<IntPoint> points(const VerifyReport& r) {
  std::vector<IntPoint> out;
  for (const auto& s : r.solutions) out.push_back(s.n);
  return out;
}

// Brute force over the box with the floating interval oracle.
std::vector<IntPoint> naive_solutions(const MultiRecSpec& s, const Rational& eps, const Box& box, std::size_t i0) {
  Rational amax = 0;
  for (const auto& term : s.terms)
    for (const auto& a : term.alpha) amax = std::max(amax, Rational(abs(a.constant_value())));
  std::vector<IntPoint> out;
  IntPoint n(s.t, box.lo());
  for (;;) {
    Rational G = evaluate_G(s, n).constant_value();
    Rational lead = evaluate_term(s.terms[i0], n).constant_value();
    if (oracle::naive_nf_solution(G, lead, amax, sup_norm(n), static_cast<long>(s.t), eps)) out.push_back(n);
    std::size_t j = s.t;
    while (j > 0 && n[j - 1] == box.hi()) n[--j] = box.lo();
    if (j == 0) break;
    ++n[j - 1];
  }
  return out;
}

}  // namespace

TEST_CASE("box") {
  Box b{3, false};
  CHECK(b.lo() == -3);
  CHECK(b.count(2) == 49u);
  Box nn{8, true};
  CHECK(nn.lo() == 0);
  CHECK(nn.count(1) == 9u);
  CHECK(sup_norm({-4, 2, 3}) == 4);
}

TEST_CASE("nf enumeration: 3^n - 2^n") {
  MultiRecSpec g = load("3n2n.json");
  VerifyReport r = enumerate_nf_solutions(g, Q(1, 10), Box{8, true});
  CHECK(points(r) == std::vector<IntPoint>{{0}, {1}, {2}, {3}});
  CHECK(r.kind == "nf-enumeration");
  // 19^10 < 3^27 and 65^10 > 3^36
  CHECK(pow(Integer(19), 10) < pow(Integer(3), 27));
  CHECK(pow(Integer(65), 10) > pow(Integer(3), 36));

  VerifyReport c = classify_nf(r, g);
  CHECK(c.classified);
  CHECK_FALSE(*c.solutions[0].in_A);  // G(0) = 0
  for (std::size_t k = 1; k < 4; ++k) {
    CHECK(*c.solutions[k].in_A);
    CHECK(c.solutions[k].vanishing.empty());
  }
  CHECK(*c.a_count == 3u);
  REQUIRE(c.a_bound.has_value());
  CHECK(c.pass);
}

TEST_CASE("nf enumeration: 2^n has no solutions for n >= 1") {
  MultiRecSpec p = load("power2.json");
  VerifyReport r = enumerate_nf_solutions(p, Q(1, 10), Box{8, true});
  CHECK(std::none_of(r.solutions.begin(), r.solutions.end(), [](const NFPoint& s) { return s.n[0] >= 1; }));
  CHECK(r.solutions.empty());  // n = 0: 1 < 1 fails
}

TEST_CASE("nf enumeration: the four-term example") {
  MultiRecSpec s = load("fourterm.json");
  VerifyReport r = enumerate_nf_solutions(s, Q(1, 10), Box{3, false});
  auto pts = points(r);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) CHECK(std::find(pts.begin(), pts.end(), IntPoint{a, a, b, b}) != pts.end());
  CHECK(std::is_sorted(pts.begin(), pts.end()));

  VerifyReport c = classify_nf(r, s);
  for (const auto& sol : c.solutions) {
    if (!(sol.n[0] == sol.n[1] && sol.n[2] == sol.n[3])) continue;
    CHECK_FALSE(*sol.in_A);
    REQUIRE_FALSE(sol.minimal_vanishing.empty());
    for (const auto& I : sol.vanishing) CHECK(I.front() == 0);
  }
  auto it = std::find_if(c.solutions.begin(), c.solutions.end(),
                         [](const NFPoint& p) { return p.n == IntPoint{2, 2, 1, 1}; });
  REQUIRE(it != c.solutions.end());
  using Sets = std::vector<std::vector<std::size_t>>;
  CHECK(it->vanishing == Sets{{0, 1}, {0, 1, 2, 3}});
  CHECK(it->minimal_vanishing == Sets{{0, 1}});
}

TEST_CASE("nf enumeration: S1 points and the designated term") {
  // (n - 2) 3^n - 2^n: P_1(2) = 0
  auto s = spec_from(R"J({"field":"Q","t":1,"terms":[
      {"poly":[{"exps":[1],"coeff":"1"},{"exps":[0],"coeff":"-2"}],"alpha":["3"]},
      {"poly":[{"exps":[0],"coeff":"-1"}],"alpha":["2"]}]})J");
  VerifyReport r = enumerate_nf_solutions(s, Q(1, 10), Box{6, true});
  CHECK(r.s1_points == std::vector<IntPoint>{{2}});
  for (const auto& p : r.solutions) CHECK(p.n != IntPoint{2});
  VerifyReport c = classify_nf(r, s);
  for (const auto& p : c.solutions) CHECK(std::find(p.in_S.begin(), p.in_S.end(), 0u) == p.in_S.end());

  // term 2 designated: lead = -2^n
  VerifyReport r2 = enumerate_nf_solutions(s, Q(1, 10), Box{6, true}, 1);
  CHECK(points(r2) == naive_solutions(s, Q(1, 10), Box{6, true}, 1));

  CHECK_THROWS(enumerate_nf_solutions(s, Q(0), Box{2, true}));
  CHECK_THROWS(enumerate_nf_solutions(s, Q(1), Box{2, true}, 5));
  CHECK_THROWS(enumerate_nf_solutions(load("const1.json"), Q(1), Box{2, true}));
}

TEST_CASE("nf enumeration agrees with the interval oracle") {
  std::vector<std::pair<std::string, Box>> cases{
      {"3n2n.json", Box{12, false}}, {"power2.json", Box{10, false}}, {"fourterm.json", Box{2, false}}};
  for (const auto& [name, box] : cases) {
    MultiRecSpec s = load(name);
    for (Rational eps : {Q(1, 10), Q(1, 2), Q(2)}) {
      CAPTURE(name);
      CHECK(points(enumerate_nf_solutions(s, eps, box)) == naive_solutions(s, eps, box, 0));
    }
  }
  // random constant-coefficient specs, t = 2
  oracle::Rng rng(909);
  for (int it = 0; it < 15; ++it) {
    nlohmann::json doc = {{"field", "Q"}, {"t", 2}, {"terms", nlohmann::json::array()}};
    long r = oracle::uniform(rng, 1, 3);
    for (long i = 0; i < r; ++i) {
      nlohmann::json poly = nlohmann::json::array();
      poly.push_back({{"exps", {0, 0}}, {"coeff", to_string(oracle::nonzero_rational(rng, 4, 2))}});
      if (oracle::uniform(rng, 0, 1)) poly.push_back({{"exps", {1, 0}}, {"coeff", "1"}});
      nlohmann::json alpha = {to_string(oracle::nonzero_rational(rng, 4, 3)),
                              to_string(oracle::nonzero_rational(rng, 4, 3))};
      doc["terms"].push_back({{"poly", poly}, {"alpha", alpha}});
    }
    doc["terms"][0]["alpha"][0] = "3";
    MultiRecSpec s = load_spec(doc);
    Rational eps = Q(oracle::uniform(rng, 1, 5), oracle::uniform(rng, 1, 10));
    CHECK(points(enumerate_nf_solutions(s, eps, Box{3, false})) == naive_solutions(s, eps, Box{3, false}, 0));
  }
}

TEST_CASE("parallel enumeration merges to the sequential result") {
  MultiRecSpec s = load("fourterm.json");
  VerifyReport a = classify_nf(enumerate_nf_solutions(s, Q(1, 10), Box{3, false}, 0, 1), s);
  VerifyReport b = classify_nf(enumerate_nf_solutions(s, Q(1, 10), Box{3, false}, 0, 4), s);
  VerifyReport c = classify_nf(enumerate_nf_solutions(s, Q(1, 10), Box{3, false}, 0, 7), s);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_json(a).dump() == to_json(c).dump());

  MultiRecSpec f = load("const1.json");
  VerifyReport x = verify_ff_growth(f, V("z"), Box{5, false}, Mode::AsPrinted, 1);
  VerifyReport y = verify_ff_growth(f, V("z"), Box{5, false}, Mode::AsPrinted, 3);
  CHECK(to_json(x).dump() == to_json(y).dump());
  CHECK(to_text(x) == to_text(y));
}

TEST_CASE("ff growth on the constants-1 spec") {
  MultiRecSpec s = load("const1.json");
  for (const char* v : {"z", "z-1", "inf"}) {
    VerifyReport r = verify_ff_growth(s, V(v), Box{8, false}, Mode::Conservative);
    CAPTURE(v);
    CHECK(r.pass);
    CHECK(r.violations.empty());
    CHECK(r.below_threshold.empty());
    CHECK(*r.C5 == 12);
  }
  VerifyReport p = verify_ff_growth(s, V("z"), Box{8, false}, Mode::AsPrinted);
  CHECK_FALSE(p.pass);
  CHECK(*p.C6 == 0);
  auto it = std::find_if(p.violations.begin(), p.violations.end(), [](const FFPoint& q) { return q.n == IntPoint{1, 1}; });
  REQUIRE(it != p.violations.end());
  CHECK(it->mu_G == 2);
  CHECK(it->rhs == 1);
  CHECK(it->G == F("2*z^2").to_string());
}

TEST_CASE("ff growth: zeros of G are set aside") {
  // z^n - z^n (t = 1, r = 2, alphas dependent) is rejected; use 1*z^n - z*... instead:
  // G(n) = z^{n} - (z+1)^{n} vanishes at n = 0.
  auto s = spec_from(R"J({"field":"Q(z)","t":1,"terms":[
      {"poly":[{"exps":[0],"coeff":"1"}],"alpha":["z"]},
      {"poly":[{"exps":[0],"coeff":"-1"}],"alpha":["z+1"]}]})J");
  VerifyReport r = verify_ff_growth(s, V("inf"), Box{4, false}, Mode::Conservative);
  CHECK(r.g_zero_points == std::vector<IntPoint>{{0}});
  CHECK(r.pass);
  auto dep = spec_from(R"J({"field":"Q(z)","t":1,"terms":[
      {"poly":[{"exps":[0],"coeff":"1"}],"alpha":["z"]},
      {"poly":[{"exps":[0],"coeff":"1"}],"alpha":["3*z"]}]})J");
  CHECK_THROWS(verify_ff_growth(dep, V("z"), Box{2, false}, Mode::Conservative));
}

TEST_CASE("ff growth: conservative passes on curated specs") {
  for (const char* name : {"const1.json", "mixed2.json", "lrs_q2.json", "lrs_q3.json"}) {
    MultiRecSpec s = load(name);
    for (const char* v : {"z", "z+1", "inf"}) {
      CAPTURE(name);
      CAPTURE(v);
      VerifyReport r = verify_ff_growth(s, V(v), Box{s.t == 1 ? 8L : 6L, false}, Mode::Conservative);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("Brownawell-Masser fixtures") {
  struct Case {
    std::vector<std::string> us;
    long lhs, rhs;
  };
  std::vector<Case> cases{
      {{"z", "1-z", "-1"}, 1, 1},
      {{"2*z", "2-2*z", "-2"}, 1, 1},
      {{"z^2", "1-z^2", "-1"}, 2, 2},
      {{"z^3", "1-z^3", "-1"}, 3, 3},  // places z, z-1, z^2+z+1, inf: weighted 5
      {{"(z+1)^2", "-(z-1)^2", "-4*z"}, 2, 2},
      {{"z", "1", "-(z+1)"}, 1, 1},
  };
  for (const auto& c : cases) {
    std::vector<RatFunc> us;
    for (const auto& e : c.us) us.push_back(F(e));
    BMReport r = check_bm(us);
    CAPTURE(c.us[0]);
    CHECK(r.lhs == c.lhs);
    CHECK(r.rhs == c.rhs);
    CHECK(r.pass);
    // scaling
    std::vector<RatFunc> scaled;
    for (const auto& u : us) scaled.push_back(u * F("-7/3"));
    BMReport s = check_bm(scaled);
    CHECK(s.lhs == r.lhs);
    CHECK(s.rhs == r.rhs);
  }
  std::vector<RatFunc> nonzero_sum{F("z"), F("1"), F("1")};
  CHECK_THROWS(check_bm(nonzero_sum));
  std::vector<RatFunc> dependent{F("z"), F("2*z"), F("-3*z")};
  CHECK_THROWS(check_bm(dependent));
  std::vector<RatFunc> two{F("z"), F("-z")};
  CHECK_THROWS(check_bm(two));
}

TEST_CASE("Zannier fixtures") {
  std::vector<RatFunc> a{F("1"), F("z")};
  for (Mode m : {Mode::AsPrinted, Mode::Conservative}) {
    ZannierReport r = check_zannier(a, 2, PlaceSet(), m);
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);
    CHECK(r.pass);
  }
  std::vector<RatFunc> b{F("(z+1)^2"), F("-(z-1)^2")};
  PlaceSet extra;
  extra.insert(V("z"));
  ZannierReport p = check_zannier(b, 2, extra, Mode::AsPrinted);
  CHECK(p.delta == F("4*z"));
  CHECK(p.lhs == 2);
  CHECK(p.rhs == 0);
  CHECK_FALSE(p.pass);
  ZannierReport c = check_zannier(b, 2, extra, Mode::Conservative);
  CHECK(c.lhs == 2);
  CHECK(c.rhs == 2);
  CHECK(c.pass);

  // An extra place where mu(delta) = min mu(rho) leaves lhs unchanged.
  PlaceSet more = extra;
  more.insert(V("z^2+1"));
  CHECK(check_zannier(b, 2, more, Mode::Conservative).lhs == 2);

  std::vector<RatFunc> dep{F("z"), F("2*z")};
  CHECK_THROWS(check_zannier(dep, 2, PlaceSet(), Mode::Conservative));
  std::vector<RatFunc> zero_sum{F("z"), F("-z"), F("1")};
  CHECK_THROWS(check_zannier(zero_sum, 3, PlaceSet(), Mode::Conservative));
}

TEST_CASE("power-product exponent check") {
  std::vector<RatFunc> basis{F("z"), F("z+1")};
  Lemma61Report r = check_lemma61(basis, {2, -3});
  CHECK(r.bounds == std::vector<Rational>{18, 18});
  CHECK(r.pass);
  Lemma61Report z = check_lemma61(basis, {0, 0});
  CHECK(z.alpha0 == RatFunc(1));
  CHECK(z.bounds == std::vector<Rational>{0, 0});
  CHECK(z.pass);
  std::vector<RatFunc> dep{F("z"), F("z^3")};
  CHECK_THROWS(check_lemma61(dep, {1, 1}));
}

TEST_CASE("report rendering") {
  MultiRecSpec g = load("3n2n.json");
  VerifyReport r = classify_nf(enumerate_nf_solutions(g, Q(1, 10), Box{8, true}), g);
  nlohmann::json j = to_json(r);
  CHECK(j["kind"] == "nf-enumeration");
  CHECK(j["solutions"].size() == 4u);
  CHECK(j["solutions"][1]["n"] == nlohmann::json::array({1}));
  CHECK(j["solutions"][0]["vanishing"] == nlohmann::json::parse("[[1,2]]"));
  CHECK(j["solutions"][3]["G"] == "19");
  CHECK(j["a_bound"]["name"].is_string());

  std::string text = to_text(r);
  CHECK(text.find("(3)  G = 19") != std::string::npos);

  BoundReport b = thm21_bound(nf_params(g), Q(1, 10));
  nlohmann::json jb = to_json(b);
  CHECK(jb["exact_value"].is_string());
  CHECK(jb["mode"] == "as-printed");
  CHECK(format_log2(1.0 / 3) == "0.333333");
  CHECK(point_to_string({1, -2}) == "(1, -2)");

  std::vector<RatFunc> us{F("z"), F("1-z"), F("-1")};
  nlohmann::json jbm = to_json(check_bm(us));
  CHECK(jbm["S"] == nlohmann::json::array({"z", "z-1", "inf"}));
  CHECK(jbm["pass"] == true);
}
