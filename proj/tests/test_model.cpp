#include "doctest.h"

#include "mrg/errors.hpp"
#include "mrg/model.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mrg;
using testing_support::F;
using testing_support::load;
using testing_support::spec_from;

namespace {

RatFunc reconstruct(const CoeffDecomp& d, const std::vector<long>& n) {
  RatFunc acc(0);
  for (std::size_t l = 0; l < d.rank(); ++l) acc += d.pis[l] * RatFunc(d.qs[l](n));
  return acc;
}

MPoly<RatFunc> reconstruct_poly(const CoeffDecomp& d, std::size_t t) {
  MPoly<RatFunc> p(t);
  for (std::size_t l = 0; l < d.rank(); ++l)
    for (const auto& [e, c] : d.qs[l].terms()) p.add_term(e, d.pis[l] * RatFunc(c));
  return p;
}

}  // namespace

TEST_CASE("load_spec: example documents") {
  MultiRecSpec r = load("fourterm.json");
  CHECK(r.t == 4);
  CHECK(r.r() == 4);
  CHECK(r.field == FieldTag::Q);
  CHECK(r.genus == 0u);

  CHECK_THROWS_AS(spec_from(R"J({"field":"Q","t":1,"terms":[{"poly":[{"exps":[0],"coeff":"1"}],"alpha":["0"]}]})J"),
                  SpecError);
  CHECK_THROWS_AS(
      spec_from(R"J({"field":"Q","t":2,"terms":[{"poly":[{"exps":[0,0],"coeff":"1"}],"alpha":["2"]}]})J"),
      SpecError);
  CHECK_THROWS_AS(spec_from(R"J({"field":"Q","t":1,"terms":[{"poly":[{"exps":[0],"coeff":"z"}],"alpha":["2"]}]})J"),
                  SpecError);
  CHECK_THROWS_AS(spec_from(R"J({"field":"R","t":1,"terms":[]})J"), SpecError);
  CHECK_THROWS_AS(spec_from(R"J({"field":"Q","t":1,"terms":[]})J"), SpecError);
  CHECK_THROWS_AS(spec_from(R"J({"field":"Q","t":1,"terms":[{"poly":[{"exps":[-1],"coeff":"1"}],"alpha":["2"]}]})J"),
                  SpecError);
  CHECK_THROWS_AS(spec_from(R"J({"field":"Q","t":1,"terms":[{"poly":[{"exps":[0],"coeff":"0"}],"alpha":["2"]}]})J"),
                  SpecError);
  CHECK_THROWS_AS(spec_from(R"J({"field":"Q","t":1,"terms":[{"poly":[{"exps":[0],"coeff":"1+"}],"alpha":["2"]}]})J"),
                  SpecError);
  try {
    spec_from(R"J({"field":"Q","t":1,"terms":[{"poly":[{"exps":[0],"coeff":"1"}],"alpha":["0"]}]})J");
  } catch (const SpecError& e) {
    CHECK(e.field().find("alpha") != std::string::npos);
  }
  CHECK_THROWS_AS(load_spec_file("/nonexistent/spec.json"), Error);
}

TEST_CASE("evaluate_G examples") {
  MultiRecSpec r = load("fourterm.json");
  std::vector<long> n{5, 5, 2, 2};
  CHECK(evaluate_G(r, n) == RatFunc(0));
  std::vector<long> m{1, 0, 0, 0};
  CHECK(evaluate_G(r, m) == RatFunc(1));

  MultiRecSpec g = load("3n2n.json");
  std::vector<long> three{3};
  CHECK(evaluate_G(g, three) == RatFunc(19));
  std::vector<long> neg{-1};
  CHECK(evaluate_G(g, neg) == RatFunc(Rational(-1, 6)));

  MultiRecSpec c = load("const1.json");
  std::vector<long> one{1, 1};
  CHECK(evaluate_G(c, one) == F("2*z^2"));

  std::vector<long> wrong{1};
  CHECK_THROWS_AS(evaluate_G(c, wrong), DomainError);

  for (const char* name : {"fourterm.json", "3n2n.json", "const1.json", "mixed2.json", "lrs_q3.json"}) {
    MultiRecSpec s = load(name);
    std::vector<long> zero(s.t, 0);
    RatFunc sum(0);
    for (const auto& term : s.terms) sum += term.poly(zero);
    CHECK(evaluate_G(s, zero) == sum);
  }
}

TEST_CASE("decompose_coeffs examples") {
  auto one_term = [](const std::string& poly_json) {
    return spec_from(R"J({"field":"Q(z)","t":1,"terms":[{"poly":)J" + poly_json + R"J(,"alpha":["z"]}]})J").terms[0];
  };
  CoeffDecomp a = decompose_coeffs(one_term(R"J([{"exps":[1],"coeff":"z"},{"exps":[0],"coeff":"1"}])J"));
  REQUIRE(a.rank() == 2);
  CHECK(a.pis[0] == F("z"));
  CHECK(a.pis[1] == F("1"));

  CoeffDecomp b = decompose_coeffs(one_term(R"J([{"exps":[1],"coeff":"2"},{"exps":[0],"coeff":"4"}])J"));
  REQUIRE(b.rank() == 1);
  CHECK(b.pis[0] == F("2"));
  MPoly<Rational> expect(1);
  expect.add_term({1}, 1);
  expect.add_term({0}, 2);
  CHECK(b.qs[0] == expect);

  CoeffDecomp c = decompose_coeffs(one_term(R"J([{"exps":[1],"coeff":"z"},{"exps":[0],"coeff":"2*z"}])J"));
  REQUIRE(c.rank() == 1);
  CHECK(c.pis[0] == F("z"));
  CHECK(c.qs[0] == expect);
}

TEST_CASE("decompose_coeffs: reconstruction and minimality on random terms") {
  oracle::Rng rng(404);
  for (int it = 0; it < 100; ++it) {
    std::size_t t = static_cast<std::size_t>(oracle::uniform(rng, 1, 2));
    Term term{MPoly<RatFunc>(t), std::vector<RatFunc>(t, F("z"))};
    // A few random coefficient "directions", recombined so that the span is smaller than the term count.
    std::vector<RatFunc> dirs;
    for (long k = oracle::uniform(rng, 1, 3); k > 0; --k) dirs.push_back(oracle::random_ratfunc(rng, 3));
    for (int k = 0; k < 5; ++k) {
      Exponents e(t);
      for (auto& x : e) x = static_cast<unsigned>(oracle::uniform(rng, 0, 2));
      RatFunc c(0);
      for (const auto& d : dirs) c += d * RatFunc(oracle::small_rational(rng));
      term.poly.add_term(e, c);
    }
    if (term.poly.is_zero()) continue;
    CoeffDecomp d = decompose_coeffs(term);
    CHECK(constant_rank(d.pis) == d.rank());
    CHECK(d.rank() <= dirs.size());
    CHECK(reconstruct_poly(d, t) == term.poly);
    std::vector<long> n(t);
    for (auto& x : n) x = oracle::uniform(rng, -4, 4);
    CHECK(reconstruct(d, n) == term.poly(n));
    Term again{reconstruct_poly(d, t), term.alpha};
    CHECK(decompose_coeffs(again).rank() == d.rank());
  }
}

TEST_CASE("decompose_coeffs: every shipped spec") {
  for (const char* name : {"fourterm.json", "3n2n.json", "const1.json", "mixed2.json", "lrs_q2.json", "lrs_q3.json",
                           "lrs_shift3.json", "power2.json"}) {
    MultiRecSpec s = load(name);
    for (const auto& term : s.terms) CHECK(reconstruct_poly(decompose_coeffs(term), s.t) == term.poly);
  }
}

TEST_CASE("rational views") {
  MultiRecSpec g = load("3n2n.json");
  CHECK(to_rational(g.terms[1].poly).terms().begin()->second == -1);
  MultiRecSpec c = load("mixed2.json");
  CHECK_THROWS_AS(to_rational(c.terms[0].poly), DomainError);
}
