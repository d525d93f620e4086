#include "doctest.h"

#include "mrg/errors.hpp"
#include "mrg/place.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mrg;
using testing_support::F;
using testing_support::V;

TEST_CASE("valuation examples") {
  CHECK(valuation(F("z^3/(z-1)"), V("z")) == 3);
  CHECK(valuation(F("z^3/(z-1)"), V("z-1")) == -1);
  CHECK(valuation(F("(z^2+1)/z"), V("inf")) == -1);
  CHECK(valuation(F("(z^2+1)^2"), V("z^2+1")) == 2);
  CHECK(valuation(F("7"), V("z")) == 0);
  CHECK_THROWS_AS(valuation(RatFunc(0), V("z")), DomainError);
}

TEST_CASE("places") {
  CHECK_THROWS_AS(Place::finite(F("z^2").num()), DomainError);
  CHECK_THROWS_AS(Place::finite(F("2*z").num()), DomainError);
  CHECK(V("z^2+1").degree() == 2);
  CHECK(V("inf").to_string() == "inf");
  CHECK(V("z") < V("z-1"));
  CHECK(V("z+1") < V("z^2+1"));
  CHECK(V("z^2+1") < V("inf"));
}

TEST_CASE("divisor examples") {
  Divisor d = divisor(F("z/(z-1)"));
  CHECK(d == Divisor{{V("z"), 1}, {V("z-1"), -1}});
  CHECK(divisor(F("2/3")).empty());
  Divisor e = divisor(F("z^2+1"));
  CHECK(e == Divisor{{V("z^2+1"), 1}, {V("inf"), -2}});
  CHECK(degree(e) == 0);
}

TEST_CASE("product formula on random functions") {
  oracle::Rng rng(101);
  for (int it = 0; it < 500; ++it) {
    RatFunc f = oracle::random_ratfunc(rng, 8);
    if (f.is_zero()) continue;
    CHECK(degree(divisor(f)) == 0);
  }
}

TEST_CASE("ff_height examples") {
  CHECK(ff_height(F("z/(z-1)")) == 1);
  std::vector<RatFunc> v{1, F("z"), F("z^2")};
  CHECK(ff_height(v) == 2);
  CHECK(ff_height(F("-5/3")) == 0);
  std::vector<RatFunc> with_zero{0, F("z")};
  CHECK(ff_height(with_zero) == 0);
  std::vector<RatFunc> zeros{0, 0};
  CHECK_THROWS(ff_height(zeros));
}

TEST_CASE("ff_height matches the degree oracle and obeys the height laws") {
  oracle::Rng rng(202);
  for (int it = 0; it < 300; ++it) {
    RatFunc f = oracle::random_ratfunc(rng, 6), g = oracle::random_ratfunc(rng, 6);
    if (f.is_zero() || g.is_zero()) continue;
    long hf = ff_height(f), hg = ff_height(g);
    CHECK(hf == oracle::height_by_degree(f));
    CHECK(hf >= 0);
    CHECK(hf == ff_height(f.inverse()));
    long hfg = ff_height(f * g);
    CHECK(hf - hg <= hfg);
    CHECK(hfg <= hf + hg);
    long n = oracle::uniform(rng, -5, 5);
    CHECK(ff_height(f.pow(n)) == std::labs(n) * hf);
    CHECK((hf == 0) == f.is_constant());
    // projectivity
    Rational c = oracle::nonzero_rational(rng);
    std::vector<RatFunc> vec{f, g}, scaled{f * c, g * c}, shifted{f * g, g * g};
    CHECK(ff_height(vec) == ff_height(scaled));
    CHECK(ff_height(vec) == ff_height(shifted));
  }
}

TEST_CASE("derivative") {
  CHECK(derivative(F("z^2")) == F("2*z"));
  CHECK(derivative(F("1/z")) == F("-1/z^2"));
  CHECK(derivative(F("(z+1)/z")) == F("-1/z^2"));
  oracle::Rng rng(303);
  for (int it = 0; it < 200; ++it) {
    RatFunc f = oracle::random_ratfunc(rng, 5), g = oracle::random_ratfunc(rng, 5);
    CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
  }
}

TEST_CASE("support examples") {
  std::vector<RatFunc> a{F("z"), F("z+1")};
  PlaceSet s = support(a, true);
  CHECK(s.places() == std::set<Place>{V("z"), V("z+1"), V("inf")});
  CHECK(s.weighted_size() == 3);
  std::vector<RatFunc> b{F("5")};
  CHECK(support(b, true).weighted_size() == 1);
  std::vector<RatFunc> c{F("(z^2+1)/z")};
  PlaceSet sc = support(c, false);
  CHECK(sc.places() == std::set<Place>{V("z"), V("z^2+1")});
  CHECK(sc.weighted_size() == 3);
  CHECK(sc.weighted_size() >= static_cast<long>(sc.size()));
  std::vector<RatFunc> bad{F("z"), 0};
  CHECK_THROWS(support(bad, true));
}

TEST_CASE("constant_rank") {
  std::vector<RatFunc> a{F("z"), F("2*z"), F("1")};
  CHECK(constant_rank(a) == 2);
  std::vector<RatFunc> b{F("1/z"), F("1/(z+1)"), F("1/(z^2+z)")};
  CHECK(constant_rank(b) == 2);  // 1/z - 1/(z+1) = 1/(z^2+z)
  std::vector<RatFunc> c{F("1"), F("z"), F("z^2")};
  CHECK(constant_rank(c) == 3);
}
