#include "doctest.h"

#include "frobcoh/errors.hpp"
#include "frobcoh/frobenius.hpp"
#include "oracles.hpp"

#include <random>

using namespace frobcoh;

TEST_CASE("rank is p^2") {
  CHECK(make_pushforward(HypersurfaceModel(5, 3), 2, 1).rank() == 9);
  CHECK(make_pushforward(HypersurfaceModel(5, 5), 2, 1).rank() == 25);
  CHECK(make_pushforward(HypersurfaceModel(7, 3), 0, 0).rank() == 9);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7, 11, 13}[rng() % 6];
    const HypersurfaceModel model(1 + rng() % 12, p, 1 + rng() % 5);
    const auto e = make_pushforward(model, static_cast<Twist>(rng() % 41) - 20, static_cast<Twist>(rng() % 41) - 20);
    CHECK(e.rank() == p * p);
  }
}

TEST_CASE("reduction certificate") {
  SUBCASE("E(-1) on F*(O(2))(1), p = 5") {
    const auto cert = reduce(make_pushforward(HypersurfaceModel(5, 5), 2, 1), 2, -1);
    CHECK(cert.target.twist == 2);
    CHECK(cert.target.i == 2);
    CHECK(cert.source.i == 2);
    CHECK(cert.source.twist == -1);
  }
  SUBCASE("E(-1) on F*(omega)(1), p = 3") {
    CHECK(reduce(make_pushforward(HypersurfaceModel(5, 3), 1, 1), 2, -1).target.twist == 1);
  }
  SUBCASE("outer twist cancels") {
    for (Twist a = -4; a <= 4; ++a) {
      CHECK(reduce(make_pushforward(HypersurfaceModel(6, 7, 3), 11, a), 0, -a).target.twist == 11);
    }
  }
  SUBCASE("rule trace order") {
    const auto cert = reduce(make_pushforward(HypersurfaceModel(5, 5, 2), 3, 1), 1, 2);
    REQUIRE(cert.rule_trace.size() == 3);
    CHECK(cert.rule_trace[0].rule == RewriteRule::ProjectionFormula);
    CHECK(cert.rule_trace[1].rule == RewriteRule::FrobeniusPullback);
    CHECK(cert.rule_trace[2].rule == RewriteRule::PushforwardCohomology);
    // (1 + 2) new units = O_old(6), pulled back to O_old(30)
    CHECK(cert.rule_trace[1].before == "F^*O(6)");
    CHECK(cert.rule_trace[1].after == "O(30)");
    CHECK(cert.target.twist == 33);
    CHECK(rule_name(cert.rule_trace[0].rule) == "projection_formula");
  }
  SUBCASE("overflow is reported") {
    CHECK_THROWS_AS(reduce(make_pushforward(HypersurfaceModel(5, 5), 0, 0), 0, INT64_MAX / 2), TwistOverflow);
  }
}

TEST_CASE("pushforward cohomology") {
  CHECK(pushforward_h(make_pushforward(HypersurfaceModel(5, 5), 1, 1), 2, -1) == 1);
  CHECK(pushforward_h(make_pushforward(HypersurfaceModel(5, 5), 2, 1), 2, -1) == 0);
  for (Twist m = -20; m <= 20; ++m) {
    CHECK(pushforward_h(make_pushforward(HypersurfaceModel(5, 5), 2, 1), 1, m) == 0);
  }
}

TEST_CASE("pushforward Euler characteristic follows the reduced twist") {
  const auto e = make_pushforward(HypersurfaceModel(6, 3), 2, 1);
  for (Twist m = -5; m <= 5; ++m) {
    const Twist k = 2 + 3 * (1 + m);
    CHECK(pushforward_euler_char(e, m) == oracle::riemann_roch(6, k));
  }
}

TEST_CASE("properties over random pushforwards") {
  std::mt19937_64 rng(2024);
  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
  for (int t = 0; t < 500; ++t) {
    const std::int64_t d = 1 + rng() % 12;
    const std::int64_t p = primes[rng() % primes.size()];
    const std::int64_t s = 1 + rng() % 4;
    const Twist j = static_cast<Twist>(rng() % 61) - 30;
    const Twist a = static_cast<Twist>(rng() % 11) - 5;
    const Twist m = static_cast<Twist>(rng() % 11) - 5;
    const Twist m2 = static_cast<Twist>(rng() % 11) - 5;
    const int i = static_cast<int>(rng() % 3);
    const HypersurfaceModel model(d, p, s);
    const auto e = make_pushforward(model, j, a);
    CAPTURE(d);
    CAPTURE(p);
    CAPTURE(s);
    CAPTURE(j);
    CAPTURE(a);
    CAPTURE(m);

    // linearity in m
    CHECK(reduce(e, i, m).target.twist - reduce(e, i, m2).target.twist == p * s * (m - m2));
    // independent recomputation through the monomial oracles
    const Twist k = j + p * s * (a + m);
    const std::int64_t direct = i == 0 ? oracle::h0_hypersurface(d, k) : i == 2 ? oracle::h2_hypersurface(d, k) : 0;
    CHECK(pushforward_h(e, i, m) == direct);
    // twist equivariance
    CHECK(pushforward_h(make_pushforward(model, j, a + 1), i, m) == pushforward_h(e, i, m + 1));
    // family view agrees with the certificate
    CHECK(e.family().twist_at(m) == k);
  }
}

TEST_CASE("line bundle family steps by s") {
  const auto fam = line_bundle_family(HypersurfaceModel(5, 5, 3), 2);
  CHECK(fam.twist_at(0) == 2);
  CHECK(fam.twist_at(-1) == -1);
  CHECK(fam.h(0, 1) == h(HypersurfaceModel(5, 5), 0, 5));
}

TEST_CASE("text form") {
  CHECK(make_pushforward(HypersurfaceModel(5, 5), 2, 1).to_string() == "F*(O(2))(1)");
  CHECK(make_pushforward(HypersurfaceModel(5, 5), -3, 0).to_string() == "F*(O(-3))(0)");
}
