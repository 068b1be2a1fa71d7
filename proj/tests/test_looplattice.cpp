#include "prvkit/looplattice.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace prvkit;

TEST_CASE("Laurent polynomial arithmetic and text form") {
  const Laurent p = parse_laurent("3*t^-1 + 1/2 + 2*t^2");
  CHECK(p.valuation() == -1);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rational(1, 2));
  CHECK(to_string(p) == "3*t^-1 + 1/2 + 2*t^2");
  CHECK(to_string(parse_laurent("-t + t^-1")) == "t^-1 - t");
  CHECK(to_string(parse_laurent("0")) == "0");
  CHECK(parse_laurent("t - t").is_zero());
  CHECK(parse_laurent("2t") == Laurent::monomial(2, 1));
  CHECK(parse_laurent("t^(-3)") == Laurent::t(-3));
  CHECK((Laurent::t() + 1) * (Laurent::t() - 1) == parse_laurent("t^2 - 1"));
  CHECK(Laurent::monomial(Rational(2, 3), 4).inverse_monomial() == Laurent::monomial(Rational(3, 2), -4));
  CHECK_THROWS_AS(parse_laurent("t +"), Error);
  CHECK_THROWS_AS(parse_laurent("x"), Error);
  CHECK_THROWS_AS(parse_laurent("1/0"), Error);
  CHECK_THROWS_AS((void)(Laurent::t() + 1).inverse_monomial(), Error);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> c(-4, 4), lo(-3, 3);
    std::vector<Rational> cs;
    for (int k = 0; k < 4; ++k) cs.push_back(Rational(c(rng), 1 + std::abs(c(rng))));
    Laurent q(lo(rng), cs);
    CHECK(parse_laurent(to_string(q)) == q);
  }
}

TEST_CASE("Laurent matrices") {
  const LaurentMatrix y = parse_laurent_matrix("[[t, 1], [0, t^-1]]");
  CHECK(to_string(y) == "[[t, 1], [0, t^-1]]");
  CHECK(y.determinant() == Laurent(1));
  CHECK(y * y.inverse() == LaurentMatrix::identity(2));
  CHECK(y.window() == std::pair{-1, 1});
  CHECK_THROWS_AS(parse_laurent_matrix("[[1, 2], [3]]"), Error);
  CHECK_THROWS_AS(parse_laurent_matrix("[[1, 2]"), Error);
  CHECK_THROWS_AS((void)parse_laurent_matrix("[[t + 1, 0], [0, 1]]").inverse(), Error);
  CHECK_THROWS_AS((void)parse_laurent_matrix("[[1, 1], [1, 1]]").inverse(), SingularInput);

  LaurentMatrix big = LaurentMatrix::diagonal_monomials({10, -10});
  big.set_max_width(45);
  CHECK_NOTHROW(big * big);
  CHECK_THROWS_AS(big * big * big, WindowExceeded);

  LaurentMatrix d = LaurentMatrix::diagonal_monomials({2, 1});
  d.declare_det(Laurent::t(3));
  CHECK(d.det_certified());
  d.declare_det(Laurent::t(2));
  CHECK_FALSE(d.det_certified());
  CHECK_THROWS_AS(d.declare_det(Laurent::t() + 1), Error);

  std::mt19937 rng(11);
  for (int m = 1; m <= 4; ++m) {
    const LaurentMatrix g = oracle::random_unimodular(rng, m);
    CHECK(g.determinant() == Laurent(1));
    CHECK(g * g.inverse() == LaurentMatrix::identity(m));
    CHECK(g.inverse() * g == LaurentMatrix::identity(m));
  }
}

TEST_CASE("torus points") {
  CHECK(torus_point(2, {1}).rep == LaurentMatrix::diagonal_monomials({1, -1}));
  CHECK(torus_point(2, {0}).rep == LaurentMatrix::identity(2));
  CHECK(torus_point(3, {1, 0}).rep == LaurentMatrix::diagonal_monomials({1, -1, 0}));
  CHECK(pgl_torus_point(3, {1, 0}).rep == LaurentMatrix::diagonal_monomials({1, 0, 0}));
  CHECK(pgl_torus_point(3, {0, 1}).rep == LaurentMatrix::diagonal_monomials({1, 1, 0}));
  CHECK(torus_point(3, {2, 1}).rep.det_certified());
  CHECK_THROWS_AS(torus_point(2, {1, 2}), Error);
  CHECK_THROWS_AS(torus_point(5, {0, 0, 0, 0}), Error);
}

TEST_CASE("elementary divisors agree with determinantal divisors") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> ex(-3, 3);
  for (int m = 1; m <= 4; ++m)
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(m));
      for (auto& x : a) x = ex(rng);
      const LaurentMatrix x =
          oracle::random_unimodular(rng, m) * LaurentMatrix::diagonal_monomials(a) * oracle::random_unimodular(rng, m);
      const auto got = elementary_divisors(x);
      CHECK(got == oracle::determinantal_divisors(x));
      std::sort(a.begin(), a.end(), std::greater<>());
      CHECK(std::vector<std::int64_t>(got.begin(), got.end()) == a);
    }
  // non-monomial determinant
  const LaurentMatrix q = parse_laurent_matrix("[[1 + t, t^2], [t, 1 - t^3]]");
  CHECK(elementary_divisors(q) == oracle::determinantal_divisors(q));
  CHECK_THROWS_AS(elementary_divisors(parse_laurent_matrix("[[t, t], [1, 1]]")), SingularInput);
  // too few terms to see the second divisor
  CHECK_FALSE(elementary_divisors_at_precision(LaurentMatrix::diagonal_monomials({0, 3}), 2).has_value());
}

TEST_CASE("Chevalley distance examples") {
  const auto o = base_point(2);
  CHECK(chevalley_distance(o, torus_point(2, {3})) == std::vector<std::int64_t>{3});
  CHECK(chevalley_distance(o, torus_point(2, {-3})) == std::vector<std::int64_t>{3});
  const auto pts = example_point();
  CHECK(chevalley_distance(pts[0], pts[1]) == std::vector<std::int64_t>{1});
  CHECK(chevalley_distance(pts[1], pts[1]) == std::vector<std::int64_t>{0});
  CHECK(chevalley_distance(torus_point(3, {2, 1}), torus_point(3, {2, 1})) == std::vector<std::int64_t>{0, 0});
  CHECK(chevalley_distance(base_point(3), pgl_torus_point(3, {1, 0}), LoopGroup::PGL) == std::vector<std::int64_t>{1, 0});
  CHECK_THROWS_AS(chevalley_distance(base_point(3), pgl_torus_point(3, {1, 0})), Error);
}

TEST_CASE("Chevalley distance: d([0],[lambda]) = lambda and G(O) bi-invariance") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> co(0, 3);
  for (int m = 2; m <= 4; ++m)
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::int64_t> fund(static_cast<std::size_t>(m - 1));
      for (auto& c : fund) c = co(rng);
      // dominant SL_m coweight: coroot coordinates of sum c_i omega_i^vee scaled by m
      std::vector<std::int64_t> a(static_cast<std::size_t>(m), 0);
      for (int i = m - 2; i >= 0; --i) a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i + 1)] + fund[static_cast<std::size_t>(i)];
      const std::int64_t total = std::accumulate(a.begin(), a.end(), std::int64_t{0});
      for (auto& x : a) x = m * x - total;
      std::vector<std::int64_t> c;
      std::int64_t run = 0;
      for (int i = 0; i + 1 < m; ++i) c.push_back(run += a[static_cast<std::size_t>(i)]);
      const auto lam = torus_point(m, c);
      CHECK(chevalley_distance(base_point(m), lam) == c);
      const LaurentMatrix g = oracle::random_unimodular(rng, m);
      const LaurentMatrix k1 = oracle::random_unimodular(rng, m);
      const LaurentMatrix k2 = oracle::random_unimodular(rng, m);
      const LatticePoint l1{g * k1};
      const LatticePoint l2{g * lam.rep * k2};
      CHECK(chevalley_distance(l1, l2) == c);
      CHECK(chevalley_distance({k1 * l1.rep}, {k1 * l2.rep}) == c);
      CHECK(chevalley_distance(base_point(m), {g}) == std::vector<std::int64_t>(static_cast<std::size_t>(m - 1), 0));
      CHECK(chevalley_distance(base_point(m), {lam.rep * k1}, LoopGroup::PGL) ==
            std::vector<std::int64_t>([&] {
              std::vector<std::int64_t> f;
              for (int i = 0; i + 1 < m; ++i) f.push_back(a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i + 1)]);
              return f;
            }()));
    }
}

TEST_CASE("convolution membership") {
  CHECK(convolution_membership(example_point(), {{1}, {1}, {1}}));
  CHECK_FALSE(convolution_membership(example_point(), {{1}, {1}, {2}}));
  // Step-1 point for lambda = mu = alpha^vee, w = s: ([alpha^vee], [0], [0])
  CHECK(convolution_membership({torus_point(2, {1}), base_point(2), base_point(2)}, {{1}, {1}, {0}}));
  CHECK(convolution_membership({base_point(2)}, {{0}}));
  CHECK_THROWS_AS(convolution_membership({base_point(2)}, {}), Error);
  CHECK_THROWS_AS(convolution_membership({torus_point(2, {1})}, {{1}}), Error);
}

TEST_CASE("stabilizer of the SL2 example") {
  const auto s = stabilizer_intersection_dim(example_stabilizer_inputs(), 2);
  CHECK(s.orbit_dim == 3);
  CHECK(s.stab_dim == 3);
  CHECK(s.stable);
  const auto v = basis_valuations(example_stabilizer_inputs());
  REQUIRE(v.size() == 3);
  CHECK(v[0].name == "e");
  CHECK(v[0].valuation == 2);
  CHECK(v[1].name == "h");
  CHECK(v[1].valuation == 1);
  CHECK(v[2].name == "f");
  CHECK(v[2].valuation == 0);
  for (int n = 1; n <= 5; ++n) CHECK(stabilizer_intersection_dim({LaurentMatrix::identity(3)}, n).orbit_dim == 0);
  CHECK_THROWS_AS(stabilizer_intersection_dim({LaurentMatrix::identity(2)}, 0), Error);
  CHECK_FALSE(stabilizer_intersection_dim(example_stabilizer_inputs(), 1).stable);
}

TEST_CASE("stabilizer dimension grows by dim sl_m once stable") {
  std::mt19937 rng(31);
  for (int m = 2; m <= 3; ++m)
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<LaurentMatrix> elts{oracle::random_unimodular(rng, m, 2) * torus_point(m, std::vector<std::int64_t>(static_cast<std::size_t>(m - 1), 1)).rep};
      int prev_stab = -1;
      bool was_stable = false;
      for (int n = 1; n <= 6; ++n) {
        const auto s = stabilizer_intersection_dim(elts, n);
        if (was_stable) CHECK(s.stab_dim - prev_stab == m * m - 1);
        was_stable = s.stable;
        prev_stab = s.stab_dim;
      }
      CHECK(was_stable);
    }
}

TEST_CASE("matrix identities of the SL2 example") { CHECK(verify_matrix_identities()); }

TEST_CASE("default truncation") {
  CHECK(default_truncation(std::nullopt) == 4);
  CHECK(default_truncation(3) == 5);
}
