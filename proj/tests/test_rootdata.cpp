#include "prvkit/rootdata.hpp"

#include <doctest.h>

using namespace prvkit;

namespace {

std::size_t expected_positive_roots(const SimpleFactor& f) {
  const std::size_t n = static_cast<std::size_t>(f.rank);
  switch (f.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return 36;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

const char* kAllTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C2",
                           "C3", "C4", "C5", "C6", "D4", "D5", "D6", "E6", "F4", "G2"};

}  // namespace

TEST_CASE("A2 simply connected") {
  auto d = build_root_datum("A2");
  CHECK(d->rank() == 2);
  CHECK(d->positive_roots().size() == 3);
  CHECK(d->weyl_order() == 6);
  CHECK(d->label().str() == "A2");
  CHECK(d->two_rho() == WeightVec{2, 2});
}

TEST_CASE("torus datum has no roots") {
  auto d = build_root_datum("T2");
  CHECK(d->rank() == 2);
  CHECK(d->semisimple_rank() == 0);
  CHECK(d->positive_roots().empty());
  CHECK(d->weyl_order() == 1);
  CHECK(d->label().str() == "T2");
}

TEST_CASE("G2 adjoint") {
  auto d = build_root_datum("G2", DatumForm::Adjoint);
  CHECK(d->positive_roots().size() == 6);
  CHECK(d->weyl_order() == 12);
}

TEST_CASE("label grammar and errors") {
  CHECK(parse_label("B3xT1").str() == "B3xT1");
  CHECK(parse_label("A1xA2").factors.size() == 2);
  CHECK_THROWS_AS(parse_label("A0"), UnsupportedType);
  CHECK_THROWS_AS(parse_label("E7"), UnsupportedType);
  CHECK_THROWS_AS(parse_label("Q2"), UnsupportedType);
  CHECK_THROWS_AS(parse_label("A7"), UnsupportedType);
  CHECK_THROWS_AS(parse_label(""), UnsupportedType);
  CHECK_THROWS_AS(parse_label("A2x"), UnsupportedType);
  auto d = build_root_datum("B3xT1");
  CHECK(d->rank() == 4);
  CHECK(d->weyl_order() == 48);
}

TEST_CASE("root system invariants for every supported type") {
  for (auto form : {DatumForm::SimplyConnected, DatumForm::Adjoint}) {
    for (const char* t : kAllTypes) {
      CAPTURE(t);
      auto d = build_root_datum(t, form);
      const auto f = d->label().factors.at(0);
      CHECK(d->positive_roots().size() == expected_positive_roots(f));
      CHECK(d->cartan() == cartan_matrix(f));
      // <rho, alpha_i^vee> = 1, checked on 2 rho
      for (const auto& c : d->simple_coroots()) CHECK(pairing(d->two_rho(), c) == 2);
      for (const auto& r : d->simple_roots()) CHECK(pairing(r, d->two_rho_check()) == 2);
      // every non-simple positive root minus some simple root is a root
      for (const auto& pr : d->positive_roots()) {
        if (pr.height == 1) continue;
        bool found = false;
        for (const auto& other : d->positive_roots()) {
          if (other.height != pr.height - 1) continue;
          IntVec diff = pr.root_coeffs - other.root_coeffs;
          if (diff.sum() == 1 && (diff.array() >= 0).all()) found = true;
        }
        CHECK(found);
      }
      // shortest roots have squared length 2, and beta^vee = 2 beta / (beta, beta)
      const auto& q = d->symmetric_form();
      Rational shortest = -1;
      for (const auto& pr : d->positive_roots()) {
        DenseMatrix<Rational> v = pr.root.coords().unaryExpr([](std::int64_t x) { return Rational(x); });
        Rational len = (v.transpose() * q * v)(0, 0);
        if (shortest < 0 || len < shortest) shortest = len;
        CHECK(pairing(pr.root, pr.coroot) == 2);
      }
      CHECK(shortest == 2);
    }
  }
}

TEST_CASE("pairing examples") {
  auto d = build_root_datum("A2");
  // <rho, alpha_1^vee> = 1
  CHECK(Rational(pairing(d->two_rho(), d->simple_coroots()[0]), 2) == 1);
  // <omega_1, alpha_2^vee> = 0
  CHECK(pairing(WeightVec{1, 0}, d->simple_coroots()[1]) == 0);
  // theta^vee = alpha_1^vee + alpha_2^vee pairs with (1,1) to 2
  CoweightVec theta = d->simple_coroots()[0] + d->simple_coroots()[1];
  CHECK(pairing(WeightVec{1, 1}, theta) == 2);
  CHECK(d->pair_with_rho_check(WeightVec{1, 0}) == Rational(1));
  CHECK_THROWS_AS((void)pairing(WeightVec{1, 0}, CoweightVec{1, 0, 0}), DatumMismatch);
}

TEST_CASE("dual datum swaps roots and coroots") {
  auto b2 = build_root_datum("B2");
  auto c2 = dual_datum(*b2);
  CHECK(c2->label().str() == "C2");
  CHECK(c2->cartan() == IntMat(b2->cartan().transpose()));
  auto back = dual_datum(*c2);
  CHECK(*back == *b2);
  auto a2 = build_root_datum("A2");
  CHECK(dual_datum(*a2)->label().str() == "A2");
  auto t2 = build_root_datum("T2");
  CHECK(dual_datum(*t2)->label().str() == "T2");
  for (const char* t : kAllTypes) {
    auto d = build_root_datum(t);
    auto dd = dual_datum(*d);
    CHECK(dd->cartan() == IntMat(d->cartan().transpose()));
    CHECK(dd->positive_roots().size() == d->positive_roots().size());
    CHECK(dd->two_rho().coords() == d->two_rho_check().coords());
  }
}

TEST_CASE("simply connected and adjoint forms share the Cartan matrix") {
  for (const char* t : kAllTypes) {
    auto sc = build_root_datum(t, DatumForm::SimplyConnected);
    auto ad = build_root_datum(t, DatumForm::Adjoint);
    CHECK(sc->cartan() == ad->cartan());
    CHECK(sc->label().str() == ad->label().str());
  }
}

TEST_CASE("explicit lattice data") {
  auto d = root_datum_from_json(R"({"rank": 2, "simple_roots": [[2, -1], [-2, 2]], "simple_coroots": [[1, 0], [0, 1]]})");
  CHECK(d->label().str() == "C2");
  auto b = root_datum_from_json(R"({"rank": 2, "simple_roots": [[2, -2], [-1, 2]], "simple_coroots": [[1, 0], [0, 1]]})");
  CHECK(b->label().str() == "B2");
  CHECK_THROWS_AS(root_datum_from_json(R"({"rank": 1, "simple_roots": [[3]], "simple_coroots": [[1]]})"), Error);
  CHECK_THROWS_AS(root_datum_from_json("not json"), Error);
}

TEST_CASE("root lattice membership") {
  auto d = build_root_datum("A2");
  CHECK(d->in_root_lattice(WeightVec{1, 1}));
  CHECK_FALSE(d->in_root_lattice(WeightVec{1, 0}));
  auto ad = build_root_datum("A2", DatumForm::Adjoint);
  CHECK(ad->in_coroot_lattice(CoweightVec{2, -1}));
  CHECK_FALSE(ad->in_coroot_lattice(CoweightVec{1, 0}));
  auto t = build_root_datum("A1xT1");
  CHECK_FALSE(t->in_root_lattice(WeightVec{2, 1}));
  CHECK(t->in_root_lattice(WeightVec{2, 0}));
}
