#include "prvkit/repcalc.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace prvkit;

namespace {

RepCalculator calc(const char* label, DatumForm form = DatumForm::SimplyConnected) {
  return RepCalculator(make_weyl_group(build_root_datum(label, form)));
}

BigInt total_dim(const RepCalculator& rc, const Decomposition& dec) {
  BigInt s = 0;
  for (const auto& [nu, m] : dec) s += m * rc.dim_irrep(nu);
  return s;
}

}  // namespace

TEST_CASE("weight multiplicity examples") {
  auto a2 = calc("A2");
  CHECK(a2.weight_multiplicity(WeightVec{1, 1}, WeightVec{0, 0}) == 2);
  CHECK(a2.weight_multiplicity(WeightVec{2, 1}, WeightVec{2, 1}) == 1);
  auto a1 = calc("A1");
  CHECK(a1.weight_multiplicity(WeightVec{4}, WeightVec{2}) == 1);
  CHECK(a1.weight_multiplicity(WeightVec{4}, WeightVec{1}) == 0);
  CHECK(a1.weight_multiplicity(WeightVec{4}, WeightVec{-4}) == 1);
  CHECK_THROWS_AS((void)a1.weight_multiplicity(WeightVec{-1}, WeightVec{0}), Error);
}

TEST_CASE("dimension examples") {
  auto a2 = calc("A2");
  CHECK(a2.dim_irrep(WeightVec{1, 1}) == 8);
  CHECK(a2.dim_irrep(WeightVec{0, 0}) == 1);
  auto a1 = calc("A1");
  for (int n = 0; n < 10; ++n) CHECK(a1.dim_irrep(WeightVec{n}) == n + 1);
  CHECK(calc("G2").dim_irrep(WeightVec{1, 0}) == 7);
  CHECK(calc("G2").dim_irrep(WeightVec{0, 1}) == 14);
  CHECK(calc("B2").dim_irrep(WeightVec{1, 0}) == 5);
  CHECK(calc("B2").dim_irrep(WeightVec{0, 1}) == 4);
  CHECK(calc("E6").dim_irrep(WeightVec{1, 0, 0, 0, 0, 0}) == 27);
  CHECK(calc("A1xT1").dim_irrep(WeightVec{2, -7}) == 3);
}

TEST_CASE("Freudenthal agrees with Kostant's partition function") {
  for (const char* t : {"A1", "A2"}) {
    CAPTURE(t);
    auto rc = calc(t);
    for (const auto& lambda : oracle::dominant_box(rc.datum(), 3)) {
      for (const auto& [mu, m] : *rc.character(lambda)) {
        CAPTURE(lambda.str());
        CAPTURE(mu.str());
        CHECK(m == oracle::kostant_multiplicity(rc.group(), lambda, mu));
      }
    }
  }
  // and on a non-simply-laced case, smaller box
  auto b2 = calc("B2");
  for (const auto& lambda : oracle::dominant_box(b2.datum(), 2))
    for (const auto& [mu, m] : *b2.character(lambda)) CHECK(m == oracle::kostant_multiplicity(b2.group(), lambda, mu));
}

TEST_CASE("characters: W-invariance, dimension, support") {
  for (const char* t : {"A1", "A2", "A3", "B2", "C3", "G2", "A1xT1"}) {
    CAPTURE(t);
    auto rc = calc(t);
    const RootDatum& d = rc.datum();
    for (const auto& lambda : oracle::dominant_box(d, 1)) {
      auto ch = rc.character(lambda);
      BigInt total = 0;
      for (const auto& [mu, m] : *ch) {
        total += m;
        CHECK(m > 0);
        auto c = d.root_coordinates(lambda - mu);
        REQUIRE(c);
        for (const auto& r : *c) CHECK((r >= 0 && denominator(r) == 1));
        for (std::size_t k = 0; k < rc.group().order(); k += 3) {
          auto it = ch->find(rc.group()[k](mu));
          REQUIRE(it != ch->end());
          CHECK(it->second == m);
        }
      }
      CHECK(total == rc.dim_irrep(lambda));
      CHECK(ch->at(lambda) == 1);
    }
  }
}

TEST_CASE("tensor product examples") {
  auto a1 = calc("A1");
  auto dec = a1.decompose(WeightVec{2}, WeightVec{2});
  CHECK(*dec == Decomposition{{WeightVec{0}, 1}, {WeightVec{2}, 1}, {WeightVec{4}, 1}});
  auto a2 = calc("A2");
  CHECK(a2.tensor_multiplicity(WeightVec{1, 0}, WeightVec{0, 1}, WeightVec{1, 1}) == 1);
  CHECK(a2.tensor_multiplicity(WeightVec{2, 1}, WeightVec{0, 0}, WeightVec{2, 1}) == 1);
  CHECK(a2.tensor_multiplicity(WeightVec{1, 1}, WeightVec{1, 1}, WeightVec{1, 1}) == 2);
}

TEST_CASE("character product oracle examples") {
  auto a1 = calc("A1");
  CHECK(a1.character_product_oracle(WeightVec{2}, WeightVec{2}) ==
        Decomposition{{WeightVec{4}, 1}, {WeightVec{2}, 1}, {WeightVec{0}, 1}});
  CHECK(a1.character_product_oracle(WeightVec{0}, WeightVec{0}) == Decomposition{{WeightVec{0}, 1}});
  auto a2 = calc("A2");
  CHECK(a2.character_product_oracle(WeightVec{1, 0}, WeightVec{1, 0}) ==
        Decomposition{{WeightVec{2, 0}, 1}, {WeightVec{0, 1}, 1}});
  CHECK_THROWS_AS(a2.character_product_oracle(WeightVec{3, 3}, WeightVec{3, 3}, 100), CapExceeded);
}

TEST_CASE("Klimyk agrees with the character product, dimensions are conserved") {
  for (const char* t : {"A1", "A2", "B2", "G2", "A3"}) {
    CAPTURE(t);
    auto rc = calc(t);
    const int bound = std::string(t) == "A1" || std::string(t) == "A2" ? 3 : (std::string(t) == "B2" ? 2 : 1);
    const auto box = oracle::dominant_box(rc.datum(), bound);
    for (const auto& l : box)
      for (const auto& m : box) {
        if (m < l) continue;
        CAPTURE(l.str());
        CAPTURE(m.str());
        auto dec = rc.decompose(l, m);
        CHECK(*dec == rc.character_product_oracle(l, m));
        CHECK(*dec == *rc.decompose(m, l));
        CHECK(total_dim(rc, *dec) == rc.dim_irrep(l) * rc.dim_irrep(m));
      }
  }
}

TEST_CASE("invariant dimension") {
  auto a2 = calc("A2");
  std::vector<WeightVec> rho3{{1, 1}, {1, 1}, {1, 1}};
  CHECK(a2.invariant_dim(rho3) == 2);
  auto a1 = calc("A1");
  std::vector<WeightVec> two{{2}, {2}, {2}};
  CHECK(a1.invariant_dim(two) == 1);
  std::vector<WeightVec> odd{{1}, {1}, {1}};
  CHECK(a1.invariant_dim(odd) == 0);
  auto t2 = calc("T2");
  std::vector<WeightVec> tor{{3, -1}, {-3, 1}, {0, 0}};
  CHECK(t2.invariant_dim(tor) == 1);
  std::vector<WeightVec> tor_bad{{1, 1}, {1, 1}, {1, 1}};
  CHECK(t2.invariant_dim(tor_bad) == 0);
  std::vector<WeightVec> single{{0, 0}};
  CHECK(t2.invariant_dim(single) == 1);
  // four factors: 8^{⊗4} in A2 has 8 invariants
  std::vector<WeightVec> four(4, WeightVec{1, 1});
  CHECK(a2.invariant_dim(four) == 8);
}

TEST_CASE("invariant dimension: duality, permutation symmetry, root lattice") {
  std::mt19937 rng(2024);
  for (const char* t : {"A1", "A2", "B2", "G2", "A3"}) {
    CAPTURE(t);
    auto rc = calc(t);
    const RootDatum& d = rc.datum();
    const auto box = oracle::dominant_box(d, 2);
    for (const auto& l : box) {
      std::vector<WeightVec> pair{l, rc.dual_weight(l)};
      CHECK(rc.invariant_dim(pair) == 1);
    }
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<WeightVec> ws{box[pick(rng)], box[pick(rng)], box[pick(rng)]};
      const BigInt base = rc.invariant_dim(ws);
      std::sort(ws.begin(), ws.end());
      do {
        CHECK(rc.invariant_dim(ws) == base);
      } while (std::next_permutation(ws.begin(), ws.end()));
      if (base > 0) CHECK(d.in_root_lattice(ws[0] + ws[1] + ws[2]));
    }
  }
}

TEST_CASE("character JSON") {
  auto a1 = calc("A1");
  auto j = nlohmann::json::parse(character_to_json(*a1.character(WeightVec{2})));
  REQUIRE(j.size() == 3);
  CHECK(j[0]["weight"] == std::vector<int>{-2});
  CHECK(j[0]["mult"] == 1);
}
