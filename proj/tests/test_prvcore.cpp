#include "prvkit/prvcore.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace prvkit;

namespace {

struct Fixture {
  explicit Fixture(const char* label) : rc(make_weyl_group(build_root_datum(label))) {}
  const WeylGroup& g() const { return rc.group(); }
  const WeylElement& w(const char* word) const { return g().from_word(parse_word(word)); }
  RepCalculator rc;
};

}  // namespace

TEST_CASE("prv_nu examples") {
  Fixture a1("A1");
  auto r = prv_nu(a1.g(), WeightVec{2}, WeightVec{2}, a1.w("s1"));
  CHECK(r.dominant == WeightVec{0});
  CHECK(r.v.is_identity());
  r = prv_nu(a1.g(), WeightVec{2}, WeightVec{2}, a1.w("e"));
  CHECK(r.dominant == WeightVec{4});
  CHECK(r.v.str() == "s1");
  Fixture a2("A2");
  CHECK(WeightVec(-WeightVec{1, 1} - a2.w("s1s2")(WeightVec{1, 1})) == WeightVec{1, -2});
  r = prv_nu(a2.g(), WeightVec{1, 1}, WeightVec{1, 1}, a2.w("s1s2"));
  CHECK(r.dominant == WeightVec{1, 1});
  auto inst = make_prv_instance(a2.g(), WeightVec{1, 1}, WeightVec{1, 1}, a2.w("s1s2"));
  CHECK(inst.v(WeightVec(-inst.lambda - inst.w(inst.mu))) == inst.nu);
  CHECK_THROWS_AS(prv_nu(a2.g(), WeightVec{-1, 0}, WeightVec{0, 0}, a2.w("e")), Error);
}

TEST_CASE("prv_verify examples") {
  Fixture a1("A1");
  auto p = prv_verify(a1.rc, WeightVec{1}, WeightVec{1}, a1.w("e"));
  CHECK(p.holds);
  CHECK(p.invariant_dim == 1);
  CHECK(p.nu == WeightVec{2});
  Fixture a2("A2");
  p = prv_verify(a2.rc, WeightVec{1, 1}, WeightVec{1, 1}, a2.w("s1s2"));
  CHECK(p.holds);
  CHECK(p.invariant_dim == 2);
  for (const auto& w : a2.g().elements()) {
    p = prv_verify(a2.rc, WeightVec{0, 0}, WeightVec{0, 0}, w);
    CHECK(p.holds);
    CHECK(p.invariant_dim == 1);
  }
}

TEST_CASE("refined count examples") {
  Fixture a1("A1");
  CHECK(refined_count(a1.g(), WeightVec{1}, WeightVec{1}, a1.w("e")) == 1);
  Fixture a2("A2");
  CHECK(refined_count(a2.g(), WeightVec{1, 1}, WeightVec{1, 1}, a2.w("s1s2")) == 2);
  CHECK(refined_count(a2.g(), WeightVec{1, 1}, WeightVec{1, 1}, a2.w("s2s1")) == 2);
  auto v = refined_verify(a2.rc, WeightVec{1, 1}, WeightVec{1, 1}, a2.w("s1s2"));
  CHECK(v.holds);
  CHECK(v.dim == 2);
  CHECK(v.m == 2);
  v = refined_verify(a1.rc, WeightVec{1}, WeightVec{1}, a1.w("s1"));
  CHECK(v.nu == WeightVec{0});
  CHECK(v.dim == 1);
  CHECK(v.m == 1);
  for (const auto& w : a2.g().elements()) {
    v = refined_verify(a2.rc, WeightVec{0, 0}, WeightVec{2, 1}, w);
    CHECK(v.dim == 1);
    CHECK(v.m == 1);
  }
}

TEST_CASE("kostant_check examples") {
  Fixture a2("A2");
  auto k = kostant_check(a2.rc, WeightVec{1, 0}, WeightVec{0, 1}, a2.w("e"));
  CHECK(k.applicable);
  CHECK(k.multiplicity == 1);
  Fixture a1("A1");
  k = kostant_check(a1.rc, WeightVec{2}, WeightVec{2}, a1.w("s1"));
  CHECK(k.applicable);
  CHECK(k.multiplicity == 1);
  k = kostant_check(a1.rc, WeightVec{1}, WeightVec{2}, a1.w("s1"));
  CHECK_FALSE(k.applicable);
}

TEST_CASE("dimension identity and valuation examples") {
  Fixture a1("A1");
  auto id = dimension_identity(a1.g(), WeightVec{2}, WeightVec{2}, a1.w("e"));
  CHECK(id.lhs == 4);
  CHECK(id.rhs == 4);
  CHECK(id.equal);
  id = dimension_identity(a1.g(), WeightVec{2}, WeightVec{2}, a1.w("s1"));
  CHECK(id.lhs == 2);
  CHECK(id.rhs == 2);
  const CoweightVec a{1};
  auto prof = stabilizer_valuations(a1.g(), WeightVec{2}, WeightVec{2}, a1.w("e"));
  CHECK(prof.at(a) == 4);
  CHECK(prof.at(-a) == 0);
  prof = stabilizer_valuations(a1.g(), WeightVec{2}, WeightVec{2}, a1.w("s1"));
  CHECK(prof.at(a) == 2);
  CHECK(prof.at(-a) == 0);
  CHECK_THROWS_AS((void)prof.at(CoweightVec{2}), Error);
  Fixture a2("A2");
  for (const auto& w : a2.g().elements()) {
    id = dimension_identity(a2.g(), WeightVec{0, 0}, WeightVec{0, 0}, w);
    CHECK(id.lhs == 0);
    CHECK(id.rhs == 0);
    for (const auto& [c, k] : stabilizer_valuations(a2.g(), WeightVec{0, 0}, WeightVec{0, 0}, w).entries) CHECK(k == 0);
  }
}

TEST_CASE("prv_pairs examples") {
  Fixture a1("A1");
  CHECK(prv_pairs(a1.g(), WeightVec{2}, WeightVec{2}, WeightVec{2}).empty());
  auto p = prv_pairs(a1.g(), WeightVec{1}, WeightVec{1}, WeightVec{2});
  REQUIRE(p.size() == 1);
  CHECK(p[0].w.is_identity());
  CHECK(p[0].v.str() == "s1");
  Fixture a2("A2");
  p = prv_pairs(a2.g(), WeightVec{1, 1}, WeightVec{1, 1}, WeightVec{1, 1});
  std::set<std::string> words;
  for (const auto& x : p) words.insert(x.w.str());
  CHECK(words.contains("s1 s2"));
  CHECK(words.contains("s2 s1"));
}

TEST_CASE("theorem properties on a small sweep") {
  std::mt19937 rng(5);
  for (const char* t : {"A1", "A2", "B2", "G2", "A1xA1", "A1xT1"}) {
    CAPTURE(t);
    Fixture f(t);
    const RootDatum& d = f.rc.datum();
    const auto box = oracle::dominant_box(d, std::string(t) == "G2" ? 1 : 2);
    for (const auto& l : box)
      for (const auto& m : box) {
        CAPTURE(l.str());
        CAPTURE(m.str());
        const auto counts = refined_counts(f.g(), l, m);
        for (std::size_t k = 0; k < f.g().order(); ++k) {
          const auto& w = f.g()[k];
          auto v = refined_verify(f.rc, l, m, w);
          CHECK(v.m == counts[k]);
          CHECK(v.m >= 1);
          CHECK(v.holds);
          auto id = dimension_identity(f.g(), l, m, w);
          CHECK(id.equal);
          auto prof = stabilizer_valuations(f.g(), l, m, w);
          for (const auto& pr : d.positive_roots()) {
            CHECK(prof.at(pr.coroot) >= pairing(l, pr.coroot));
            CHECK(prof.at(-pr.coroot) == std::max<std::int64_t>(0, pairing(l + w(m), -pr.coroot)));
          }
          auto kc = kostant_check(f.rc, l, m, w);
          if (kc.applicable) CHECK(kc.multiplicity == 1);
          for (const auto& pp : prv_pairs(f.g(), l, m, v.nu)) CHECK(prv_verify(f.rc, l, m, pp.w).nu == v.nu);
        }
        // representative choice does not matter
        std::vector<std::size_t> perm(f.g().order());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto& w = f.g()[perm[0]];
        CHECK(refined_count(f.g(), l, m, w, perm) == refined_count(f.g(), l, m, w));
      }
  }
}
