#include "prvkit/prvcore.hpp"

#include <algorithm>

namespace prvkit {

namespace {

void require_dominant(const RootDatum& d, const WeightVec& x, const char* name) {
  if (x.size() != d.rank()) throw DatumMismatch(std::string(name) + " has the wrong rank for this datum");
  if (!d.is_dominant(x)) throw Error(std::string(name) + " = " + x.str() + " is not dominant");
}

}  // namespace

DominantRep<WeightVec> prv_nu(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu, const WeylElement& w) {
  require_dominant(g.datum(), lambda, "lambda");
  require_dominant(g.datum(), mu, "mu");
  return dominant_representative(g, -lambda - w(mu));
}

PrvInstance make_prv_instance(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu,
                              const WeylElement& w) {
  auto r = prv_nu(g, lambda, mu, w);
  return {lambda, mu, w, r.dominant, r.v};
}

PrvVerdict prv_verify(const RepCalculator& rc, const WeightVec& lambda, const WeightVec& mu, const WeylElement& w) {
  const WeightVec nu = prv_nu(rc.group(), lambda, mu, w).dominant;
  const std::vector<WeightVec> triple{lambda, mu, nu};
  BigInt dim = rc.invariant_dim(triple);
  return {dim >= 1, std::move(dim), nu};
}

int refined_count(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu, const WeylElement& w,
                  std::span<const std::size_t> visit_order) {
  const WeightVec nu = prv_nu(g, lambda, mu, w).dominant;
  const auto cosets = double_cosets(g, stabilizer(g, lambda), stabilizer(g, mu), visit_order);
  int m = 0;
  for (const auto& c : cosets) {
    IntVec x = (-lambda - g[c.representative](mu)).coords();
    fold_to_dominant(g.datum(), x);
    if (WeightVec(std::move(x)) == nu) ++m;
  }
  return m;
}

std::vector<int> refined_counts(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu) {
  require_dominant(g.datum(), lambda, "lambda");
  require_dominant(g.datum(), mu, "mu");
  const auto cosets = double_cosets(g, stabilizer(g, lambda), stabilizer(g, mu));
  std::vector<WeightVec> coset_nu;
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t k = 0; k < cosets.size(); ++k) {
    IntVec x = (-lambda - g[cosets[k].representative](mu)).coords();
    fold_to_dominant(g.datum(), x);
    coset_nu.emplace_back(std::move(x));
    for (auto e : cosets[k].members) coset_of[e] = k;
  }
  std::vector<int> out(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) {
    const WeightVec& nu = coset_nu[coset_of[e]];
    out[e] = static_cast<int>(std::count(coset_nu.begin(), coset_nu.end(), nu));
  }
  return out;
}

RefinedVerdict refined_verify(const RepCalculator& rc, const WeightVec& lambda, const WeightVec& mu,
                              const WeylElement& w) {
  auto p = prv_verify(rc, lambda, mu, w);
  const int m = refined_count(rc.group(), lambda, mu, w);
  return {p.invariant_dim >= m, std::move(p.invariant_dim), m, std::move(p.nu)};
}

KostantVerdict kostant_check(const RepCalculator& rc, const WeightVec& lambda, const WeightVec& mu,
                             const WeylElement& w) {
  require_dominant(rc.datum(), lambda, "lambda");
  require_dominant(rc.datum(), mu, "mu");
  const WeightVec top = lambda + w(mu);
  if (!rc.datum().is_dominant(top)) return {false, 0};
  return {true, rc.tensor_multiplicity(lambda, mu, top)};
}

DimensionIdentity dimension_identity(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu,
                                     const WeylElement& w) {
  const RootDatum& d = g.datum();
  const WeightVec nu = prv_nu(g, lambda, mu, w).dominant;
  const Rational lhs = d.pair_with_rho_check(lambda + mu + nu);
  const std::int64_t rhs = stabilizer_valuations(g, lambda, mu, w).total();
  return {lhs, rhs, lhs == rhs};
}

std::int64_t ValuationProfile::total() const {
  std::int64_t s = 0;
  for (const auto& [a, k] : entries) s += k;
  return s;
}

std::int64_t ValuationProfile::at(const CoweightVec& coroot) const {
  for (const auto& [a, k] : entries)
    if (a == coroot) return k;
  throw Error("not a coroot: " + coroot.str());
}

ValuationProfile stabilizer_valuations(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu,
                                       const WeylElement& w) {
  const RootDatum& d = g.datum();
  require_dominant(d, lambda, "lambda");
  require_dominant(d, mu, "mu");
  const WeightVec shifted = lambda + w(mu);
  ValuationProfile out;
  auto add = [&](const CoweightVec& a) {
    out.entries.emplace_back(a, std::max({std::int64_t{0}, pairing(lambda, a), pairing(shifted, a)}));
  };
  for (const auto& pr : d.positive_roots()) add(pr.coroot);
  for (const auto& pr : d.positive_roots()) add(-pr.coroot);
  return out;
}

std::vector<PrvPair> prv_pairs(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu,
                               const WeightVec& nu) {
  require_dominant(g.datum(), nu, "nu");
  std::vector<PrvPair> out;
  for (const auto& w : g.elements()) {
    auto r = prv_nu(g, lambda, mu, w);
    if (r.dominant == nu) out.push_back({w, r.v});
  }
  return out;
}

}  // namespace prvkit
