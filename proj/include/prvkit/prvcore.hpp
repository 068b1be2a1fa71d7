#pragma once

#include "prvkit/repcalc.hpp"

#include <span>
#include <utility>
#include <vector>

namespace prvkit {

/// (lambda, mu, w) with the derived nu = v(-lambda - w mu) and its canonical
/// minimal-length v. Only make_prv_instance builds these, so nu always
/// matches the inputs.
struct PrvInstance {
  WeightVec lambda;
  WeightVec mu;
  WeylElement w;
  WeightVec nu;
  WeylElement v;
};

PrvInstance make_prv_instance(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu, const WeylElement& w);

/// Dominant representative of -lambda - w mu.
DominantRep<WeightVec> prv_nu(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu, const WeylElement& w);

struct PrvVerdict {
  bool holds;
  BigInt invariant_dim;
  WeightVec nu;
};

PrvVerdict prv_verify(const RepCalculator& rc, const WeightVec& lambda, const WeightVec& mu, const WeylElement& w);

/// Number of double cosets W_lambda u W_mu whose -lambda - u mu is
/// W-conjugate to -lambda - w mu. `visit_order` permutes the enumeration of W
/// used to build the cosets; the count must not depend on it.
int refined_count(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu, const WeylElement& w,
                  std::span<const std::size_t> visit_order = {});

/// refined_count for every w at once, indexed like the group.
std::vector<int> refined_counts(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu);

struct RefinedVerdict {
  bool holds;  // dim >= m
  BigInt dim;
  int m;
  WeightVec nu;
};

RefinedVerdict refined_verify(const RepCalculator& rc, const WeightVec& lambda, const WeightVec& mu,
                              const WeylElement& w);

struct KostantVerdict {
  bool applicable;  // lambda + w mu is dominant
  BigInt multiplicity;
};

KostantVerdict kostant_check(const RepCalculator& rc, const WeightVec& lambda, const WeightVec& mu,
                             const WeylElement& w);

struct DimensionIdentity {
  Rational lhs;       // <lambda + mu + nu, rho^vee>
  std::int64_t rhs;   // sum over all coroots of max(0, <lambda, a>, <lambda + w mu, a>)
  bool equal;
};

DimensionIdentity dimension_identity(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu,
                                     const WeylElement& w);

/// max(0, <lambda, a>, <lambda + w mu, a>) for every coroot a, positive
/// coroots first (in datum order), then their negatives.
struct ValuationProfile {
  std::vector<std::pair<CoweightVec, std::int64_t>> entries;
  [[nodiscard]] std::int64_t total() const;
  [[nodiscard]] std::int64_t at(const CoweightVec& coroot) const;
};

ValuationProfile stabilizer_valuations(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu,
                                       const WeylElement& w);

struct PrvPair {
  WeylElement w;
  WeylElement v;
};

/// Every w with dom(-lambda - w mu) = nu, in group order, each with its
/// canonical v. Empty means (lambda, mu, nu) is not a PRV triple.
std::vector<PrvPair> prv_pairs(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu, const WeightVec& nu);

}  // namespace prvkit
