#pragma once

#include "prvkit/weyl.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace prvkit {

/// Weight -> multiplicity. Zero entries are never stored.
using CharacterMap = std::unordered_map<WeightVec, BigInt, LatticeHash>;
/// Highest weight nu -> multiplicity of V(nu).
using Decomposition = std::map<WeightVec, BigInt>;

inline constexpr std::size_t kOracleCap = 1'000'000;

/// Representation-theoretic quantities for one datum. Memo tables are
/// shared across threads behind a mutex; every result is a pure function of
/// its arguments.
class RepCalculator {
 public:
  explicit RepCalculator(WeylGroupPtr group);

  [[nodiscard]] const WeylGroup& group() const { return *group_; }
  [[nodiscard]] const RootDatum& datum() const { return group_->datum(); }

  /// Multiplicities of the dominant weights of V(lambda) (Freudenthal).
  std::shared_ptr<const CharacterMap> dominant_character(const WeightVec& lambda) const;
  /// Full character of V(lambda).
  std::shared_ptr<const CharacterMap> character(const WeightVec& lambda) const;

  BigInt weight_multiplicity(const WeightVec& lambda, const WeightVec& mu) const;
  /// Weyl dimension formula.
  BigInt dim_irrep(const WeightVec& lambda) const;

  /// V(lambda) ⊗ V(mu) by the Brauer-Klimyk alternating sum over the weights
  /// of the smaller factor.
  std::shared_ptr<const Decomposition> decompose(const WeightVec& lambda, const WeightVec& mu) const;
  BigInt tensor_multiplicity(const WeightVec& lambda, const WeightVec& mu, const WeightVec& nu) const;

  /// dim (V(l_1) ⊗ ... ⊗ V(l_s))^G.
  BigInt invariant_dim(std::span<const WeightVec> weights) const;

  /// Independent route: multiply the two characters as weight maps and peel
  /// off highest weights. Throws CapExceeded when dim V(lambda) * dim V(mu)
  /// exceeds `cap`.
  Decomposition character_product_oracle(const WeightVec& lambda, const WeightVec& mu,
                                         std::size_t cap = kOracleCap) const;

  /// -w0(x), the highest weight of the dual representation.
  [[nodiscard]] WeightVec dual_weight(const WeightVec& x) const;

  /// Orbit W·x.
  [[nodiscard]] std::vector<WeightVec> orbit(const WeightVec& x) const;

 private:
  void require_dominant(const WeightVec& x) const;
  std::shared_ptr<const CharacterMap> compute_dominant_character(const WeightVec& lambda) const;
  Decomposition klimyk(const WeightVec& big, const WeightVec& small) const;

  WeylGroupPtr group_;
  IntMat int_form_;
  std::vector<IntVec> form_times_root_;  // F·beta for each positive root

  mutable std::mutex mu_;
  mutable std::unordered_map<WeightVec, std::shared_ptr<const CharacterMap>, LatticeHash> dom_char_;
  mutable std::unordered_map<WeightVec, std::shared_ptr<const CharacterMap>, LatticeHash> full_char_;
  mutable std::map<std::pair<WeightVec, WeightVec>, std::shared_ptr<const Decomposition>> tensor_;
};

/// JSON list of {weight, mult}, sorted by weight.
std::string character_to_json(const CharacterMap& c);

}  // namespace prvkit
