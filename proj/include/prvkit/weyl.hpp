#pragma once

#include "prvkit/rootdata.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace prvkit {

inline constexpr std::uint64_t kWeylOrderCap = 51840;

/// Element of W, stored as its action on X^* and (contragredient) on X_*,
/// with the lexicographically smallest reduced word in the simple
/// reflections. Words are read as products: {0, 1} is s1 s2, which applies
/// s2 first.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(IntMat action, IntMat coaction, std::vector<int> word)
      : action_(std::move(action)), coaction_(std::move(coaction)), word_(std::move(word)) {}

  [[nodiscard]] const IntMat& action() const { return action_; }
  [[nodiscard]] const IntMat& coaction() const { return coaction_; }
  [[nodiscard]] const std::vector<int>& word() const { return word_; }
  [[nodiscard]] int length() const { return static_cast<int>(word_.size()); }
  [[nodiscard]] int sign() const { return word_.size() % 2 == 0 ? 1 : -1; }
  [[nodiscard]] bool is_identity() const { return word_.empty(); }

  WeightVec operator()(const WeightVec& x) const { return WeightVec(IntVec(action_ * x.coords())); }
  CoweightVec operator()(const CoweightVec& y) const { return CoweightVec(IntVec(coaction_ * y.coords())); }

  /// "s1 s3 s2", or "e" for the identity.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }

 private:
  IntMat action_;
  IntMat coaction_;
  std::vector<int> word_;
};

/// Parses "s1 s2", "s1s2" or "e" into 0-based simple reflection indices.
std::vector<int> parse_word(std::string_view text);

/// Enumerated Weyl group of one datum. Elements are indexed in
/// (length, lexicographic reduced word) order; index 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(DatumPtr datum);

  [[nodiscard]] const RootDatum& datum() const { return *datum_; }
  [[nodiscard]] const DatumPtr& datum_ptr() const { return datum_; }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  [[nodiscard]] std::span<const WeylElement> elements() const { return elements_; }

  /// Index of the element with the given action matrix on X^*.
  [[nodiscard]] std::size_t index_of_action(const IntMat& action) const;
  [[nodiscard]] std::size_t index_of(const WeylElement& w) const { return index_of_action(w.action()); }
  /// Evaluates an arbitrary (not necessarily reduced) word.
  [[nodiscard]] std::size_t index_of_word(std::span<const int> word) const;
  [[nodiscard]] const WeylElement& from_word(std::span<const int> word) const { return elements_[index_of_word(word)]; }

  [[nodiscard]] std::size_t multiply(std::size_t a, std::size_t b) const;
  [[nodiscard]] std::size_t inverse(std::size_t a) const;

  /// Action of s_i on X^* and X_*.
  [[nodiscard]] const IntMat& reflection(int i) const { return reflections_[i]; }
  [[nodiscard]] const IntMat& coreflection(int i) const { return coreflections_[i]; }

 private:
  std::size_t lookup(const IntVec& image_of_two_rho) const;

  DatumPtr datum_;
  std::vector<WeylElement> elements_;
  std::vector<IntVec> images_;  // w(2 rho), which determines w
  std::unordered_map<IntVec, std::size_t, LatticeHash, IntVecEqual> index_;
  std::vector<IntMat> reflections_;
  std::vector<IntMat> coreflections_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

/// All elements of W by breadth-first closure from the simple reflections.
/// Throws CapExceeded when |W| > kWeylOrderCap.
std::vector<WeylElement> enumerate(const RootDatum& d);
WeylGroupPtr make_weyl_group(DatumPtr d);

template <class Vec>
struct DominantRep {
  Vec dominant;
  WeylElement v;  // v(x) = dominant, of minimal length
};

DominantRep<WeightVec> dominant_representative(const WeylGroup& w, const WeightVec& x);
DominantRep<CoweightVec> dominant_representative(const WeylGroup& w, const CoweightVec& y);

/// Folds x into the dominant chamber without consulting the group table.
/// Returns the number of reflections used (its parity is the sign of v).
int fold_to_dominant(const RootDatum& d, IntVec& x);
int fold_to_dominant_coweight(const RootDatum& d, IntVec& y);

/// Subgroup of W as sorted element indices into its WeylGroup.
struct Subgroup {
  std::vector<std::size_t> elements;
  std::vector<int> generators;  // simple reflections, when parabolic
};

Subgroup stabilizer(const WeylGroup& w, const WeightVec& x);
Subgroup stabilizer(const WeylGroup& w, const CoweightVec& y);
Subgroup parabolic_subgroup(const WeylGroup& w, std::vector<int> generators);

struct DoubleCoset {
  std::size_t representative;         // minimal (length, word) member
  std::vector<std::size_t> members;   // sorted
};

/// Partition of W into double cosets left \ W / right. The visiting order of
/// W can be permuted through `visit_order`; the output does not depend on it.
std::vector<DoubleCoset> double_cosets(const WeylGroup& w, const Subgroup& left, const Subgroup& right,
                                       std::span<const std::size_t> visit_order = {});

const WeylElement& longest_element(const WeylGroup& w);

}  // namespace prvkit
