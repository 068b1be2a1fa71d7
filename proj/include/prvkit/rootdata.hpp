#pragma once

#include "prvkit/types.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prvkit {

struct SimpleFactor {
  char family = 'A';  // 'A'..'G'
  int rank = 1;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Isomorphism type of a reductive root datum: simple factors plus a torus.
struct CartanLabel {
  std::vector<SimpleFactor> factors;
  int torus_rank = 0;

  /// "A2", "B3xT1", "T2"; the empty datum prints as "T0".
  [[nodiscard]] std::string str() const;
  friend bool operator==(const CartanLabel&, const CartanLabel&) = default;
};

/// Parses the `<Letter><rank>` tokens joined by `x` grammar.
CartanLabel parse_label(std::string_view text);

/// Bourbaki Cartan matrix with entries a_ij = <alpha_i, alpha_j^vee>.
IntMat cartan_matrix(const SimpleFactor& f);

enum class DatumForm { SimplyConnected, Adjoint };

/// A positive root together with its coroot. Coefficient vectors are in the
/// simple (co)root bases.
struct PositiveRoot {
  WeightVec root;
  CoweightVec coroot;
  IntVec root_coeffs;
  IntVec coroot_coeffs;
  int height = 0;
};

/// Root datum (X^*, Phi, X_*, Phi^vee). Immutable after construction.
class RootDatum {
 public:
  /// Generic constructor from lattice data. Columns of `simple_roots` are
  /// vectors in X^*, columns of `simple_coroots` vectors in X_*.
  RootDatum(int rank, const IntMat& simple_roots, const IntMat& simple_coroots);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  [[nodiscard]] const CartanLabel& label() const { return label_; }
  [[nodiscard]] const IntMat& cartan() const { return cartan_; }

  [[nodiscard]] std::span<const WeightVec> simple_roots() const { return simple_roots_; }
  [[nodiscard]] std::span<const CoweightVec> simple_coroots() const { return simple_coroots_; }
  [[nodiscard]] std::span<const PositiveRoot> positive_roots() const { return positive_; }

  /// 2 rho and 2 rho^vee; rho itself is only half-integral.
  [[nodiscard]] const WeightVec& two_rho() const { return two_rho_; }
  [[nodiscard]] const CoweightVec& two_rho_check() const { return two_rho_check_; }

  [[nodiscard]] std::uint64_t weyl_order() const { return weyl_order_; }

  /// W-invariant form on X^* ⊗ Q (short roots have squared length 2),
  /// degenerate along the annihilator of the coroots.
  [[nodiscard]] const DenseMatrix<Rational>& symmetric_form() const { return form_; }
  /// symmetric_form() scaled by the smallest positive integer that clears
  /// denominators; see form_scale().
  [[nodiscard]] const IntMat& integral_form() const { return int_form_; }
  [[nodiscard]] std::int64_t form_scale() const { return form_scale_; }

  /// Matrix whose rows are the simple coroots: x -> (<x, alpha_i^vee>)_i.
  [[nodiscard]] const IntMat& coroot_pairing_matrix() const { return coroot_rows_; }
  /// Matrix whose rows are the simple roots: y -> (<alpha_i, y>)_i.
  [[nodiscard]] const IntMat& root_pairing_matrix() const { return root_rows_; }

  [[nodiscard]] bool is_dominant(const WeightVec& x) const;
  [[nodiscard]] bool is_dominant(const CoweightVec& y) const;

  /// <x, rho^vee> and <rho, y>, exact.
  [[nodiscard]] Rational pair_with_rho_check(const WeightVec& x) const;
  [[nodiscard]] Rational pair_with_rho(const CoweightVec& y) const;

  /// Coefficients of x in the simple-root basis when x lies in Q·Phi with
  /// zero component along the torus, otherwise empty.
  [[nodiscard]] std::optional<std::vector<Rational>> root_coordinates(const WeightVec& x) const;
  [[nodiscard]] std::optional<std::vector<Rational>> coroot_coordinates(const CoweightVec& y) const;
  [[nodiscard]] bool in_root_lattice(const WeightVec& x) const;
  [[nodiscard]] bool in_coroot_lattice(const CoweightVec& y) const;

  /// Builds sum_i c_i alpha_i.
  [[nodiscard]] WeightVec from_root_coordinates(std::span<const std::int64_t> c) const;
  [[nodiscard]] CoweightVec from_coroot_coordinates(std::span<const std::int64_t> c) const;

  [[nodiscard]] IntMat simple_roots_matrix() const;
  [[nodiscard]] IntMat simple_coroots_matrix() const;

  friend bool operator==(const RootDatum& a, const RootDatum& b);

 private:
  int rank_;
  CartanLabel label_;
  IntMat cartan_;
  std::vector<WeightVec> simple_roots_;
  std::vector<CoweightVec> simple_coroots_;
  std::vector<PositiveRoot> positive_;
  WeightVec two_rho_;
  CoweightVec two_rho_check_;
  std::uint64_t weyl_order_ = 1;
  DenseMatrix<Rational> form_;
  IntMat int_form_;
  std::int64_t form_scale_ = 1;
  IntMat coroot_rows_;
  IntMat root_rows_;
  DenseMatrix<Rational> root_solve_;    // maps coroot pairings to root coordinates
  DenseMatrix<Rational> coroot_solve_;  // maps root pairings to coroot coordinates
};

using DatumPtr = std::shared_ptr<const RootDatum>;

/// Builds the datum for a label. Torus factors use the standard lattice Z^r.
DatumPtr build_root_datum(std::string_view label, DatumForm form = DatumForm::SimplyConnected);

/// Builds a datum from a JSON document with fields rank, simple_roots,
/// simple_coroots (lists of integer vectors).
DatumPtr root_datum_from_json(std::string_view json_text);

/// Langlands dual: swaps X^* with X_* and roots with coroots.
DatumPtr dual_datum(const RootDatum& d);

/// Identifies the finite type of a connected Cartan matrix. Throws
/// UnsupportedType for anything outside A-G of rank <= 6.
SimpleFactor classify_cartan(const IntMat& cartan);

std::uint64_t weyl_order_of(const CartanLabel& label);

}  // namespace prvkit
