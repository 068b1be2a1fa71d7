#pragma once

#include "prvkit/repcalc.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prvkit {

/// Pair of root data (H, G) with an injective map iota: X_*(T_H) -> X_*(T_G).
struct TransferMap {
  DatumPtr source;  // H
  DatumPtr target;  // G
  IntMat iota;      // target.rank x source.rank
  std::string label;
};

/// "torus:X"          H = maximal torus of the adjoint group of type X, iota = id
/// "sl2-root:X:i"     H = SL_2, alpha^vee -> alpha_i^vee of the adjoint group X
/// "custom:<json>"    {"source": D, "target": D, "iota": rows} where D is a
///                    label string, {"label": ..., "form": "sc"|"adjoint"}, or
///                    explicit {"rank", "simple_roots", "simple_coroots"}
TransferMap make_transfer_map(std::string_view preset);
TransferMap make_transfer_map(DatumPtr source, DatumPtr target, IntMat iota, std::string label = "custom");

using Triple = std::vector<CoweightVec>;

struct ImplicationCheck {
  BigInt h_dim;
  BigInt g_dim;
  bool imp_ok;  // h_dim = 0 or g_dim >= 1
};

struct SearchReport {
  std::vector<Triple> failures;          // h_dim >= 1, g_dim = 0, lexicographic
  std::size_t triples_checked = 0;
  std::size_t h_nonzero = 0;
  std::vector<Triple> lattice_violations;  // g_dim >= 1 but sum not in the coroot lattice
};

/// Transfer computations for one TransferMap. Invariant dimensions on both
/// sides are taken over the dual root data, where dominant coweights become
/// dominant weights. Safe to share between threads.
class TransferContext {
 public:
  explicit TransferContext(TransferMap tm);

  [[nodiscard]] const TransferMap& map() const { return tm_; }
  [[nodiscard]] const RootDatum& source() const { return *tm_.source; }
  [[nodiscard]] const RootDatum& target() const { return *tm_.target; }

  /// Dominant G-Weyl translate of iota(lambda).
  [[nodiscard]] CoweightVec transfer(const CoweightVec& lambda) const;

  BigInt h_invariants(const Triple& lambdas) const;
  /// Invariants of the transferred coweights, each scaled by `scale`.
  BigInt g_invariants(const Triple& lambdas, std::int64_t scale = 1) const;

  ImplicationCheck check_implication(const Triple& lambdas) const;

  /// Sum of the transfers lies in the coroot lattice of G.
  bool root_lattice_check(const Triple& lambdas) const;

  /// Smallest N' <= n_max with nonzero G-side invariants for (N' lambda_i'),
  /// or nullopt. Requires nonzero H-side invariants.
  std::optional<int> saturation_check(const Triple& lambdas, int n_max) const;

  /// Exhaustive search over s-tuples of dominant H-coweights with every
  /// coordinate in [-bound, bound]. `sum_zero_only` keeps tuples whose sum
  /// vanishes (the only ones with H-invariants when H is a torus).
  SearchReport search(int bound, int s = 3, int jobs = 1, bool sum_zero_only = false) const;
  std::vector<Triple> search_failures(int bound, int s = 3, int jobs = 1) const;

  /// Dominant H-coweights with coordinates in [-bound, bound], lexicographic.
  [[nodiscard]] std::vector<CoweightVec> dominant_box(int bound) const;

 private:
  WeightVec as_dual_weight(const CoweightVec& y) const { return WeightVec(y.coords()); }

  TransferMap tm_;
  WeylGroupPtr target_group_;
  RepCalculator h_dual_;
  RepCalculator g_dual_;
};

/// Closed form for H = SL_2: (n_1 alpha^vee, ..., n_s alpha^vee) has
/// invariants for PGL_2 iff the largest n_i is at most the sum of the others.
bool sl2_polygon_inequality(const std::vector<std::int64_t>& n);

}  // namespace prvkit
