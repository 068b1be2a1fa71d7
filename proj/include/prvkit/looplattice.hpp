#pragma once

#include "prvkit/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prvkit {

inline constexpr int kMaxLoopRank = 4;

/// Point of the affine Grassmannian G(K)/G(O), given by a representative.
struct LatticePoint {
  LaurentMatrix rep;
};

/// How coweights of the matrix group are written.
enum class LoopGroup {
  SL,   // SL_m, coordinates in the simple coroot basis
  PGL,  // PGL_m via GL_m representatives, fundamental coweight coordinates
};

/// Base point [0].
LatticePoint base_point(int m);

/// t^lambda for lambda = sum c_i alpha_i^vee, i.e. diag(t^{a_1}, ..., t^{a_m})
/// with a_i = c_i - c_{i-1}.
LatticePoint torus_point(int m, const std::vector<std::int64_t>& coroot_coords);

/// GL_m representative diag(t^{b_1}, ..., t^{b_m}) of t^lambda for the PGL_m
/// coweight lambda = sum c_i omega_i^vee (b_i = c_i + ... + c_{m-1}).
LatticePoint pgl_torus_point(int m, const std::vector<std::int64_t>& fundamental_coords);

LatticePoint torus_point(int m, const std::vector<std::int64_t>& coords, LoopGroup group);

/// Valuations of the elementary divisors of `a` over K, sorted decreasing.
/// Computed by valuation pivoting over truncated power series and certified
/// by a rerun with 4 more terms. Throws SingularInput or WindowExceeded.
std::vector<int> elementary_divisors(const LaurentMatrix& a);

/// Same at a fixed truncation order; nullopt when the precision does not
/// suffice to see every divisor.
std::optional<std::vector<int>> elementary_divisors_at_precision(const LaurentMatrix& a, int precision);

/// d(L1, L2): the dominant coweight of rep(L1)^{-1} rep(L2), in the
/// coordinates of `group`.
std::vector<std::int64_t> chevalley_distance(const LatticePoint& l1, const LatticePoint& l2,
                                             LoopGroup group = LoopGroup::SL);

/// True iff d(L_{i-1}, L_i) = targets[i] for every i, cyclically (L_0 = L_s).
/// The last point must be the base point.
bool convolution_membership(const std::vector<LatticePoint>& points,
                            const std::vector<std::vector<std::int64_t>>& targets, LoopGroup group = LoopGroup::SL);

struct StabilizerDim {
  int n;              // truncation order
  int stab_dim;       // dim of the stabilizer algebra modulo t^N
  int orbit_dim;      // N dim sl_m - stab_dim
  bool stable;        // orbit_dim is unchanged at N + 1
};

/// Dimension of {X in sl_m(O / t^N) : g^{-1} X g in sl_m(O) for every g},
/// from the kernel of the linear system killing negative-degree terms.
StabilizerDim stabilizer_intersection_dim(const std::vector<LaurentMatrix>& elements, int n);

/// Truncation order: 2 + the largest expected valuation when known, else 4.
int default_truncation(std::optional<std::int64_t> max_valuation);

struct BasisValuation {
  std::string name;  // e, h, f for m = 2; E12, H1, ... otherwise
  int valuation;     // least k with t^k b in every Ad_g sl_m(O)
};

/// Per basis element of sl_m: max(0, -min degree of g^{-1} b g) over g.
std::vector<BasisValuation> basis_valuations(const std::vector<LaurentMatrix>& elements);

/// The SL_2 example: t^{alpha^vee} and y = [[1, t], [0, 1]] t^{alpha^vee}.
LaurentMatrix example_y();
std::vector<LaurentMatrix> example_stabilizer_inputs();
/// ([alpha^vee], y, [0]).
std::vector<LatticePoint> example_point();

/// The two displayed factorizations of the SL_2 example, checked exactly.
bool verify_matrix_identities();

}  // namespace prvkit
