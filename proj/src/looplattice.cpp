#include "prvkit/looplattice.hpp"

#include "prvkit/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace prvkit {

namespace {

void check_size(int m) {
  if (m < 1 || m > kMaxLoopRank) throw Error("matrix size must be between 1 and " + std::to_string(kMaxLoopRank));
}

using Series = std::vector<Rational>;  // coefficients of 1, t, ..., t^{P-1}

int series_valuation(const Series& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) return static_cast<int>(i);
  return kInfiniteValuation;
}

Series series_inverse(const Series& u, std::size_t n) {
  Series inv(n, Rational(0));
  inv[0] = Rational(1) / u[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k && i < u.size(); ++i) s += u[i] * inv[k - i];
    inv[k] = -s / u[0];
  }
  return inv;
}

}  // namespace

LatticePoint base_point(int m) {
  check_size(m);
  return {LaurentMatrix::identity(m)};
}

LatticePoint torus_point(int m, const std::vector<std::int64_t>& c) {
  check_size(m);
  if (static_cast<int>(c.size()) != m - 1) throw Error("SL_m coweight needs m - 1 coroot coordinates");
  std::vector<std::int64_t> a(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const std::int64_t hi = i < m - 1 ? c[static_cast<std::size_t>(i)] : 0;
    const std::int64_t lo = i > 0 ? c[static_cast<std::size_t>(i - 1)] : 0;
    a[static_cast<std::size_t>(i)] = hi - lo;
  }
  LatticePoint p{LaurentMatrix::diagonal_monomials(a)};
  p.rep.declare_det(Laurent(1));
  return p;
}

LatticePoint pgl_torus_point(int m, const std::vector<std::int64_t>& c) {
  check_size(m);
  if (static_cast<int>(c.size()) != m - 1) throw Error("PGL_m coweight needs m - 1 fundamental coordinates");
  std::vector<std::int64_t> b(static_cast<std::size_t>(m), 0);
  for (int i = m - 2; i >= 0; --i) b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i + 1)] + c[static_cast<std::size_t>(i)];
  LatticePoint p{LaurentMatrix::diagonal_monomials(b)};
  p.rep.declare_det(Laurent::t(static_cast<int>(std::accumulate(b.begin(), b.end(), std::int64_t{0}))));
  return p;
}

LatticePoint torus_point(int m, const std::vector<std::int64_t>& coords, LoopGroup group) {
  return group == LoopGroup::SL ? torus_point(m, coords) : pgl_torus_point(m, coords);
}

std::optional<std::vector<int>> elementary_divisors_at_precision(const LaurentMatrix& a, int precision) {
  const int m = a.size();
  const int shift = a.min_valuation();
  if (shift == kInfiniteValuation) throw SingularInput("zero matrix");
  const auto p = static_cast<std::size_t>(precision);
  // t^{-shift} a, an O-matrix, truncated mod t^P.
  std::vector<std::vector<Series>> s(static_cast<std::size_t>(m), std::vector<Series>(static_cast<std::size_t>(m), Series(p, Rational(0))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Laurent& e = a(i, j);
      if (e.is_zero()) continue;
      for (std::size_t k = 0; k < e.coeffs().size(); ++k) {
        const std::size_t deg = static_cast<std::size_t>(e.low() - shift) + k;
        if (deg < p) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][deg] = e.coeffs()[k];
      }
    }

  std::vector<int> out;
  for (int k = 0; k < m; ++k) {
    int best = kInfiniteValuation, bi = -1, bj = -1;
    for (int i = k; i < m; ++i)
      for (int j = k; j < m; ++j) {
        const int v = series_valuation(s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best == kInfiniteValuation) return std::nullopt;
    std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(bi)]);
    for (auto& row : s) std::swap(row[static_cast<std::size_t>(k)], row[static_cast<std::size_t>(bj)]);

    const auto v = static_cast<std::size_t>(best);
    auto& pivot_row = s[static_cast<std::size_t>(k)];
    const Series unit(pivot_row[static_cast<std::size_t>(k)].begin() + static_cast<std::ptrdiff_t>(v),
                      pivot_row[static_cast<std::size_t>(k)].end());
    const Series unit_inv = series_inverse(unit, p - v);
    for (int i = k + 1; i < m; ++i) {
      auto& row = s[static_cast<std::size_t>(i)];
      const Series& lead = row[static_cast<std::size_t>(k)];
      if (series_valuation(lead) == kInfiniteValuation) continue;
      // f = (lead / t^v) * unit^{-1}, known mod t^{P-v}; every pivot-row
      // entry has valuation >= v, so f * entry is exact mod t^P.
      Series f(p - v, Rational(0));
      for (std::size_t x = 0; x < p - v; ++x) {
        if (lead[x + v] == 0) continue;
        for (std::size_t y = 0; x + y < p - v; ++y) f[x + y] += lead[x + v] * unit_inv[y];
      }
      for (int j = k; j < m; ++j) {
        const Series& src = pivot_row[static_cast<std::size_t>(j)];
        Series& dst = row[static_cast<std::size_t>(j)];
        for (std::size_t x = 0; x < f.size(); ++x) {
          if (f[x] == 0) continue;
          for (std::size_t y = 0; x + y < p; ++y)
            if (src[y] != 0) dst[x + y] -= f[x] * src[y];
        }
      }
    }
    out.push_back(best + shift);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<int> elementary_divisors(const LaurentMatrix& a) {
  check_size(a.size());
  const Laurent det = a.determinant();
  if (det.is_zero()) throw SingularInput("matrix is singular over K");
  const int shift = a.min_valuation();
  // Every divisor of t^{-shift} a is at most val(det) - m shift.
  const int precision = det.valuation() - a.size() * shift + 1;
  if (precision > a.max_width()) throw WindowExceeded("elementary divisors need more terms than the window allows");
  auto first = elementary_divisors_at_precision(a, precision);
  auto check = elementary_divisors_at_precision(a, precision + 4);
  if (!first || !check || *first != *check)
    throw WindowExceeded("elementary divisors not certified at the widened window");
  if (std::accumulate(first->begin(), first->end(), 0) != det.valuation())
    throw WindowExceeded("elementary divisor valuations do not sum to val(det)");
  return *first;
}

std::vector<std::int64_t> chevalley_distance(const LatticePoint& l1, const LatticePoint& l2, LoopGroup group) {
  if (l1.rep.size() != l2.rep.size()) throw Error("lattice points of different size");
  const auto a = elementary_divisors(l1.rep.inverse() * l2.rep);
  const int m = static_cast<int>(a.size());
  std::vector<std::int64_t> out;
  if (group == LoopGroup::SL) {
    if (std::accumulate(a.begin(), a.end(), 0) != 0) throw Error("pair is not related by an element of SL_m(K)");
    std::int64_t c = 0;
    for (int i = 0; i + 1 < m; ++i) out.push_back(c += a[static_cast<std::size_t>(i)]);
  } else {
    for (int i = 0; i + 1 < m; ++i) out.push_back(a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i + 1)]);
  }
  return out;
}

bool convolution_membership(const std::vector<LatticePoint>& points,
                            const std::vector<std::vector<std::int64_t>>& targets, LoopGroup group) {
  if (points.size() != targets.size()) throw Error("need one target per lattice point");
  if (points.empty()) return true;
  const int m = points.back().rep.size();
  if (!(points.back().rep == LaurentMatrix::identity(m))) throw Error("last lattice point must be the base point [0]");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const LatticePoint& prev = points[(i + points.size() - 1) % points.size()];
    if (chevalley_distance(prev, points[i], group) != targets[i]) return false;
  }
  return true;
}

namespace {

std::vector<std::pair<std::string, LaurentMatrix>> sl_basis(int m) {
  std::vector<std::pair<std::string, LaurentMatrix>> out;
  auto unit = [m](int i, int j) {
    LaurentMatrix b(m);
    b(i, j) = Laurent(1);
    return b;
  };
  if (m == 2) {
    LaurentMatrix h(2);
    h(0, 0) = Laurent(1);
    h(1, 1) = Laurent(-1);
    return {{"e", unit(0, 1)}, {"h", h}, {"f", unit(1, 0)}};
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out.emplace_back("E" + std::to_string(i + 1) + std::to_string(j + 1), unit(i, j));
  for (int i = 0; i + 1 < m; ++i) {
    LaurentMatrix h(m);
    h(i, i) = Laurent(1);
    h(i + 1, i + 1) = Laurent(-1);
    out.emplace_back("H" + std::to_string(i + 1), h);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) out.emplace_back("E" + std::to_string(i + 1) + std::to_string(j + 1), unit(i, j));
  return out;
}

int common_size(const std::vector<LaurentMatrix>& elements) {
  if (elements.empty()) throw Error("need at least one group element");
  const int m = elements.front().size();
  check_size(m);
  for (const auto& g : elements)
    if (g.size() != m) throw Error("group elements of different size");
  return m;
}

// g^{-1} b g for every g and basis element b.
std::vector<std::vector<LaurentMatrix>> conjugated_basis(const std::vector<LaurentMatrix>& elements) {
  const int m = common_size(elements);
  const auto basis = sl_basis(m);
  std::vector<std::vector<LaurentMatrix>> out;
  for (const auto& g : elements) {
    const LaurentMatrix ginv = g.inverse();
    std::vector<LaurentMatrix> row;
    for (const auto& [name, b] : basis) row.push_back(ginv * b * g);
    out.push_back(std::move(row));
  }
  return out;
}

int stab_dim_at(const std::vector<std::vector<LaurentMatrix>>& conj, int m, int n) {
  const int dim = m * m - 1;
  const int unknowns = dim * n;
  std::vector<std::vector<Rational>> rows;
  for (const auto& per_g : conj) {
    int lowest = 0;
    for (const auto& c : per_g) lowest = std::min(lowest, c.min_valuation());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int d = lowest; d < 0; ++d) {
          // coefficient of t^d in entry (i, j) of sum_{b,k} x_{b,k} t^k g^{-1} b g
          std::vector<Rational> row(static_cast<std::size_t>(unknowns), Rational(0));
          bool any = false;
          for (int b = 0; b < dim; ++b)
            for (int k = 0; k < n; ++k) {
              Rational c = per_g[static_cast<std::size_t>(b)](i, j).coeff(d - k);
              if (c != 0) {
                row[static_cast<std::size_t>(b * n + k)] = std::move(c);
                any = true;
              }
            }
          if (any) rows.push_back(std::move(row));
        }
  }
  if (rows.empty()) return unknowns;
  DenseMatrix<Rational> a(static_cast<Eigen::Index>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) a(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)];
  return static_cast<int>(linalg::nullity(a));
}

}  // namespace

StabilizerDim stabilizer_intersection_dim(const std::vector<LaurentMatrix>& elements, int n) {
  if (n < 1) throw Error("truncation order N must be at least 1");
  const int m = common_size(elements);
  const auto conj = conjugated_basis(elements);
  const int dim = m * m - 1;
  const int stab = stab_dim_at(conj, m, n);
  const int stab_next = stab_dim_at(conj, m, n + 1);
  const int orbit = n * dim - stab;
  return {n, stab, orbit, (n + 1) * dim - stab_next == orbit};
}

int default_truncation(std::optional<std::int64_t> max_valuation) {
  return max_valuation ? static_cast<int>(2 + *max_valuation) : 4;
}

std::vector<BasisValuation> basis_valuations(const std::vector<LaurentMatrix>& elements) {
  const int m = common_size(elements);
  const auto basis = sl_basis(m);
  const auto conj = conjugated_basis(elements);
  std::vector<BasisValuation> out;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    int k = 0;
    for (const auto& per_g : conj) {
      const int v = per_g[b].min_valuation();
      if (v != kInfiniteValuation) k = std::max(k, -v);
    }
    out.push_back({basis[b].first, k});
  }
  return out;
}

namespace {

LaurentMatrix mat2(Laurent a, Laurent b, Laurent c, Laurent d) {
  LaurentMatrix x(2);
  x(0, 0) = std::move(a);
  x(0, 1) = std::move(b);
  x(1, 0) = std::move(c);
  x(1, 1) = std::move(d);
  return x;
}

}  // namespace

LaurentMatrix example_y() {
  LaurentMatrix z = mat2(1, Laurent::t(), 0, 1);
  return z * torus_point(2, {1}).rep;
}

std::vector<LaurentMatrix> example_stabilizer_inputs() { return {torus_point(2, {1}).rep, example_y()}; }

std::vector<LatticePoint> example_point() { return {torus_point(2, {1}), {example_y()}, base_point(2)}; }

bool verify_matrix_identities() {
  const LaurentMatrix d = mat2(Laurent::t(), 0, 0, Laurent::t(-1));
  const LaurentMatrix a = mat2(0, 1, -1, Laurent::t());
  const LaurentMatrix low = mat2(1, 0, Laurent::t(), 1);
  const LaurentMatrix y = mat2(Laurent::t(), 1, 0, Laurent::t(-1));
  const bool first = y == example_y() && d * a * d * low == y;
  const bool second = d * a * d * a * d == mat2(-Laurent::t(), 1, -1, 0);
  const bool trivial = LaurentMatrix::identity(2) * LaurentMatrix::identity(2) == LaurentMatrix::identity(2);
  return first && second && trivial;
}

}  // namespace prvkit
