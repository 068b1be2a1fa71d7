#pragma once

#include "prvkit/types.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prvkit {

class WindowExceeded : public Error {
 public:
  using Error::Error;
};

class SingularInput : public Error {
 public:
  using Error::Error;
};

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// Finitely supported Laurent polynomial sum_k c_k t^k. Kept normalized:
/// no zero coefficient at either end, and the zero polynomial is empty.
template <class Scalar>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Scalar c) : coeffs_{std::move(c)} { normalize(); }  // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(Scalar(c)) {}                  // NOLINT
  LaurentPoly(int low, std::vector<Scalar> coeffs) : low_(low), coeffs_(std::move(coeffs)) { normalize(); }

  static LaurentPoly monomial(Scalar c, int k) { return LaurentPoly(k, {std::move(c)}); }
  static LaurentPoly t(int k = 1) { return monomial(Scalar(1), k); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_monomial() const { return coeffs_.size() == 1; }
  /// Lowest degree with a nonzero coefficient; kInfiniteValuation for 0.
  [[nodiscard]] int valuation() const { return is_zero() ? kInfiniteValuation : low_; }
  /// Highest degree; -kInfiniteValuation for 0.
  [[nodiscard]] int degree() const { return is_zero() ? -kInfiniteValuation : low_ + static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Scalar coeff(int k) const {
    if (is_zero() || k < low_ || k > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(k - low_)];
  }
  [[nodiscard]] Scalar lowest_coeff() const { return is_zero() ? Scalar(0) : coeffs_.front(); }
  [[nodiscard]] int low() const { return low_; }
  [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(degree(), o.degree());
    std::vector<Scalar> c(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(low_ - lo)] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(c);
    normalize();
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(c));
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Inverse of a monomial.
  [[nodiscard]] LaurentPoly inverse_monomial() const {
    if (!is_monomial()) throw Error("only monomials are invertible among Laurent polynomials");
    return monomial(Scalar(1) / coeffs_.front(), -low_);
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    while (coeffs_.back() == 0) coeffs_.pop_back();
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }

  int low_ = 0;
  std::vector<Scalar> coeffs_;
};

using Laurent = LaurentPoly<Rational>;

/// "3*t^-1 + 1/2 + 2*t^2" <-> Laurent.
Laurent parse_laurent(std::string_view text);
std::string to_string(const Laurent& p);

inline constexpr int kDefaultMaxWidth = 512;

/// Square matrix over Laurent polynomials. The window is the smallest
/// degree range containing every entry's support; products whose window
/// would exceed max_width throw WindowExceeded instead of truncating.
template <class Scalar>
class LaurentMatrixT {
 public:
  using Poly = LaurentPoly<Scalar>;

  LaurentMatrixT() = default;
  explicit LaurentMatrixT(int m, int max_width = kDefaultMaxWidth)
      : m_(m), max_width_(max_width), e_(static_cast<std::size_t>(m * m)) {}

  static LaurentMatrixT identity(int m) {
    LaurentMatrixT a(m);
    for (int i = 0; i < m; ++i) a(i, i) = Poly(1);
    return a;
  }
  static LaurentMatrixT diagonal_monomials(const std::vector<std::int64_t>& exps) {
    LaurentMatrixT a(static_cast<int>(exps.size()));
    for (int i = 0; i < a.m_; ++i) a(i, i) = Poly::t(static_cast<int>(exps[static_cast<std::size_t>(i)]));
    return a;
  }

  [[nodiscard]] int size() const { return m_; }
  [[nodiscard]] int max_width() const { return max_width_; }
  void set_max_width(int w) { max_width_ = w; }
  Poly& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * m_ + j)]; }
  const Poly& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * m_ + j)]; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
  }
  /// [v_lo, v_hi]; an all-zero matrix has the empty window [0, -1].
  [[nodiscard]] std::pair<int, int> window() const {
    int lo = kInfiniteValuation, hi = -kInfiniteValuation;
    for (const auto& p : e_) {
      if (p.is_zero()) continue;
      lo = std::min(lo, p.valuation());
      hi = std::max(hi, p.degree());
    }
    if (lo > hi) return {0, -1};
    return {lo, hi};
  }
  [[nodiscard]] int min_valuation() const {
    const auto w = window();
    return w.first > w.second ? kInfiniteValuation : w.first;
  }

  const std::optional<Poly>& declared_det() const { return declared_det_; }
  void declare_det(Poly d) {
    if (!d.is_monomial()) throw Error("declared determinant must be a Laurent monomial");
    declared_det_ = std::move(d);
  }
  /// True when no determinant is declared or the declared one is correct.
  [[nodiscard]] bool det_certified() const { return !declared_det_ || *declared_det_ == determinant(); }

  friend LaurentMatrixT operator*(const LaurentMatrixT& a, const LaurentMatrixT& b) {
    if (a.m_ != b.m_) throw Error("matrix size mismatch");
    const auto wa = a.window(), wb = b.window();
    const int width = (wa.second - wa.first) + (wb.second - wb.first) + 1;
    const int limit = std::min(a.max_width_, b.max_width_);
    if (width > limit)
      throw WindowExceeded("product window width " + std::to_string(width) + " exceeds " + std::to_string(limit));
    LaurentMatrixT c(a.m_, limit);
    for (int i = 0; i < a.m_; ++i)
      for (int k = 0; k < a.m_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < a.m_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
      }
    if (a.declared_det_ && b.declared_det_) c.declared_det_ = *a.declared_det_ * *b.declared_det_;
    return c;
  }
  friend LaurentMatrixT operator+(LaurentMatrixT a, const LaurentMatrixT& b) {
    if (a.m_ != b.m_) throw Error("matrix size mismatch");
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] += b.e_[k];
    a.declared_det_.reset();
    return a;
  }
  friend LaurentMatrixT operator-(LaurentMatrixT a, const LaurentMatrixT& b) {
    if (a.m_ != b.m_) throw Error("matrix size mismatch");
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] -= b.e_[k];
    a.declared_det_.reset();
    return a;
  }
  friend LaurentMatrixT operator*(const Poly& s, LaurentMatrixT a) {
    for (auto& p : a.e_) p = s * p;
    a.declared_det_.reset();
    return a;
  }

  [[nodiscard]] LaurentMatrixT transpose() const {
    LaurentMatrixT t(m_, max_width_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) t(j, i) = (*this)(i, j);
    t.declared_det_ = declared_det_;
    return t;
  }

  /// Minor with the given row and column index sets.
  [[nodiscard]] Poly minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
    const std::size_t k = rows.size();
    if (k == 0) return Poly(1);
    if (k == 1) return (*this)(rows[0], cols[0]);
    Poly out;
    std::vector<int> sub_cols;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < k; ++c) {
      if ((*this)(rows[0], cols[c]).is_zero()) continue;
      sub_cols.assign(cols.begin(), cols.end());
      sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(c));
      Poly term = (*this)(rows[0], cols[c]) * minor(sub_rows, sub_cols);
      if (c % 2 == 0)
        out += term;
      else
        out -= term;
    }
    return out;
  }

  [[nodiscard]] Poly determinant() const {
    std::vector<int> idx(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) idx[static_cast<std::size_t>(i)] = i;
    return minor(idx, idx);
  }

  [[nodiscard]] LaurentMatrixT adjugate() const {
    LaurentMatrixT adj(m_, max_width_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        std::vector<int> rows, cols;
        for (int r = 0; r < m_; ++r)
          if (r != j) rows.push_back(r);
        for (int c = 0; c < m_; ++c)
          if (c != i) cols.push_back(c);
        Poly p = minor(rows, cols);
        adj(i, j) = (i + j) % 2 == 0 ? p : -p;
      }
    return adj;
  }

  /// Inverse over Laurent polynomials; the determinant must be a monomial.
  [[nodiscard]] LaurentMatrixT inverse() const {
    const Poly det = determinant();
    if (det.is_zero()) throw SingularInput("matrix is singular");
    if (!det.is_monomial())
      throw Error("inverse needs a monomial determinant (the inverse would not be a Laurent polynomial)");
    LaurentMatrixT inv = det.inverse_monomial() * adjugate();
    inv.declared_det_ = det.inverse_monomial();
    return inv;
  }

  friend bool operator==(const LaurentMatrixT& a, const LaurentMatrixT& b) { return a.m_ == b.m_ && a.e_ == b.e_; }

 private:
  int m_ = 0;
  int max_width_ = kDefaultMaxWidth;
  std::vector<Poly> e_;
  std::optional<Poly> declared_det_;
};

using LaurentMatrix = LaurentMatrixT<Rational>;

/// "[[t, 1], [0, t^-1]]" <-> LaurentMatrix (row-major).
LaurentMatrix parse_laurent_matrix(std::string_view text);
std::string to_string(const LaurentMatrix& a);

}  // namespace prvkit
