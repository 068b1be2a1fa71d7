#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace prvkit {

// Total rank of a root datum (simple factors plus torus). Lattice vectors
// live in inline storage of this size, so hash maps of weights never touch
// the heap for the vector payload.
inline constexpr int kMaxRank = 16;

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class DatumMismatch : public Error {
 public:
  using Error::Error;
};

/// Integer vector in one of the two lattices of a root datum. The tag keeps
/// characters (X^*) and cocharacters (X_*) from being mixed up; the pairing
/// between them is the only operation that takes one of each.
template <class Tag>
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(int size) : v_(IntVec::Zero(size)) {}
  explicit LatticeVec(IntVec v) : v_(std::move(v)) {}
  LatticeVec(std::initializer_list<std::int64_t> xs) : v_(static_cast<Eigen::Index>(xs.size())) {
    Eigen::Index i = 0;
    for (auto x : xs) v_[i++] = x;
  }
  static LatticeVec from(const std::vector<std::int64_t>& xs) {
    LatticeVec out(static_cast<int>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) out.v_[static_cast<Eigen::Index>(i)] = xs[i];
    return out;
  }

  [[nodiscard]] int size() const { return static_cast<int>(v_.size()); }
  [[nodiscard]] const IntVec& coords() const { return v_; }
  IntVec& coords() { return v_; }
  std::int64_t operator[](int i) const { return v_[i]; }
  std::int64_t& operator[](int i) { return v_[i]; }

  [[nodiscard]] bool is_zero() const { return v_.isZero(); }
  [[nodiscard]] std::vector<std::int64_t> to_vector() const {
    return std::vector<std::int64_t>(v_.data(), v_.data() + v_.size());
  }

  LatticeVec& operator+=(const LatticeVec& o) {
    check_same(o);
    v_ += o.v_;
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    check_same(o);
    v_ -= o.v_;
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator-(const LatticeVec& a) { return LatticeVec(IntVec(-a.v_)); }
  friend LatticeVec operator*(std::int64_t k, const LatticeVec& a) { return LatticeVec(IntVec(k * a.v_)); }

  friend bool operator==(const LatticeVec& a, const LatticeVec& b) {
    return a.v_.size() == b.v_.size() && a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const LatticeVec& a, const LatticeVec& b) {
    if (auto c = a.v_.size() <=> b.v_.size(); c != 0) return c;
    for (Eigen::Index i = 0; i < a.v_.size(); ++i)
      if (auto c = a.v_[i] <=> b.v_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + ")";
  }

 private:
  void check_same(const LatticeVec& o) const {
    if (o.v_.size() != v_.size()) throw DatumMismatch("lattice vectors of different rank");
  }
  IntVec v_;
};

struct WeightTag {};
struct CoweightTag {};

/// Character-lattice vector, coordinates in the basis of X^* of its datum.
using WeightVec = LatticeVec<WeightTag>;
/// Cocharacter-lattice vector, coordinates in the basis of X_* of its datum.
using CoweightVec = LatticeVec<CoweightTag>;

inline std::int64_t pairing(const WeightVec& x, const CoweightVec& y) {
  if (x.size() != y.size()) throw DatumMismatch("pairing of vectors from different data");
  return x.coords().dot(y.coords());
}

struct LatticeHash {
  template <class Tag>
  std::size_t operator()(const LatticeVec<Tag>& x) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int i = 0; i < x.size(); ++i) {
      h ^= static_cast<std::size_t>(x[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
  std::size_t operator()(const IntVec& x) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      h ^= static_cast<std::size_t>(x[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct IntVecEqual {
  bool operator()(const IntVec& a, const IntVec& b) const noexcept {
    return a.size() == b.size() && a == b;
  }
};

}  // namespace prvkit
