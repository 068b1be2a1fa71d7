#include "prvkit/rootdata.hpp"

#include "prvkit/exact_linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>

namespace prvkit {

namespace {

constexpr int kMaxFactorRank = 6;

bool valid_factor(const SimpleFactor& f) {
  switch (f.family) {
    case 'A': return f.rank >= 1 && f.rank <= kMaxFactorRank;
    case 'B':
    case 'C': return f.rank >= 2 && f.rank <= kMaxFactorRank;
    case 'D': return f.rank >= 4 && f.rank <= kMaxFactorRank;
    case 'E': return f.rank == 6;
    case 'F': return f.rank == 4;
    case 'G': return f.rank == 2;
    default: return false;
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t factor_weyl_order(const SimpleFactor& f) {
  switch (f.family) {
    case 'A': return factorial(f.rank + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << f.rank) * factorial(f.rank);
    case 'D': return (std::uint64_t{1} << (f.rank - 1)) * factorial(f.rank);
    case 'E': return 51840;
    case 'F': return 1152;
    case 'G': return 12;
    default: throw UnsupportedType("unknown family");
  }
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

// Connected components of the Dynkin graph, each sorted.
std::vector<std::vector<int>> dynkin_components(const IntMat& cartan) {
  const int l = static_cast<int>(cartan.rows());
  std::vector<int> comp(l, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < l; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    std::queue<int> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      members.push_back(i);
      for (int j = 0; j < l; ++j) {
        if (j != i && cartan(i, j) != 0 && comp[j] < 0) {
          comp[j] = comp[s];
          q.push(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::string CartanLabel::str() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "x";
    s += f.family;
    s += std::to_string(f.rank);
  }
  if (torus_rank > 0 || s.empty()) {
    if (!s.empty()) s += "x";
    s += "T" + std::to_string(torus_rank);
  }
  return s;
}

CartanLabel parse_label(std::string_view text) {
  CartanLabel out;
  if (text.empty()) throw UnsupportedType("empty type label");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('x', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    if (tok.size() < 2) throw UnsupportedType("malformed type token '" + std::string(tok) + "'");
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    int r = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), r);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw UnsupportedType("malformed type token '" + std::string(tok) + "'");
    if (fam == 'T') {
      if (r < 0 || r > kMaxFactorRank) throw UnsupportedType("torus rank out of range in '" + std::string(tok) + "'");
      out.torus_rank += r;
    } else {
      SimpleFactor f{fam, r};
      if (r == 0) throw UnsupportedType("rank 0 with non-torus label '" + std::string(tok) + "'");
      if (!valid_factor(f)) throw UnsupportedType("unsupported type '" + std::string(tok) + "'");
      out.factors.push_back(f);
    }
    pos = next + 1;
  }
  return out;
}

IntMat cartan_matrix(const SimpleFactor& f) {
  if (!valid_factor(f)) throw UnsupportedType("unsupported type " + std::string(1, f.family) + std::to_string(f.rank));
  const int n = f.rank;
  IntMat a = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (f.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_{n-1} long, alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(1, 3);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(1, 2) = -2;  // alpha_2 long, alpha_3 short
      break;
    case 'G':
      a(0, 1) = -1;  // alpha_1 short
      a(1, 0) = -3;
      break;
  }
  return a;
}

SimpleFactor classify_cartan(const IntMat& cartan) {
  const int n = static_cast<int>(cartan.rows());
  if (n < 1 || n > kMaxFactorRank) throw UnsupportedType("simple factor of rank " + std::to_string(n) + " not supported");
  std::vector<SimpleFactor> candidates;
  for (char fam : std::string("ABCDEFG")) {
    SimpleFactor f{fam, n};
    if (valid_factor(f)) candidates.push_back(f);
  }
  for (const auto& f : candidates)
    if (cartan_matrix(f) == cartan) return f;
  std::vector<int> perm(n);
  for (const auto& f : candidates) {
    const IntMat k = cartan_matrix(f);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) ok = cartan(perm[i], perm[j]) == k(i, j);
      if (ok) return f;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  throw UnsupportedType("Cartan matrix is not of finite type A-G with rank <= 6");
}

std::uint64_t weyl_order_of(const CartanLabel& label) {
  std::uint64_t r = 1;
  for (const auto& f : label.factors) r *= factor_weyl_order(f);
  return r;
}

RootDatum::RootDatum(int rank, const IntMat& simple_roots, const IntMat& simple_coroots) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw UnsupportedType("datum rank out of range");
  if (simple_roots.rows() != rank || simple_coroots.rows() != rank || simple_roots.cols() != simple_coroots.cols())
    throw Error("simple root and coroot matrices have inconsistent shapes");
  const int l = static_cast<int>(simple_roots.cols());
  if (l > rank) throw Error("more simple roots than the lattice rank");

  for (int i = 0; i < l; ++i) {
    simple_roots_.emplace_back(IntVec(simple_roots.col(i)));
    simple_coroots_.emplace_back(IntVec(simple_coroots.col(i)));
  }
  cartan_ = simple_roots.transpose() * simple_coroots;
  for (int i = 0; i < l; ++i) {
    if (cartan_(i, i) != 2) throw Error("pairing <alpha_i, alpha_i^vee> must be 2");
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (cartan_(i, j) > 0) throw Error("off-diagonal Cartan entries must be <= 0");
      if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0)) throw Error("Cartan matrix zero pattern is not symmetric");
    }
  }

  const auto comps = dynkin_components(cartan_);
  for (const auto& c : comps) {
    IntMat sub(c.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) sub(i, j) = cartan_(c[i], c[j]);
    label_.factors.push_back(classify_cartan(sub));
  }
  label_.torus_rank = rank - l;
  weyl_order_ = weyl_order_of(label_);

  coroot_rows_ = simple_coroots.transpose();
  root_rows_ = simple_roots.transpose();

  // Positive roots by closure of the simple roots under simple reflections,
  // carrying the coroot along so that beta and beta^vee stay paired.
  struct Pair {
    IntVec r, c;
  };
  std::map<std::vector<std::int64_t>, Pair> found;
  auto key = [](const IntVec& v) { return std::vector<std::int64_t>(v.data(), v.data() + v.size()); };
  std::queue<Pair> q;
  for (int i = 0; i < l; ++i) {
    Pair p{IntVec::Unit(l, i), IntVec::Unit(l, i)};
    found.emplace(key(p.r), p);
    q.push(p);
  }
  while (!q.empty()) {
    Pair p = q.front();
    q.pop();
    for (int i = 0; i < l; ++i) {
      if (p.r == IntVec::Unit(l, i)) continue;
      const std::int64_t k = p.r.dot(cartan_.col(i));      // <beta, alpha_i^vee>
      const std::int64_t kc = cartan_.row(i).dot(p.c);     // <alpha_i, beta^vee>
      Pair np{p.r, p.c};
      np.r[i] -= k;
      np.c[i] -= kc;
      if ((np.r.array() < 0).any()) throw Error("root closure produced a mixed-sign root");
      if (found.emplace(key(np.r), np).second) q.push(np);
    }
  }
  for (auto& [k, p] : found) {
    PositiveRoot pr;
    pr.root_coeffs = p.r;
    pr.coroot_coeffs = p.c;
    pr.height = static_cast<int>(p.r.sum());
    pr.root = WeightVec(IntVec(simple_roots * p.r));
    pr.coroot = CoweightVec(IntVec(simple_coroots * p.c));
    positive_.push_back(std::move(pr));
  }
  std::stable_sort(positive_.begin(), positive_.end(),
                   [](const PositiveRoot& a, const PositiveRoot& b) { return a.height < b.height; });

  two_rho_ = WeightVec(rank);
  two_rho_check_ = CoweightVec(rank);
  for (const auto& pr : positive_) {
    two_rho_ += pr.root;
    two_rho_check_ += pr.coroot;
  }

  // Symmetrizer: a_ij d_j = a_ji d_i, normalized per component so the
  // shortest root has squared length 2.
  std::vector<Rational> d(l, Rational(0));
  for (const auto& c : comps) {
    d[c.front()] = 1;
    std::queue<int> bq;
    bq.push(c.front());
    while (!bq.empty()) {
      int i = bq.front();
      bq.pop();
      for (int j : c) {
        if (j == i || cartan_(i, j) == 0 || d[j] != 0) continue;
        d[j] = Rational(cartan_(j, i)) * d[i] / Rational(cartan_(i, j));
        bq.push(j);
      }
    }
    Rational mn = d[c.front()];
    for (int j : c) mn = std::min(mn, d[j]);
    for (int j : c) d[j] = d[j] * 2 / mn;
  }

  const DenseMatrix<Rational> cq = linalg::to_rational(cartan_);
  DenseMatrix<Rational> cinv = DenseMatrix<Rational>::Zero(l, l);
  if (l > 0) {
    auto inv = linalg::inverse(cq);
    if (!inv) throw Error("Cartan matrix is singular");
    cinv = *inv;
  }
  // (omega_i, omega_j) = (C^{-1})_{ji} d_i / 2
  DenseMatrix<Rational> gram(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) gram(i, j) = cinv(j, i) * d[i] / 2;
  const DenseMatrix<Rational> p = linalg::to_rational(coroot_rows_);
  form_ = p.transpose() * gram * p;

  form_scale_ = 1;
  for (Eigen::Index i = 0; i < form_.rows(); ++i)
    for (Eigen::Index j = 0; j < form_.cols(); ++j)
      form_scale_ = lcm64(form_scale_, static_cast<std::int64_t>(boost::multiprecision::denominator(form_(i, j))));
  int_form_ = IntMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational v = form_(i, j) * form_scale_;
      int_form_(i, j) = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
    }

  root_solve_ = cinv.transpose();
  coroot_solve_ = cinv;
}

bool RootDatum::is_dominant(const WeightVec& x) const {
  if (x.size() != rank_) throw DatumMismatch("weight rank does not match datum");
  return ((coroot_rows_ * x.coords()).array() >= 0).all();
}

bool RootDatum::is_dominant(const CoweightVec& y) const {
  if (y.size() != rank_) throw DatumMismatch("coweight rank does not match datum");
  return ((root_rows_ * y.coords()).array() >= 0).all();
}

Rational RootDatum::pair_with_rho_check(const WeightVec& x) const {
  return Rational(pairing(x, two_rho_check_), 2);
}

Rational RootDatum::pair_with_rho(const CoweightVec& y) const { return Rational(pairing(two_rho_, y), 2); }

std::optional<std::vector<Rational>> RootDatum::root_coordinates(const WeightVec& x) const {
  if (x.size() != rank_) throw DatumMismatch("weight rank does not match datum");
  const int l = semisimple_rank();
  IntVec p = coroot_rows_ * x.coords();
  std::vector<Rational> r(l);
  for (int i = 0; i < l; ++i) {
    Rational s = 0;
    for (int j = 0; j < l; ++j) s += root_solve_(i, j) * p[j];
    r[i] = s;
  }
  // Reconstruct over Q and compare, which rejects a torus component.
  for (int k = 0; k < rank_; ++k) {
    Rational s = 0;
    for (int i = 0; i < l; ++i) s += r[i] * simple_roots_[i][k];
    if (s != x[k]) return std::nullopt;
  }
  return r;
}

std::optional<std::vector<Rational>> RootDatum::coroot_coordinates(const CoweightVec& y) const {
  if (y.size() != rank_) throw DatumMismatch("coweight rank does not match datum");
  const int l = semisimple_rank();
  IntVec q = root_rows_ * y.coords();
  std::vector<Rational> c(l);
  for (int i = 0; i < l; ++i) {
    Rational s = 0;
    for (int j = 0; j < l; ++j) s += coroot_solve_(i, j) * q[j];
    c[i] = s;
  }
  for (int k = 0; k < rank_; ++k) {
    Rational s = 0;
    for (int i = 0; i < l; ++i) s += c[i] * simple_coroots_[i][k];
    if (s != y[k]) return std::nullopt;
  }
  return c;
}

namespace {
bool all_integral(const std::optional<std::vector<Rational>>& v) {
  if (!v) return false;
  return std::all_of(v->begin(), v->end(), [](const Rational& r) { return denominator(r) == 1; });
}
}  // namespace

bool RootDatum::in_root_lattice(const WeightVec& x) const { return all_integral(root_coordinates(x)); }
bool RootDatum::in_coroot_lattice(const CoweightVec& y) const { return all_integral(coroot_coordinates(y)); }

WeightVec RootDatum::from_root_coordinates(std::span<const std::int64_t> c) const {
  if (static_cast<int>(c.size()) != semisimple_rank()) throw DatumMismatch("expected one coordinate per simple root");
  WeightVec x(rank_);
  for (std::size_t i = 0; i < c.size(); ++i) x += static_cast<std::int64_t>(c[i]) * simple_roots_[i];
  return x;
}

CoweightVec RootDatum::from_coroot_coordinates(std::span<const std::int64_t> c) const {
  if (static_cast<int>(c.size()) != semisimple_rank()) throw DatumMismatch("expected one coordinate per simple coroot");
  CoweightVec y(rank_);
  for (std::size_t i = 0; i < c.size(); ++i) y += static_cast<std::int64_t>(c[i]) * simple_coroots_[i];
  return y;
}

IntMat RootDatum::simple_roots_matrix() const { return root_rows_.transpose(); }
IntMat RootDatum::simple_coroots_matrix() const { return coroot_rows_.transpose(); }

bool operator==(const RootDatum& a, const RootDatum& b) {
  return a.rank_ == b.rank_ && a.simple_roots_ == b.simple_roots_ && a.simple_coroots_ == b.simple_coroots_;
}

DatumPtr build_root_datum(std::string_view label, DatumForm form) {
  const CartanLabel cl = parse_label(label);
  int l = 0;
  for (const auto& f : cl.factors) l += f.rank;
  const int n = l + cl.torus_rank;
  if (n > kMaxRank) throw UnsupportedType("total rank exceeds " + std::to_string(kMaxRank));
  IntMat roots = IntMat::Zero(n, l);
  IntMat coroots = IntMat::Zero(n, l);
  int off = 0;
  for (const auto& f : cl.factors) {
    const IntMat k = cartan_matrix(f);
    const int r = f.rank;
    if (form == DatumForm::SimplyConnected) {
      // X^* basis = fundamental weights: alpha_i has coordinates row i of C.
      roots.block(off, off, r, r) = k.transpose();
      coroots.block(off, off, r, r) = IntMat::Identity(r, r);
    } else {
      // X^* basis = simple roots: alpha_j^vee has coordinates column j of C.
      roots.block(off, off, r, r) = IntMat::Identity(r, r);
      coroots.block(off, off, r, r) = k;
    }
    off += r;
  }
  return std::make_shared<const RootDatum>(n, roots, coroots);
}

DatumPtr root_datum_from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("explicit root datum: ") + e.what());
  }
  if (!j.contains("rank") || !j.contains("simple_roots") || !j.contains("simple_coroots"))
    throw Error("explicit root datum needs rank, simple_roots, simple_coroots");
  const int n = j.at("rank").get<int>();
  auto read = [n](const nlohmann::json& arr) {
    IntMat m(n, static_cast<Eigen::Index>(arr.size()));
    for (std::size_t c = 0; c < arr.size(); ++c) {
      const auto& v = arr[c];
      if (static_cast<int>(v.size()) != n) throw Error("explicit root datum: vector length differs from rank");
      for (int r = 0; r < n; ++r) m(r, static_cast<Eigen::Index>(c)) = v[r].get<std::int64_t>();
    }
    return m;
  };
  return std::make_shared<const RootDatum>(n, read(j.at("simple_roots")), read(j.at("simple_coroots")));
}

DatumPtr dual_datum(const RootDatum& d) {
  return std::make_shared<const RootDatum>(d.rank(), d.simple_coroots_matrix(), d.simple_roots_matrix());
}

}  // namespace prvkit
