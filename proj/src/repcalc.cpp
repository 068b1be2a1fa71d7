#include "prvkit/repcalc.hpp"

#include <json.hpp>

#include <algorithm>
#include <unordered_set>

namespace prvkit {

RepCalculator::RepCalculator(WeylGroupPtr group) : group_(std::move(group)) {
  const RootDatum& d = datum();
  int_form_ = d.integral_form();
  for (const auto& pr : d.positive_roots()) form_times_root_.push_back(int_form_ * pr.root.coords());
}

void RepCalculator::require_dominant(const WeightVec& x) const {
  if (!datum().is_dominant(x)) throw Error("weight " + x.str() + " is not dominant");
}

WeightVec RepCalculator::dual_weight(const WeightVec& x) const { return -longest_element(*group_)(x); }

std::vector<WeightVec> RepCalculator::orbit(const WeightVec& x) const {
  const RootDatum& d = datum();
  std::unordered_set<WeightVec, LatticeHash> seen{x};
  std::vector<WeightVec> out{x};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < d.semisimple_rank(); ++i) {
      const std::int64_t c = pairing(out[head], d.simple_coroots()[i]);
      if (c == 0) continue;
      WeightVec y = out[head] - c * d.simple_roots()[i];
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  return out;
}

std::shared_ptr<const CharacterMap> RepCalculator::compute_dominant_character(const WeightVec& lambda) const {
  const RootDatum& d = datum();
  const auto roots = d.positive_roots();

  auto below_lambda = [&](const WeightVec& x) {
    auto c = d.root_coordinates(lambda - x);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& r) { return r >= 0 && denominator(r) == 1; });
  };

  // Dominant weights of V(lambda): closure of lambda under "subtract a
  // positive root, then fold", restricted to the cone below lambda.
  std::vector<WeightVec> dom{lambda};
  std::unordered_set<WeightVec, LatticeHash> seen{lambda};
  for (std::size_t head = 0; head < dom.size(); ++head) {
    for (const auto& pr : roots) {
      IntVec x = (dom[head] - pr.root).coords();
      fold_to_dominant(d, x);
      WeightVec w(std::move(x));
      if (seen.contains(w) || !below_lambda(w)) continue;
      seen.insert(w);
      dom.push_back(std::move(w));
    }
  }
  const CoweightVec& two_rho_check = d.two_rho_check();
  std::stable_sort(dom.begin(), dom.end(), [&](const WeightVec& a, const WeightVec& b) {
    return pairing(a, two_rho_check) > pairing(b, two_rho_check);
  });

  // Freudenthal, in decreasing height so every m(mu + k beta) is known.
  //   m(mu) ((lambda+rho)^2 - (mu+rho)^2) = 2 sum_{beta>0} sum_{k>=1} m(mu+k beta) (mu+k beta, beta)
  auto out = std::make_shared<CharacterMap>();
  (*out)[lambda] = 1;
  const IntVec lam_plus = lambda.coords() + lambda.coords() + d.two_rho().coords();
  for (std::size_t idx = 1; idx < dom.size(); ++idx) {
    const WeightVec& mu = dom[idx];
    BigInt num = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      for (std::int64_t k = 1;; ++k) {
        WeightVec x = mu + k * roots[r].root;
        IntVec f = x.coords();
        fold_to_dominant(d, f);
        auto it = out->find(WeightVec(std::move(f)));
        if (it == out->end()) break;
        num += it->second * (2 * x.coords().dot(form_times_root_[r]));
      }
    }
    // (lambda+rho)^2 - (mu+rho)^2 = (lambda - mu, lambda + mu + 2 rho)
    const IntVec diff = lambda.coords() - mu.coords();
    const IntVec sum = lam_plus - (lambda.coords() - mu.coords());
    const std::int64_t den = diff.dot(int_form_ * sum);
    if (den <= 0) throw Error("Freudenthal denominator is not positive");
    if (num % den != 0) throw Error("Freudenthal recursion produced a non-integral multiplicity");
    BigInt m = num / den;
    if (m < 0) throw Error("Freudenthal recursion produced a negative multiplicity");
    if (m != 0) (*out)[mu] = m;
  }
  return out;
}

std::shared_ptr<const CharacterMap> RepCalculator::dominant_character(const WeightVec& lambda) const {
  require_dominant(lambda);
  {
    std::lock_guard lock(mu_);
    if (auto it = dom_char_.find(lambda); it != dom_char_.end()) return it->second;
  }
  auto c = compute_dominant_character(lambda);
  std::lock_guard lock(mu_);
  return dom_char_.emplace(lambda, std::move(c)).first->second;
}

std::shared_ptr<const CharacterMap> RepCalculator::character(const WeightVec& lambda) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = full_char_.find(lambda); it != full_char_.end()) return it->second;
  }
  auto dom = dominant_character(lambda);
  auto full = std::make_shared<CharacterMap>();
  for (const auto& [mu, m] : *dom)
    for (auto& x : orbit(mu)) full->emplace(std::move(x), m);
  std::lock_guard lock(mu_);
  return full_char_.emplace(lambda, std::move(full)).first->second;
}

BigInt RepCalculator::weight_multiplicity(const WeightVec& lambda, const WeightVec& mu) const {
  auto dom = dominant_character(lambda);
  IntVec x = mu.coords();
  if (x.size() != datum().rank()) throw DatumMismatch("weight rank does not match datum");
  fold_to_dominant(datum(), x);
  auto it = dom->find(WeightVec(std::move(x)));
  return it == dom->end() ? BigInt(0) : it->second;
}

BigInt RepCalculator::dim_irrep(const WeightVec& lambda) const {
  require_dominant(lambda);
  const RootDatum& d = datum();
  BigInt num = 1, den = 1;
  for (const auto& pr : d.positive_roots()) {
    const std::int64_t r = pairing(d.two_rho(), pr.coroot);
    num *= 2 * pairing(lambda, pr.coroot) + r;
    den *= r;
  }
  return num / den;
}

Decomposition RepCalculator::klimyk(const WeightVec& big, const WeightVec& small) const {
  const RootDatum& d = datum();
  const IntMat& p = d.coroot_pairing_matrix();
  const IntVec& two_rho = d.two_rho().coords();
  std::map<WeightVec, BigInt> acc;
  for (const auto& [beta, m] : *character(small)) {
    IntVec x = 2 * (big.coords() + beta.coords()) + two_rho;
    const int steps = fold_to_dominant(d, x);
    if (((p * x).array() == 0).any()) continue;  // on a wall: cancels
    IntVec nu = (x - two_rho) / 2;
    auto& slot = acc[WeightVec(std::move(nu))];
    if (steps % 2 == 0)
      slot += m;
    else
      slot -= m;
  }
  Decomposition out;
  for (auto& [nu, m] : acc) {
    if (m < 0) throw Error("Klimyk sum left a negative multiplicity at " + nu.str());
    if (m != 0) out.emplace(nu, std::move(m));
  }
  return out;
}

std::shared_ptr<const Decomposition> RepCalculator::decompose(const WeightVec& lambda, const WeightVec& mu) const {
  require_dominant(lambda);
  require_dominant(mu);
  auto key = lambda < mu ? std::pair{lambda, mu} : std::pair{mu, lambda};
  {
    std::lock_guard lock(mu_);
    if (auto it = tensor_.find(key); it != tensor_.end()) return it->second;
  }
  const bool mu_smaller = dim_irrep(mu) <= dim_irrep(lambda);
  auto dec = std::make_shared<const Decomposition>(mu_smaller ? klimyk(lambda, mu) : klimyk(mu, lambda));
  std::lock_guard lock(mu_);
  return tensor_.emplace(std::move(key), std::move(dec)).first->second;
}

BigInt RepCalculator::tensor_multiplicity(const WeightVec& lambda, const WeightVec& mu, const WeightVec& nu) const {
  require_dominant(nu);
  auto dec = decompose(lambda, mu);
  auto it = dec->find(nu);
  return it == dec->end() ? BigInt(0) : it->second;
}

BigInt RepCalculator::invariant_dim(std::span<const WeightVec> weights) const {
  if (weights.empty()) throw Error("invariant_dim needs at least one weight");
  for (const auto& w : weights) require_dominant(w);
  if (weights.size() == 1) return weights[0].is_zero() ? 1 : 0;
  Decomposition cur{{weights[0], BigInt(1)}};
  for (std::size_t i = 1; i + 1 < weights.size(); ++i) {
    Decomposition next;
    for (const auto& [kappa, c] : cur)
      for (const auto& [nu, m] : *decompose(kappa, weights[i])) next[nu] += c * m;
    cur = std::move(next);
  }
  auto it = cur.find(dual_weight(weights.back()));
  return it == cur.end() ? BigInt(0) : it->second;
}

Decomposition RepCalculator::character_product_oracle(const WeightVec& lambda, const WeightVec& mu,
                                                      std::size_t cap) const {
  require_dominant(lambda);
  require_dominant(mu);
  if (dim_irrep(lambda) * dim_irrep(mu) > cap)
    throw CapExceeded("character product oracle: dim V(lambda) * dim V(mu) exceeds cap");
  const RootDatum& d = datum();
  CharacterMap prod;
  for (const auto& [a, ma] : *character(lambda))
    for (const auto& [b, mb] : *character(mu)) prod[a + b] += ma * mb;

  Decomposition out;
  const CoweightVec& h = d.two_rho_check();
  while (!prod.empty()) {
    auto top = prod.begin();
    for (auto it = prod.begin(); it != prod.end(); ++it) {
      const auto hi = pairing(it->first, h), ht = pairing(top->first, h);
      if (hi > ht || (hi == ht && top->first < it->first)) top = it;
    }
    const WeightVec nu = top->first;
    const BigInt c = top->second;
    if (!d.is_dominant(nu) || c <= 0) throw Error("character product oracle: residual is not a character");
    out.emplace(nu, c);
    for (const auto& [x, m] : *character(nu)) {
      auto it = prod.find(x);
      if (it == prod.end()) throw Error("character product oracle: residual is not a character");
      it->second -= c * m;
      if (it->second == 0) prod.erase(it);
    }
  }
  return out;
}

std::string character_to_json(const CharacterMap& c) {
  std::vector<std::pair<WeightVec, BigInt>> entries(c.begin(), c.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, m] : entries) {
    nlohmann::json mult;
    if (m <= BigInt(std::numeric_limits<std::int64_t>::max()))
      mult = static_cast<std::int64_t>(m);
    else
      mult = m.str();
    out.push_back({{"weight", w.to_vector()}, {"mult", mult}});
  }
  return out.dump();
}

}  // namespace prvkit
