#include "prvkit/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

namespace prvkit {

std::string WeylElement::str() const {
  if (word_.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) s += " ";
    s += "s" + std::to_string(word_[k] + 1);
  }
  return s;
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == '.'))
      ++i;
  };
  skip();
  if (i < text.size() && text.substr(i) == "e") return out;
  while (i < text.size()) {
    if (text[i] != 's') throw Error("malformed Weyl word '" + std::string(text) + "'");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw Error("malformed Weyl word '" + std::string(text) + "'");
    int idx = std::stoi(std::string(text.substr(start, i - start)));
    if (idx < 1) throw Error("simple reflections are numbered from 1");
    out.push_back(idx - 1);
    skip();
  }
  return out;
}

WeylGroup::WeylGroup(DatumPtr datum) : datum_(std::move(datum)) {
  const RootDatum& d = *datum_;
  if (d.weyl_order() > kWeylOrderCap)
    throw CapExceeded("|W| = " + std::to_string(d.weyl_order()) + " exceeds the enumeration cap");
  const int n = d.rank();
  const int l = d.semisimple_rank();
  for (int i = 0; i < l; ++i) {
    const auto& a = d.simple_roots()[i].coords();
    const auto& ac = d.simple_coroots()[i].coords();
    reflections_.push_back(IntMat::Identity(n, n) - a * ac.transpose());
    coreflections_.push_back(IntMat::Identity(n, n) - ac * a.transpose());
  }

  const IntVec two_rho = d.two_rho().coords();
  elements_.reserve(d.weyl_order());
  elements_.emplace_back(IntMat::Identity(n, n), IntMat::Identity(n, n), std::vector<int>{});
  images_.push_back(two_rho);
  index_.emplace(two_rho, 0);
  // Breadth-first in generator order: the first word reaching an element is
  // its lexicographically smallest reduced word.
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (int i = 0; i < l; ++i) {
      IntMat act = elements_[head].action() * reflections_[i];
      IntVec img = act * two_rho;
      if (index_.contains(img)) continue;
      IntMat coact = elements_[head].coaction() * coreflections_[i];
      std::vector<int> word = elements_[head].word();
      word.push_back(i);
      index_.emplace(img, elements_.size());
      images_.push_back(std::move(img));
      elements_.emplace_back(std::move(act), std::move(coact), std::move(word));
    }
  }
  if (elements_.size() != d.weyl_order())
    throw Error("Weyl group enumeration found " + std::to_string(elements_.size()) + " elements, expected " +
                std::to_string(d.weyl_order()));
}

std::size_t WeylGroup::lookup(const IntVec& img) const {
  auto it = index_.find(img);
  if (it == index_.end()) throw Error("matrix is not an element of this Weyl group");
  return it->second;
}

std::size_t WeylGroup::index_of_action(const IntMat& action) const {
  std::size_t k = lookup(action * datum_->two_rho().coords());
  if (elements_[k].action() != action) throw Error("matrix is not an element of this Weyl group");
  return k;
}

std::size_t WeylGroup::index_of_word(std::span<const int> word) const {
  IntVec img = datum_->two_rho().coords();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= datum_->semisimple_rank()) throw Error("simple reflection index out of range");
    img = reflections_[*it] * img;
  }
  return lookup(img);
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  return lookup(elements_[a].action() * images_[b]);
}

std::size_t WeylGroup::inverse(std::size_t a) const {
  std::vector<int> rev(elements_[a].word().rbegin(), elements_[a].word().rend());
  return index_of_word(rev);
}

std::vector<WeylElement> enumerate(const RootDatum& d) {
  WeylGroup g(std::make_shared<const RootDatum>(d));
  return {g.elements().begin(), g.elements().end()};
}

WeylGroupPtr make_weyl_group(DatumPtr d) { return std::make_shared<const WeylGroup>(std::move(d)); }

int fold_to_dominant(const RootDatum& d, IntVec& x) {
  const IntMat& p = d.coroot_pairing_matrix();
  const int l = d.semisimple_rank();
  int steps = 0;
  for (;;) {
    int i = 0;
    std::int64_t c = 0;
    for (; i < l; ++i) {
      c = p.row(i).dot(x);
      if (c < 0) break;
    }
    if (i == l) return steps;
    x -= c * d.simple_roots()[i].coords();
    ++steps;
  }
}

int fold_to_dominant_coweight(const RootDatum& d, IntVec& y) {
  const IntMat& p = d.root_pairing_matrix();
  const int l = d.semisimple_rank();
  int steps = 0;
  for (;;) {
    int i = 0;
    std::int64_t c = 0;
    for (; i < l; ++i) {
      c = p.row(i).dot(y);
      if (c < 0) break;
    }
    if (i == l) return steps;
    y -= c * d.simple_coroots()[i].coords();
    ++steps;
  }
}

namespace {

template <class Vec, class PairRow, class Step>
DominantRep<Vec> dominant_rep_impl(const WeylGroup& g, const Vec& x, PairRow pair, Step step) {
  const RootDatum& d = g.datum();
  if (x.size() != d.rank()) throw DatumMismatch("vector rank does not match datum");
  IntVec cur = x.coords();
  std::vector<int> applied;
  for (;;) {
    int i = 0;
    std::int64_t c = 0;
    for (; i < d.semisimple_rank(); ++i) {
      c = pair(i, cur);
      if (c < 0) break;
    }
    if (i == d.semisimple_rank()) break;
    step(i, c, cur);
    applied.push_back(i);
  }
  // v = s_{i_k} ... s_{i_1}; each fold removes one inversion, so v is the
  // unique minimal-length element carrying x to the chamber.
  std::reverse(applied.begin(), applied.end());
  return {Vec(cur), g[g.index_of_word(applied)]};
}

}  // namespace

DominantRep<WeightVec> dominant_representative(const WeylGroup& g, const WeightVec& x) {
  const RootDatum& d = g.datum();
  return dominant_rep_impl(
      g, x, [&](int i, const IntVec& v) { return d.coroot_pairing_matrix().row(i).dot(v); },
      [&](int i, std::int64_t c, IntVec& v) { v -= c * d.simple_roots()[i].coords(); });
}

DominantRep<CoweightVec> dominant_representative(const WeylGroup& g, const CoweightVec& y) {
  const RootDatum& d = g.datum();
  return dominant_rep_impl(
      g, y, [&](int i, const IntVec& v) { return d.root_pairing_matrix().row(i).dot(v); },
      [&](int i, std::int64_t c, IntVec& v) { v -= c * d.simple_coroots()[i].coords(); });
}

namespace {

template <class Vec>
Subgroup stabilizer_impl(const WeylGroup& g, const Vec& x) {
  if (x.size() != g.datum().rank()) throw DatumMismatch("vector rank does not match datum");
  Subgroup out;
  for (std::size_t k = 0; k < g.order(); ++k)
    if (g[k](x) == x) out.elements.push_back(k);
  std::vector<int> gens;
  for (int i = 0; i < g.datum().semisimple_rank(); ++i) {
    const auto& s = g[g.index_of_word(std::vector<int>{i})];
    if (s(x) == x) gens.push_back(i);
  }
  if (parabolic_subgroup(g, gens).elements.size() == out.elements.size()) out.generators = std::move(gens);
  return out;
}

}  // namespace

Subgroup stabilizer(const WeylGroup& g, const WeightVec& x) { return stabilizer_impl(g, x); }
Subgroup stabilizer(const WeylGroup& g, const CoweightVec& y) { return stabilizer_impl(g, y); }

Subgroup parabolic_subgroup(const WeylGroup& g, std::vector<int> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<std::size_t> gen_idx;
  for (int i : generators) gen_idx.push_back(g.index_of_word(std::vector<int>{i}));
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> elems{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto s : gen_idx) {
      auto k = g.multiply(elems[head], s);
      if (!seen[k]) {
        seen[k] = 1;
        elems.push_back(k);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return {std::move(elems), std::move(generators)};
}

std::vector<DoubleCoset> double_cosets(const WeylGroup& g, const Subgroup& left, const Subgroup& right,
                                       std::span<const std::size_t> visit_order) {
  std::vector<std::size_t> order;
  if (visit_order.empty()) {
    order.resize(g.order());
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    order.assign(visit_order.begin(), visit_order.end());
    if (order.size() != g.order()) throw Error("visit order must list every element of W once");
  }
  std::vector<char> seen(g.order(), 0);
  std::vector<DoubleCoset> out;
  for (auto x : order) {
    if (seen[x]) continue;
    std::vector<std::size_t> members;
    for (auto l : left.elements) {
      const auto lx = g.multiply(l, x);
      for (auto r : right.elements) members.push_back(g.multiply(lx, r));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto m : members) seen[m] = 1;
    out.push_back({members.front(), std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const DoubleCoset& a, const DoubleCoset& b) { return a.representative < b.representative; });
  return out;
}

const WeylElement& longest_element(const WeylGroup& g) { return g[g.order() - 1]; }

}  // namespace prvkit
