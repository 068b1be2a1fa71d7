#include "prvkit/transfer.hpp"

#include "prvkit/exact_linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <thread>

namespace prvkit {

namespace {

DatumPtr datum_from_json(const nlohmann::json& j) {
  if (j.is_string()) return build_root_datum(j.get<std::string>(), DatumForm::Adjoint);
  if (j.contains("simple_roots")) return root_datum_from_json(j.dump());
  if (j.contains("label")) {
    const std::string form = j.value("form", "adjoint");
    if (form != "sc" && form != "adjoint") throw Error("datum form must be sc or adjoint");
    return build_root_datum(j.at("label").get<std::string>(),
                            form == "sc" ? DatumForm::SimplyConnected : DatumForm::Adjoint);
  }
  throw Error("custom transfer: cannot read root datum " + j.dump());
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    auto next = s.find(sep, pos);
    out.emplace_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

TransferMap make_transfer_map(DatumPtr source, DatumPtr target, IntMat iota, std::string label) {
  if (iota.rows() != target->rank() || iota.cols() != source->rank())
    throw DatumMismatch("iota must be a target.rank x source.rank matrix");
  if (linalg::rank(linalg::to_rational(iota)) != source->rank()) throw Error("iota is not injective");
  return {std::move(source), std::move(target), std::move(iota), std::move(label)};
}

TransferMap make_transfer_map(std::string_view preset) {
  const std::string text(preset);
  if (text.rfind("custom:", 0) == 0) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text.substr(7));
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("custom transfer: ") + e.what());
    }
    if (!j.contains("source") || !j.contains("target") || !j.contains("iota"))
      throw Error("custom transfer needs source, target and iota");
    DatumPtr src = datum_from_json(j.at("source"));
    DatumPtr tgt = datum_from_json(j.at("target"));
    const auto& rows = j.at("iota");
    IntMat iota(static_cast<Eigen::Index>(rows.size()), src->rank());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(rows[r].size()) != src->rank()) throw Error("custom transfer: iota row length differs from source rank");
      for (int c = 0; c < src->rank(); ++c) iota(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)].get<std::int64_t>();
    }
    return make_transfer_map(std::move(src), std::move(tgt), std::move(iota), "custom");
  }
  const auto parts = split(text, ':');
  if (parts.size() == 2 && parts[0] == "torus") {
    DatumPtr tgt = build_root_datum(parts[1], DatumForm::Adjoint);
    DatumPtr src = build_root_datum("T" + std::to_string(tgt->rank()));
    return make_transfer_map(src, tgt, IntMat::Identity(tgt->rank(), tgt->rank()), text);
  }
  if (parts.size() == 3 && parts[0] == "sl2-root") {
    DatumPtr tgt = build_root_datum(parts[1], DatumForm::Adjoint);
    int i = 0;
    auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), i);
    if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size() || i < 1 || i > tgt->semisimple_rank())
      throw Error("sl2-root: root index out of range in '" + text + "'");
    DatumPtr src = build_root_datum("A1", DatumForm::SimplyConnected);
    IntMat iota(tgt->rank(), 1);
    iota.col(0) = tgt->simple_coroots()[i - 1].coords();
    return make_transfer_map(src, tgt, std::move(iota), text);
  }
  throw Error("unknown transfer preset '" + text + "' (expected torus:X, sl2-root:X:i or custom:<json>)");
}

TransferContext::TransferContext(TransferMap tm)
    : tm_(std::move(tm)),
      target_group_(make_weyl_group(tm_.target)),
      h_dual_(make_weyl_group(dual_datum(*tm_.source))),
      g_dual_(make_weyl_group(dual_datum(*tm_.target))) {}

CoweightVec TransferContext::transfer(const CoweightVec& lambda) const {
  if (lambda.size() != source().rank()) throw DatumMismatch("coweight is not in the source lattice");
  if (!source().is_dominant(lambda)) throw Error("coweight " + lambda.str() + " is not dominant for the source");
  IntVec y = tm_.iota * lambda.coords();
  fold_to_dominant_coweight(target(), y);
  return CoweightVec(std::move(y));
}

BigInt TransferContext::h_invariants(const Triple& lambdas) const {
  std::vector<WeightVec> ws;
  for (const auto& l : lambdas) ws.push_back(as_dual_weight(l));
  return h_dual_.invariant_dim(ws);
}

BigInt TransferContext::g_invariants(const Triple& lambdas, std::int64_t scale) const {
  std::vector<WeightVec> ws;
  for (const auto& l : lambdas) ws.push_back(scale * as_dual_weight(transfer(l)));
  return g_dual_.invariant_dim(ws);
}

ImplicationCheck TransferContext::check_implication(const Triple& lambdas) const {
  BigInt h = h_invariants(lambdas);
  BigInt g = g_invariants(lambdas);
  const bool ok = h == 0 || g >= 1;
  return {std::move(h), std::move(g), ok};
}

bool TransferContext::root_lattice_check(const Triple& lambdas) const {
  CoweightVec sum(target().rank());
  for (const auto& l : lambdas) sum += transfer(l);
  return target().in_coroot_lattice(sum);
}

std::optional<int> TransferContext::saturation_check(const Triple& lambdas, int n_max) const {
  if (h_invariants(lambdas) == 0) throw Error("saturation check needs a tuple with H-invariants");
  for (int n = 1; n <= n_max; ++n)
    if (g_invariants(lambdas, n) >= 1) return n;
  return std::nullopt;
}

std::vector<CoweightVec> TransferContext::dominant_box(int bound) const {
  const int r = source().rank();
  std::vector<CoweightVec> out;
  CoweightVec y(r);
  for (int i = 0; i < r; ++i) y[i] = -bound;
  for (;;) {
    if (source().is_dominant(y)) out.push_back(y);
    int i = r - 1;
    while (i >= 0 && y[i] == bound) y[i--] = -bound;
    if (i < 0) break;
    ++y[i];
  }
  return out;
}

SearchReport TransferContext::search(int bound, int s, int jobs, bool sum_zero_only) const {
  if (s < 1) throw Error("need at least one coweight per tuple");
  if (bound < 0) throw Error("coordinate bound must be non-negative");
  const auto box = dominant_box(bound);
  std::vector<Triple> tuples;
  std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
  if (!box.empty()) {
    for (;;) {
      Triple t;
      CoweightVec sum(source().rank());
      for (auto k : idx) {
        t.push_back(box[k]);
        sum += box[k];
      }
      if (!sum_zero_only || sum.is_zero()) tuples.push_back(std::move(t));
      int i = s - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 == box.size()) idx[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
    }
  }

  enum : char { kPlain, kFailure, kLatticeViolation };
  std::vector<char> verdict(tuples.size(), kPlain);
  std::vector<char> h_nonzero(tuples.size(), 0);
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t k = start; k < tuples.size(); k += stride) {
      const BigInt h = h_invariants(tuples[k]);
      h_nonzero[k] = h > 0;
      const BigInt g = g_invariants(tuples[k]);
      if (h > 0 && g == 0) verdict[k] = kFailure;
      if (g > 0 && !root_lattice_check(tuples[k])) verdict[k] = kLatticeViolation;
    }
  };
  const auto n_jobs = static_cast<std::size_t>(std::max(1, jobs));
  if (n_jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < n_jobs; ++j) pool.emplace_back(work, j, n_jobs);
    for (auto& t : pool) t.join();
  }

  SearchReport rep;
  rep.triples_checked = tuples.size();
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    rep.h_nonzero += h_nonzero[k];
    if (verdict[k] == kFailure) rep.failures.push_back(tuples[k]);
    if (verdict[k] == kLatticeViolation) rep.lattice_violations.push_back(tuples[k]);
  }
  return rep;
}

std::vector<Triple> TransferContext::search_failures(int bound, int s, int jobs) const {
  return search(bound, s, jobs).failures;
}

bool sl2_polygon_inequality(const std::vector<std::int64_t>& n) {
  if (n.empty()) return true;
  const std::int64_t total = std::accumulate(n.begin(), n.end(), std::int64_t{0});
  const std::int64_t biggest = *std::max_element(n.begin(), n.end());
  return 2 * biggest <= total;
}

}  // namespace prvkit
