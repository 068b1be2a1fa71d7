#include "prvkit/sweep.hpp"

#include "prvkit/looplattice.hpp"
#include "prvkit/serialize.hpp"

#include <condition_variable>
#include <mutex>
#include <thread>

namespace prvkit {

SweepSuite parse_suite(std::string_view name) {
  if (name == "refined") return SweepSuite::Refined;
  if (name == "identity") return SweepSuite::Identity;
  if (name == "kostant") return SweepSuite::Kostant;
  if (name == "oracle") return SweepSuite::Oracle;
  if (name == "cross") return SweepSuite::Cross;
  if (name == "torus") return SweepSuite::Torus;
  throw Error("unknown sweep suite '" + std::string(name) + "'");
}

std::string suite_name(SweepSuite s) {
  switch (s) {
    case SweepSuite::Refined: return "refined";
    case SweepSuite::Identity: return "identity";
    case SweepSuite::Kostant: return "kostant";
    case SweepSuite::Oracle: return "oracle";
    case SweepSuite::Cross: return "cross";
    case SweepSuite::Torus: return "torus";
  }
  return "?";
}

nlohmann::json InstanceRecord::to_json() const {
  nlohmann::json j = {{"type", type},
                      {"lambda", lambda.to_vector()},
                      {"mu", mu.to_vector()},
                      {"w", w.str()},
                      {"nu", nu.to_vector()},
                      {"m", m},
                      {"dim", bigint_to_json(dim)},
                      {"identity_lhs", rational_to_json(identity_lhs)},
                      {"identity_rhs", identity_rhs},
                      {"prv_holds", prv_holds},
                      {"refined_holds", refined_holds},
                      {"identity_holds", identity_holds},
                      {"kostant_applicable", kostant_applicable},
                      {"kostant_holds", kostant_holds}};
  if (orbit_dim) {
    j["orbit_dim"] = *orbit_dim;
    j["cross_holds"] = cross_holds;
  }
  return j;
}

bool InstanceRecord::ok(SweepSuite suite) const {
  switch (suite) {
    case SweepSuite::Refined: return prv_holds && refined_holds && m >= 1;
    case SweepSuite::Identity: return identity_holds;
    case SweepSuite::Kostant: return kostant_holds;
    case SweepSuite::Cross: return cross_holds;
    default: return true;
  }
}

nlohmann::json OracleRecord::to_json() const {
  return {{"type", type}, {"lambda", lambda.to_vector()}, {"mu", mu.to_vector()}, {"equal", equal},
          {"components", components}};
}

nlohmann::json SweepSummary::to_json() const {
  return {{"instances", instances}, {"violations", violations}, {"failures", failures}};
}

std::vector<WeightVec> dominant_weights_up_to(const RootDatum& d, int bound) {
  std::vector<WeightVec> out;
  WeightVec x(d.rank());
  for (;;) {
    if (d.is_dominant(x)) out.push_back(x);
    int i = d.rank() - 1;
    while (i >= 0 && x[i] == bound) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

StabilizerDim torus_translate_orbit_dim(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu,
                                        const WeylElement& w) {
  const RootDatum& d = g.datum();
  const auto& f = d.label().factors;
  if (f.size() != 1 || f[0].family != 'A' || d.label().torus_rank != 0 || d.rank() + 1 > kMaxLoopRank)
    throw UnsupportedType("torus-translate orbit dimension needs type A_n with n <= 3");
  const int m = d.rank() + 1;
  const WeightVec shifted = lambda + w(mu);
  std::int64_t top = 0;
  for (const auto& [a, k] : stabilizer_valuations(g, lambda, mu, w).entries) top = std::max(top, k);
  const std::vector<LaurentMatrix> elts{pgl_torus_point(m, lambda.to_vector()).rep,
                                        pgl_torus_point(m, shifted.to_vector()).rep};
  return stabilizer_intersection_dim(elts, default_truncation(top));
}

InstanceRecord evaluate_instance(const RepCalculator& rc, const std::string& type, const WeightVec& lambda,
                                 const WeightVec& mu, const WeylElement& w, const std::vector<int>* counts,
                                 bool with_orbit) {
  const WeylGroup& g = rc.group();
  InstanceRecord r;
  r.type = type;
  r.lambda = lambda;
  r.mu = mu;
  r.w = w;
  auto p = prv_verify(rc, lambda, mu, w);
  r.nu = p.nu;
  r.dim = p.invariant_dim;
  r.prv_holds = p.holds;
  r.m = counts ? (*counts)[g.index_of(w)] : refined_count(g, lambda, mu, w);
  r.refined_holds = r.dim >= r.m;
  auto id = dimension_identity(g, lambda, mu, w);
  r.identity_lhs = id.lhs;
  r.identity_rhs = id.rhs;
  r.identity_holds = id.equal;
  auto k = kostant_check(rc, lambda, mu, w);
  r.kostant_applicable = k.applicable;
  r.kostant_holds = !k.applicable || k.multiplicity == 1;
  if (with_orbit) {
    const auto s = torus_translate_orbit_dim(g, lambda, mu, w);
    r.orbit_dim = s.orbit_dim;
    r.cross_holds = s.stable && s.orbit_dim == id.rhs;
  }
  return r;
}

namespace {

// Runs `tasks` on `jobs` workers and hands each task's output to `emit` in
// task order on the calling thread.
template <class Out>
void ordered_parallel(std::size_t n_tasks, int jobs, const std::function<Out(std::size_t)>& task,
                      const std::function<void(Out&)>& emit) {
  if (jobs <= 1 || n_tasks <= 1) {
    for (std::size_t k = 0; k < n_tasks; ++k) {
      Out o = task(k);
      emit(o);
    }
    return;
  }
  std::vector<std::optional<Out>> slots(n_tasks);
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t k;
      {
        std::lock_guard lock(mu);
        if (next >= n_tasks || error) return;
        k = next++;
      }
      try {
        Out o = task(k);
        std::lock_guard lock(mu);
        slots[k] = std::move(o);
      } catch (...) {
        std::lock_guard lock(mu);
        error = std::current_exception();
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::size_t k = 0; k < n_tasks; ++k) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return slots[k].has_value() || error; });
    if (error) break;
    Out o = std::move(*slots[k]);
    slots[k].reset();
    lock.unlock();
    emit(o);
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void record(SweepSummary& sum, const SweepOptions& opts, const nlohmann::json& j, bool ok) {
  ++sum.instances;
  if (!ok) {
    ++sum.violations;
    sum.failures.push_back(j);
  }
  if (opts.on_record) opts.on_record(j, ok);
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& opts) {
  SweepSummary sum;
  if (opts.bound < 0) throw Error("sweep bound must be non-negative");
  for (const auto& type : opts.types) {
    if (opts.suite == SweepSuite::Torus) {
      TransferContext tc(make_transfer_map("torus:" + type));
      const auto rep = tc.search(opts.bound, 3, opts.jobs, true);
      for (const auto& f : rep.failures) {
        nlohmann::json j = {{"type", type}, {"triple", triple_to_json(f)}, {"imp_ok", false}};
        record(sum, opts, j, false);
      }
      // passing triples are counted, not listed
      sum.instances += rep.triples_checked - rep.failures.size();
      for (const auto& v : rep.lattice_violations) {
        ++sum.violations;
        sum.failures.push_back({{"type", type}, {"triple", triple_to_json(v)}, {"root_lattice", false}});
      }
      continue;
    }
    auto group = make_weyl_group(build_root_datum(type));
    RepCalculator rc(group);
    const auto box = dominant_weights_up_to(group->datum(), opts.bound);
    const std::size_t n = box.size();

    if (opts.suite == SweepSuite::Oracle) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) pairs.emplace_back(a, b);
      ordered_parallel<OracleRecord>(
          pairs.size(), opts.jobs,
          [&](std::size_t k) {
            const auto& [a, b] = pairs[k];
            OracleRecord r{type, box[a], box[b]};
            const auto dec = rc.decompose(box[a], box[b]);
            r.equal = *dec == rc.character_product_oracle(box[a], box[b]);
            r.components = dec->size();
            return r;
          },
          [&](OracleRecord& r) { record(sum, opts, r.to_json(), r.equal); });
      continue;
    }

    const bool cross = opts.suite == SweepSuite::Cross;
    ordered_parallel<std::vector<InstanceRecord>>(
        n * n, opts.jobs,
        [&](std::size_t k) {
          const WeightVec& l = box[k / n];
          const WeightVec& m = box[k % n];
          const auto counts = refined_counts(*group, l, m);
          std::vector<InstanceRecord> out;
          for (const auto& w : group->elements()) out.push_back(evaluate_instance(rc, type, l, m, w, &counts, cross));
          return out;
        },
        [&](std::vector<InstanceRecord>& rs) {
          for (const auto& r : rs) record(sum, opts, r.to_json(), r.ok(opts.suite));
        });
  }
  return sum;
}

}  // namespace prvkit
