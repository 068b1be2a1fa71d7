#pragma once

#include "prvkit/looplattice.hpp"
#include "prvkit/prvcore.hpp"
#include "prvkit/transfer.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace prvkit {

enum class SweepSuite { Refined, Identity, Kostant, Oracle, Cross, Torus };

SweepSuite parse_suite(std::string_view name);
std::string suite_name(SweepSuite s);

/// One (type, lambda, mu, w) instance with every PRV-side quantity.
struct InstanceRecord {
  std::string type;
  WeightVec lambda, mu;
  WeylElement w;
  WeightVec nu;
  int m = 0;
  BigInt dim;
  Rational identity_lhs;
  std::int64_t identity_rhs = 0;
  bool prv_holds = false;
  bool refined_holds = false;
  bool identity_holds = false;
  bool kostant_applicable = false;
  bool kostant_holds = true;  // vacuous when not applicable
  std::optional<int> orbit_dim;
  bool cross_holds = true;

  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] bool ok(SweepSuite suite) const;
};

/// One (lambda, mu) pair compared between Klimyk and the character product.
struct OracleRecord {
  std::string type;
  WeightVec lambda, mu;
  bool equal = false;
  std::size_t components = 0;

  [[nodiscard]] nlohmann::json to_json() const;
};

struct SweepOptions {
  SweepSuite suite = SweepSuite::Refined;
  std::vector<std::string> types;
  int bound = 2;
  int jobs = 1;
  /// Called in deterministic order for every record, from the calling thread.
  std::function<void(const nlohmann::json&, bool ok)> on_record;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<nlohmann::json> failures;  // full records, replayable
  [[nodiscard]] nlohmann::json to_json() const;
};

SweepSummary run_sweep(const SweepOptions& opts);

/// Record for a single instance (the unit of the refined/identity/kostant/cross suites).
InstanceRecord evaluate_instance(const RepCalculator& rc, const std::string& type, const WeightVec& lambda,
                                 const WeightVec& mu, const WeylElement& w, const std::vector<int>* counts = nullptr,
                                 bool with_orbit = false);

/// Orbit dimension of the torus-translate pair (t^lambda, t^{lambda + w mu})
/// for a type A_n datum, using GL_{n+1} representatives.
StabilizerDim torus_translate_orbit_dim(const WeylGroup& g, const WeightVec& lambda, const WeightVec& mu,
                                        const WeylElement& w);

/// Dominant weights of a simply connected datum with coordinates in [0, bound].
std::vector<WeightVec> dominant_weights_up_to(const RootDatum& d, int bound);

}  // namespace prvkit
