#include "cli.hpp"

#include "prvkit/looplattice.hpp"
#include "prvkit/prvcore.hpp"
#include "prvkit/serialize.hpp"
#include "prvkit/sweep.hpp"
#include "prvkit/transfer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace prvkit::cli {
namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string paren(const std::vector<std::int64_t>& xs) { return "(" + join(xs) + ")"; }

std::string rational_str(const Rational& r) { return r.str(); }

/// Literal text, or the contents of a file when prefixed with '@'.
std::string read_arg(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw UsageError("cannot read " + text.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

enum class Basis { Fundamental, Coroot };

struct Common {
  std::string type;
  std::string form = "sc";
  std::string basis = "fundamental";
};

struct Datum {
  WeylGroupPtr group;
  std::shared_ptr<RepCalculator> rc;
  Basis basis = Basis::Fundamental;

  [[nodiscard]] const RootDatum& d() const { return group->datum(); }

  /// Weight in X^* coordinates; `--basis coroot` reads simple-root
  /// coefficients (coroot coordinates on the dual side).
  WeightVec weight(const std::string& text, const char* what) const {
    auto xs = parse_int_list(text);
    const int want = basis == Basis::Coroot ? d().semisimple_rank() : d().rank();
    if (static_cast<int>(xs.size()) != want)
      throw UsageError(std::string(what) + " has " + std::to_string(xs.size()) + " coordinates, expected " +
                       std::to_string(want));
    if (basis == Basis::Coroot) return d().from_root_coordinates(xs);
    return WeightVec::from(xs);
  }
  WeightVec dominant(const std::string& text, const char* what) const {
    WeightVec x = weight(text, what);
    if (!d().is_dominant(x)) throw UsageError(std::string(what) + " = " + x.str() + " is not dominant");
    return x;
  }
  const WeylElement& element(const std::string& text) const { return group->from_word(parse_word(text)); }
};

Datum open_datum(const Common& c) {
  if (c.type.empty()) throw UsageError("--type is required");
  DatumForm form;
  if (c.form == "sc")
    form = DatumForm::SimplyConnected;
  else if (c.form == "adjoint")
    form = DatumForm::Adjoint;
  else
    throw UsageError("--form must be sc or adjoint");
  Datum out;
  out.group = make_weyl_group(build_root_datum(c.type, form));
  out.rc = std::make_shared<RepCalculator>(out.group);
  if (c.basis == "coroot")
    out.basis = Basis::Coroot;
  else if (c.basis != "fundamental")
    throw UsageError("--basis must be fundamental or coroot");
  return out;
}

/// Canonical input: weights are always echoed in X^* coordinates.
json datum_input(const Datum& dt, const Common& c) {
  return {{"type", dt.d().label().str()}, {"form", c.form}};
}

struct Rows {
  std::vector<std::pair<std::string, std::string>> rows;
  void add(std::string k, std::string v) { rows.emplace_back(std::move(k), std::move(v)); }
  void print(std::ostream& out) const {
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(w + 2)) << k << v << "\n";
  }
};

struct Output {
  std::ostream& out;
  bool as_json = false;

  void emit(const std::string& command, const json& input, const json& result, const Rows& rows) const {
    if (as_json)
      out << json{{"command", command}, {"input", input}, {"result", result}}.dump() << "\n";
    else
      rows.print(out);
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_datum_options(CLI::App* sub, Common& c) {
  sub->add_option("--type", c.type, "Cartan type, e.g. A2 or B2xT1")->required();
  sub->add_option("--form", c.form, "sc or adjoint")->capture_default_str();
  sub->add_option("--basis", c.basis, "fundamental or coroot")->capture_default_str();
}

LoopGroup parse_group(const std::string& g) {
  if (g == "sl") return LoopGroup::SL;
  if (g == "pgl") return LoopGroup::PGL;
  throw UsageError("--group must be sl or pgl");
}

/// "base:m", "torus:c1,..,c_{m-1}" or a matrix literal / @file.
LatticePoint parse_point(const std::string& raw, LoopGroup group) {
  const std::string text = read_arg(raw);
  if (text.rfind("base:", 0) == 0) {
    const int m = std::stoi(text.substr(5));
    if (m < 1 || m > kMaxLoopRank) throw UsageError("matrix size out of range");
    return base_point(m);
  }
  if (text.rfind("torus:", 0) == 0) {
    auto c = parse_int_list(text.substr(6));
    const int m = static_cast<int>(c.size()) + 1;
    if (m > kMaxLoopRank) throw UsageError("matrix size out of range");
    return torus_point(m, c, group);
  }
  auto a = parse_laurent_matrix(text);
  if (a.size() > kMaxLoopRank) throw UsageError("matrix size out of range");
  return {a};
}

json stabilizer_json(const StabilizerDim& s) {
  return {{"n", s.n}, {"stab_dim", s.stab_dim}, {"orbit_dim", s.orbit_dim}, {"stable", s.stable}};
}

/// Command that reproduces one sweep record.
json replay_for(SweepSuite suite, const json& rec) {
  auto list = [](const json& v) { return join(v.get<std::vector<std::int64_t>>()); };
  if (suite == SweepSuite::Torus) {
    json cw = json::array();
    for (const auto& x : rec["triple"]) cw.push_back(list(x));
    return {{"command", "transfer"}, {"input", {{"map", "torus:" + rec["type"].get<std::string>()}, {"coweight", cw}}}};
  }
  json in = {{"type", rec["type"]}, {"form", "sc"}, {"lambda", list(rec["lambda"])}, {"mu", list(rec["mu"])}};
  if (suite == SweepSuite::Oracle) {
    in["oracle"] = true;
    return {{"command", "tensor"}, {"input", in}};
  }
  in["w"] = rec["w"];
  switch (suite) {
    case SweepSuite::Identity: return {{"command", "dim-identity"}, {"input", in}};
    case SweepSuite::Kostant: return {{"command", "kostant"}, {"input", in}};
    case SweepSuite::Cross: return {{"command", "orbit-dim"}, {"input", in}};
    default: return {{"command", "refined"}, {"input", in}};
  }
}

std::vector<std::string> default_types(SweepSuite s) {
  switch (s) {
    case SweepSuite::Oracle: return {"A1", "A2", "B2"};
    case SweepSuite::Cross: return {"A1", "A2"};
    case SweepSuite::Torus: return {"A2", "B2"};
    default: return {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

/// Input object -> argument list ("--key value", repeated for arrays).
std::vector<std::string> args_from_input(const std::string& command, const json& input) {
  std::vector<std::string> args{command};
  auto scalar = [](const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  for (const auto& [k, v] : input.items()) {
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back("--" + k);
    } else if (v.is_array()) {
      for (const auto& x : v) {
        args.push_back("--" + k);
        args.push_back(scalar(x));
      }
    } else if (!v.is_null()) {
      args.push_back("--" + k);
      args.push_back(scalar(v));
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact PRV, tensor-product and affine Grassmannian computations", "prvtool"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON (JSON lines for sweep)");

  Common c;
  std::string lambda, mu, nu, w, group = "sl", map, expect = "auto", suite = "refined", types, from, to;
  std::vector<std::string> weights, coweights, matrices, points, targets;
  int bound = -1, s = 3, jobs = 1, n_trunc = 0, n_max = 10, saturate = 0;
  bool oracle = false, valuations = false, sl2_example = false, expect_failures = false;

  auto* prv = app.add_subcommand("prv", "PRV check: nu = dom(-lambda - w mu) and invariant dimension");
  auto* refined = app.add_subcommand("refined", "refined bound: invariant dimension >= m(lambda, mu, w)");
  auto* kostant = app.add_subcommand("kostant", "multiplicity of V(lambda + w mu) when it is dominant");
  auto* dimid = app.add_subcommand("dim-identity", "<lambda+mu+nu, rho^vee> against the valuation sum");
  for (auto* sub : {prv, refined, kostant, dimid}) {
    add_datum_options(sub, c);
    sub->add_option("--lambda", lambda)->required();
    sub->add_option("--mu", mu)->required();
    sub->add_option("--w", w, "Weyl word such as s1s2, or e")->required();
  }
  dimid->add_flag("--valuations", valuations, "list the per-coroot terms");

  auto* tensor = app.add_subcommand("tensor", "decompose V(lambda) ⊗ V(mu)");
  add_datum_options(tensor, c);
  tensor->add_option("--lambda", lambda)->required();
  tensor->add_option("--mu", mu)->required();
  tensor->add_option("--nu", nu, "report one multiplicity only");
  tensor->add_flag("--oracle", oracle, "compare with the character-product oracle");

  auto* inv = app.add_subcommand("invariants", "dim (V(l_1) ⊗ ... ⊗ V(l_s))^G");
  add_datum_options(inv, c);
  inv->add_option("--weight", weights, "repeat once per factor")->allow_extra_args(false)->required();

  auto* pairs = app.add_subcommand("pairs", "all (w, v) realizing a PRV triple");
  add_datum_options(pairs, c);
  pairs->add_option("--lambda", lambda)->required();
  pairs->add_option("--mu", mu)->required();
  pairs->add_option("--nu", nu)->required();

  auto* orbit = app.add_subcommand("orbit-dim", "stabilizer and orbit dimension of a tuple of loop-group elements");
  orbit->add_flag("--sl2-example", sl2_example, "the SL_2 pair t^alpha^vee, [[1,t],[0,1]] t^alpha^vee");
  orbit->add_option("--type", c.type, "type A_n (n <= 3): torus-translate pair of (lambda, mu, w)");
  orbit->add_option("--form", c.form);
  orbit->add_option("--basis", c.basis);
  orbit->add_option("--lambda", lambda);
  orbit->add_option("--mu", mu);
  orbit->add_option("--w", w);
  orbit->add_option("--matrix", matrices, "Laurent matrix literal or @file, repeatable")->allow_extra_args(false);
  orbit->add_option("--n", n_trunc, "truncation order (default: 2 + largest valuation)");

  auto* dist = app.add_subcommand("distance", "Chevalley distance d(L1, L2)");
  dist->add_option("--from", from, "base:m, torus:c1,.., matrix literal or @file")->required();
  dist->add_option("--to", to)->required();
  dist->add_option("--group", group, "sl or pgl")->capture_default_str();

  auto* memb = app.add_subcommand("membership", "is (L_1, ..., L_s) in the cyclic convolution variety");
  memb->add_flag("--sl2-example", sl2_example, "([alpha^vee], y, [0]) with targets (1,1,1)");
  memb->add_option("--point", points, "lattice point, repeatable; the last must be the base point")->allow_extra_args(false);
  memb->add_option("--target", targets, "distance d(L_{i-1}, L_i), repeatable")->allow_extra_args(false);
  memb->add_option("--group", group)->capture_default_str();

  auto* trans = app.add_subcommand("transfer", "push coweights of H into G and compare invariants");
  trans->add_option("--map", map, "torus:X, sl2-root:X:i or custom:<json>")->required();
  trans->add_option("--coweight", coweights, "dominant coweight of H, repeatable")->allow_extra_args(false)->required();
  trans->add_option("--basis", c.basis)->capture_default_str();

  auto* search = app.add_subcommand("search", "exhaustive search for failures of invariant transfer");
  search->add_option("--map", map)->required();
  search->add_option("--bound", bound, "coordinate bound")->required();
  search->add_option("--s", s, "number of coweights")->capture_default_str();
  search->add_option("--jobs", jobs)->capture_default_str();
  search->add_flag("--expect-failures", expect_failures, "failures are the expected outcome");
  search->add_option("--saturate", saturate, "also find N' <= this for every failure");

  auto* sat = app.add_subcommand("saturate", "smallest N' with nonzero invariants for (N' lambda_i')");
  sat->add_option("--map", map)->required();
  sat->add_option("--coweight", coweights)->allow_extra_args(false)->required();
  sat->add_option("--max", n_max)->capture_default_str();
  sat->add_option("--basis", c.basis)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "exhaustive verification sweep");
  sweep->add_option("--suite", suite, "refined, identity, kostant, oracle, cross or torus")->capture_default_str();
  sweep->add_option("--types", types, "comma-separated types (default depends on the suite)");
  sweep->add_option("--bound", bound, "coordinate bound (default 2, or 3 for oracle and torus)");
  sweep->add_option("--jobs", jobs)->capture_default_str();

  auto* replay = app.add_subcommand("replay", "re-run a command from its JSON output or a sweep failure record");
  replay->add_option("--from", from, "JSON text or @file")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Output o{out, as_json};
  try {
    if (prv->parsed() || refined->parsed() || kostant->parsed() || dimid->parsed()) {
      const Datum dt = open_datum(c);
      const WeightVec l = dt.dominant(lambda, "lambda");
      const WeightVec m = dt.dominant(mu, "mu");
      const WeylElement& we = dt.element(w);
      json input = datum_input(dt, c);
      input["lambda"] = join(l.to_vector());
      input["mu"] = join(m.to_vector());
      input["w"] = we.str();
      const PrvInstance inst = make_prv_instance(*dt.group, l, m, we);
      Rows rows;
      rows.add("type", dt.d().label().str());
      rows.add("lambda", l.str());
      rows.add("mu", m.str());
      rows.add("w", we.str());
      rows.add("nu", inst.nu.str());
      rows.add("v", inst.v.str());
      json result = {{"nu", inst.nu.to_vector()}, {"v", inst.v.str()}};

      if (prv->parsed()) {
        const auto r = prv_verify(*dt.rc, l, m, we);
        rows.add("dim", r.invariant_dim.str());
        rows.add("holds", yes_no(r.holds));
        result["dim"] = bigint_to_json(r.invariant_dim);
        result["holds"] = r.holds;
        o.emit("prv", input, result, rows);
        return r.holds ? kOk : kPropertyFailed;
      }
      if (refined->parsed()) {
        const auto r = refined_verify(*dt.rc, l, m, we);
        const bool ok = r.holds && r.m >= 1;
        rows.add("m", std::to_string(r.m));
        rows.add("dim", r.dim.str());
        rows.add("holds", yes_no(ok));
        result["m"] = r.m;
        result["dim"] = bigint_to_json(r.dim);
        result["holds"] = ok;
        o.emit("refined", input, result, rows);
        return ok ? kOk : kPropertyFailed;
      }
      if (kostant->parsed()) {
        const auto r = kostant_check(*dt.rc, l, m, we);
        const bool ok = !r.applicable || r.multiplicity == 1;
        rows.add("lambda + w mu", (l + we(m)).str());
        rows.add("applicable", yes_no(r.applicable));
        if (r.applicable) rows.add("multiplicity", r.multiplicity.str());
        rows.add("holds", yes_no(ok));
        result["top"] = (l + we(m)).to_vector();
        result["applicable"] = r.applicable;
        result["multiplicity"] = bigint_to_json(r.multiplicity);
        result["holds"] = ok;
        o.emit("kostant", input, result, rows);
        return ok ? kOk : kPropertyFailed;
      }
      const auto r = dimension_identity(*dt.group, l, m, we);
      rows.add("lhs", rational_str(r.lhs));
      rows.add("rhs", std::to_string(r.rhs));
      rows.add("equal", yes_no(r.equal));
      result["lhs"] = rational_to_json(r.lhs);
      result["rhs"] = r.rhs;
      result["equal"] = r.equal;
      if (valuations) {
        input["valuations"] = true;
        json vals = json::array();
        for (const auto& [a, k] : stabilizer_valuations(*dt.group, l, m, we).entries) {
          rows.add("  " + a.str(), std::to_string(k));
          vals.push_back({{"coroot", a.to_vector()}, {"valuation", k}});
        }
        result["valuations"] = vals;
      }
      o.emit("dim-identity", input, result, rows);
      return r.equal ? kOk : kPropertyFailed;
    }

    if (tensor->parsed()) {
      const Datum dt = open_datum(c);
      const WeightVec l = dt.dominant(lambda, "lambda");
      const WeightVec m = dt.dominant(mu, "mu");
      json input = datum_input(dt, c);
      input["lambda"] = join(l.to_vector());
      input["mu"] = join(m.to_vector());
      Rows rows;
      json result;
      const auto dec = dt.rc->decompose(l, m);
      if (!nu.empty()) {
        const WeightVec x = dt.dominant(nu, "nu");
        input["nu"] = join(x.to_vector());
        const BigInt mult = dt.rc->tensor_multiplicity(l, m, x);
        rows.add("multiplicity of " + x.str(), mult.str());
        result["multiplicity"] = bigint_to_json(mult);
      } else {
        json comps = json::array();
        BigInt total = 0;
        for (const auto& [x, k] : *dec) {
          rows.add(x.str(), k.str());
          comps.push_back({{"nu", x.to_vector()}, {"mult", bigint_to_json(k)}});
          total += k * dt.rc->dim_irrep(x);
        }
        rows.add("dim", total.str());
        result["components"] = comps;
        result["dim"] = bigint_to_json(total);
      }
      bool ok = true;
      if (oracle) {
        input["oracle"] = true;
        ok = *dec == dt.rc->character_product_oracle(l, m);
        rows.add("oracle agrees", yes_no(ok));
        result["oracle_agrees"] = ok;
      }
      o.emit("tensor", input, result, rows);
      return ok ? kOk : kPropertyFailed;
    }

    if (inv->parsed()) {
      const Datum dt = open_datum(c);
      std::vector<WeightVec> ws;
      json input = datum_input(dt, c);
      input["weight"] = json::array();
      for (const auto& t : weights) {
        ws.push_back(dt.dominant(t, "weight"));
        input["weight"].push_back(join(ws.back().to_vector()));
      }
      const BigInt dim = dt.rc->invariant_dim(ws);
      Rows rows;
      rows.add("dim", dim.str());
      o.emit("invariants", input, {{"dim", bigint_to_json(dim)}}, rows);
      return kOk;
    }

    if (pairs->parsed()) {
      const Datum dt = open_datum(c);
      const WeightVec l = dt.dominant(lambda, "lambda");
      const WeightVec m = dt.dominant(mu, "mu");
      const WeightVec x = dt.dominant(nu, "nu");
      json input = datum_input(dt, c);
      input["lambda"] = join(l.to_vector());
      input["mu"] = join(m.to_vector());
      input["nu"] = join(x.to_vector());
      const auto ps = prv_pairs(*dt.group, l, m, x);
      Rows rows;
      json list = json::array();
      for (const auto& p : ps) {
        rows.add("w = " + p.w.str(), "v = " + p.v.str());
        list.push_back({{"w", p.w.str()}, {"v", p.v.str()}});
      }
      rows.add("prv triple", yes_no(!ps.empty()));
      o.emit("pairs", input, {{"pairs", list}, {"prv_triple", !ps.empty()}}, rows);
      return kOk;
    }

    if (orbit->parsed()) {
      json input = json::object();
      Rows rows;
      json result;
      std::optional<StabilizerDim> sd;
      int status = kOk;
      if (sl2_example) {
        input["sl2-example"] = true;
        const int n = n_trunc > 0 ? n_trunc : default_truncation(2);
        sd = stabilizer_intersection_dim(example_stabilizer_inputs(), n);
        json vals = json::array();
        for (const auto& b : basis_valuations(example_stabilizer_inputs())) {
          rows.add("valuation " + b.name, std::to_string(b.valuation));
          vals.push_back({{"name", b.name}, {"valuation", b.valuation}});
        }
        result["valuations"] = vals;
      } else if (!c.type.empty()) {
        const Datum dt = open_datum(c);
        const WeightVec l = dt.dominant(lambda, "lambda");
        const WeightVec m = dt.dominant(mu, "mu");
        const WeylElement& we = dt.element(w);
        input = datum_input(dt, c);
        input["lambda"] = join(l.to_vector());
        input["mu"] = join(m.to_vector());
        input["w"] = we.str();
        sd = torus_translate_orbit_dim(*dt.group, l, m, we);
        const auto id = dimension_identity(*dt.group, l, m, we);
        rows.add("identity rhs", std::to_string(id.rhs));
        result["identity_rhs"] = id.rhs;
        const bool agree = sd->orbit_dim == id.rhs && sd->stable;
        result["agrees"] = agree;
        rows.add("agrees", yes_no(agree));
        if (!agree) status = kPropertyFailed;
      } else if (!matrices.empty()) {
        std::vector<LaurentMatrix> ms;
        input["matrix"] = json::array();
        for (const auto& t : matrices) {
          ms.push_back(parse_laurent_matrix(read_arg(t)));
          input["matrix"].push_back(to_string(ms.back()));
        }
        if (n_trunc <= 0) throw UsageError("--n is required with --matrix");
        sd = stabilizer_intersection_dim(ms, n_trunc);
      } else {
        throw UsageError("orbit-dim needs --sl2-example, --type with --lambda --mu --w, or --matrix");
      }
      if (n_trunc > 0) input["n"] = n_trunc;
      rows.add("n", std::to_string(sd->n));
      rows.add("stab_dim", std::to_string(sd->stab_dim));
      rows.add("orbit_dim", std::to_string(sd->orbit_dim));
      rows.add("stable", yes_no(sd->stable));
      result.update(stabilizer_json(*sd));
      o.emit("orbit-dim", input, result, rows);
      return status;
    }

    if (dist->parsed()) {
      const LoopGroup g = parse_group(group);
      const LatticePoint a = parse_point(from, g), b = parse_point(to, g);
      json input = {{"from", to_string(a.rep)}, {"to", to_string(b.rep)}, {"group", group}};
      const auto d = chevalley_distance(a, b, g);
      Rows rows;
      rows.add("distance", paren(d));
      o.emit("distance", input, {{"distance", d}}, rows);
      return kOk;
    }

    if (memb->parsed()) {
      const LoopGroup g = parse_group(group);
      std::vector<LatticePoint> ps;
      std::vector<std::vector<std::int64_t>> ts;
      json input = {{"group", group}};
      if (sl2_example) {
        input["sl2-example"] = true;
        ps = example_point();
        ts.assign(3, {1});
      } else {
        if (points.empty()) throw UsageError("membership needs --point or --sl2-example");
        input["point"] = json::array();
        input["target"] = json::array();
        for (const auto& p : points) {
          ps.push_back(parse_point(p, g));
          input["point"].push_back(to_string(ps.back().rep));
        }
        for (const auto& t : targets) {
          ts.push_back(parse_int_list(t));
          input["target"].push_back(join(ts.back()));
        }
      }
      const bool member = convolution_membership(ps, ts, g);
      Rows rows;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto& prev = ps[(i + ps.size() - 1) % ps.size()];
        rows.add("d(L" + std::to_string((i + ps.size() - 1) % ps.size() + 1) + ", L" + std::to_string(i + 1) + ")",
                 paren(chevalley_distance(prev, ps[i], g)));
      }
      rows.add("member", yes_no(member));
      o.emit("membership", input, {{"member", member}}, rows);
      return member ? kOk : kPropertyFailed;
    }

    if (trans->parsed() || sat->parsed()) {
      TransferContext tc(make_transfer_map(map));
      if (c.basis != "fundamental" && c.basis != "coroot") throw UsageError("--basis must be fundamental or coroot");
      Triple t;
      json input = {{"map", map}, {"coweight", json::array()}};
      for (const auto& text : coweights) {
        auto xs = parse_int_list(text);
        CoweightVec y;
        if (c.basis == "coroot") {
          if (static_cast<int>(xs.size()) != tc.source().semisimple_rank())
            throw UsageError("coweight " + text + " has the wrong number of coroot coordinates");
          y = tc.source().from_coroot_coordinates(xs);
        } else {
          if (static_cast<int>(xs.size()) != tc.source().rank())
            throw UsageError("coweight " + text + " has the wrong number of coordinates");
          y = CoweightVec::from(xs);
        }
        if (!tc.source().is_dominant(y)) throw UsageError("coweight " + y.str() + " is not dominant");
        t.push_back(y);
        input["coweight"].push_back(join(y.to_vector()));
      }
      Rows rows;
      json result;
      json images = json::array();
      for (const auto& y : t) {
        const CoweightVec img = tc.transfer(y);
        std::string cc = "-";
        json ccj = nullptr;
        if (auto q = tc.target().coroot_coordinates(img)) {
          cc.clear();
          ccj = json::array();
          for (std::size_t i = 0; i < q->size(); ++i) {
            cc += (i ? "," : "") + rational_str((*q)[i]);
            ccj.push_back(rational_to_json((*q)[i]));
          }
          cc = "(" + cc + ")";
        }
        rows.add(y.str() + " ->", img.str() + "  coroot coords " + cc);
        images.push_back({{"coweight", y.to_vector()}, {"image", img.to_vector()}, {"coroot_coords", ccj}});
      }
      result["images"] = images;
      if (sat->parsed()) {
        input["max"] = n_max;
        const auto nn = tc.saturation_check(t, n_max);
        rows.add("N'", nn ? std::to_string(*nn) : "none <= " + std::to_string(n_max));
        result["saturation"] = nn ? json(*nn) : json(nullptr);
        o.emit("saturate", input, result, rows);
        return nn ? kOk : kPropertyFailed;
      }
      const auto chk = tc.check_implication(t);
      const bool lattice = chk.g_dim == 0 || tc.root_lattice_check(t);
      rows.add("h_dim", chk.h_dim.str());
      rows.add("g_dim", chk.g_dim.str());
      rows.add("imp_ok", yes_no(chk.imp_ok));
      rows.add("root_lattice", yes_no(tc.root_lattice_check(t)));
      result["h_dim"] = bigint_to_json(chk.h_dim);
      result["g_dim"] = bigint_to_json(chk.g_dim);
      result["imp_ok"] = chk.imp_ok;
      result["root_lattice"] = tc.root_lattice_check(t);
      o.emit("transfer", input, result, rows);
      return chk.imp_ok && lattice ? kOk : kPropertyFailed;
    }

    if (search->parsed()) {
      if (bound < 0) throw UsageError("--bound must be non-negative");
      if (s < 1) throw UsageError("--s must be positive");
      if (jobs < 1) throw UsageError("--jobs must be positive");
      TransferContext tc(make_transfer_map(map));
      const auto rep = tc.search(bound, s, jobs);
      json input = {{"map", map}, {"bound", bound}, {"s", s}, {"expect-failures", expect_failures}};
      if (saturate > 0) input["saturate"] = saturate;
      Rows rows;
      json fails = json::array();
      bool saturated = true;
      for (const auto& f : rep.failures) {
        json j = {{"triple", triple_to_json(f)}};
        std::string note;
        if (saturate > 0) {
          const auto nn = tc.saturation_check(f, saturate);
          j["saturation"] = nn ? json(*nn) : json(nullptr);
          note = nn ? "  N' = " + std::to_string(*nn) : "  N' > " + std::to_string(saturate);
          saturated = saturated && nn.has_value();
        }
        std::string ts;
        for (const auto& y : f) ts += y.str();
        rows.add("failure", ts + note);
        fails.push_back(j);
      }
      json lv = json::array();
      for (const auto& v : rep.lattice_violations) lv.push_back(triple_to_json(v));
      rows.add("triples", std::to_string(rep.triples_checked));
      rows.add("h_nonzero", std::to_string(rep.h_nonzero));
      rows.add("failures", std::to_string(rep.failures.size()));
      rows.add("lattice violations", std::to_string(rep.lattice_violations.size()));
      const bool found = !rep.failures.empty();
      const bool ok = found == expect_failures && rep.lattice_violations.empty() && saturated;
      o.emit("search", input,
             {{"failures", fails},
              {"triples_checked", rep.triples_checked},
              {"h_nonzero", rep.h_nonzero},
              {"lattice_violations", lv}},
             rows);
      return ok ? kOk : kPropertyFailed;
    }

    if (sweep->parsed()) {
      SweepOptions opts;
      opts.suite = parse_suite(suite);
      opts.types = types.empty() ? default_types(opts.suite) : split_commas(types);
      opts.bound = bound >= 0 ? bound
                   : (opts.suite == SweepSuite::Oracle || opts.suite == SweepSuite::Torus) ? 3
                                                                                            : 2;
      if (jobs < 1) throw UsageError("--jobs must be positive");
      opts.jobs = jobs;
      for (const auto& t : opts.types) build_root_datum(t);
      std::string type_list;
      for (const auto& t : opts.types) type_list += (type_list.empty() ? "" : ",") + t;
      opts.on_record = [&](const json& j, bool ok) {
        if (as_json) {
          json line = j;
          line["ok"] = ok;
          if (!ok) line["replay"] = replay_for(opts.suite, j);
          out << line.dump() << "\n";
        } else if (!ok) {
          out << "FAIL " << j.dump() << "\n";
        }
      };
      const auto sum = run_sweep(opts);
      json input = {{"suite", suite_name(opts.suite)}, {"types", type_list}, {"bound", opts.bound}};
      json failures = json::array();
      for (const auto& f : sum.failures) {
        json g = f;
        g["replay"] = replay_for(opts.suite, f);
        failures.push_back(g);
      }
      json result = {{"instances", sum.instances}, {"violations", sum.violations}, {"failures", failures}};
      if (as_json) {
        out << json{{"command", "sweep"}, {"input", input}, {"result", result}}.dump() << "\n";
      } else {
        Rows rows;
        rows.add("suite", suite_name(opts.suite));
        rows.add("types", type_list);
        rows.add("bound", std::to_string(opts.bound));
        rows.add("instances", std::to_string(sum.instances));
        rows.add("violations", std::to_string(sum.violations));
        rows.print(out);
      }
      return sum.violations == 0 ? kOk : kPropertyFailed;
    }

    if (replay->parsed()) {
      const std::string text = read_arg(from);
      std::optional<json> pick;
      std::istringstream lines(text);
      for (std::string line; std::getline(lines, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) {
          j = json::parse(text, nullptr, false);
          if (j.is_discarded()) throw UsageError("replay input is not JSON");
          pick = j;
          break;
        }
        pick = j;  // the last complete line wins (sweep summaries come last)
      }
      if (!pick) throw UsageError("replay input is empty");
      json j = pick->contains("replay") ? (*pick)["replay"] : *pick;
      if (!j.contains("command") || !j.contains("input")) throw UsageError("replay input has no command/input");
      auto next = args_from_input(j["command"].get<std::string>(), j["input"]);
      if (as_json) next.push_back("--json");
      return run(next, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace prvkit::cli
