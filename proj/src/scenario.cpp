#include "mincost/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "mincost/bounds.hpp"
#include "mincost/costs.hpp"
#include "mincost/ensembles.hpp"
#include "mincost/helstrom.hpp"
#include "mincost/linalg.hpp"
#include "mincost/oracle.hpp"
#include "mincost/povm.hpp"
#include "mincost/sequences.hpp"
#include "mincost/srm.hpp"

namespace mincost {

using nlohmann::json;

namespace {

[[noreturn]] void fail_parse(const std::string& msg) { throw ParseError("scenario: " + msg); }

void require_fields(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) fail_parse("unknown field '" + it.key() + "' in " + where);
  }
}

Complex parse_complex(const json& v) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  fail_parse("complex numbers are written as [re, im]");
}

ComplexVector parse_complex_vector(const json& v) {
  if (!v.is_array()) fail_parse("expected an array of complex numbers");
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = parse_complex(v[i]);
  return out;
}

RealMatrix parse_real_matrix(const json& v) {
  if (!v.is_array() || v.empty() || !v[0].is_array()) fail_parse("expected a matrix");
  RealMatrix m(v.size(), v[0].size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v[r].size() != v[0].size()) fail_parse("matrix rows have unequal lengths");
    for (std::size_t c = 0; c < v[r].size(); ++c) {
      if (!v[r][c].is_number()) fail_parse("matrix entries must be numbers");
      m(r, c) = v[r][c].get<double>();
    }
  }
  return m;
}

ComplexMatrix parse_complex_matrix(const json& v) {
  if (!v.is_array() || v.empty() || !v[0].is_array()) fail_parse("expected a complex matrix");
  ComplexMatrix m(v.size(), v[0].size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v[r].size() != v[0].size()) fail_parse("matrix rows have unequal lengths");
    for (std::size_t c = 0; c < v[r].size(); ++c) m(r, c) = parse_complex(v[r][c]);
  }
  return m;
}

json dump_real_matrix(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json dump_real_vector(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json dump_complex_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct EnsembleSpec {
  Ensemble ensemble;
  std::optional<SymmetricFamily> family; // present for pure symmetric alphabets
  std::optional<MixtureSpec> mixture;    // present when states are mixtures of the family
};

EnsembleSpec parse_ensemble(const json& spec) {
  if (!spec.is_object() || !spec.contains("type")) fail_parse("ensemble needs a 'type'");
  const std::string type = spec.at("type").get<std::string>();
  if (type == "coherent") {
    require_fields(spec, {"type", "alpha", "n_states", "fock_cutoff"}, "coherent ensemble");
    const Complex alpha = parse_complex(spec.at("alpha"));
    const int n = spec.at("n_states").get<int>();
    const int cutoff = spec.value("fock_cutoff", 40);
    SymmetricFamily fam = coherent_symmetric_family(alpha, n, cutoff);
    Ensemble e = fam.pure_ensemble();
    return EnsembleSpec{std::move(e), std::move(fam), std::nullopt};
  }
  if (type == "symmetric") {
    require_fields(spec, {"type", "fourier_coeffs", "n_states"}, "symmetric ensemble");
    SymmetricFamily fam =
        symmetric_from_coeffs(parse_complex_vector(spec.at("fourier_coeffs")),
                              spec.at("n_states").get<int>());
    Ensemble e = fam.pure_ensemble();
    return EnsembleSpec{std::move(e), std::move(fam), std::nullopt};
  }
  if (type == "pure_states") {
    require_fields(spec, {"type", "states", "priors"}, "pure state ensemble");
    std::vector<PureState> states;
    for (const auto& s : spec.at("states")) states.push_back(parse_complex_vector(s));
    std::vector<double> priors;
    if (spec.contains("priors")) {
      priors = spec.at("priors").get<std::vector<double>>();
    } else {
      priors.assign(states.size(), 1.0 / states.size());
    }
    return EnsembleSpec{Ensemble::from_pure(states, priors), std::nullopt, std::nullopt};
  }
  if (type == "mixture") {
    require_fields(spec, {"type", "family", "coefficients"}, "mixture ensemble");
    EnsembleSpec base = parse_ensemble(spec.at("family"));
    if (!base.family) fail_parse("mixture 'family' must be symmetric or coherent");
    MixtureSpec mix{parse_real_matrix(spec.at("coefficients"))};
    Ensemble e = mix_symmetric(*base.family, mix);
    return EnsembleSpec{std::move(e), std::move(base.family), std::move(mix)};
  }
  fail_parse("unknown ensemble type '" + type + "'");
}

CostMatrix parse_cost(const json& spec, int n_states) {
  if (!spec.is_object() || !spec.contains("type")) fail_parse("cost needs a 'type'");
  const std::string type = spec.at("type").get<std::string>();
  if (type == "min_error") {
    require_fields(spec, {"type"}, "min_error cost");
    return min_error_cost(n_states);
  }
  if (type == "matrix") {
    require_fields(spec, {"type", "entries"}, "matrix cost");
    return parse_real_matrix(spec.at("entries"));
  }
  if (type == "circulant") {
    require_fields(spec, {"type", "coeffs"}, "circulant cost");
    const RealMatrix coeffs = parse_real_matrix(json::array({spec.at("coeffs")}));
    return CirculantCost::from_coeffs(coeffs.row(0).transpose()).to_matrix();
  }
  fail_parse("unknown cost type '" + type + "'");
}

OracleConfig parse_oracle_config(const json& scenario, const RunOptions& options) {
  OracleConfig cfg;
  if (scenario.contains("oracle")) {
    const json& o = scenario.at("oracle");
    require_fields(o,
                   {"seed", "restarts", "max_iters", "cost_tol", "residual_tol", "init_noise"},
                   "oracle config");
    cfg.seed = o.value("seed", cfg.seed);
    cfg.restarts = o.value("restarts", cfg.restarts);
    cfg.max_iters = o.value("max_iters", cfg.max_iters);
    cfg.cost_tol = o.value("cost_tol", cfg.cost_tol);
    cfg.residual_tol = o.value("residual_tol", cfg.residual_tol);
    cfg.init_noise = o.value("init_noise", cfg.init_noise);
  }
  if (options.seed) cfg.seed = *options.seed;
  return cfg;
}

GlobalCostFunction parse_global_function(const json& spec, CostMatrix local_cost) {
  if (!spec.is_object() || !spec.contains("kind")) fail_parse("global function needs a 'kind'");
  const std::string kind = spec.at("kind").get<std::string>();
  GlobalCostFunction f;
  if (kind == "linear") {
    require_fields(spec, {"kind", "a", "b"}, "linear global function");
    f = GlobalCostFunction::linear(spec.value("a", 1.0), spec.value("b", 0.0),
                                   std::move(local_cost));
  } else if (kind == "step") {
    require_fields(spec, {"kind", "threshold"}, "step global function");
    f = GlobalCostFunction::step(spec.at("threshold").get<double>(), std::move(local_cost));
  } else if (kind == "table") {
    require_fields(spec, {"kind", "values", "convex", "concave"}, "table global function");
    f = GlobalCostFunction::from_table(spec.at("values").get<std::vector<double>>(),
                                       std::move(local_cost));
    f.convex_tag = spec.value("convex", false);
    f.concave_tag = spec.value("concave", false);
  } else {
    fail_parse("unknown global function kind '" + kind + "'");
  }
  return f;
}

void run_min_error(const json& scenario, const RunOptions& options, json& report) {
  EnsembleSpec spec = parse_ensemble(scenario.at("ensemble"));
  json& values = report["values"];
  const CostMatrix cost = min_error_cost(spec.ensemble.n_states());
  if (spec.family && !spec.mixture) {
    const GramSpectrum spectrum = family_spectrum(*spec.family);
    values["min_error"] = min_error_symmetric(spectrum);
    const SrmResult srm = srm_symmetric(*spec.family);
    values["srm_cost_direct"] = average_cost(spec.ensemble, cost, srm.povm);
    report["gram_eigenvalues"] = dump_real_vector(spectrum.eigenvalues);
    const HelstromReport hel = check_optimality(spec.ensemble, cost, srm.povm);
    values["srm_certified"] = hel.certified_optimal ? 1.0 : 0.0;
  }
  if (spec.family && spec.mixture) {
    const SrmResult srm = srm_symmetric(*spec.family);
    values["srm_cost_direct"] = average_cost(spec.ensemble, cost, srm.povm);
    const HelstromReport hel = check_optimality(spec.ensemble, cost, srm.povm);
    values["srm_certified"] = hel.certified_optimal ? 1.0 : 0.0;
  }
  if (scenario.contains("oracle")) {
    const OracleConfig cfg = parse_oracle_config(scenario, options);
    const OracleResult res =
        minimize_cost(spec.ensemble, cost, spec.ensemble.n_states(), cfg);
    values["oracle_min_cost"] = res.min_cost;
    values["oracle_residual"] = res.helstrom_residual;
    values["oracle_gap"] = res.duality_gap;
  }
}

void run_min_cost(const json& scenario, const RunOptions& options, json& report) {
  EnsembleSpec spec = parse_ensemble(scenario.at("ensemble"));
  const CostMatrix cost = parse_cost(scenario.at("cost"), spec.ensemble.n_states());
  json& values = report["values"];
  if (spec.family) {
    const SrmResult srm = srm_symmetric(*spec.family);
    values["srm_cost_direct"] = average_cost(spec.ensemble, cost, srm.povm);
    if (const auto circ = circulant_structure(cost); circ && circ->symmetric) {
      values["srm_cost_closed_form"] =
          srm_cost_circulant(family_spectrum(*spec.family), *circ);
    }
    const HelstromReport hel = check_optimality(spec.ensemble, cost, srm.povm);
    values["srm_certified"] = hel.certified_optimal ? 1.0 : 0.0;
  }
  if (scenario.contains("oracle")) {
    const OracleConfig cfg = parse_oracle_config(scenario, options);
    const OracleResult res =
        minimize_cost(spec.ensemble, cost, static_cast<int>(cost.cols()), cfg);
    values["oracle_min_cost"] = res.min_cost;
    values["oracle_residual"] = res.helstrom_residual;
    values["oracle_gap"] = res.duality_gap;
  }
}

void run_bound(const json& scenario, const RunOptions& options, json& report) {
  EnsembleSpec spec = parse_ensemble(scenario.at("ensemble"));
  if (!spec.family || spec.mixture) {
    throw ValidationError("bound scenarios need a pure symmetric ensemble");
  }
  const CostMatrix cost = parse_cost(scenario.at("cost"), spec.ensemble.n_states());
  const BoundReport bounds = bound_min_cost(*spec.family, cost);
  json& values = report["values"];
  values["shift_cost"] = bounds.shift_cost;
  values["global_offset"] = bounds.global_offset;
  for (int k = 0; k < bounds.lower_envelope.n(); ++k) {
    values["lower_c" + std::to_string(k)] = bounds.lower_envelope.coeffs(k);
    values["upper_c" + std::to_string(k)] = bounds.upper_envelope.coeffs(k);
  }
  values["lower_valid"] = bounds.lower_valid ? 1.0 : 0.0;
  values["upper_valid"] = bounds.upper_valid ? 1.0 : 0.0;
  if (bounds.lower_bound) {
    values["lower_bound"] = *bounds.lower_bound;
    values["lower_increment"] = *bounds.lower_bound - bounds.shift_cost;
  }
  if (bounds.upper_bound) {
    values["upper_bound"] = *bounds.upper_bound;
    values["upper_increment"] = *bounds.upper_bound - bounds.shift_cost;
  }
  report["row_offsets"] = dump_real_vector(bounds.row_offsets);
  report["nonneg_remainder"] = dump_real_matrix(bounds.nonneg_remainder);
  report["nonpos_remainder"] = dump_real_matrix(bounds.nonpos_remainder);
  report["lower_envelope_dft"] = dump_real_vector(bounds.lower_envelope.dft_eigenvalues);
  report["upper_envelope_dft"] = dump_real_vector(bounds.upper_envelope.dft_eigenvalues);
  if (scenario.contains("oracle")) {
    const OracleConfig cfg = parse_oracle_config(scenario, options);
    const OracleResult res =
        minimize_cost(spec.ensemble, cost, spec.ensemble.n_states(), cfg);
    values["oracle_min_cost"] = res.min_cost;
    values["oracle_gap"] = res.duality_gap;
  }
  if ((!bounds.lower_valid || !bounds.upper_valid) && !scenario.contains("oracle")) {
    throw ValidationError("an envelope failed the negative-semidefiniteness test");
  }
}

void run_sequence(const json& scenario, const RunOptions& options, json& report) {
  EnsembleSpec spec = parse_ensemble(scenario.at("ensemble"));
  const json& seq_spec = scenario.at("sequence");
  require_fields(seq_spec, {"length", "local_cost", "function", "evaluate_pbr"},
                 "sequence spec");
  const int length = seq_spec.at("length").get<int>();
  const CostMatrix local_cost =
      parse_cost(seq_spec.at("local_cost"), spec.ensemble.n_states());
  GlobalCostFunction f = parse_global_function(seq_spec.at("function"), local_cost);
  const SequenceEnsemble seq(spec.ensemble, length);
  const CostMatrix global_cost = build_global_cost(seq, f);
  const OracleConfig cfg = parse_oracle_config(scenario, options);

  json& values = report["values"];
  const OracleResult product = minimize_over_product_povms(
      std::vector<Ensemble>(length, spec.ensemble),
      std::vector<CostMatrix>(length, local_cost), global_cost, cfg);
  values["product_cost"] = product.min_cost;
  values["product_residual"] = product.helstrom_residual;

  if (f.kind == GlobalCostFunction::Kind::Linear) {
    const auto [value, povm] = linear_case_minimum(seq, f.a, f.b, local_cost, cfg);
    values["linear_value"] = value;
  }
  if (f.convex_tag || f.concave_tag) {
    const auto [lower, upper] = convexity_bounds(seq, f, cfg);
    if (lower) values["concave_lower_bound"] = *lower;
    if (upper) values["convex_upper_bound"] = *upper;
  }
  if (seq_spec.value("evaluate_pbr", false)) {
    if (seq.n_global() != 4 || seq.local_dim() != 2) {
      throw ValidationError("evaluate_pbr requires two qubit-like subsystems");
    }
    const Povm basis = pbr_basis();
    values["pbr_cost"] = average_cost(seq.global_ensemble(), global_cost, basis);
    const auto elim = elimination_check(basis, seq.global_ensemble().states);
    json table = json::array();
    for (const auto& row : elim) {
      json r = json::array();
      for (bool bcell : row) r.push_back(bcell);
      table.push_back(std::move(r));
    }
    report["pbr_elimination"] = table;
  }
  if (scenario.contains("oracle")) {
    const OracleResult res =
        minimize_cost(seq.global_ensemble(), global_cost, seq.n_global(), cfg);
    values["oracle_min_cost"] = res.min_cost;
    values["oracle_gap"] = res.duality_gap;
  }
}

void run_helstrom_check(const json& scenario, const RunOptions& options, json& report) {
  EnsembleSpec spec = parse_ensemble(scenario.at("ensemble"));
  const CostMatrix cost = parse_cost(scenario.at("cost"), spec.ensemble.n_states());
  const json& povm_spec = scenario.at("povm");
  Povm povm;
  const std::string type = povm_spec.at("type").get<std::string>();
  if (type == "srm") {
    if (!spec.family) throw ValidationError("srm povm needs a symmetric ensemble");
    povm = srm_symmetric(*spec.family).povm;
  } else if (type == "elements") {
    for (const auto& e : povm_spec.at("elements")) {
      povm.elements.push_back(parse_complex_matrix(e));
    }
  } else {
    fail_parse("unknown povm type '" + type + "'");
  }
  const double tol = options.certification_tol.value_or(1e-8);
  const HelstromReport rep = check_optimality(spec.ensemble, cost, povm, tol);
  json& values = report["values"];
  values["cond1_residual"] = rep.cond1_residual;
  values["cond2_residual"] = rep.cond2_residual;
  values["cond3_residual"] = rep.cond3_residual;
  values["cond4_min_eig"] = rep.cond4_min_eigs.minCoeff();
  values["pairwise_residual"] = rep.pairwise_residual;
  values["certified_optimal"] = rep.certified_optimal ? 1.0 : 0.0;
  report["cond4_min_eigs"] = dump_real_vector(rep.cond4_min_eigs);
  report["lagrange_operator"] = dump_complex_matrix(rep.lagrange_operator);
}

void run_oracle(const json& scenario, const RunOptions& options, json& report) {
  EnsembleSpec spec = parse_ensemble(scenario.at("ensemble"));
  const CostMatrix cost = parse_cost(scenario.at("cost"), spec.ensemble.n_states());
  const OracleConfig cfg = parse_oracle_config(scenario, options);
  const OracleResult res =
      minimize_cost(spec.ensemble, cost, static_cast<int>(cost.cols()), cfg);
  json& values = report["values"];
  values["oracle_min_cost"] = res.min_cost;
  values["iterations"] = static_cast<double>(res.iterations);
  values["final_step_delta"] = res.final_step_delta;
  values["oracle_residual"] = res.helstrom_residual;
  values["oracle_gap"] = res.duality_gap;
}

void check_expectations(const json& scenario, json& report) {
  if (!scenario.contains("expect")) return;
  json results = json::array();
  bool all_pass = true;
  for (const auto& exp : scenario.at("expect")) {
    require_fields(exp, {"name", "value", "tol"}, "expectation");
    const std::string name = exp.at("name").get<std::string>();
    const double expected = exp.at("value").get<double>();
    const double tol = exp.at("tol").get<double>();
    json entry;
    entry["name"] = name;
    entry["expected"] = expected;
    entry["tol"] = tol;
    if (!report["values"].contains(name)) {
      entry["pass"] = false;
      entry["error"] = "no such value";
      all_pass = false;
    } else {
      const double actual = report["values"].at(name).get<double>();
      entry["actual"] = actual;
      entry["pass"] = std::abs(actual - expected) <= tol;
      all_pass = all_pass && entry["pass"].get<bool>();
    }
    results.push_back(std::move(entry));
  }
  report["expectations"] = std::move(results);
  report["all_expectations_pass"] = all_pass;
}

} // namespace

json run_scenario(const json& scenario, const RunOptions& options) {
  if (!scenario.is_object()) fail_parse("document must be an object");
  require_fields(scenario,
                 {"name", "kind", "ensemble", "cost", "sequence", "povm", "oracle", "expect"},
                 "scenario");
  if (!scenario.contains("kind")) fail_parse("missing 'kind'");
  const std::string kind = scenario.at("kind").get<std::string>();
  json report;
  report["name"] = scenario.value("name", "unnamed");
  report["kind"] = kind;
  report["values"] = json::object();
  if (kind == "min_error") {
    run_min_error(scenario, options, report);
  } else if (kind == "min_cost") {
    run_min_cost(scenario, options, report);
  } else if (kind == "bound") {
    run_bound(scenario, options, report);
  } else if (kind == "sequence") {
    run_sequence(scenario, options, report);
  } else if (kind == "helstrom_check") {
    run_helstrom_check(scenario, options, report);
  } else if (kind == "oracle") {
    run_oracle(scenario, options, report);
  } else {
    fail_parse("unknown kind '" + kind + "'");
  }
  check_expectations(scenario, report);
  return report;
}

json run_scenario_file(const std::string& path, const RunOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path);
  json scenario;
  try {
    scenario = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return run_scenario(scenario, options);
}

bool all_expectations_pass(const json& report) {
  return !report.contains("all_expectations_pass") ||
         report.at("all_expectations_pass").get<bool>();
}

} // namespace mincost
