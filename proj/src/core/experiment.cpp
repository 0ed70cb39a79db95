#include "experiment.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "digest.hpp"

namespace cw {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void ExperimentConfig::validate() const {
  walk.validate();
  for (const auto& r : reports) {
    if (r != "drift" && r != "clt" && r != "proportion" && r != "hitting")
      throw std::invalid_argument("unknown report: " + r);
    if (r == "hitting" && walk.backend != BackendKind::kBuilding)
      throw std::invalid_argument("report 'hitting' needs the building backend");
  }
}

std::string traces_to_csv(const std::vector<WalkTrace>& traces) {
  std::string out = "trial_id,n,displacement,a,b,flag_id,certified\n";
  for (const auto& tr : traces) {
    for (const auto& c : tr.checkpoints) {
      out += std::to_string(tr.trial_id);
      out += ',';
      out += std::to_string(c.n);
      out += ',';
      out += format_double(c.displacement);
      out += ',';
      if (c.a >= 0) out += std::to_string(c.a);
      out += ',';
      if (c.b >= 0) out += std::to_string(c.b);
      out += ',';
      if (c.flag_id >= 0) out += std::to_string(c.flag_id);
      out += ',';
      if (c.certified >= 0) out += std::to_string(c.certified);
      out += '\n';
    }
  }
  return out;
}

namespace {

json interval_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

json drift_json(const DriftReport& r) {
  json j;
  j["lambda_hat"] = r.lambda_hat;
  j["has_ci"] = r.has_ci;
  if (r.has_ci) j["ci95"] = interval_json(r.ci95);
  j["horizon"] = r.horizon;
  j["trials"] = r.trials;
  json per;
  for (const auto& [n, v] : r.per_n_means) per.push_back(json::array({n, v}));
  j["per_n_means"] = per;
  if (r.has_components) {
    j["lambda_a"] = r.lambda_a;
    j["lambda_b"] = r.lambda_b;
    if (r.has_ci) {
      j["ci_a"] = interval_json(r.ci_a);
      j["ci_b"] = interval_json(r.ci_b);
    }
  }
  return j;
}

json clt_json(const CltReport& r) {
  json j;
  j["horizon"] = r.horizon;
  j["sigma_hat"] = r.sigma_hat;
  j["degenerate"] = r.degenerate;
  if (!r.degenerate) {
    j["ks_stat"] = r.ks_stat;
    j["ks_p_value"] = r.ks_p_value;
  }
  j["samples"] = static_cast<std::int64_t>(r.samples.size());
  return j;
}

json proportion_json(const ProportionSeries& r) {
  json j;
  j["ns"] = r.ns;
  j["fractions"] = r.fractions;
  return j;
}

json hitting_json(const HittingReport& r) {
  json j;
  j["basepoint"] = r.basepoint;
  json m;
  for (const auto& [k, v] : r.measure) m[std::to_string(k)] = v;
  j["measure"] = m;
  j["tv_residual"] = r.tv_residual;
  j["trials"] = r.trials;
  j["unstable_trials"] = r.unstable_trials;
  j["method"] = r.method;
  return j;
}

bool wants(const std::vector<std::string>& reports, const char* name) {
  for (const auto& r : reports)
    if (r == name) return true;
  return false;
}

}  // namespace

SimulationResult simulate(const ExperimentConfig& cfg) {
  cfg.validate();
  auto t0 = std::chrono::steady_clock::now();
  SimulationResult out;

  WalkConfig wc = cfg.walk;
  if (wants(cfg.reports, "proportion")) wc.certify = true;
  auto traces = run_walks(wc);
  out.csv = traces_to_csv(traces);

  json reports = json::object();
  if (wants(cfg.reports, "drift") || wants(cfg.reports, "clt")) {
    out.drift = estimate_drift(traces);
    reports["drift"] = drift_json(*out.drift);
  }
  if (wants(cfg.reports, "clt")) {
    out.clt = clt_harness(traces, out.drift->lambda_hat, mix64(wc.seed ^ 0x4c696c6cull));
    reports["clt"] = clt_json(*out.clt);
  }
  if (wants(cfg.reports, "proportion")) {
    out.proportion = contracting_proportion(traces);
    reports["proportion"] = proportion_json(*out.proportion);
  }
  if (wants(cfg.reports, "hitting")) {
    out.hitting = hitting_measure(wc);
    reports["hitting"] = hitting_json(*out.hitting);
  }

  if (!cfg.csv_path.empty()) {
    std::ofstream f(cfg.csv_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write CSV to " + cfg.csv_path);
    f << out.csv;
  }

  auto t1 = std::chrono::steady_clock::now();
  json manifest;
  manifest["tool"] = "chainwalk";
  manifest["version"] = kToolVersion;
  json jc;
  jc["backend"] = backend_name(wc.backend);
  jc["q"] = wc.q;
  jc["L"] = wc.l;
  jc["preset"] = wc.preset.empty() ? wc.default_preset() : wc.preset;
  jc["n_steps"] = wc.n_steps;
  jc["n_trials"] = wc.n_trials;
  jc["seed"] = wc.seed;
  jc["checkpoint_base"] = wc.checkpoint_base;
  jc["certify"] = wc.certify;
  jc["cert_power_bound"] = wc.cert_power_bound;
  jc["start"] = wc.start;
  manifest["config"] = jc;
  manifest["reports"] = reports;
  manifest["csv_sha256"] = sha256_hex(out.csv);
  manifest["csv_rows"] = static_cast<std::int64_t>(traces.size() * traces.front().checkpoints.size());
  manifest["wall_clock_seconds"] = std::chrono::duration<double>(t1 - t0).count();
  out.manifest_json = manifest.dump(2);
  out.manifest_json += "\n";

  if (!cfg.manifest_path.empty()) {
    std::ofstream f(cfg.manifest_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write manifest to " + cfg.manifest_path);
    f << out.manifest_json;
  }
  return out;
}

}  // namespace cw
