#include "reports.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cw {

DriftReport estimate_drift(const std::vector<WalkTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("estimate_drift: no traces");
  DriftReport r;
  r.trials = static_cast<std::int64_t>(traces.size());
  r.horizon = traces.front().last().n;
  const auto& grid = traces.front().checkpoints;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    std::vector<double> per_trial;
    per_trial.reserve(traces.size());
    for (const auto& tr : traces) per_trial.push_back(tr.checkpoints.at(gi).displacement / static_cast<double>(tr.checkpoints.at(gi).n));
    r.per_n_means.emplace_back(grid[gi].n, mean(per_trial));
  }
  std::vector<double> finals;
  finals.reserve(traces.size());
  for (const auto& tr : traces) finals.push_back(tr.last().displacement / static_cast<double>(r.horizon));
  r.lambda_hat = mean(finals);
  r.has_ci = traces.size() >= 2;
  if (r.has_ci) r.ci95 = normal_ci95(finals);

  if (traces.front().last().a >= 0) {
    r.has_components = true;
    std::vector<double> as, bs;
    for (const auto& tr : traces) {
      as.push_back(static_cast<double>(tr.last().a) / static_cast<double>(r.horizon));
      bs.push_back(static_cast<double>(tr.last().b) / static_cast<double>(r.horizon));
    }
    r.lambda_a = mean(as);
    r.lambda_b = mean(bs);
    if (r.has_ci) {
      r.ci_a = normal_ci95(as);
      r.ci_b = normal_ci95(bs);
    }
  }
  return r;
}

CltReport clt_harness(const std::vector<WalkTrace>& traces, double lambda_hat, std::uint64_t mc_seed) {
  if (traces.size() < 100) throw std::invalid_argument("clt_harness: need at least 100 trials");
  CltReport r;
  r.horizon = traces.front().last().n;
  double sqrt_n = std::sqrt(static_cast<double>(r.horizon));
  for (const auto& tr : traces) r.samples.push_back((tr.last().displacement - static_cast<double>(r.horizon) * lambda_hat) / sqrt_n);
  r.sigma_hat = sample_sd(r.samples);
  bool all_equal = std::all_of(r.samples.begin(), r.samples.end(), [&](double v) { return v == r.samples.front(); });
  if (all_equal || r.sigma_hat == 0.0) {
    r.degenerate = true;
    return r;
  }
  r.ks_stat = ks_statistic(r.samples, mean(r.samples), r.sigma_hat);
  r.ks_p_value = lilliefors_p_value(r.samples, mc_seed);
  return r;
}

ProportionSeries contracting_proportion(const std::vector<WalkTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("contracting_proportion: no traces");
  ProportionSeries out;
  const auto& grid = traces.front().checkpoints;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    std::int64_t certified = 0;
    for (const auto& tr : traces) {
      int c = tr.checkpoints.at(gi).certified;
      if (c < 0) throw std::invalid_argument("contracting_proportion: traces were run without certification");
      certified += c;
    }
    out.ns.push_back(grid[gi].n);
    out.fractions.push_back(static_cast<double>(certified) / static_cast<double>(traces.size()));
  }
  return out;
}

namespace {

StepMeasure<Mat3> building_measure_for(const WalkConfig& cfg) {
  std::string preset = cfg.preset.empty() ? cfg.default_preset() : cfg.preset;
  if (preset != "elementary") throw std::invalid_argument("unknown building preset: " + preset);
  return measure_building_elementary(cfg.q);
}

LatticeClass building_start_for(const WalkConfig& cfg) {
  if (cfg.start.empty()) return LatticeClass::standard(cfg.q);
  return LatticeClass::from_matrix(parse_group_element(cfg.start, cfg.q));
}

void require_building(const WalkConfig& cfg, const char* who) {
  if (cfg.backend != BackendKind::kBuilding) throw std::invalid_argument(std::string(who) + ": building backend required");
}

}  // namespace

HittingReport hitting_measure(const WalkConfig& cfg, int window) {
  require_building(cfg, "hitting_measure");
  cfg.validate();
  if (window < 1) throw std::invalid_argument("hitting_measure: window must be >= 1");
  StepMeasure<Mat3> mu = building_measure_for(cfg);
  LatticeClass start = building_start_for(cfg);
  auto grid = checkpoint_schedule(cfg.n_steps, cfg.checkpoint_base);
  if (static_cast<int>(grid.size()) < window) throw std::invalid_argument("hitting_measure: fewer checkpoints than the stabilization window");

  HittingReport r;
  r.basepoint = start.key();
  r.trials = cfg.n_trials;
  r.method = "empirical stabilized germ at the standard vertex; stationarity residual via generator push-forward re-germing";
  std::map<int, double> raw;
  std::map<int, double> pushed;
  std::int64_t stable_count = 0;
  const double weight_unit = 1.0 / static_cast<double>(mu.total());

  std::vector<std::vector<int>> flags_per_trial(static_cast<std::size_t>(cfg.n_trials));
  int workers = resolve_workers(cfg.workers);
  std::vector<std::map<int, double>> pushed_per_trial(static_cast<std::size_t>(cfg.n_trials));

  // Per-trial runs; push-forward germs are only needed at the final state.
  std::vector<int> stable_flag(static_cast<std::size_t>(cfg.n_trials), -1);
  auto job = [&](std::int64_t t) {
    BuildingWalker w(cfg.q, mu, start);
    w.reset(cfg.seed, t);
    std::vector<int>& flags = flags_per_trial[static_cast<std::size_t>(t)];
    std::size_t gi = 0;
    for (std::int64_t n = 1; n <= cfg.n_steps; ++n) {
      w.step();
      if (gi < grid.size() && grid[gi] == n) {
        auto g = w.germ_at_standard();
        flags.push_back((g && g->is_full()) ? flag_id_fast(g->flag) : -1);
        ++gi;
      }
    }
    bool stable = flags.back() >= 0;
    for (int k = 1; k < window && stable; ++k) stable = flags[flags.size() - 1 - static_cast<std::size_t>(k)] == flags.back();
    if (stable) {
      stable_flag[static_cast<std::size_t>(t)] = flags.back();
      std::map<int, double>& ps = pushed_per_trial[static_cast<std::size_t>(t)];
      for (std::size_t s = 0; s < mu.support.size(); ++s) {
        auto pg = w.pushed_germ(s);
        int fid = (pg && pg->is_full()) ? flag_id_fast(pg->flag) : -1;
        ps[fid] += static_cast<double>(mu.weights[s]) * weight_unit;
      }
    }
  };
  parallel_trials(cfg.n_trials, workers, job);

  for (std::int64_t t = 0; t < cfg.n_trials; ++t) {
    const auto& flags = flags_per_trial[static_cast<std::size_t>(t)];
    if (stable_flag[static_cast<std::size_t>(t)] < 0) {
      r.unstable_trials.push_back(t);
      r.stabilization_n.push_back(-1);
      continue;
    }
    ++stable_count;
    raw[stable_flag[static_cast<std::size_t>(t)]] += 1.0;
    for (const auto& [k, v] : pushed_per_trial[static_cast<std::size_t>(t)]) pushed[k] += v;
    // first checkpoint from which the germ stays equal to the final one
    std::size_t first = flags.size() - 1;
    while (first > 0 && flags[first - 1] == flags.back()) --first;
    r.stabilization_n.push_back(grid[first]);
  }

  if (static_cast<double>(r.unstable_trials.size()) > 0.05 * static_cast<double>(cfg.n_trials)) {
    std::ostringstream os;
    os << "hitting_measure: insufficient stabilization in trials";
    for (std::int64_t t : r.unstable_trials) os << " " << t;
    throw std::runtime_error(os.str());
  }
  if (stable_count == 0) throw std::runtime_error("hitting_measure: no stabilized trials");
  for (auto& [k, v] : raw) v /= static_cast<double>(stable_count);
  for (auto& [k, v] : pushed) v /= static_cast<double>(stable_count);
  r.measure = raw;
  r.tv_residual = total_variation(pushed, raw);
  return r;
}

BirkhoffReport birkhoff_cylinder_averages(const WalkConfig& cfg) {
  require_building(cfg, "birkhoff_cylinder_averages");
  cfg.validate();
  StepMeasure<Mat3> mu = building_measure_for(cfg);
  BirkhoffReport r;
  r.symmetric_measure = mu.symmetric;
  r.n = cfg.n_steps;
  r.trials = cfg.n_trials;
  std::vector<std::map<int, std::int64_t>> counts(static_cast<std::size_t>(cfg.n_trials));
  int workers = resolve_workers(cfg.workers);
  auto job = [&](std::int64_t t) {
    InverseBuildingWalker w(cfg.q, mu);
    w.reset(cfg.seed, t);
    auto& c = counts[static_cast<std::size_t>(t)];
    for (std::int64_t k = 1; k <= cfg.n_steps; ++k) {
      w.step();
      auto g = w.germ_at_standard();
      if (g && g->is_full()) c[flag_id_fast(g->flag)] += 1;
    }
  };
  parallel_trials(cfg.n_trials, workers, job);
  for (const auto& c : counts)
    for (const auto& [k, v] : c) r.averages[k] += static_cast<double>(v) / static_cast<double>(cfg.n_steps);
  for (auto& [k, v] : r.averages) v /= static_cast<double>(cfg.n_trials);
  return r;
}

OppositePairReport opposite_pair_frequency(const WalkConfig& cfg, std::int64_t n_pairs) {
  require_building(cfg, "opposite_pair_frequency");
  if (n_pairs < 1) throw std::invalid_argument("opposite_pair_frequency: need pairs");
  WalkConfig run = cfg;
  run.n_trials = 2 * n_pairs;
  auto traces = run_walks(run);
  OppositePairReport r;
  r.pairs = n_pairs;
  const auto& table = flag_table(cfg.q);
  const auto& grid = traces.front().checkpoints;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    std::int64_t opposite = 0;
    for (std::int64_t p = 0; p < n_pairs; ++p) {
      int f1 = traces[static_cast<std::size_t>(p)].checkpoints.at(gi).flag_id;
      int f2 = traces[static_cast<std::size_t>(n_pairs + p)].checkpoints.at(gi).flag_id;
      if (f1 >= 0 && f2 >= 0 && flags_opposite(table[static_cast<std::size_t>(f1)], table[static_cast<std::size_t>(f2)])) ++opposite;
    }
    r.ns.push_back(grid[gi].n);
    r.fractions.push_back(static_cast<double>(opposite) / static_cast<double>(n_pairs));
  }
  return r;
}

TrackingReport sublinear_tracking(const WalkConfig& cfg) {
  require_building(cfg, "sublinear_tracking");
  cfg.validate();
  StepMeasure<Mat3> mu = building_measure_for(cfg);
  LatticeClass start = building_start_for(cfg);
  auto grid = checkpoint_schedule(cfg.n_steps, cfg.checkpoint_base);

  struct TrialData {
    std::vector<VectorDistance> vds;
    std::vector<Mat3> positions;
    int final_flag = -1;
  };
  std::vector<TrialData> data(static_cast<std::size_t>(cfg.n_trials));
  int workers = resolve_workers(cfg.workers);
  auto job = [&](std::int64_t t) {
    BuildingWalker w(cfg.q, mu, start);
    w.reset(cfg.seed, t);
    auto& d = data[static_cast<std::size_t>(t)];
    std::size_t gi = 0;
    for (std::int64_t n = 1; n <= cfg.n_steps; ++n) {
      w.step();
      if (gi < grid.size() && grid[gi] == n) {
        d.vds.push_back(w.vd());
        d.positions.push_back(w.position_matrix());
        if (n == cfg.n_steps) {
          auto g = w.germ_at_base();
          if (g && g->is_full()) d.final_flag = flag_id_fast(g->flag);
        }
        ++gi;
      }
    }
  };
  parallel_trials(cfg.n_trials, workers, job);

  TrackingReport r;
  std::vector<double> as, bs;
  for (const auto& d : data) {
    as.push_back(static_cast<double>(d.vds.back().a) / static_cast<double>(cfg.n_steps));
    bs.push_back(static_cast<double>(d.vds.back().b) / static_cast<double>(cfg.n_steps));
  }
  r.lambda_a = mean(as);
  r.lambda_b = mean(bs);
  if (r.lambda_a < 1e-9 || r.lambda_b < 1e-9) {
    r.degenerate_direction = true;
    return r;
  }
  const auto& table = flag_table(cfg.q);
  std::vector<std::vector<double>> errors(grid.size());
  for (const auto& d : data) {
    if (d.final_flag < 0) continue;
    const Flag& chamber = table[static_cast<std::size_t>(d.final_flag)];
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
      std::int64_t n = grid[gi];
      VectorDistance target{static_cast<std::int64_t>(std::floor(r.lambda_a * static_cast<double>(n))),
                            static_cast<std::int64_t>(std::floor(r.lambda_b * static_cast<double>(n)))};
      LatticeClass gamma_n = sector_point(start, chamber, target);
      LatticeClass pos = LatticeClass::from_matrix(d.positions[gi]);
      errors[gi].push_back(cat0_distance(gamma_n, pos) / static_cast<double>(n));
    }
    ++r.trials_used;
  }
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    r.ns.push_back(grid[gi]);
    r.median_errors.push_back(errors[gi].empty() ? std::nan("") : median(errors[gi]));
  }
  return r;
}

FirstHyperbolicReport first_hyperbolic_times(const WalkConfig& cfg, bool scan_ball) {
  require_building(cfg, "first_hyperbolic_times");
  cfg.validate();
  StepMeasure<Mat3> mu = building_measure_for(cfg);
  LatticeClass start = building_start_for(cfg);
  auto grid = checkpoint_schedule(cfg.n_steps, cfg.checkpoint_base);
  std::vector<LatticeClass> ball;
  if (scan_ball) {
    ball = ball_radius2(start);
    // basepoint first: the O(1) certificate at the walk base catches most trials
    std::stable_partition(ball.begin(), ball.end(), [&](const LatticeClass& v) { return v == start; });
  }

  FirstHyperbolicReport r;
  r.horizon = cfg.n_steps;
  r.times.assign(static_cast<std::size_t>(cfg.n_trials), -1);
  int workers = resolve_workers(cfg.workers);
  auto job = [&](std::int64_t t) {
    BuildingWalker w(cfg.q, mu, start);
    w.reset(cfg.seed, t);
    std::size_t gi = 0;
    for (std::int64_t n = 1; n <= cfg.n_steps; ++n) {
      w.step();
      if (gi >= grid.size() || grid[gi] != n) continue;
      ++gi;
      if (w.certified_at_base()) {
        r.times[static_cast<std::size_t>(t)] = n;
        return;
      }
      if (scan_ball) {
        Mat3 g = w.element();
        for (const auto& o : ball) {
          if (o == start) continue;
          if (hyperbolic_certificate(g, o)) {
            r.times[static_cast<std::size_t>(t)] = n;
            return;
          }
        }
      }
    }
  };
  parallel_trials(cfg.n_trials, workers, job);
  std::vector<double> finite;
  for (std::int64_t v : r.times) {
    if (v < 0)
      ++r.absent;
    else
      finite.push_back(static_cast<double>(v));
  }
  r.median_time = finite.empty() ? std::nan("") : median(finite);
  return r;
}

}  // namespace cw
