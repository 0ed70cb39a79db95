#include "walk.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace cw {

BackendKind parse_backend(const std::string& name) {
  if (name == "line") return BackendKind::kLine;
  if (name == "grid2") return BackendKind::kGrid2;
  if (name == "tree_flats") return BackendKind::kTreeFlats;
  if (name == "building_sl3" || name == "building") return BackendKind::kBuilding;
  throw std::invalid_argument("unknown backend: " + name);
}

std::string backend_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::kLine: return "line";
    case BackendKind::kGrid2: return "grid2";
    case BackendKind::kTreeFlats: return "tree_flats";
    case BackendKind::kBuilding: return "building_sl3";
  }
  return "?";
}

void WalkConfig::validate() const {
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
  if (checkpoint_base < 1) throw std::invalid_argument("checkpoint_base must be >= 1");
  if (backend == BackendKind::kBuilding) require_prime(q);
  if (l < 0) throw std::invalid_argument("L must be >= 0");
  if (cert_power_bound < 2) throw std::invalid_argument("certificate power bound must be >= 2");
}

std::string WalkConfig::default_preset() const {
  switch (backend) {
    case BackendKind::kLine: return "pm1";
    case BackendKind::kGrid2: return "uniform";
    case BackendKind::kTreeFlats: return "full";
    case BackendKind::kBuilding: return "elementary";
  }
  return "";
}

const Checkpoint& WalkTrace::at_n(std::int64_t n) const {
  for (const auto& c : checkpoints)
    if (c.n == n) return c;
  throw std::out_of_range("no checkpoint at n=" + std::to_string(n));
}

std::vector<std::int64_t> checkpoint_schedule(std::int64_t n_steps, std::int64_t base) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = base; n < n_steps; n *= 2) out.push_back(n);
  out.push_back(n_steps);
  return out;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CHAINWALK_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// ---------------------------------------------------------------------------
// TreeWalker

TreeWalker::TreeWalker(StepMeasure<GroupWord> mu, GroupWord start) : mu_(std::move(mu)), start_(std::move(start)) {
  mu_.validate();
}

void TreeWalker::reset(std::uint64_t seed, std::int64_t trial) {
  rng_ = CounterRng{seed, static_cast<std::uint64_t>(trial)};
  z_ = GroupWord::identity();
  n_ = 0;
}

void TreeWalker::step() {
  ++n_;
  const GroupWord& g = mu_.support[mu_.sample_index(rng_, static_cast<std::uint64_t>(n_))];
  for (const auto& s : g.syllables()) z_.append(s);
}

double TreeWalker::displacement() const {
  if (start_.is_identity()) return static_cast<double>(z_.length());
  return static_cast<double>(word_distance(start_, z_ * start_));
}

// ---------------------------------------------------------------------------
// BuildingWalker

namespace {

// Decomposes m as I + c t^e E_ij if it has that shape.
std::optional<std::array<std::int64_t, 4>> as_elementary(const Mat3& m) {
  int oi = -1, oj = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const LaurentPoly& p = m.at(i, j);
      if (i == j) {
        if (p != LaurentPoly::one(m.q())) return std::nullopt;
      } else if (!p.is_zero()) {
        if (oi >= 0) return std::nullopt;
        if (p.support_size() != 1) return std::nullopt;
        oi = i;
        oj = j;
      }
    }
  if (oi < 0) return std::nullopt;
  const LaurentPoly& p = m.at(oi, oj);
  return std::array<std::int64_t, 4>{oi, oj, static_cast<std::int64_t>(p.low()), p.val()};
}

}  // namespace

BuildingWalker::BuildingWalker(int q, StepMeasure<Mat3> mu, LatticeClass base)
    : q_(q), mu_(std::move(mu)), base_(std::move(base)) {
  mu_.validate();
  base_identity_ = base_.form() == Mat3::identity(q_);
  base_adj_ = base_.form().adjugate();
  Mat3 base_inv = base_.inverse_form();
  for (const auto& g : mu_.support) {
    if (g.det() != LaurentPoly::one(q_)) throw std::invalid_argument("building step measure: element is not in SL3");
    Mat3 conj = base_inv * g * base_.form();
    auto el = as_elementary(conj);
    if (!el) throw std::invalid_argument("building walker: conjugated increment is not elementary; use a diagonal basepoint");
    ops_.push_back(ElementaryOp{static_cast<int>((*el)[0]), static_cast<int>((*el)[1]), static_cast<fq_t>((*el)[2]), (*el)[3]});
  }
  m_ = Mat3::identity(q_);
  adj_ = Mat3::identity(q_);
}

void BuildingWalker::reset(std::uint64_t seed, std::int64_t trial) {
  rng_ = CounterRng{seed, static_cast<std::uint64_t>(trial)};
  m_ = Mat3::identity(q_);
  adj_ = Mat3::identity(q_);
  n_ = 0;
}

void BuildingWalker::step() { apply_index(draw_index(n_ + 1)); }

void BuildingWalker::apply_index(std::size_t support_index) {
  ++n_;
  const ElementaryOp& op = ops_[support_index];
  m_.col_addmul(op.j, op.i, op.c, op.e);                  // M <- M (I + c t^e E_ij)
  adj_.row_addmul(op.i, op.j, fq_neg(op.c, q_), op.e);    // adj <- (I - c t^e E_ij) adj
}

double BuildingWalker::displacement() const {
  return std::sqrt(static_cast<double>(cat0_distance2(vd())));
}

std::optional<GermSimplex> BuildingWalker::germ_at_base() const { return try_germ_of_transition(m_, adj_); }

bool BuildingWalker::certified_at_base() const {
  VectorDistance v = vd();
  if (v.a <= 0 || v.b <= 0) return false;  // fixed point or singular direction
  // Both segments are regular, so both germs are full chambers; the backward
  // transition is M^-1 = adj(M) whose adjugate is M again (det = 1).
  GermSimplex toward = germ_of_transition(m_, adj_);
  GermSimplex backward = germ_of_transition(adj_, m_);
  return flags_opposite(toward.flag, backward.flag);
}

Mat3 BuildingWalker::element() const {
  if (base_identity_) return m_;
  // Z_n = A0 M_n A0^-1
  return (base_.form() * m_ * base_adj_).shifted(-base_.det_val());
}

Mat3 BuildingWalker::position_matrix() const {
  if (base_identity_) return m_;
  return base_.form() * m_;
}

std::optional<GermSimplex> BuildingWalker::germ_at_standard() const {
  if (base_identity_) return try_germ_of_transition(m_, adj_);
  Mat3 y = base_.form() * m_;
  Mat3 yadj = adj_ * base_adj_;
  return try_germ_of_transition(y, yadj);
}

std::optional<GermSimplex> BuildingWalker::pushed_germ(std::size_t support_index) const {
  const Mat3& g = mu_.support[support_index];
  Mat3 y = g * position_matrix();
  Mat3 yadj = (base_identity_ ? adj_ : Mat3(adj_ * base_adj_)) * g.adjugate();
  return try_germ_of_transition(y, yadj);
}

// ---------------------------------------------------------------------------
// InverseBuildingWalker

InverseBuildingWalker::InverseBuildingWalker(int q, StepMeasure<Mat3> mu) : q_(q), mu_(std::move(mu)) {
  mu_.validate();
  for (const auto& g : mu_.support) {
    auto el = as_elementary(g);
    if (!el) throw std::invalid_argument("inverse building walker needs elementary increments");
    ops_.push_back(ElementaryOp{static_cast<int>((*el)[0]), static_cast<int>((*el)[1]), static_cast<fq_t>((*el)[2]), (*el)[3]});
  }
  w_ = Mat3::identity(q_);
  adj_ = Mat3::identity(q_);
}

void InverseBuildingWalker::reset(std::uint64_t seed, std::int64_t trial) {
  rng_ = CounterRng{seed, static_cast<std::uint64_t>(trial)};
  w_ = Mat3::identity(q_);
  adj_ = Mat3::identity(q_);
  n_ = 0;
}

void InverseBuildingWalker::step() {
  ++n_;
  const ElementaryOp& op = ops_[mu_.sample_index(rng_, static_cast<std::uint64_t>(n_))];
  // W <- g^-1 W = (I - c t^e E_ij) W ;  adj(W) <- adj(W) g
  w_.row_addmul(op.i, op.j, fq_neg(op.c, q_), op.e);
  adj_.col_addmul(op.j, op.i, op.c, op.e);
}

std::optional<GermSimplex> InverseBuildingWalker::germ_at_standard() const { return try_germ_of_transition(w_, adj_); }

// ---------------------------------------------------------------------------
// run_walks

namespace {

LatticeClass resolve_building_start(const WalkConfig& cfg) {
  if (cfg.start.empty()) return LatticeClass::standard(cfg.q);
  return LatticeClass::from_matrix(parse_group_element(cfg.start, cfg.q));
}

StepMeasure<GroupWord> resolve_tree_measure(const std::string& preset) {
  if (preset == "full") return measure_tree_flats_full();
  if (preset == "flat_only") return measure_tree_flats_flat_only();
  if (preset == "bline") return measure_tree_flats_bline();
  throw std::invalid_argument("unknown tree_flats preset: " + preset);
}

}  // namespace

std::vector<WalkTrace> run_walks(const WalkConfig& cfg) {
  cfg.validate();
  std::string preset = cfg.preset.empty() ? cfg.default_preset() : cfg.preset;
  auto grid = checkpoint_schedule(cfg.n_steps, cfg.checkpoint_base);
  std::vector<WalkTrace> traces(static_cast<std::size_t>(cfg.n_trials));
  int workers = resolve_workers(cfg.workers);

  auto init_trace = [&](std::int64_t t) -> WalkTrace& {
    WalkTrace& tr = traces[static_cast<std::size_t>(t)];
    tr.seed = cfg.seed;
    tr.trial_id = t;
    return tr;
  };

  switch (cfg.backend) {
    case BackendKind::kLine: {
      StepMeasure<std::int64_t> mu = measure_line_pm1();
      if (preset != "pm1") throw std::invalid_argument("unknown line preset: " + preset);
      parallel_trials(cfg.n_trials, workers, [&](std::int64_t t) {
        WalkTrace& tr = init_trace(t);
        CounterRng rng{cfg.seed, static_cast<std::uint64_t>(t)};
        std::int64_t z = 0;
        std::size_t gi = 0;
        for (std::int64_t n = 1; n <= cfg.n_steps; ++n) {
          z += mu.support[mu.sample_index(rng, static_cast<std::uint64_t>(n))];
          if (gi < grid.size() && grid[gi] == n) {
            Checkpoint c;
            c.n = n;
            c.displacement = static_cast<double>(std::llabs(z));
            if (cfg.record_positions) c.position = std::to_string(z);
            tr.checkpoints.push_back(std::move(c));
            ++gi;
          }
        }
      });
      break;
    }
    case BackendKind::kGrid2: {
      StepMeasure<std::array<std::int64_t, 2>> mu = measure_grid2_uniform();
      if (preset != "uniform") throw std::invalid_argument("unknown grid2 preset: " + preset);
      parallel_trials(cfg.n_trials, workers, [&](std::int64_t t) {
        WalkTrace& tr = init_trace(t);
        CounterRng rng{cfg.seed, static_cast<std::uint64_t>(t)};
        std::array<std::int64_t, 2> z{0, 0};
        std::size_t gi = 0;
        for (std::int64_t n = 1; n <= cfg.n_steps; ++n) {
          auto s = mu.support[mu.sample_index(rng, static_cast<std::uint64_t>(n))];
          z[0] += s[0];
          z[1] += s[1];
          if (gi < grid.size() && grid[gi] == n) {
            Checkpoint c;
            c.n = n;
            c.displacement = static_cast<double>(std::llabs(z[0]) + std::llabs(z[1]));
            if (cfg.record_positions) c.position = std::to_string(z[0]) + "," + std::to_string(z[1]);
            tr.checkpoints.push_back(std::move(c));
            ++gi;
          }
        }
      });
      break;
    }
    case BackendKind::kTreeFlats: {
      StepMeasure<GroupWord> mu = resolve_tree_measure(preset);
      GroupWord start = cfg.start.empty() ? GroupWord::identity() : GroupWord::parse(cfg.start);
      parallel_trials(cfg.n_trials, workers, [&](std::int64_t t) {
        WalkTrace& tr = init_trace(t);
        TreeWalker w(mu, start);
        w.reset(cfg.seed, t);
        std::size_t gi = 0;
        for (std::int64_t n = 1; n <= cfg.n_steps; ++n) {
          w.step();
          if (gi < grid.size() && grid[gi] == n) {
            Checkpoint c;
            c.n = n;
            c.displacement = w.displacement();
            if (cfg.certify) {
              const GroupWord& z = w.element();
              c.certified = (!z.is_identity() && contraction_certificate(z, cfg.l, cfg.cert_power_bound)) ? 1 : 0;
            }
            if (cfg.record_positions) c.position = w.position().str();
            tr.checkpoints.push_back(std::move(c));
            ++gi;
          }
        }
      });
      break;
    }
    case BackendKind::kBuilding: {
      if (preset != "elementary") throw std::invalid_argument("unknown building preset: " + preset);
      StepMeasure<Mat3> mu = measure_building_elementary(cfg.q);
      LatticeClass start = resolve_building_start(cfg);
      parallel_trials(cfg.n_trials, workers, [&](std::int64_t t) {
        WalkTrace& tr = init_trace(t);
        BuildingWalker w(cfg.q, mu, start);
        w.reset(cfg.seed, t);
        std::size_t gi = 0;
        for (std::int64_t n = 1; n <= cfg.n_steps; ++n) {
          w.step();
          if (gi < grid.size() && grid[gi] == n) {
            Checkpoint c;
            c.n = n;
            VectorDistance v = w.vd();
            c.a = v.a;
            c.b = v.b;
            c.displacement = std::sqrt(static_cast<double>(cat0_distance2(v)));
            auto g = w.germ_at_standard();
            c.flag_id = (g && g->is_full()) ? flag_id_fast(g->flag) : -1;
            if (cfg.certify) c.certified = w.certified_at_base() ? 1 : 0;
            if (cfg.record_positions) c.position = w.position_matrix().str();
            tr.checkpoints.push_back(std::move(c));
            ++gi;
          }
        }
      });
      break;
    }
  }
  return traces;
}

}  // namespace cw
