#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "building.hpp"
#include "measure.hpp"
#include "walls.hpp"

namespace cw {

enum class BackendKind { kLine, kGrid2, kTreeFlats, kBuilding };

BackendKind parse_backend(const std::string& name);
std::string backend_name(BackendKind kind);

struct WalkConfig {
  BackendKind backend = BackendKind::kTreeFlats;
  int q = 2;                       // building field order
  std::int64_t l = 0;              // chain-metric separation level
  std::string preset;              // step-measure preset ("" = backend default)
  std::int64_t n_steps = 100;
  std::int64_t n_trials = 10;
  std::uint64_t seed = 0;
  std::int64_t checkpoint_base = 25;
  bool certify = false;            // evaluate the backend certificate at checkpoints
  std::int64_t cert_power_bound = 4;
  bool record_positions = false;   // keep serialized positions at checkpoints
  std::string start;               // basepoint ("" = identity vertex)
  int workers = 0;                 // 0 = CHAINWALK_WORKERS or 1

  void validate() const;
  std::string default_preset() const;
};

struct Checkpoint {
  std::int64_t n = 0;
  double displacement = 0.0;
  std::int64_t a = -1, b = -1;  // building Weyl vector, -1 elsewhere
  int flag_id = -1;             // germ at the standard vertex, -1 if none
  int certified = -1;           // 1/0 verdict, -1 when not evaluated
  std::string position;         // only when record_positions
};

struct WalkTrace {
  std::uint64_t seed = 0;
  std::int64_t trial_id = 0;
  std::vector<Checkpoint> checkpoints;

  const Checkpoint& at_n(std::int64_t n) const;
  const Checkpoint& last() const { return checkpoints.back(); }
};

// Geometric grid base, 2*base, 4*base, ... capped by and always including
// n_steps.
std::vector<std::int64_t> checkpoint_schedule(std::int64_t n_steps, std::int64_t base);

int resolve_workers(int requested);

// Runs job(t) for t in [0, n_trials) on a small worker pool. Results must be
// written to per-trial slots, so aggregation order never depends on the
// worker count.
template <typename Job>
void parallel_trials(std::int64_t n_trials, int workers, Job job) {
  if (workers <= 1) {
    for (std::int64_t t = 0; t < n_trials; ++t) job(t);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::int64_t t = next.fetch_add(1);
        if (t >= n_trials) return;
        job(t);
      }
    });
  for (auto& th : pool) th.join();
}

std::vector<WalkTrace> run_walks(const WalkConfig& cfg);

// Incremental walker over the building backend. Maintains the transition
// M_n = A0^-1 Z_n A0 together with its adjugate, each step being a single
// elementary column/row operation, so Weyl distances, germs and the
// hyperbolicity certificate at the walk basepoint all read off in O(1).
class BuildingWalker {
 public:
  BuildingWalker(int q, StepMeasure<Mat3> mu, LatticeClass base);

  void reset(std::uint64_t seed, std::int64_t trial);
  void step();
  // Increment index that step() would consume at the given 1-based step.
  std::size_t draw_index(std::int64_t step) const { return mu_.sample_index(rng_, static_cast<std::uint64_t>(step)); }
  void apply_index(std::size_t support_index);
  std::int64_t n() const { return n_; }

  const Mat3& m() const { return m_; }
  const Mat3& m_adj() const { return adj_; }
  const LatticeClass& base() const { return base_; }
  const StepMeasure<Mat3>& mu() const { return mu_; }

  VectorDistance vd() const { return vector_distance_fast(m_, adj_, 0); }
  double displacement() const;
  // Germ of [base, Z_n base] at the walk basepoint (nullopt on a fixed point).
  std::optional<GermSimplex> germ_at_base() const;
  // Certificate of Z_n at the walk basepoint: both germs full and opposite.
  bool certified_at_base() const;
  // Z_n as a Laurent matrix, and the position Z_n A0.
  Mat3 element() const;
  Mat3 position_matrix() const;
  // Germ at the standard vertex of the current position Z_n A0.
  std::optional<GermSimplex> germ_at_standard() const;
  // Germ at the standard vertex of g . (Z_n A0) for a support generator.
  std::optional<GermSimplex> pushed_germ(std::size_t support_index) const;

  bool base_is_identity() const { return base_identity_; }

 private:
  struct ElementaryOp {
    int i, j;
    fq_t c;
    std::int64_t e;
  };

  int q_;
  StepMeasure<Mat3> mu_;
  LatticeClass base_;
  bool base_identity_;
  std::vector<ElementaryOp> ops_;  // conjugated increments, elementary form
  Mat3 base_adj_;                  // adj of the base canonical form
  CounterRng rng_;
  std::int64_t n_ = 0;
  Mat3 m_, adj_;
};

// Inverse-walk companion: maintains W_n = Z_n^-1 and its adjugate for walks
// started at the identity vertex (used by Birkhoff cylinder averages).
class InverseBuildingWalker {
 public:
  InverseBuildingWalker(int q, StepMeasure<Mat3> mu);
  void reset(std::uint64_t seed, std::int64_t trial);
  void step();
  std::int64_t n() const { return n_; }
  // Germ of [o, Z_n^-1 o] at the standard vertex o.
  std::optional<GermSimplex> germ_at_standard() const;

 private:
  struct ElementaryOp {
    int i, j;
    fq_t c;
    std::int64_t e;
  };
  int q_;
  StepMeasure<Mat3> mu_;
  std::vector<ElementaryOp> ops_;
  CounterRng rng_;
  std::int64_t n_ = 0;
  Mat3 w_, adj_;
};

// Simple walker for group-word backends; the element Z_n accumulates by
// right multiplication and the walk position is Z_n . start.
class TreeWalker {
 public:
  TreeWalker(StepMeasure<GroupWord> mu, GroupWord start);
  void reset(std::uint64_t seed, std::int64_t trial);
  void step();
  std::int64_t n() const { return n_; }
  const GroupWord& element() const { return z_; }          // Z_n
  GroupWord position() const { return z_ * start_; }
  const GroupWord& start() const { return start_; }
  double displacement() const;                             // d(Z_n start, start)

 private:
  StepMeasure<GroupWord> mu_;
  GroupWord start_, z_;
  CounterRng rng_;
  std::int64_t n_ = 0;
};

}  // namespace cw
