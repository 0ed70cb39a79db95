#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix3.hpp"
#include "rng.hpp"
#include "words.hpp"

namespace cw {

// Step distribution of the walk: finitely supported, weights are positive
// integers (exact rational probabilities weight/total). Presets document that
// their support generates the intended group as a semigroup.
template <typename G>
struct StepMeasure {
  std::vector<G> support;
  std::vector<std::uint64_t> weights;
  bool symmetric = false;

  std::uint64_t total() const { return std::accumulate(weights.begin(), weights.end(), std::uint64_t{0}); }

  void validate() const {
    if (support.empty()) throw std::invalid_argument("step measure: empty support");
    if (support.size() != weights.size()) throw std::invalid_argument("step measure: support/weight size mismatch");
    for (auto w : weights)
      if (w == 0) throw std::invalid_argument("step measure: zero weight");
  }

  // Deterministic draw for (seed, trial, step).
  std::size_t sample_index(const CounterRng& rng, std::uint64_t step) const {
    std::uint64_t r = rng.below(step, total());
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return i;
    }
    return weights.size() - 1;
  }

  // Checks closure of the support under inversion with matching weights.
  void verify_symmetric(const std::function<G(const G&)>& inv, const std::function<bool(const G&, const G&)>& eq) const {
    for (std::size_t i = 0; i < support.size(); ++i) {
      G gi = inv(support[i]);
      bool found = false;
      for (std::size_t j = 0; j < support.size(); ++j)
        if (eq(support[j], gi)) {
          if (weights[i] != weights[j]) throw std::invalid_argument("step measure: asymmetric weights");
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument("step measure: support not closed under inverses");
    }
  }
};

// Uniform steps +1/-1 on the line.
StepMeasure<std::int64_t> measure_line_pm1();
// Uniform nearest-neighbour steps on the grid.
StepMeasure<std::array<std::int64_t, 2>> measure_grid2_uniform();
// Uniform on the six standard generators of Z^2 * Z.
StepMeasure<GroupWord> measure_tree_flats_full();
// Uniform on the four Z^2 generators only (stays in one flat).
StepMeasure<GroupWord> measure_tree_flats_flat_only();
// Uniform +-1 on the Z factor only.
StepMeasure<GroupWord> measure_tree_flats_bline();
// Uniform on the elementary matrices e_ij(t^{+-1}) (and their inverses when
// q > 2); generates SL3(F_q[t, t^-1]).
StepMeasure<Mat3> measure_building_elementary(int q);

}  // namespace cw
