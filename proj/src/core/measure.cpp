#include "measure.hpp"

namespace cw {

StepMeasure<std::int64_t> measure_line_pm1() {
  StepMeasure<std::int64_t> m;
  m.support = {1, -1};
  m.weights = {1, 1};
  m.symmetric = true;
  return m;
}

StepMeasure<std::array<std::int64_t, 2>> measure_grid2_uniform() {
  StepMeasure<std::array<std::int64_t, 2>> m;
  m.support = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  m.weights = {1, 1, 1, 1};
  m.symmetric = true;
  return m;
}

StepMeasure<GroupWord> measure_tree_flats_full() {
  StepMeasure<GroupWord> m;
  m.support = {GroupWord::a(1, 0), GroupWord::a(-1, 0), GroupWord::a(0, 1), GroupWord::a(0, -1), GroupWord::b(1), GroupWord::b(-1)};
  m.weights.assign(m.support.size(), 1);
  m.symmetric = true;
  return m;
}

StepMeasure<GroupWord> measure_tree_flats_flat_only() {
  StepMeasure<GroupWord> m;
  m.support = {GroupWord::a(1, 0), GroupWord::a(-1, 0), GroupWord::a(0, 1), GroupWord::a(0, -1)};
  m.weights.assign(m.support.size(), 1);
  m.symmetric = true;
  return m;
}

StepMeasure<GroupWord> measure_tree_flats_bline() {
  StepMeasure<GroupWord> m;
  m.support = {GroupWord::b(1), GroupWord::b(-1)};
  m.weights = {1, 1};
  m.symmetric = true;
  return m;
}

StepMeasure<Mat3> measure_building_elementary(int q) {
  require_prime(q);
  StepMeasure<Mat3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (std::int64_t e : {std::int64_t{1}, std::int64_t{-1}}) {
        m.support.push_back(Mat3::elementary(q, i, j, LaurentPoly::monomial(q, 1, e)));
        if (q > 2) m.support.push_back(Mat3::elementary(q, i, j, LaurentPoly::monomial(q, fq_neg(1, q), e)));
      }
    }
  m.weights.assign(m.support.size(), 1);
  m.symmetric = true;  // over F_2 each generator is an involution; for q > 2 the inverses are included
  return m;
}

}  // namespace cw
