#include "wq/tseries.hpp"

#include <stdexcept>

#include "wq/errors.hpp"

namespace wq {

SeriesExpr build_t1(const AlgebraPreset& preset) {
  SeriesExpr t1;
  for (const auto& l : preset.lambdas) t1.add(l, 1);
  return t1;
}

SeriesExpr build_t2(const AlgebraPreset& preset) {
  if (!preset.t2_definition)
    throw NoExplicitDefinition(preset.id.name() + ": T2 has no explicit definition; extract it from {T1, T1}");
  return *preset.t2_definition;
}

SeriesExpr build_t5_e6(const AlgebraPreset& e6) {
  if (e6.id.kind != AlgebraKind::E6) throw std::invalid_argument("build_t5_e6 requires the E6 preset");
  return shift_arg(dual_transform(build_t1(e6)), -12);
}

}  // namespace wq
