#pragma once

#include <array>

namespace aip::filters {

// Log-spaced digital linear filter tables.  A transform
//   f(r) = int_0^inf K(l) B(l r) dl,  B in {J0, J1, sin, cos}
// is evaluated as (1/r) * sum_i K(base[i]/r) * weight[i].
// Tables are generated offline by tools/filter_design/design_filters.py
// and frozen in filter_tables.cpp.

extern const double kHankelSpacing;   // ln-spacing of kHankelBase
extern const double kFourierSpacing;  // ln-spacing of kFourierBase

extern const std::array<double, 201> kHankelBase;
extern const std::array<double, 201> kHankelJ0;
extern const std::array<double, 201> kHankelJ1;

extern const std::array<double, 181> kFourierBase;
extern const std::array<double, 181> kFourierSin;
extern const std::array<double, 181> kFourierCos;

}  // namespace aip::filters
