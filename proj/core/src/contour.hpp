#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lejalab/error.hpp"
#include "lejalab/geometry.hpp"

namespace lejalab::detail {

/// Marching squares for {f = level} on a cells x cells grid over `box`.
/// Crossings are bracketed on cell edges, placed by linear interpolation
/// and polished by regula falsi on f. Saddle cells are resolved with the
/// mean of the corner values. Returns the closed loop of largest enclosed
/// area, counter-clockwise, starting at its lowest edge id.
///
/// Throws NumericalFailure if a contour reaches the box boundary or no
/// closed loop exists.
std::vector<Complex> extract_level_loop(const std::function<double(Complex)>& f, const Box& box,
                                        std::size_t cells, double level);

double signed_area(const std::vector<Complex>& loop);

}  // namespace lejalab::detail
