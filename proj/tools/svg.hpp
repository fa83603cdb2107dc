#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toricdp::cli {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

/// Fan diagram (rays as labelled arrows u_i) and, when vertices are given,
/// the divisor polytope with labelled vertices m_i in a second panel. Output
/// depends only on the inputs.
std::string render_svg(const std::vector<Point>& rays,
                       const std::vector<Point>& vertices);

}  // namespace toricdp::cli
