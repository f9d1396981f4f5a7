#pragma once

#include <string>

#include "majority/lattice.hpp"

namespace test_support {

// Grid text with `pad` rows/columns of 0s added on every side.
inline majority::Configuration padded(const std::string& rows, int pad = 3) {
  const majority::Configuration raw = majority::read_grid_text(rows);
  const auto& g = raw.geometry();
  majority::Configuration out(majority::Geometry::window(2, {g.origin().x - pad, g.origin().y - pad},
                                                         g.width() + 2 * pad, g.height() + 2 * pad));
  for (std::size_t i = 0; i < g.size(); ++i)
    if (raw.at_index(i)) out.set(g.coord(i), 1);
  return out;
}

inline majority::Configuration rectangle(std::int64_t w, std::int64_t h, int pad = 3) {
  majority::Configuration c(majority::Geometry::window(2, {0, 0}, w + 2 * pad, h + 2 * pad));
  return majority::set_block(c, {{pad, pad}, w, h}, 1);
}

}  // namespace test_support
