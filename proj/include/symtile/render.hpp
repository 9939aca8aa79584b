#pragma once

#include <string>

#include "symtile/group.hpp"
#include "symtile/transform.hpp"

namespace symtile {

inline constexpr int kMaxGridModulus = 64;

/// n rows of n cells, x1 to the right and x2 upward (row x2 = n-1 printed
/// first, origin bottom-left). Members are drawn as a full block, others as a
/// middle dot. A legend line with n and `tag` follows the grid.
std::string render_grid(const PointSet& points, const std::string& tag = "set");
std::string render_grid(const ZeroSet& zeros);

} // namespace symtile
