#pragma once

#include <string>

#include "jacobi/diagram_sum.hpp"

namespace jacobi {

// Graphviz rendering: legs are labeled boxes, trivalent vertices are dots
// whose label lists their half-edges in cyclic (orientation) order, circles
// are loose loops.
std::string to_dot(const Diagram& d, const std::string& name = "diagram");

// One subgraph per term, labeled with its coefficient.
std::string to_dot(const DiagramSum& s);

} // namespace jacobi
