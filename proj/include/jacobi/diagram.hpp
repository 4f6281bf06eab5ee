#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "jacobi/color.hpp"
#include "jacobi/rational.hpp"

namespace jacobi {

// A uni-trivalent diagram.  Univalent vertices ("legs") carry a color and own
// one half-edge; trivalent vertices own three half-edges whose stored order,
// read cyclically, is the vertex orientation.  The edges form a perfect
// matching on all half-edges, and vertex-free circles are kept as a counter.
//
// Half-edges are dense indices 0..H-1 internally; build() remaps arbitrary
// distinct ids coming from files.
struct Leg {
    int half_edge;
    Color color;
};

struct TrivalentVertex {
    std::array<int, 3> cyclic;
};

class Diagram {
public:
    Diagram() = default;

    // Validates and normalizes: every half-edge must belong to exactly one leg
    // or vertex slot and to exactly one edge, and circles must be >= 0.
    static Diagram build(std::vector<Leg> legs, std::vector<TrivalentVertex> vertices,
                         std::vector<std::pair<int, int>> edges, int circles);

    static Diagram empty() { return Diagram(); }
    static Diagram circles_only(int n);

    const std::vector<Leg>& legs() const { return legs_; }
    const std::vector<TrivalentVertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int circles() const { return circles_; }
    int half_edge_count() const { return static_cast<int>(2 * edges_.size()); }
    int vertex_count() const { return static_cast<int>(legs_.size() + vertices_.size()); }

    // Half of the vertex count; circles contribute nothing.  Returned doubled
    // so that diagrams with an odd vertex count stay exact.
    int degree_times_two() const { return vertex_count(); }
    Rational degree() const { return Rational(vertex_count(), 2); }

    // Number of legs per color.
    std::map<Color, int> census() const;
    int legs_of_color(const Color& c) const;

    // Index of the edge containing a half-edge, and the matched partner.
    int partner(int half_edge) const;

    // Connected components of the vertex set (edges only; circles excluded).
    // Each component is a list of vertex ids: 0..L-1 are legs, L..L+T-1 are
    // trivalent vertices.
    std::vector<std::vector<int>> components() const;

    // True when no component consists solely of legs and there are no bare
    // circles.  A legs-only component is necessarily a strut (two legs joined
    // by one edge), the shape a perturbation is not allowed to contain.
    bool is_strutless() const;

    friend Diagram disjoint_union(const Diagram& a, const Diagram& b);

private:
    std::vector<Leg> legs_;
    std::vector<TrivalentVertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    int circles_ = 0;
};

// Two legs joined by an edge.
Diagram strut(const Color& a, const Color& b);

// Grading data reported for one diagram.
struct Grade {
    Rational degree;
    std::map<Color, int> census;
    int circles = 0;
};

Grade grade(const Diagram& d);

} // namespace jacobi
