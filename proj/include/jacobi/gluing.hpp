#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "jacobi/diagram_sum.hpp"

namespace jacobi {

// Calls emit once per perfect matching of the items, (n-1)!! in total.  The
// first item always pairs leftward, so the enumeration order is canonical.
void for_each_perfect_matching(
    const std::vector<int>& items,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& emit);

// Fuses legs of a single diagram pairwise: each listed pair of legs is deleted
// and the two edges that ended on them are concatenated.  A chain of fused
// legs splices into one long edge; a chain that closes on itself becomes a
// circle.  Colors are not consulted here; callers enforce their own matching
// rules.  Pairs refer to leg indices of the input diagram.
Diagram fuse_legs(const Diagram& d, const std::vector<std::pair<int, int>>& pairs);

// Same, but also reports where the tracked (surviving) legs ended up: entry i
// of the result vector is the new index of input leg tracked[i].
struct FusedDiagram {
    Diagram diagram;
    std::vector<int> tracked;
};
FusedDiagram fuse_legs_tracked(const Diagram& d, const std::vector<std::pair<int, int>>& pairs,
                               const std::vector<int>& tracked);

// Glues selected legs of `left` to selected legs of `right`: assignment pairs
// are (left leg index, right leg index), the left leg must carry the dual of
// the right leg's color.  Legs not mentioned survive into the result.
Diagram glue_assignment(const Diagram& left, const Diagram& right,
                        const std::vector<std::pair<int, int>>& assignment);

// Bilinear pairing over the colors X: for every term pair, glues the dual-x
// legs of the left diagram to the x legs of the right diagram in all possible
// color-wise bijections, each with coefficient one.  Terms whose leg counts
// disagree for some color contribute nothing.  Legs of colors outside X are
// spectators.  Honors Limits::pairing_threads(); the result is independent of
// the thread count because terms are merged by canonical class.
DiagramSum pairing(const DiagramSum& left, const DiagramSum& right,
                   const std::vector<Color>& X);

// One substitution source -> source + sum of weighted targets, applied to legs.
struct TranslationRule {
    Color source;
    std::vector<std::pair<Color, Rational>> additions;
};

// Applies the rules to every leg independently and expands the resulting
// product, re-canonicalizing as it goes.  Target colors must be fresh: not a
// source of any rule and not already present in the sum.
DiagramSum translate(const DiagramSum& s, const std::vector<TranslationRule>& rules);

} // namespace jacobi
