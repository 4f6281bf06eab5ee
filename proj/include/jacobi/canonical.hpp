#pragma once

#include <string>

#include "jacobi/diagram.hpp"

namespace jacobi {

using CanonicalKey = std::string;

// Result of canonical labeling.  `key` identifies the isomorphism class of the
// diagram (colors, orientation class, circle count included); `representative`
// is the rebuilt canonical diagram and `sign` relates the input to it:
//
//     input = sign * representative
//
// `zero` is set when the diagram admits a color-preserving automorphism whose
// induced orientation change is odd; such a diagram equals its own negative
// and is dropped from sums.  The key and representative are still filled in
// for error reporting, with sign = 0.
struct Canonical {
    bool zero = false;
    int sign = 1;
    CanonicalKey key;
    Diagram representative;
};

Canonical canonicalize(const Diagram& d);

} // namespace jacobi
