#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

// Malformed or inconsistent input: bad JSON, invalid diagram data, bad arguments.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configurable size bound would be exceeded (vertex budget, oracle bounds, ...).
class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The quadratic form of a perturbed Gaussian is degenerate; the integral that
// needed its inverse is undefined.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Process-wide tunables.  Each returns a mutable reference so callers (the CLI,
// tests) can adjust them; the defaults are chosen so that every documented
// operation stays exact and fast.
struct Limits {
    // Largest vertex count (legs + trivalent) a single diagram may have before
    // canonicalization refuses to run.  Overridable via JACOBI_VERTEX_BUDGET.
    static int& vertex_budget();
    // Largest matrix size accepted by the permutation-sum determinant oracle.
    static int& leibniz_bound();
    // Largest joint basis accepted by reduce_mod_span.
    static int& span_basis_bound();
    // Cap on n*m for the diagrammatic determinant (permutations of n*m points).
    static int& det_diagram_bound();
    // Worker threads used when pairing sums; 1 means serial.  The result is
    // identical for every value by construction (terms are merged canonically).
    static int& pairing_threads();
};

} // namespace jacobi
