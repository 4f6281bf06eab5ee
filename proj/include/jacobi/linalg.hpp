#pragma once

#include <vector>

#include "jacobi/color.hpp"
#include "jacobi/rational.hpp"

namespace jacobi {

using Matrix = std::vector<std::vector<Rational>>;

// Symmetric quadratic form over an ordered list of distinct colors.
struct QuadraticForm {
    std::vector<Color> colors;
    Matrix entries;

    // Validates shape: square, symmetric, one row per color, colors distinct.
    static QuadraticForm build(std::vector<Color> colors, Matrix entries);

    // Zero form over the given colors.
    static QuadraticForm zero(std::vector<Color> colors);

    int size() const { return static_cast<int>(colors.size()); }
    const Rational& at(int i, int j) const { return entries[i][j]; }
    int index_of(const Color& c) const;
};

QuadraticForm operator-(const QuadraticForm& q);

// Fraction-free elimination determinant.  Works on any square matrix;
// the empty matrix has determinant 1.
Rational det_bareiss(const Matrix& m);
Rational det_bareiss(const QuadraticForm& q);

// Permutation-sum determinant, kept as an independent oracle: sums
// sgn(pi) * prod entries over all permutations, with the sign computed from
// the cycle count of pi.  Refuses matrices larger than Limits::leibniz_bound().
Rational det_leibniz(const Matrix& m);
Rational det_leibniz(const QuadraticForm& q);

// Exact inverse via Gauss-Jordan elimination; throws SingularMatrixError when
// the form is degenerate.
QuadraticForm invert_exact(const QuadraticForm& q);

} // namespace jacobi
