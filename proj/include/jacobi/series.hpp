#pragma once

#include <optional>
#include <vector>

#include "jacobi/diagram_sum.hpp"
#include "jacobi/linalg.hpp"

namespace jacobi {

// exp(s) = sum of s^k / k!, expanded under the given truncation.  Every term
// of the exponent must have positive degree, and the truncation must make the
// expansion finite: either a degree bound, or a leg bound together with the
// guarantee that every exponent term carries at least one leg.
DiagramSum exp_truncate(const DiagramSum& exponent, const Truncation& truncation);

// exp(sign/2 * sum_{x,y} lambda_{xy} strut(x,y)), truncated.  With `dualize`
// set, struts are colored with the duals of the form's colors.  The 1/2 in
// the exponent and the symmetry of the form make the coefficient of an
// off-diagonal strut exactly lambda_{xy} and of a diagonal strut lambda_{xx}/2.
DiagramSum gaussian_part(const QuadraticForm& lambda, int sign, bool dualize,
                         const Truncation& truncation);

// A series split as exp(struts) * (strut-free part).  The strut-free factor
// keeps its truncation; the quadratic form records the strut coefficients
// with the diagonal convention of gaussian_part.
struct PerturbedGaussian {
    QuadraticForm lambda;
    DiagramSum perturbation;

    // Validates that every perturbation term is strut-free and uses only the
    // form's colors on its legs.
    static PerturbedGaussian build(QuadraticForm lambda, DiagramSum perturbation);
};

// One strut in an exponent, with its coefficient.
struct StrutTerm {
    Color a;
    Color b;
    Rational coeff;
};

// Integrand presented as exp(struts + perturbation exponent).
struct ExpIntegrand {
    std::vector<StrutTerm> struts;
    DiagramSum perturbation_exponent;
    std::optional<Truncation> truncation;
};

// Reads the quadratic form off the strut terms and expands the strut-free
// exponential.  The integrand's truncation governs the expansion; it may be
// omitted only when the perturbation exponent is empty.
PerturbedGaussian split_gaussian(const ExpIntegrand& integrand);

// Both sides of completing the square for an invertible form: the coupled
// exponential exp(1/2 lambda xy + sum_x x xbar + 1/2 lambda^{-1} xbar ybar)
// and the translate of exp(1/2 lambda xy) under x -> x + sum_y (lambda^{-1})_{xy} ybar,
// both cut to at most legs_bound legs per color.  The two must agree.
struct SquareCompletion {
    DiagramSum coupled;
    DiagramSum translated;
};
SquareCompletion complete_square(const QuadraticForm& lambda, int legs_bound);

} // namespace jacobi
