#pragma once

#include <string>
#include <vector>

#include "jacobi/diagram_sum.hpp"
#include "jacobi/linalg.hpp"
#include "jacobi/relations.hpp"
#include "jacobi/series.hpp"

namespace jacobi {

// Replaces every circle by the scalar -2m: a term with c circles loses them
// and its coefficient picks up (-2m)^c.
DiagramSum o_reduce(const DiagramSum& s, int m);

// The two independently implemented routes to the level-m integral.  Direct
// projects each term to exactly 2m legs per integration color and sums over
// all ((2m-1)!!)^|X| ways of matching same-color legs, coefficient one each.
// ViaPairing glues the term against m dual struts per color under the
// bilinear pairing, coefficient 1/(m! 2^m) per color; every matching arises
// from m! 2^m bijections, so the routes agree exactly.  Keeping both live is
// deliberate: they cross-check each other.
enum class NdRoute { Direct, ViaPairing };

DiagramSum nd_integrate(const DiagramSum& s, const std::vector<Color>& X, int m,
                        bool reduce_circles, NdRoute route = NdRoute::Direct);

// Pairs exp(-1/2 sum (lambda^{-1})_{xy} strut(dual x, dual y)) against the
// perturbation, keeping closed degree at most degree_bound.  The form must be
// invertible.  The degree-0 coefficient is the perturbation's constant term.
DiagramSum fg_integrate(const PerturbedGaussian& g, const std::vector<Color>& X,
                        int degree_bound);

// Exact row reduction of s against the generators over the joint basis of
// canonical keys.  member is true iff s lies in the rational span.
struct SpanReduction {
    DiagramSum residual;
    bool member;
};
SpanReduction reduce_mod_span(const DiagramSum& s, const std::vector<DiagramSum>& generators);
SpanReduction reduce_mod_span(const DiagramSum& s, const std::vector<RelationInstance>& generators);

// Permutation-sum form of the determinant identity: glues m directed strut
// cycles through the form over all block-preserving permutations of the
// n*m index points, evaluating each closed cycle as -1.  Equals
// (-1)^{nm} det(lambda)^m; kept separate from det_bareiss as an oracle.
Rational diagrammatic_det(const QuadraticForm& lambda, int m);

// Outcome of one verification run.  `mode` records how equality was
// established: "literal" for equality of raw sums, "quotient" when the
// difference was certified to lie in the span of level-(m+1) pairing
// relation instances.  On failure, residual holds lhs - rhs (or what is
// left of it after span reduction).
struct CheckReport {
    std::string check;
    int m = 0;
    bool pass = false;
    std::string mode;
    DiagramSum lhs;
    DiagramSum rhs;
    DiagramSum residual;
    std::string detail;
};

// Integrates exp(1/2 sum lambda_xy strut(x,y)) over the form's colors and
// compares with (-1)^{nm} det(lambda)^m.  Both integration routes run; a
// disagreement between them fails the check regardless of the target value.
CheckReport check_gaussian_identity(const QuadraticForm& lambda, int m);

// Compares the integral of d with the integral of its translate under
// x -> x + xbar for every integration color.  Censuses of at most 2m legs
// per color agree literally; an excess census leaves a right-hand side that
// must reduce to zero against constructed relation instances.
CheckReport check_translation_invariance(const Diagram& d, const std::vector<Color>& X, int m);

// The relation instances certifying the excess-census case of translation
// invariance: the integral of the translate equals a rational combination of
// these level-(m+1) pairing instances.  Supports at most two excess legs per
// color.
std::vector<DiagramSum> translation_certificate(const Diagram& d, const std::vector<Color>& X,
                                                int m);

// Compares the level-m integral of a perturbed Gaussian, after circle
// reduction and truncation to degree m, with (-1)^{m|X|} det(lambda)^m times
// its formal Gaussian integral.  When literal equality fails and generators
// are supplied, the residual is reduced against them.
CheckReport check_comparison(const PerturbedGaussian& g, const std::vector<Color>& X, int m,
                            const std::vector<DiagramSum>& generators = {});

} // namespace jacobi
