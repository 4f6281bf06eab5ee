#include "jacobi/series.hpp"

#include <set>

#include "jacobi/common.hpp"
#include "jacobi/gluing.hpp"

namespace jacobi {

DiagramSum exp_truncate(const DiagramSum& exponent, const Truncation& truncation) {
    for (const auto& [key, term] : exponent.terms())
        if (term.representative.degree_times_two() == 0)
            throw InputError("exp_truncate: exponent contains a degree-zero term "
                             "(empty or circles-only); the expansion would not terminate");
    if (!truncation.max_degree) {
        if (!truncation.max_legs_per_color)
            throw InputError("exp_truncate: truncation must bound the degree or the legs");
        for (const auto& [key, term] : exponent.terms())
            if (term.representative.legs().empty())
                throw InputError("exp_truncate: a leg bound alone cannot terminate the "
                                 "expansion of a closed exponent term");
    }

    DiagramSum base(truncation);
    for (const auto& [key, term] : exponent.terms())
        base.add_canonical(key, term.representative, term.coeff);

    DiagramSum acc = DiagramSum::unit(truncation);
    DiagramSum power = DiagramSum::unit(truncation);
    for (int k = 1; ; ++k) {
        power = mul(power, base);
        power *= Rational(BigInt(1), BigInt(k));
        if (power.empty())
            break;
        acc += power;
        if (k > 1000)
            throw BoundError("exp_truncate: expansion did not terminate within 1000 powers");
    }
    return acc;
}

DiagramSum gaussian_part(const QuadraticForm& lambda, int sign, bool dualize,
                         const Truncation& truncation) {
    if (sign != 1 && sign != -1)
        throw InputError("gaussian_part: sign must be +1 or -1");

    DiagramSum exponent(truncation);
    const int n = lambda.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Rational c = lambda.entries[i][j];
            if (i == j)
                c = c / Rational(2);
            if (sign == -1)
                c = -c;
            if (c.is_zero())
                continue;
            Color a = lambda.colors[i];
            Color b = lambda.colors[j];
            if (dualize) {
                a = dual_of(a);
                b = dual_of(b);
            }
            exponent.add(strut(a, b), c);
        }
    }
    if (exponent.empty())
        return DiagramSum::unit(truncation);
    return exp_truncate(exponent, truncation);
}

PerturbedGaussian PerturbedGaussian::build(QuadraticForm lambda, DiagramSum perturbation) {
    std::set<Color> allowed(lambda.colors.begin(), lambda.colors.end());
    for (const auto& [key, term] : perturbation.terms()) {
        if (!term.representative.is_strutless())
            throw InputError("perturbed gaussian: perturbation term contains a strut or circle");
        for (const Leg& leg : term.representative.legs())
            if (!allowed.count(leg.color))
                throw InputError("perturbed gaussian: leg color " + to_string(leg.color) +
                                 " is not a color of the quadratic form");
    }
    return PerturbedGaussian{std::move(lambda), std::move(perturbation)};
}

PerturbedGaussian split_gaussian(const ExpIntegrand& integrand) {
    std::set<Color> colors;
    for (const StrutTerm& st : integrand.struts) {
        for (const Color& c : {st.a, st.b}) {
            if (c.flavor != Flavor::Plain)
                throw InputError("split_gaussian: strut color " + to_string(c) + " is not plain");
            colors.insert(c);
        }
    }
    for (const auto& [key, term] : integrand.perturbation_exponent.terms())
        for (const Leg& leg : term.representative.legs()) {
            if (leg.color.flavor != Flavor::Plain)
                throw InputError("split_gaussian: perturbation color " + to_string(leg.color) +
                                 " is not plain");
            colors.insert(leg.color);
        }

    QuadraticForm lambda = QuadraticForm::zero({colors.begin(), colors.end()});
    for (const StrutTerm& st : integrand.struts) {
        const int i = lambda.index_of(st.a);
        const int j = lambda.index_of(st.b);
        // exp carries 1/2 lambda_{xy} x y summed over ordered pairs, so an
        // off-diagonal strut coefficient is lambda_{xy} itself and a diagonal
        // one is lambda_{xx}/2.
        if (i == j) {
            lambda.entries[i][i] += st.coeff * Rational(2);
        } else {
            lambda.entries[i][j] += st.coeff;
            lambda.entries[j][i] += st.coeff;
        }
    }

    DiagramSum perturbation;
    if (integrand.perturbation_exponent.empty()) {
        perturbation = DiagramSum::unit(integrand.truncation);
    } else {
        if (!integrand.truncation)
            throw InputError("split_gaussian: a perturbation exponent needs a truncation");
        perturbation = exp_truncate(integrand.perturbation_exponent, *integrand.truncation);
    }
    return PerturbedGaussian::build(std::move(lambda), std::move(perturbation));
}

SquareCompletion complete_square(const QuadraticForm& lambda, int legs_bound) {
    if (legs_bound < 0)
        throw InputError("complete_square: legs bound must be nonnegative");
    const QuadraticForm inv = invert_exact(lambda);
    const int n = lambda.size();

    // Coupled exponential over the original colors and their bar partners.
    DiagramSum exponent{Truncation{std::nullopt, legs_bound}};
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const Rational diag_split = i == j ? Rational(1, 2) : Rational(1);
            if (!lambda.entries[i][j].is_zero())
                exponent.add(strut(lambda.colors[i], lambda.colors[j]),
                             lambda.entries[i][j] * diag_split);
            if (!inv.entries[i][j].is_zero())
                exponent.add(strut(bar_of(lambda.colors[i]), bar_of(lambda.colors[j])),
                             inv.entries[i][j] * diag_split);
        }
        exponent.add(strut(lambda.colors[i], bar_of(lambda.colors[i])), Rational(1));
    }
    DiagramSum coupled = exp_truncate(exponent, Truncation{std::nullopt, legs_bound});

    // Translate side.  A surviving term has at most legs_bound legs of each of
    // the 2n colors, and every bar leg came from some plain leg, so a source
    // term that can still contribute has at most (n+1)*legs_bound legs per
    // color; the pre-image is expanded that far before cutting.
    DiagramSum wide = gaussian_part(lambda, 1, false, Truncation{std::nullopt, (n + 1) * legs_bound});
    std::vector<TranslationRule> rules;
    for (int i = 0; i < n; ++i) {
        TranslationRule rule{lambda.colors[i], {}};
        for (int j = 0; j < n; ++j)
            if (!inv.entries[i][j].is_zero())
                rule.additions.emplace_back(bar_of(lambda.colors[j]), inv.entries[i][j]);
        rules.push_back(std::move(rule));
    }
    DiagramSum translated_wide = translate(wide, rules);
    DiagramSum translated{Truncation{std::nullopt, legs_bound}};
    for (const auto& [key, term] : translated_wide.terms())
        translated.add_canonical(key, term.representative, term.coeff);

    return SquareCompletion{std::move(coupled), std::move(translated)};
}

} // namespace jacobi
