#include "jacobi/integrals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "jacobi/common.hpp"
#include "jacobi/gluing.hpp"

namespace jacobi {

DiagramSum o_reduce(const DiagramSum& s, int m) {
    if (m < 1)
        throw InputError("o_reduce: level must be at least 1");
    DiagramSum out(s.truncation());
    for (const auto& [key, term] : s.terms()) {
        const Diagram& d = term.representative;
        if (d.circles() == 0) {
            out.add_canonical(key, d, term.coeff);
            continue;
        }
        const Rational scaled = term.coeff * pow(Rational(-2 * m), d.circles());
        out.add(Diagram::build(d.legs(), d.vertices(), d.edges(), 0), scaled);
    }
    return out;
}

namespace {

void check_colors(const std::vector<Color>& X, const char* what) {
    std::set<Color> seen;
    for (const Color& x : X) {
        if (x.flavor == Flavor::Dual || x.flavor == Flavor::DualBar)
            throw InputError(std::string(what) + ": integration color " + to_string(x) +
                             " is dual-flavored");
        if (!seen.insert(x).second)
            throw InputError(std::string(what) + ": duplicate integration color " + to_string(x));
    }
}

std::vector<int> legs_colored(const Diagram& d, const Color& c) {
    std::vector<int> idx;
    for (size_t i = 0; i < d.legs().size(); ++i)
        if (d.legs()[i].color == c) idx.push_back(static_cast<int>(i));
    return idx;
}

DiagramSum nd_direct(const DiagramSum& s, const std::vector<Color>& X, int m) {
    DiagramSum out;
    for (const auto& [key, term] : s.terms()) {
        const Diagram& d = term.representative;
        std::vector<std::vector<int>> pools;
        bool live = true;
        for (const Color& x : X) {
            std::vector<int> idx = legs_colored(d, x);
            if (static_cast<int>(idx.size()) != 2 * m) {
                live = false;
                break;
            }
            pools.push_back(std::move(idx));
        }
        if (!live)
            continue;

        std::vector<std::pair<int, int>> acc;
        std::function<void(size_t)> per_color = [&](size_t ci) {
            if (ci == pools.size()) {
                out.add(fuse_legs(d, acc), term.coeff);
                return;
            }
            for_each_perfect_matching(pools[ci],
                                      [&](const std::vector<std::pair<int, int>>& pairs) {
                                          const size_t base = acc.size();
                                          acc.insert(acc.end(), pairs.begin(), pairs.end());
                                          per_color(ci + 1);
                                          acc.resize(base);
                                      });
        };
        per_color(0);
    }
    return out;
}

DiagramSum nd_via_pairing(const DiagramSum& s, const std::vector<Color>& X, int m) {
    Diagram struts = Diagram::empty();
    for (const Color& x : X) {
        const Color dx = dual_of(x);
        for (int k = 0; k < m; ++k) struts = disjoint_union(struts, strut(dx, dx));
    }
    const BigInt per_color = factorial(m) * (BigInt(1) << m);
    const Rational weight = pow(Rational(BigInt(1), per_color), static_cast<int>(X.size()));
    return pairing(DiagramSum::single(struts, weight), s, X);
}

} // namespace

DiagramSum nd_integrate(const DiagramSum& s, const std::vector<Color>& X, int m,
                        bool reduce_circles, NdRoute route) {
    if (m < 1)
        throw InputError("nd_integrate: level must be at least 1");
    check_colors(X, "nd_integrate");
    DiagramSum out = route == NdRoute::Direct ? nd_direct(s, X, m) : nd_via_pairing(s, X, m);
    return reduce_circles ? o_reduce(out, m) : out;
}

DiagramSum fg_integrate(const PerturbedGaussian& g, const std::vector<Color>& X,
                        int degree_bound) {
    if (degree_bound < 0)
        throw InputError("fg_integrate: degree bound must be nonnegative");
    check_colors(X, "fg_integrate");
    const std::set<Color> xs(X.begin(), X.end());
    const std::set<Color> fs(g.lambda.colors.begin(), g.lambda.colors.end());
    if (xs != fs)
        throw InputError("fg_integrate: integration colors must be exactly the form's colors");

    const QuadraticForm minus_inv = -invert_exact(g.lambda);

    // Gluing consumes every leg, so a term's closed degree is half its
    // trivalent vertex count; terms past the bound cannot contribute.  The
    // survivors' census caps the dual Gaussian expansion.
    DiagramSum kept;
    int cap = 0;
    for (const auto& [key, term] : g.perturbation.terms()) {
        if (static_cast<int>(term.representative.vertices().size()) > 2 * degree_bound)
            continue;
        for (const auto& [c, count] : term.representative.census()) cap = std::max(cap, count);
        kept.add_canonical(key, term.representative, term.coeff);
    }

    const DiagramSum dual_gauss =
        gaussian_part(minus_inv, 1, true, Truncation{std::nullopt, cap});
    const DiagramSum paired = pairing(dual_gauss, kept, X);

    DiagramSum out{Truncation{degree_bound, std::nullopt}};
    for (const auto& [key, term] : paired.terms())
        out.add_canonical(key, term.representative, term.coeff);
    return out;
}

SpanReduction reduce_mod_span(const DiagramSum& s, const std::vector<DiagramSum>& generators) {
    std::map<CanonicalKey, int> index;
    std::vector<CanonicalKey> keys;
    std::vector<const Diagram*> reps;
    auto intern = [&](const DiagramSum& sum) {
        for (const auto& [key, term] : sum.terms()) {
            if (index.emplace(key, static_cast<int>(reps.size())).second) {
                keys.push_back(key);
                reps.push_back(&term.representative);
            }
        }
    };
    intern(s);
    for (const DiagramSum& gen : generators) intern(gen);
    if (static_cast<int>(index.size()) > Limits::span_basis_bound())
        throw BoundError("reduce_mod_span: basis of " + std::to_string(index.size()) +
                         " canonical classes exceeds the configured bound");

    using Row = std::map<int, Rational>;
    std::map<int, Row> pivots;

    auto to_row = [&](const DiagramSum& sum) {
        Row r;
        for (const auto& [key, term] : sum.terms()) r[index[key]] = term.coeff;
        return r;
    };
    auto eliminate = [&](Row r) {
        while (!r.empty()) {
            const int lead_col = r.begin()->first;
            auto p = pivots.find(lead_col);
            if (p == pivots.end())
                break;
            const Rational f = r.begin()->second;
            for (const auto& [col, val] : p->second) {
                auto it = r.find(col);
                const Rational next = (it == r.end() ? Rational(0) : it->second) - f * val;
                if (next.is_zero()) {
                    if (it != r.end()) r.erase(it);
                } else if (it == r.end()) {
                    r.emplace(col, next);
                } else {
                    it->second = next;
                }
            }
        }
        return r;
    };

    for (const DiagramSum& gen : generators) {
        Row r = eliminate(to_row(gen));
        if (r.empty())
            continue;
        const Rational lead = r.begin()->second;
        for (auto& [col, val] : r) val = val / lead;
        const int lead_col = r.begin()->first;
        pivots.emplace(lead_col, std::move(r));
    }

    const Row rest = eliminate(to_row(s));
    DiagramSum residual;
    for (const auto& [col, val] : rest) residual.add_canonical(keys[col], *reps[col], val);
    return {std::move(residual), rest.empty()};
}

SpanReduction reduce_mod_span(const DiagramSum& s, const std::vector<RelationInstance>& generators) {
    std::vector<DiagramSum> expansions;
    expansions.reserve(generators.size());
    for (const RelationInstance& gen : generators) expansions.push_back(gen.expansion);
    return reduce_mod_span(s, expansions);
}

Rational diagrammatic_det(const QuadraticForm& lambda, int m) {
    if (m < 1)
        throw InputError("diagrammatic_det: level must be at least 1");
    const int n = lambda.size();
    const int points = n * m;
    if (points > Limits::det_diagram_bound())
        throw BoundError("diagrammatic_det: n*m = " + std::to_string(points) +
                         " exceeds the configured bound of " +
                         std::to_string(Limits::det_diagram_bound()));
    if (points == 0)
        return Rational(1);

    // Index point p stands for (color p/m, copy p%m).  A permutation only
    // contributes when it preserves the copy coordinate; its strut cycles
    // close into circles, each worth -1 here.
    std::vector<int> perm(points);
    for (int i = 0; i < points; ++i) perm[i] = i;

    Rational total(0);
    do {
        bool copy_preserving = true;
        for (int p = 0; p < points && copy_preserving; ++p)
            if (perm[p] % m != p % m) copy_preserving = false;
        if (!copy_preserving)
            continue;

        Rational weight(1);
        for (int p = 0; p < points; ++p) weight *= lambda.entries[p / m][perm[p] / m];

        std::vector<char> seen(points, 0);
        int cycles = 0;
        for (int p = 0; p < points; ++p) {
            if (seen[p])
                continue;
            ++cycles;
            for (int q = p; !seen[q]; q = perm[q]) seen[q] = 1;
        }
        total += weight * pow(Rational(-1), cycles);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

CheckReport check_gaussian_identity(const QuadraticForm& lambda, int m) {
    if (m < 1)
        throw InputError("check_gaussian_identity: level must be at least 1");
    const std::vector<Color>& X = lambda.colors;
    const int n = lambda.size();

    const DiagramSum gauss = gaussian_part(lambda, 1, false, Truncation{std::nullopt, 2 * m});
    const DiagramSum direct = nd_integrate(gauss, X, m, true, NdRoute::Direct);
    const DiagramSum paired = nd_integrate(gauss, X, m, true, NdRoute::ViaPairing);

    const Rational target = pow(Rational(-1), n * m) * pow(det_bareiss(lambda), m);
    DiagramSum rhs;
    rhs.add(Diagram::empty(), target);

    CheckReport rep;
    rep.check = "gaussian-identity";
    rep.m = m;
    rep.mode = "literal";
    rep.lhs = direct;
    rep.rhs = rhs;
    rep.residual = combine(Rational(1), direct, Rational(-1), rhs);
    const bool routes_agree = direct == paired;
    rep.pass = routes_agree && direct == rhs;
    if (!routes_agree)
        rep.detail = "direct and pairing routes disagree";
    else if (rep.pass)
        rep.detail = "integral equals (-1)^{nm} det^m; both integration routes agree";
    else
        rep.detail = "integral differs from (-1)^{nm} det^m";
    return rep;
}

namespace {

std::vector<TranslationRule> bar_rules(const std::vector<Color>& X) {
    std::vector<TranslationRule> rules;
    rules.reserve(X.size());
    for (const Color& x : X) rules.push_back({x, {{bar_of(x), Rational(1)}}});
    return rules;
}

Diagram recolor_legs(const Diagram& d, const std::vector<int>& which, const Color& to) {
    std::vector<Leg> legs = d.legs();
    for (int i : which) legs[i].color = to;
    return Diagram::build(legs, d.vertices(), d.edges(), d.circles());
}

void subsets_rec(const std::vector<int>& items, int k, size_t start, std::vector<int>& acc,
                 const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(acc.size()) == k) {
        emit(acc);
        return;
    }
    for (size_t i = start; i < items.size(); ++i) {
        acc.push_back(items[i]);
        subsets_rec(items, k, i + 1, acc, emit);
        acc.pop_back();
    }
}

void for_each_subset(const std::vector<int>& items, int k,
                     const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> acc;
    subsets_rec(items, k, 0, acc, emit);
}

} // namespace

std::vector<DiagramSum> translation_certificate(const Diagram& d, const std::vector<Color>& X,
                                                int m) {
    check_colors(X, "translation_certificate");
    std::vector<Color> excess;
    for (const Color& x : X) {
        const int t = d.legs_of_color(x);
        if (t < 2 * m || t > 2 * m + 2)
            throw InputError("translation_certificate: census " + std::to_string(t) +
                             " for color " + to_string(x) + " is outside the supported range");
        if (t > 2 * m) excess.push_back(x);
    }
    if (excess.empty())
        return {};
    const Color anchor = excess.front();
    const Color abar = bar_of(anchor);

    // Concretely expand every conversion-and-matching choice for the other
    // colors; each choice leaves a context whose anchor legs are untouched.
    std::vector<Diagram> contexts = {d};
    for (const Color& y : X) {
        if (y == anchor)
            continue;
        const int k = d.legs_of_color(y) - 2 * m;
        std::vector<Diagram> next;
        for (const Diagram& ctx : contexts) {
            const std::vector<int> ylegs = legs_colored(ctx, y);
            for_each_subset(ylegs, k, [&](const std::vector<int>& conv) {
                const Diagram converted = recolor_legs(ctx, conv, bar_of(y));
                std::vector<int> rest;
                for (int i : ylegs)
                    if (std::find(conv.begin(), conv.end(), i) == conv.end()) rest.push_back(i);
                for_each_perfect_matching(rest, [&](const std::vector<std::pair<int, int>>& ps) {
                    next.push_back(fuse_legs(converted, ps));
                });
            });
        }
        contexts = std::move(next);
    }

    // Anchor color: attach wires whose gluing realizes a leg-to-bar
    // conversion, so the conversion sum becomes a pairing instance.  With two
    // extra legs the instance is one level higher; the monotone descent and
    // the closed-wire companion bring it back to level m+1.
    const int excess_k = d.legs_of_color(anchor) - 2 * m;
    std::vector<DiagramSum> gens;
    for (const Diagram& ctx : contexts) {
        if (excess_k == 1) {
            const Diagram wired = disjoint_union(ctx, strut(abar, anchor));
            gens.push_back(p_instance(wired, legs_colored(wired, anchor)));
        } else {
            const Diagram wired =
                disjoint_union(disjoint_union(ctx, strut(abar, anchor)), strut(abar, anchor));
            for (DiagramSum& g : p_monotone_generators(wired, legs_colored(wired, anchor)))
                gens.push_back(std::move(g));
            const Diagram closed_wire = disjoint_union(ctx, strut(abar, abar));
            gens.push_back(p_instance(closed_wire, legs_colored(closed_wire, anchor)));
        }
    }
    return gens;
}

CheckReport check_translation_invariance(const Diagram& d, const std::vector<Color>& X, int m) {
    if (m < 1)
        throw InputError("check_translation_invariance: level must be at least 1");
    check_colors(X, "check_translation_invariance");

    const DiagramSum original = DiagramSum::single(d);
    const DiagramSum translated = translate(original, bar_rules(X));

    const DiagramSum lhs = nd_integrate(original, X, m, false, NdRoute::Direct);
    const DiagramSum rhs = nd_integrate(translated, X, m, false, NdRoute::Direct);
    const bool routes_agree =
        lhs == nd_integrate(original, X, m, false, NdRoute::ViaPairing) &&
        rhs == nd_integrate(translated, X, m, false, NdRoute::ViaPairing);

    CheckReport rep;
    rep.check = "translation-invariance";
    rep.m = m;
    rep.lhs = lhs;
    rep.rhs = rhs;
    if (!routes_agree) {
        rep.pass = false;
        rep.mode = "route-mismatch";
        rep.detail = "direct and pairing routes disagree";
        rep.residual = combine(Rational(1), rhs, Rational(-1), lhs);
        return rep;
    }
    if (lhs == rhs) {
        rep.pass = true;
        rep.mode = "literal";
        rep.detail = "both sides agree term by term";
        return rep;
    }

    const DiagramSum difference = combine(Rational(1), rhs, Rational(-1), lhs);
    const SpanReduction red = reduce_mod_span(difference, translation_certificate(d, X, m));
    rep.pass = red.member;
    rep.mode = red.member ? "quotient" : "failed";
    rep.residual = red.residual;
    rep.detail = red.member
                     ? "difference lies in the span of level-(m+1) pairing instances"
                     : "difference is not in the span of the constructed relation instances";
    return rep;
}

CheckReport check_comparison(const PerturbedGaussian& g, const std::vector<Color>& X, int m,
                            const std::vector<DiagramSum>& generators) {
    if (m < 1)
        throw InputError("check_comparison: level must be at least 1");
    check_colors(X, "check_comparison");
    const std::set<Color> xs(X.begin(), X.end());
    const std::set<Color> fs(g.lambda.colors.begin(), g.lambda.colors.end());
    if (xs != fs)
        throw InputError("check_comparison: integration colors must be exactly the form's colors");

    const Rational det = det_bareiss(g.lambda);
    if (det.is_zero())
        throw SingularMatrixError("check_comparison: the quadratic form is singular");

    // The perturbation's own truncation must not leak a degree cap into the
    // product: struts are consumed by the integral, so a high-degree open
    // term can still land inside the closed-degree window.
    DiagramSum pert;
    for (const auto& [key, term] : g.perturbation.terms())
        pert.add_canonical(key, term.representative, term.coeff);

    const DiagramSum gauss = gaussian_part(g.lambda, 1, false, Truncation{std::nullopt, 2 * m});
    const DiagramSum integrand = mul(gauss, pert);
    const DiagramSum nd_d = nd_integrate(integrand, X, m, false, NdRoute::Direct);
    const DiagramSum nd_p = nd_integrate(integrand, X, m, false, NdRoute::ViaPairing);
    const DiagramSum lhs = o_reduce(nd_d, m).truncated_to_degree(m);

    DiagramSum rhs = fg_integrate(g, X, m);
    rhs *= pow(Rational(-1), m * static_cast<int>(X.size())) * pow(det, m);
    rhs = rhs.truncated_to_degree(m);

    CheckReport rep;
    rep.check = "comparison";
    rep.m = m;
    rep.lhs = lhs;
    rep.rhs = rhs;
    if (!(nd_d == nd_p)) {
        rep.pass = false;
        rep.mode = "route-mismatch";
        rep.detail = "direct and pairing routes disagree";
        return rep;
    }
    if (lhs == rhs) {
        rep.pass = true;
        rep.mode = "literal";
        rep.detail = "integral equals (-1)^{m|X|} det^m times the formal Gaussian integral";
        return rep;
    }

    rep.residual = combine(Rational(1), lhs, Rational(-1), rhs);
    if (generators.empty()) {
        rep.pass = false;
        rep.mode = "counterexample";
        rep.detail = "literal equality failed and no relation instances were supplied";
        return rep;
    }
    const SpanReduction red = reduce_mod_span(rep.residual, generators);
    rep.pass = red.member;
    rep.mode = red.member ? "quotient" : "failed";
    rep.residual = red.residual;
    rep.detail = red.member ? "difference lies in the span of the supplied relation instances"
                            : "difference is not in the span of the supplied relation instances";
    return rep;
}

} // namespace jacobi
