#pragma once

#include <map>
#include <optional>

#include "jacobi/canonical.hpp"
#include "jacobi/diagram.hpp"
#include "jacobi/rational.hpp"

namespace jacobi {

// Truncation policy for a sum: an optional total-degree cap and an optional
// cap on the number of legs of each single color.  Both are inclusive.
struct Truncation {
    std::optional<int> max_degree;
    std::optional<int> max_legs_per_color;

    bool admits(const Diagram& d) const {
        if (max_degree && d.degree_times_two() > 2 * *max_degree)
            return false;
        if (max_legs_per_color) {
            for (const auto& [c, n] : d.census())
                if (n > *max_legs_per_color)
                    return false;
        }
        return true;
    }

    friend Truncation intersect(const Truncation& a, const Truncation& b) {
        auto tighter = [](const std::optional<int>& x, const std::optional<int>& y) {
            if (!x) return y;
            if (!y) return x;
            return std::optional<int>(std::min(*x, *y));
        };
        return Truncation{tighter(a.max_degree, b.max_degree),
                          tighter(a.max_legs_per_color, b.max_legs_per_color)};
    }

    friend bool operator==(const Truncation&, const Truncation&) = default;
};

// Formal rational linear combination of canonical diagram classes.  Terms with
// coefficient zero, terms rejected by the truncation, and diagrams that vanish
// by an orientation-reversing automorphism are never stored.  Iteration order
// is fixed by the canonical keys, which makes every downstream serialization
// deterministic.
class DiagramSum {
public:
    struct Term {
        Diagram representative;
        Rational coeff;
    };

    DiagramSum() = default;
    explicit DiagramSum(std::optional<Truncation> trunc) : trunc_(std::move(trunc)) {}

    // 1 = the empty diagram with coefficient one.
    static DiagramSum unit(std::optional<Truncation> trunc = std::nullopt);
    static DiagramSum single(const Diagram& d, const Rational& coeff = Rational(1),
                             std::optional<Truncation> trunc = std::nullopt);

    // Canonicalizes and merges.  The sign from canonicalization multiplies the
    // coefficient; zero diagrams are dropped.
    void add(const Diagram& d, const Rational& coeff);
    // Fast path when the diagram is already a canonical representative.
    void add_canonical(const CanonicalKey& key, const Diagram& representative,
                       const Rational& coeff);

    const std::map<CanonicalKey, Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const std::optional<Truncation>& truncation() const { return trunc_; }
    void set_truncation(std::optional<Truncation> t) { trunc_ = std::move(t); }

    // Coefficient of a diagram's class (zero if absent).
    Rational coefficient(const Diagram& d) const;
    // Coefficient of the empty diagram.
    Rational constant_term() const;

    DiagramSum& operator+=(const DiagramSum& other);
    DiagramSum& operator*=(const Rational& scalar);

    // Keeps only terms of degree <= bound.
    DiagramSum truncated_to_degree(int bound) const;

    // Terms compare by canonical class and coefficient; truncation metadata is
    // ignored.
    friend bool operator==(const DiagramSum& a, const DiagramSum& b) {
        if (a.terms_.size() != b.terms_.size())
            return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second.coeff != ib->second.coeff)
                return false;
        return true;
    }

private:
    std::map<CanonicalKey, Term> terms_;
    std::optional<Truncation> trunc_;
};

// a*S + b*T; the result truncation is the intersection of the operands'.
DiagramSum combine(const Rational& a, const DiagramSum& S, const Rational& b, const DiagramSum& T);

// Bilinear extension of disjoint union.  Sound under the intersected
// truncation because degree and leg censuses are additive.
DiagramSum mul(const DiagramSum& S, const DiagramSum& T);

} // namespace jacobi
