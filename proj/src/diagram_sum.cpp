#include "jacobi/diagram_sum.hpp"

namespace jacobi {

DiagramSum DiagramSum::unit(std::optional<Truncation> trunc) {
    DiagramSum s(std::move(trunc));
    s.add(Diagram::empty(), Rational(1));
    return s;
}

DiagramSum DiagramSum::single(const Diagram& d, const Rational& coeff,
                              std::optional<Truncation> trunc) {
    DiagramSum s(std::move(trunc));
    s.add(d, coeff);
    return s;
}

void DiagramSum::add(const Diagram& d, const Rational& coeff) {
    if (coeff.is_zero())
        return;
    if (trunc_ && !trunc_->admits(d))
        return;
    Canonical c = canonicalize(d);
    if (c.zero)
        return;
    add_canonical(c.key, c.representative, c.sign == 1 ? coeff : -coeff);
}

void DiagramSum::add_canonical(const CanonicalKey& key, const Diagram& representative,
                               const Rational& coeff) {
    if (coeff.is_zero())
        return;
    if (trunc_ && !trunc_->admits(representative))
        return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, Term{representative, coeff});
        return;
    }
    it->second.coeff += coeff;
    if (it->second.coeff.is_zero())
        terms_.erase(it);
}

Rational DiagramSum::coefficient(const Diagram& d) const {
    Canonical c = canonicalize(d);
    if (c.zero)
        return Rational(0);
    auto it = terms_.find(c.key);
    if (it == terms_.end())
        return Rational(0);
    return c.sign == 1 ? it->second.coeff : -it->second.coeff;
}

Rational DiagramSum::constant_term() const {
    return coefficient(Diagram::empty());
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& other) {
    for (const auto& [key, term] : other.terms_)
        add_canonical(key, term.representative, term.coeff);
    return *this;
}

DiagramSum& DiagramSum::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, term] : terms_)
        term.coeff *= scalar;
    return *this;
}

DiagramSum DiagramSum::truncated_to_degree(int bound) const {
    DiagramSum out(trunc_);
    for (const auto& [key, term] : terms_)
        if (term.representative.degree_times_two() <= 2 * bound)
            out.add_canonical(key, term.representative, term.coeff);
    return out;
}

DiagramSum combine(const Rational& a, const DiagramSum& S, const Rational& b, const DiagramSum& T) {
    std::optional<Truncation> trunc;
    if (S.truncation() && T.truncation())
        trunc = intersect(*S.truncation(), *T.truncation());
    else if (S.truncation())
        trunc = S.truncation();
    else
        trunc = T.truncation();

    DiagramSum out(trunc);
    for (const auto& [key, term] : S.terms())
        out.add_canonical(key, term.representative, a * term.coeff);
    for (const auto& [key, term] : T.terms())
        out.add_canonical(key, term.representative, b * term.coeff);
    return out;
}

DiagramSum mul(const DiagramSum& S, const DiagramSum& T) {
    std::optional<Truncation> trunc;
    if (S.truncation() && T.truncation())
        trunc = intersect(*S.truncation(), *T.truncation());
    else if (S.truncation())
        trunc = S.truncation();
    else
        trunc = T.truncation();

    DiagramSum out(trunc);
    for (const auto& [ks, ts] : S.terms())
        for (const auto& [kt, tt] : T.terms())
            out.add(disjoint_union(ts.representative, tt.representative), ts.coeff * tt.coeff);
    return out;
}

} // namespace jacobi
