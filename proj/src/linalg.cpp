#include "jacobi/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace jacobi {

QuadraticForm QuadraticForm::build(std::vector<Color> colors, Matrix entries) {
    const std::size_t n = colors.size();
    std::set<Color> seen(colors.begin(), colors.end());
    if (seen.size() != n)
        throw InputError("quadratic form: colors must be distinct");
    if (entries.size() != n)
        throw InputError("quadratic form: expected one row per color");
    for (const auto& row : entries)
        if (row.size() != n)
            throw InputError("quadratic form: matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (entries[i][j] != entries[j][i])
                throw InputError("quadratic form: matrix is not symmetric");
    return QuadraticForm{std::move(colors), std::move(entries)};
}

QuadraticForm QuadraticForm::zero(std::vector<Color> colors) {
    Matrix m(colors.size(), std::vector<Rational>(colors.size(), Rational(0)));
    return QuadraticForm{std::move(colors), std::move(m)};
}

int QuadraticForm::index_of(const Color& c) const {
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == c)
            return static_cast<int>(i);
    throw InputError("quadratic form: unknown color '" + to_string(c) + "'");
}

QuadraticForm operator-(const QuadraticForm& q) {
    QuadraticForm out = q;
    for (auto& row : out.entries)
        for (auto& e : row)
            e = -e;
    return out;
}

// One-step fraction-free elimination: every division below is exact, so the
// intermediate entries never leave the ring generated by the inputs.
Rational det_bareiss(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return Rational(1);
    Matrix a = m;
    Rational prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int r = k + 1;
            while (r < n && a[r][k].is_zero())
                ++r;
            if (r == n)
                return Rational(0);
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = Rational(0);
        }
        prev = a[k][k];
    }
    return sign == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Rational det_bareiss(const QuadraticForm& q) { return det_bareiss(q.entries); }

namespace {

// Parity of a permutation from its cycle count: a permutation of n points
// with c cycles has sign (-1)^(n-c).
int permutation_sign(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j])
            seen[j] = true;
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

} // namespace

Rational det_leibniz(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    if (n > Limits::leibniz_bound())
        throw BoundError("det_leibniz: matrix larger than the oracle bound");
    if (n == 0)
        return Rational(1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational acc(0);
    do {
        Rational term(permutation_sign(perm));
        for (int i = 0; i < n && !term.is_zero(); ++i)
            term *= m[i][perm[i]];
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

Rational det_leibniz(const QuadraticForm& q) { return det_leibniz(q.entries); }

QuadraticForm invert_exact(const QuadraticForm& q) {
    const int n = q.size();
    Matrix a = q.entries;
    Matrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        inv[i][i] = Rational(1);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            throw SingularMatrixError("invert_exact: matrix is singular");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rational p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero())
                continue;
            const Rational f = a[i][col];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return QuadraticForm{q.colors, std::move(inv)};
}

} // namespace jacobi
