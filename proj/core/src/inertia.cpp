#include "inertial/inertia.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace inertial {

std::string to_string(const Inertia& i) {
    std::ostringstream out;
    out << "(" << i.n_plus << ", " << i.n_zero << ", " << i.n_minus << ")";
    return out.str();
}

RationalSymMatrix::RationalSymMatrix(int order)
    : order_(order), entries_(static_cast<std::size_t>(order) * order) {
    if (order < 1) throw std::invalid_argument("matrix order must be >= 1");
}

RationalSymMatrix RationalSymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    RationalSymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix rows must all have length order");
        if (rows[i][static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("diagonal entries must be zero");
        for (int j = 0; j < n; ++j) {
            if (rows[j][static_cast<std::size_t>(i)] != rows[i][static_cast<std::size_t>(j)])
                throw std::invalid_argument("matrix must be symmetric");
            m.entries_[static_cast<std::size_t>(i) * n + j] = rows[i][static_cast<std::size_t>(j)];
        }
    }
    return m;
}

const Rational& RationalSymMatrix::at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * order_ + j];
}

void RationalSymMatrix::set(int i, int j, const Rational& value) {
    if (i == j) throw std::invalid_argument("diagonal entries must stay zero");
    entries_[static_cast<std::size_t>(i) * order_ + j] = value;
    entries_[static_cast<std::size_t>(j) * order_ + i] = value;
}

namespace {

// Division-free Berkowitz: coefficients of det(xI - A), descending, monic.
// Integer-only; coefficient growth is why everything here is a BigInt.
std::vector<BigInt> berkowitz(const std::vector<std::vector<BigInt>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<BigInt> c{BigInt(1), -a[0][0]};
    std::vector<BigInt> v, mv, t, cnew;
    for (int r = 2; r <= n; ++r) {
        const int m = r - 1;  // leading principal block size
        t.assign(static_cast<std::size_t>(r) + 1, BigInt(0));
        t[0] = 1;
        t[1] = -a[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)];
        v.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
        for (int i = 2; i <= r; ++i) {
            BigInt dot = 0;
            for (int j = 0; j < m; ++j)
                dot += a[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
            t[static_cast<std::size_t>(i)] = -dot;
            if (i < r) {
                mv.assign(static_cast<std::size_t>(m), BigInt(0));
                for (int p = 0; p < m; ++p) {
                    BigInt s = 0;
                    for (int q = 0; q < m; ++q)
                        s += a[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] * v[static_cast<std::size_t>(q)];
                    mv[static_cast<std::size_t>(p)] = std::move(s);
                }
                v.swap(mv);
            }
        }
        // c <- T * c, T lower-triangular Toeplitz with first column t
        cnew.assign(static_cast<std::size_t>(r) + 1, BigInt(0));
        for (int p = 0; p <= r; ++p) {
            BigInt s = 0;
            const int qlo = std::max(0, p - r);
            const int qhi = std::min(p, r - 1);
            for (int q = qlo; q <= qhi; ++q)
                s += t[static_cast<std::size_t>(p - q)] * c[static_cast<std::size_t>(q)];
            cnew[static_cast<std::size_t>(p)] = std::move(s);
        }
        c.swap(cnew);
    }
    return c;
}

IntPolynomial charpoly_from_bigint_matrix(const std::vector<std::vector<BigInt>>& a) {
    std::vector<BigInt> desc = berkowitz(a);
    std::reverse(desc.begin(), desc.end());  // store ascending
    return IntPolynomial(std::move(desc));
}

}  // namespace

IntPolynomial char_poly(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    return charpoly_from_bigint_matrix(a);
}

IntPolynomial char_poly(const RationalSymMatrix& m) {
    const int n = m.order();
    // clear denominators; the positive scale factor preserves inertia
    BigInt scale = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            scale = lcm(scale, denominator(m.at(i, j)));
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Rational& e = m.at(i, j);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                numerator(e) * (scale / denominator(e));
        }
    return charpoly_from_bigint_matrix(a);
}

Inertia inertia_from_charpoly(const IntPolynomial& p) {
    const auto& c = p.coefficients();
    int nz = 0;
    while (c[static_cast<std::size_t>(nz)] == 0) ++nz;  // monic, so this terminates
    int variations = 0;
    int prev = 0;
    for (std::size_t i = static_cast<std::size_t>(nz); i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const int s = c[i] > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    Inertia result;
    result.n_zero = nz;
    result.n_plus = variations;
    result.n_minus = p.degree() - nz - variations;
    return result;
}

Inertia inertia(const Graph& g) { return inertia_from_charpoly(char_poly(g)); }

Inertia inertia_weighted(const RationalSymMatrix& w, const Graph& pattern) {
    if (w.order() != pattern.order())
        throw std::invalid_argument("weight matrix order does not match pattern graph");
    for (int i = 0; i < w.order(); ++i)
        for (int j = i + 1; j < w.order(); ++j)
            if (w.at(i, j) != 0 && !pattern.has_edge(i, j))
                throw std::invalid_argument("nonzero weight at a non-edge of the pattern");
    return inertia_from_charpoly(char_poly(w));
}

}  // namespace inertial
