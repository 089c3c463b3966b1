#include "inertial/fractional.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace inertial {

namespace {

// Dense exact simplex over the covering LP
//   min sum_S x_S   s.t.   sum_{S ni v} x_S >= 1,  x >= 0,
// columns ranging over the maximal independent sets. Column layout:
// [0, nsets) set variables, [nsets, nsets+n) surplus, then one artificial
// per row for phase 1.
//
// The tableau is kept fraction-free: every stored entry is den_ times the
// rational tableau entry, where den_ is the numerator of the previous pivot
// element (Bareiss pivoting). Each update divides exactly by the old den_,
// entries stay minor-sized integers, and no gcd normalization is needed.
// Pivot elements are always chosen positive, so den_ > 0 throughout and
// sign tests on stored entries match sign tests on the true values.
//
// Entering: most negative reduced cost, lowest index on ties. Leaving:
// lexicographic ratio test against the columns of the basis held at the
// start of the phase, which is what makes the degenerate walks terminate
// (lowest-index entering alone stalls for tens of thousands of pivots on
// dense covering instances).
class CoverSimplex {
public:
    CoverSimplex(const std::vector<std::uint64_t>& sets, int n)
        : rows_(static_cast<std::size_t>(n)),
          nsets_(sets.size()),
          limit_(sets.size() + rows_),           // artificials may not re-enter
          cols_(sets.size() + 2 * rows_),
          tab_(rows_, std::vector<BigInt>(cols_)),
          rhs_(rows_, BigInt(1)),
          basis_(rows_) {
        for (std::size_t s = 0; s < nsets_; ++s)
            for (std::uint64_t mask = sets[s]; mask;) {
                const int v = std::countr_zero(mask);
                mask &= mask - 1;
                tab_[static_cast<std::size_t>(v)][s] = 1;
            }
        for (std::size_t i = 0; i < rows_; ++i) {
            tab_[i][nsets_ + i] = -1;            // surplus
            tab_[i][limit_ + i] = 1;             // artificial, initial basis
            basis_[i] = limit_ + i;
        }
    }

    // phase 1: drive the artificial total to zero, then pivot any
    // zero-level artificials out of the basis.
    void phase1() {
        std::vector<BigInt> red(cols_);
        BigInt znum(0);                          // den_ == 1 here
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < limit_; ++j) red[j] -= tab_[i][j];
            znum += rhs_[i];
        }
        iterate(red, znum);
        if (znum != 0) throw std::logic_error("covering LP infeasible (bug)");
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < limit_) continue;
            // [A | -I] has full row rank, so a nonzero entry exists; the
            // basic artificial sits at zero, so feasibility is kept. The
            // row carries rhs 0 and may be negated to keep the pivot
            // element, and hence den_, positive.
            std::size_t col = limit_;
            for (std::size_t j = 0; j < limit_; ++j)
                if (tab_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col == limit_) throw std::logic_error("covering LP rank collapse (bug)");
            if (tab_[i][col] < 0) {
                for (std::size_t j = 0; j < cols_; ++j) tab_[i][j] = -tab_[i][j];
                rhs_[i] = -rhs_[i];
            }
            pivot(i, col, red, znum);
        }
    }

    // phase 2: minimize the true objective (unit cost per set variable).
    Rational phase2() {
        std::vector<BigInt> red(cols_);
        BigInt znum(0);
        for (std::size_t j = 0; j < nsets_; ++j) red[j] = den_;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] >= nsets_) continue;   // surplus carries no cost
            for (std::size_t j = 0; j < cols_; ++j) red[j] -= tab_[i][j];
            znum += rhs_[i];
        }
        iterate(red, znum);
        return Rational(znum) / Rational(den_);
    }

    // basic value of set variable s at the current vertex, 0 if nonbasic
    Rational set_value(std::size_t s) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] == s) return Rational(rhs_[i]) / Rational(den_);
        return Rational(0);
    }

private:
    void iterate(std::vector<BigInt>& red, BigInt& znum) {
        // the phase-start basis columns are unit vectors, so every row of
        // [rhs | those columns] starts lexicographically positive and the
        // classic argument rules out any repeated basis
        std::vector<std::size_t> tiecols(basis_.begin(), basis_.end());
        std::sort(tiecols.begin(), tiecols.end());

        for (;;) {
            std::size_t enter = limit_;
            BigInt most(0);
            for (std::size_t j = 0; j < limit_; ++j)
                if (red[j] < most) {
                    most = red[j];
                    enter = j;
                }
            if (enter == limit_) return;

            std::vector<std::size_t> cand;
            for (std::size_t i = 0; i < rows_; ++i)
                if (tab_[i][enter] > 0) cand.push_back(i);
            if (cand.empty()) throw std::logic_error("covering LP unbounded (bug)");
            for (std::size_t k = 0; k <= rows_ && cand.size() > 1; ++k) {
                std::vector<std::size_t> keep{cand[0]};
                for (std::size_t t = 1; t < cand.size(); ++t) {
                    const std::size_t a = cand[t], b = keep[0];
                    const BigInt& na = k == 0 ? rhs_[a] : tab_[a][tiecols[k - 1]];
                    const BigInt& nb = k == 0 ? rhs_[b] : tab_[b][tiecols[k - 1]];
                    const BigInt lhs = na * tab_[b][enter];
                    const BigInt rhs = nb * tab_[a][enter];
                    if (lhs < rhs)
                        keep.assign(1, a);
                    else if (lhs == rhs)
                        keep.push_back(a);
                }
                cand.swap(keep);
            }
            pivot(cand[0], enter, red, znum);
        }
    }

    void pivot(std::size_t row, std::size_t col, std::vector<BigInt>& red, BigInt& znum) {
        const BigInt p = tab_[row][col];
        const auto& prow = tab_[row];
        const bool unit_den = den_ == 1;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            auto& trow = tab_[i];
            const BigInt f = trow[col];
            if (f == 0) {
                // still rescale: entries must equal p times the rational row
                if (p != 1) {
                    for (std::size_t j = 0; j < cols_; ++j) {
                        trow[j] *= p;
                        if (!unit_den) trow[j] /= den_;
                    }
                    rhs_[i] *= p;
                    if (!unit_den) rhs_[i] /= den_;
                } else if (!unit_den) {
                    for (std::size_t j = 0; j < cols_; ++j) trow[j] /= den_;
                    rhs_[i] /= den_;
                }
            } else {
                for (std::size_t j = 0; j < cols_; ++j) {
                    trow[j] = trow[j] * p - f * prow[j];
                    if (!unit_den) trow[j] /= den_;
                }
                rhs_[i] = rhs_[i] * p - f * rhs_[row];
                if (!unit_den) rhs_[i] /= den_;
            }
        }
        const BigInt f = red[col];
        for (std::size_t j = 0; j < cols_; ++j) {
            red[j] = red[j] * p - f * prow[j];
            if (!unit_den) red[j] /= den_;
        }
        // objective tracked as znum / den_; it moves by (reduced cost) x
        // (entering value) = (f/den) * (rhs[row]/p), and rescales to base p
        znum = znum * p + f * rhs_[row];
        if (!unit_den) znum /= den_;
        den_ = p;
        basis_[row] = col;
    }

    std::size_t rows_;
    std::size_t nsets_;
    std::size_t limit_;   // first artificial column
    std::size_t cols_;
    std::vector<std::vector<BigInt>> tab_;
    std::vector<BigInt> rhs_;
    BigInt den_{1};       // stored tableau = den_ x rational tableau
    std::vector<std::size_t> basis_;
};

}  // namespace

FractionalColoring fractional_coloring(const Graph& g, std::size_t cap) {
    const auto sets = maximal_independent_sets(g, cap).sets;
    CoverSimplex lp(sets, g.order());
    lp.phase1();

    FractionalColoring out;
    out.value = lp.phase2();
    for (std::size_t s = 0; s < sets.size(); ++s) {
        Rational w = lp.set_value(s);
        if (w > 0) {
            out.sets.push_back(sets[s]);
            out.weights.push_back(std::move(w));
        }
    }
    return out;
}

Rational fractional_chromatic(const Graph& g, std::size_t cap) {
    return fractional_coloring(g, cap).value;
}

}  // namespace inertial
