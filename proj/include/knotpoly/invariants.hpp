#pragma once

#include <cstdint>
#include <vector>

#include "knotpoly/poly.hpp"
#include "knotpoly/table.hpp"

namespace knotpoly {

/// Fixed-point counts of one element for a given (m, n):
///   r[i] = |{y : op_i^m(x, y) = x}|,  c[i] = |{y : op_i^n(y, x) = y}|.
/// Quandles have one operation, biquandles four (indexed 0..3 for op1..op4).
struct ElementProfile {
    Element element = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::vector<int> r;
    std::vector<int> c;

    friend bool operator==(const ElementProfile&, const ElementProfile&) = default;
};

/// Cycle structure of every column permutation of a table, from which all
/// (m, n) fixed-point counts follow: x is fixed by the k-th power of ρ_y
/// exactly when the length of x's cycle under ρ_y divides k.
///
/// Building it is O(K n²) for K operations; each profile is then O(K n).
/// Requires every column to be a permutation.
class CycleData {
public:
    explicit CycleData(const QuandleTable& t);
    explicit CycleData(const BiquandleTable& t);

    int size() const noexcept { return n_; }
    int operations() const noexcept { return static_cast<int>(lengths_.size()); }
    PolyMode mode() const noexcept { return mode_; }

    /// lcm of all column-permutation orders.
    std::int64_t period() const noexcept { return period_; }

    /// Length of the cycle through x of op_i(·, y), op in 0..operations()-1.
    int cycle_length(int op, Element y, Element x) const {
        return lengths_[op][static_cast<std::size_t>(y - 1) * n_ + (x - 1)];
    }

    ElementProfile profile(Element x, std::int64_t m, std::int64_t n) const;

    /// The monomial contributed by x to the (m, n) polynomial:
    /// s^{r_n(x)} t^{c_m(x)} per operation, i.e. profile(x, n, m).
    Exponents exponents(Element x, std::int64_t m, std::int64_t n) const;

    /// Σ_{x ∈ members} monomial(x, m, n).
    Poly polynomial(const std::vector<Element>& members, std::int64_t m, std::int64_t n) const;
    Poly polynomial(std::int64_t m, std::int64_t n) const;

    PolyMatrix matrix() const;

private:
    void build(const std::vector<const OpTable*>& ops);
    std::int64_t reduce(std::int64_t k) const;

    int n_ = 0;
    PolyMode mode_ = PolyMode::quandle;
    std::int64_t period_ = 1;
    std::vector<std::vector<int>> lengths_;
};

ElementProfile profile(const QuandleTable& t, Element x, std::int64_t m, std::int64_t n);
ElementProfile profile(const BiquandleTable& t, Element x, std::int64_t m, std::int64_t n);

// Index convention: in the (m, n) polynomial the first index m is the power
// in the column count (exponent of t) and the second index n the power in
// the row count (exponent of s). With it, the Alexander quandle
// Z_2[t]/(t^2+1) has qp_{0,1} = 4s^2t^4, and entry (i, j) of the polynomial
// matrix is qp_{i,j}.

/// qp_{m,n}(Q) = Σ_x s^{r_n(x)} t^{c_m(x)}.
Poly qp(const QuandleTable& t, std::int64_t m, std::int64_t n);

/// bp_{m,n}(B) = Σ_x Π_i s_i^{r^i_n(x)} t_i^{c^i_m(x)}.
Poly bp(const BiquandleTable& t, std::int64_t m, std::int64_t n);

std::int64_t period(const QuandleTable& t);
std::int64_t period(const BiquandleTable& t);
std::int64_t period(const AnyTable& t);

/// The N×N matrix with entry (i, j) = qp_{i,j} (or bp_{i,j}), N = period.
PolyMatrix poly_matrix(const QuandleTable& t);
PolyMatrix poly_matrix(const BiquandleTable& t);
PolyMatrix poly_matrix(const AnyTable& t);

/// Contribution of a closed subset S. The counts still range over the whole
/// table. Throws PreconditionError if S is not closed.
Poly sqp(const QuandleTable& t, const ElementSet& s, std::int64_t m, std::int64_t n);
Poly sbp(const BiquandleTable& t, const ElementSet& s, std::int64_t m, std::int64_t n);

}  // namespace knotpoly
