#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotpoly {

/// Variable sets. Quandle polynomials use (s, t); biquandle polynomials use
/// (s1, s2, s3, s4, t1, t2, t3, t4) in that order.
enum class PolyMode { quandle, biquandle };

constexpr std::size_t variable_count(PolyMode mode) {
    return mode == PolyMode::quandle ? 2 : 8;
}

/// Index of the variable s (quandle) or s_op (biquandle, op in 1..4).
std::size_t s_var(PolyMode mode, int op = 1);
std::size_t t_var(PolyMode mode, int op = 1);

/// "s", "t", "s_1", ..., "t_4".
std::string variable_name(PolyMode mode, std::size_t index);

using Exponents = std::vector<int>;

/// Sparse polynomial with 64-bit integer coefficients. Zero coefficients
/// are never stored; terms are kept in descending lexicographic order of
/// exponent vectors. Arithmetic throws OverflowError instead of wrapping.
class Poly {
public:
    explicit Poly(PolyMode mode = PolyMode::quandle) : mode_(mode) {}

    static Poly monomial(PolyMode mode, Exponents exponents, std::int64_t coefficient = 1);
    static Poly constant(PolyMode mode, std::int64_t value);

    PolyMode mode() const noexcept { return mode_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    using Terms = std::map<Exponents, std::int64_t, std::greater<>>;
    const Terms& terms() const noexcept { return terms_; }

    /// Throws PreconditionError on mode mismatch.
    Poly& operator+=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }

    /// Adds c · x^e in place.
    void add_term(const Exponents& e, std::int64_t c);

    std::int64_t coefficient_sum() const;

    /// The value if the polynomial is constant (including zero).
    std::optional<std::int64_t> constant_value() const;

    friend bool operator==(const Poly&, const Poly&) = default;
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

private:
    PolyMode mode_;
    Terms terms_;
};

Poly poly_add(const Poly& a, const Poly& b);

/// Deterministic text form: terms in descending lexicographic order of
/// exponent vectors, unit coefficients and exponents suppressed, zero
/// exponents omitted, e.g. "5s^5t+5st" or "2s_1s_2t_3t_4". Zero is "0".
std::string canonical_string(const Poly& p);

/// Inverse of canonical_string. Also accepts terms and variables in any
/// order and braced exponents (s^{10}). Throws ParseError.
Poly parse_poly(std::string_view text, PolyMode mode);

/// Substitutes integer values for the listed variables (by index) and
/// collects terms. A full assignment leaves a constant.
using Assignment = std::map<std::size_t, std::int64_t>;
Poly specialize(const Poly& p, const Assignment& values);

/// Sets every variable of a biquandle polynomial to 1 except s_op and t_op,
/// which become the quandle variables s and t.
Poly specialize_to_quandle(const Poly& p, int op);

/// Structured form: (exponent vector, coefficient) pairs in canonical order.
std::vector<std::pair<Exponents, std::int64_t>> to_pairs(const Poly& p);
Poly from_pairs(PolyMode mode, const std::vector<std::pair<Exponents, std::int64_t>>& pairs);

/// N×N matrix of polynomials; entry (m, n) is 0-based.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t size, PolyMode mode)
        : size_(size), entries_(size * size, Poly(mode)) {}

    std::size_t size() const noexcept { return size_; }
    Poly& at(std::size_t m, std::size_t n) { return entries_.at(m * size_ + n); }
    const Poly& at(std::size_t m, std::size_t n) const { return entries_.at(m * size_ + n); }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Poly> entries_;
};

/// A multiset of polynomials, rendered as a formal sum of q-powers.
class PolyMultiset {
public:
    void insert(const Poly& p, std::int64_t multiplicity = 1);

    std::int64_t multiplicity(const Poly& p) const;
    std::int64_t total() const;
    std::size_t distinct() const noexcept { return counts_.size(); }
    const std::map<Poly, std::int64_t>& counts() const noexcept { return counts_; }

    friend bool operator==(const PolyMultiset&, const PolyMultiset&) = default;

private:
    std::map<Poly, std::int64_t> counts_;
};

/// "c·q^{p}" terms joined by '+', sorted by the canonical string of p;
/// multiplicity 1 is suppressed and the empty multiset renders as "0".
std::string render(const PolyMultiset& ms);

/// Inverse of render. Throws ParseError.
PolyMultiset parse_multiset(std::string_view text, PolyMode mode);

}  // namespace knotpoly
