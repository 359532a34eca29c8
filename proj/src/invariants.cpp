#include "knotpoly/invariants.hpp"

#include <numeric>

#include "knotpoly/error.hpp"

namespace knotpoly {

CycleData::CycleData(const QuandleTable& t) : mode_(PolyMode::quandle) { build({&t.op()}); }

CycleData::CycleData(const BiquandleTable& t) : mode_(PolyMode::biquandle) {
    build({&t.block(1), &t.block(2), &t.block(3), &t.block(4)});
}

void CycleData::build(const std::vector<const OpTable*>& ops) {
    n_ = ops.front()->size();
    period_ = 1;
    lengths_.assign(ops.size(), std::vector<int>(static_cast<std::size_t>(n_) * n_, 0));
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const OpTable& op = *ops[i];
        for (Element y = 1; y <= n_; ++y) {
            if (!op.column_is_permutation(y))
                throw PreconditionError("column " + std::to_string(y) +
                                        " is not a permutation; invariants need a valid table");
            auto* row = &lengths_[i][static_cast<std::size_t>(y - 1) * n_];
            for (Element start = 1; start <= n_; ++start) {
                if (row[start - 1] != 0) continue;
                std::vector<Element> cycle;
                for (Element x = start; row[x - 1] == 0; x = op(x, y)) {
                    row[x - 1] = -1;
                    cycle.push_back(x);
                }
                const int len = static_cast<int>(cycle.size());
                for (Element x : cycle) row[x - 1] = len;
                const std::int64_t g = std::gcd(period_, static_cast<std::int64_t>(len));
                if (__builtin_mul_overflow(period_ / g, static_cast<std::int64_t>(len), &period_))
                    throw OverflowError("period overflows 64 bits");
            }
        }
    }
}

std::int64_t CycleData::reduce(std::int64_t k) const { return ((k % period_) + period_) % period_; }

ElementProfile CycleData::profile(Element x, std::int64_t m, std::int64_t n) const {
    if (x < 1 || x > n_) throw PreconditionError("element outside 1.." + std::to_string(n_));
    ElementProfile p;
    p.element = x;
    p.m = m;
    p.n = n;
    const std::int64_t mr = reduce(m);
    const std::int64_t nr = reduce(n);
    for (int op = 0; op < operations(); ++op) {
        int r = 0;
        int c = 0;
        for (Element y = 1; y <= n_; ++y) {
            if (mr % cycle_length(op, y, x) == 0) ++r;
            if (nr % cycle_length(op, x, y) == 0) ++c;
        }
        p.r.push_back(r);
        p.c.push_back(c);
    }
    return p;
}

Exponents CycleData::exponents(Element x, std::int64_t m, std::int64_t n) const {
    const ElementProfile p = profile(x, n, m);
    Exponents e(variable_count(mode_), 0);
    for (int op = 0; op < operations(); ++op) {
        e[s_var(mode_, op + 1)] = p.r[op];
        e[t_var(mode_, op + 1)] = p.c[op];
    }
    return e;
}

Poly CycleData::polynomial(const std::vector<Element>& members, std::int64_t m,
                           std::int64_t n) const {
    Poly p(mode_);
    for (Element x : members) p.add_term(exponents(x, m, n), 1);
    return p;
}

Poly CycleData::polynomial(std::int64_t m, std::int64_t n) const {
    return polynomial(ElementSet::full(n_).to_vector(), m, n);
}

PolyMatrix CycleData::matrix() const {
    const auto size = static_cast<std::size_t>(period_);
    if (period_ > 4096) throw PreconditionError("period too large for a polynomial matrix");
    PolyMatrix out(size, mode_);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            out.at(i, j) = polynomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
    return out;
}

ElementProfile profile(const QuandleTable& t, Element x, std::int64_t m, std::int64_t n) {
    return CycleData(t).profile(x, m, n);
}

ElementProfile profile(const BiquandleTable& t, Element x, std::int64_t m, std::int64_t n) {
    return CycleData(t).profile(x, m, n);
}

Poly qp(const QuandleTable& t, std::int64_t m, std::int64_t n) {
    return CycleData(t).polynomial(m, n);
}

Poly bp(const BiquandleTable& t, std::int64_t m, std::int64_t n) {
    return CycleData(t).polynomial(m, n);
}

std::int64_t period(const QuandleTable& t) { return CycleData(t).period(); }
std::int64_t period(const BiquandleTable& t) { return CycleData(t).period(); }
std::int64_t period(const AnyTable& t) {
    return std::visit([](const auto& table) { return period(table); }, t);
}

PolyMatrix poly_matrix(const QuandleTable& t) { return CycleData(t).matrix(); }
PolyMatrix poly_matrix(const BiquandleTable& t) { return CycleData(t).matrix(); }
PolyMatrix poly_matrix(const AnyTable& t) {
    return std::visit([](const auto& table) { return poly_matrix(table); }, t);
}

Poly sqp(const QuandleTable& t, const ElementSet& s, std::int64_t m, std::int64_t n) {
    if (s.empty() || !is_closed(t, s))
        throw PreconditionError("subset " + s.to_string() + " is not a subquandle");
    return CycleData(t).polynomial(s.to_vector(), m, n);
}

Poly sbp(const BiquandleTable& t, const ElementSet& s, std::int64_t m, std::int64_t n) {
    if (s.empty() || !is_closed(t, s))
        throw PreconditionError("subset " + s.to_string() + " is not a subbiquandle");
    return CycleData(t).polynomial(s.to_vector(), m, n);
}

}  // namespace knotpoly
