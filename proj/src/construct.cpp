#include "knotpoly/construct.hpp"

#include <numeric>

#include "knotpoly/error.hpp"

namespace knotpoly {

namespace {

int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

int unit_inverse(int a, int n, const char* what) {
    a = mod(a, n);
    if (std::gcd(a, n) != 1)
        throw ParameterError(std::string(what) + " = " + std::to_string(a) +
                             " is not invertible mod " + std::to_string(n));
    for (int b = 1; b <= n; ++b)
        if (mod(static_cast<long long>(a) * b, n) == 1 % n) return b % n;
    return 0;  // n == 1
}

// Residue r in Z_n is element r for r != 0 and element n for r == 0.
int residue_to_element(int r, int n) { return r == 0 ? n : r; }
int element_to_residue(int e, int n) { return e == n ? 0 : e; }

void require_positive(int n) {
    if (n < 1) throw ParameterError("cardinality must be positive, got " + std::to_string(n));
}

OpTable projection(int n) {
    return OpTable::generate(n, [](int x, int) { return x; });
}

}  // namespace

QuandleTable make_alexander_quandle(int n, int t) {
    require_positive(n);
    unit_inverse(t, n, "t");
    return QuandleTable(OpTable::generate(n, [&](int x, int y) {
        long long a = element_to_residue(x, n);
        long long b = element_to_residue(y, n);
        return residue_to_element(mod(t * a + (1LL - t) * b, n), n);
    }));
}

std::vector<std::string> alexander_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(element_to_residue(i, n)));
    return out;
}

QuandleTable make_alexander_quandle(int modulus, const std::vector<int>& monic) {
    if (modulus < 2) throw ParameterError("modulus must be at least 2");
    if (monic.size() < 2 || mod(monic.back(), modulus) != 1)
        throw ParameterError("defining polynomial must be monic of degree at least 1");
    if (std::gcd(mod(monic.front(), modulus), modulus) != 1)
        throw ParameterError("t is not invertible: constant term of f is not a unit");
    const std::size_t deg = monic.size() - 1;
    long long count = 1;
    for (std::size_t i = 0; i < deg; ++i) {
        count *= modulus;
        if (count > 4096) throw ParameterError("Alexander quandle too large to tabulate");
    }
    const int n = static_cast<int>(count);

    using Vec = std::vector<int>;
    auto decode = [&](int e) {
        Vec v(deg);
        int code = e - 1;
        for (std::size_t i = 0; i < deg; ++i) {
            v[i] = code % modulus;
            code /= modulus;
        }
        return v;
    };
    auto encode = [&](const Vec& v) {
        int code = 0;
        for (std::size_t i = deg; i-- > 0;) code = code * modulus + v[i];
        return code + 1;
    };
    // Multiplication by t, reducing t^deg = -(f_0 + ... + f_{deg-1} t^{deg-1}).
    auto times_t = [&](const Vec& v) {
        Vec out(deg, 0);
        const int top = v[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) out[i] = v[i - 1];
        for (std::size_t i = 0; i < deg; ++i)
            out[i] = mod(out[i] - static_cast<long long>(top) * monic[i], modulus);
        return out;
    };

    return QuandleTable(OpTable::generate(n, [&](int x, int y) {
        Vec a = decode(x);
        Vec b = decode(y);
        Vec ta = times_t(a);
        Vec tb = times_t(b);
        Vec r(deg);
        for (std::size_t i = 0; i < deg; ++i) r[i] = mod(ta[i] + b[i] - tb[i], modulus);
        return encode(r);
    }));
}

std::vector<std::string> alexander_polynomial_labels(int modulus, std::size_t degree) {
    std::vector<std::string> out;
    long long count = 1;
    for (std::size_t i = 0; i < degree; ++i) count *= modulus;
    for (long long code = 0; code < count; ++code) {
        std::string label;
        long long c = code;
        for (std::size_t i = 0; i < degree; ++i, c /= modulus) {
            long long digit = c % modulus;
            if (digit == 0) continue;
            if (!label.empty()) label += "+";
            std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
            if (mono.empty())
                label += std::to_string(digit);
            else
                label += (digit == 1 ? "" : std::to_string(digit)) + mono;
        }
        out.push_back(label.empty() ? "0" : label);
    }
    return out;
}

QuandleTable make_dihedral_quandle(int n) {
    require_positive(n);
    return QuandleTable(OpTable::generate(
        n, [&](int x, int y) { return mod(2LL * (y - 1) - (x - 1), n) + 1; }));
}

QuandleTable make_conjugation_quandle(const std::vector<std::vector<int>>& group, int exponent) {
    const OpTable mul = OpTable::from_rows(group);
    const int n = mul.size();
    int identity = 0;
    for (int e = 1; e <= n && identity == 0; ++e) {
        bool ok = true;
        for (int g = 1; g <= n && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
        if (ok) identity = e;
    }
    if (identity == 0) throw StructuralError("group table has no identity element");
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw StructuralError("group table is not associative");
    std::vector<int> inv(n + 1, 0);
    for (int g = 1; g <= n; ++g) {
        for (int h = 1; h <= n; ++h)
            if (mul(g, h) == identity) inv[g] = h;
        if (inv[g] == 0) throw StructuralError("group table: element " + std::to_string(g) +
                                               " has no inverse");
    }
    auto power = [&](int g, int k) {
        int base = k < 0 ? inv[g] : g;
        int r = identity;
        for (int i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, base);
        return r;
    };
    return QuandleTable(OpTable::generate(n, [&](int g, int h) {
        int hk = power(h, exponent);
        return mul(mul(inv[hk], g), hk);
    }));
}

QuandleTable make_trivial_quandle(int n) {
    require_positive(n);
    return QuandleTable(projection(n));
}

BiquandleTable make_alexander_biquandle(int n, int s, int t) {
    require_positive(n);
    const int s_inv = unit_inverse(s, n, "s");
    const int t_inv = unit_inverse(t, n, "t");
    auto linear = [n](long long cx, long long cy) {
        return OpTable::generate(n, [=](int x, int y) {
            long long a = element_to_residue(x, n);
            long long b = element_to_residue(y, n);
            return residue_to_element(mod(cx * a + cy * b, n), n);
        });
    };
    const long long st = mod(static_cast<long long>(s) * t, n);
    const long long st_inv = mod(static_cast<long long>(s_inv) * t_inv, n);
    return BiquandleTable({linear(t_inv, 1 - st_inv), linear(t, 1 - st), linear(s_inv, 0),
                           linear(s, 0)});
}

BiquandleTable quandle_to_biquandle(const QuandleTable& q, int variant) {
    const OpTable& fwd = q.op();
    const OpTable back = fwd.inverse();
    const OpTable proj = projection(q.size());
    switch (variant) {
        case 1: return BiquandleTable({back, fwd, proj, proj});
        case 2: return BiquandleTable({fwd, back, proj, proj});
        case 3: return BiquandleTable({proj, proj, back, fwd});
        case 4: return BiquandleTable({proj, proj, fwd, back});
        default:
            throw ParameterError("quandle-to-biquandle variant must be 1..4, got " +
                                 std::to_string(variant));
    }
}

}  // namespace knotpoly
