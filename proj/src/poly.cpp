#include "knotpoly/poly.hpp"

#include <algorithm>
#include <cctype>

#include "knotpoly/error.hpp"

namespace knotpoly {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow");
    return r;
}

void require_same_mode(PolyMode a, PolyMode b) {
    if (a != b) throw PreconditionError("polynomial modes differ (quandle vs biquandle)");
}

}  // namespace

std::size_t s_var(PolyMode mode, int op) {
    if (mode == PolyMode::quandle) return 0;
    if (op < 1 || op > 4) throw PreconditionError("operation index must be 1..4");
    return static_cast<std::size_t>(op - 1);
}

std::size_t t_var(PolyMode mode, int op) {
    if (mode == PolyMode::quandle) return 1;
    if (op < 1 || op > 4) throw PreconditionError("operation index must be 1..4");
    return static_cast<std::size_t>(op + 3);
}

std::string variable_name(PolyMode mode, std::size_t index) {
    if (index >= variable_count(mode)) throw PreconditionError("variable index out of range");
    if (mode == PolyMode::quandle) return index == 0 ? "s" : "t";
    return std::string(index < 4 ? "s_" : "t_") + std::to_string(index % 4 + 1);
}

// ------------------------------------------------------------------- Poly

Poly Poly::monomial(PolyMode mode, Exponents exponents, std::int64_t coefficient) {
    Poly p(mode);
    p.add_term(exponents, coefficient);
    return p;
}

Poly Poly::constant(PolyMode mode, std::int64_t value) {
    return monomial(mode, Exponents(variable_count(mode), 0), value);
}

void Poly::add_term(const Exponents& e, std::int64_t c) {
    if (e.size() != variable_count(mode_))
        throw PreconditionError("exponent vector has " + std::to_string(e.size()) +
                                " entries, expected " + std::to_string(variable_count(mode_)));
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
        throw PreconditionError("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    require_same_mode(mode_, other.mode_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

std::int64_t Poly::coefficient_sum() const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : terms_) sum = checked_add(sum, c);
    return sum;
}

std::optional<std::int64_t> Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) return std::nullopt;
    return c;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.mode_ <=> b.mode_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.terms_.begin(), a.terms_.end(),
                                                  b.terms_.begin(), b.terms_.end());
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }

// ---------------------------------------------------------- text format

std::string canonical_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (c < 0)
            out += "-";
        else if (!first)
            out += "+";
        first = false;
        const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c)
                                        : static_cast<std::uint64_t>(c);
        if (mag != 1 || constant) out += std::to_string(mag);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += variable_name(p.mode(), i);
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, PolyMode mode, std::size_t base = 0)
        : text_(text), mode_(mode), base_(base) {}

    Poly parse() {
        Poly p(mode_);
        skip_ws();
        if (pos_ == text_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            parse_term(p, sign);
            skip_ws();
        }
        return p;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::int64_t parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = checked_add(checked_mul(v, 10), peek() - '0');
            ++pos_;
        }
        return v;
    }

    void parse_term(Poly& p, int sign) {
        Exponents e(variable_count(mode_), 0);
        std::int64_t coeff = 1;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_uint();
            any = true;
        }
        while (peek() == 's' || peek() == 't') {
            const bool is_s = peek() == 's';
            ++pos_;
            int op = 1;
            if (mode_ == PolyMode::biquandle) {
                if (peek() != '_') fail("expected '_' after biquandle variable");
                ++pos_;
                if (peek() < '1' || peek() > '4') fail("variable subscript must be 1..4");
                op = peek() - '0';
                ++pos_;
            }
            std::int64_t power = 1;
            if (peek() == '^') {
                ++pos_;
                const bool braced = peek() == '{';
                if (braced) ++pos_;
                power = parse_uint();
                if (power > 1'000'000) fail("exponent too large");
                if (braced) {
                    if (peek() != '}') fail("expected '}'");
                    ++pos_;
                }
            }
            e[is_s ? s_var(mode_, op) : t_var(mode_, op)] += static_cast<int>(power);
            any = true;
        }
        if (!any) fail("expected a term");
        p.add_term(e, sign * coeff);
    }

    std::string_view text_;
    PolyMode mode_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, PolyMode mode) { return PolyParser(text, mode).parse(); }

Poly specialize(const Poly& p, const Assignment& values) {
    for (const auto& [var, value] : values)
        if (var >= variable_count(p.mode()))
            throw PreconditionError("variable index out of range");
    Poly out(p.mode());
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        std::int64_t coeff = c;
        for (const auto& [var, value] : values) {
            for (int k = 0; k < e[var]; ++k) coeff = checked_mul(coeff, value);
            rest[var] = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

Poly specialize_to_quandle(const Poly& p, int op) {
    if (p.mode() != PolyMode::biquandle)
        throw PreconditionError("specialize_to_quandle expects a biquandle polynomial");
    const std::size_t s = s_var(PolyMode::biquandle, op);
    const std::size_t t = t_var(PolyMode::biquandle, op);
    Poly out(PolyMode::quandle);
    for (const auto& [e, c] : p.terms()) out.add_term({e[s], e[t]}, c);
    return out;
}

std::vector<std::pair<Exponents, std::int64_t>> to_pairs(const Poly& p) {
    return {p.terms().begin(), p.terms().end()};
}

Poly from_pairs(PolyMode mode, const std::vector<std::pair<Exponents, std::int64_t>>& pairs) {
    Poly p(mode);
    for (const auto& [e, c] : pairs) p.add_term(e, c);
    return p;
}

// -------------------------------------------------------------- multiset

void PolyMultiset::insert(const Poly& p, std::int64_t multiplicity) {
    if (multiplicity < 1) throw PreconditionError("multiplicity must be positive");
    auto& slot = counts_[p];
    slot = checked_add(slot, multiplicity);
}

std::int64_t PolyMultiset::multiplicity(const Poly& p) const {
    auto it = counts_.find(p);
    return it == counts_.end() ? 0 : it->second;
}

std::int64_t PolyMultiset::total() const {
    std::int64_t sum = 0;
    for (const auto& [p, c] : counts_) sum = checked_add(sum, c);
    return sum;
}

std::string render(const PolyMultiset& ms) {
    if (ms.counts().empty()) return "0";
    std::vector<std::pair<std::string, std::int64_t>> items;
    for (const auto& [p, c] : ms.counts()) items.emplace_back(canonical_string(p), c);
    std::sort(items.begin(), items.end());
    std::string out;
    for (const auto& [exponent, c] : items) {
        if (!out.empty()) out += "+";
        if (c != 1) out += std::to_string(c);
        out += "q^{" + exponent + "}";
    }
    return out;
}

PolyMultiset parse_multiset(std::string_view text, PolyMode mode) {
    PolyMultiset ms;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.substr(pos) == "0") return ms;
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) {
            if (first) throw ParseError("empty multiset", pos);
            break;
        }
        if (!first) {
            if (text[pos] != '+') throw ParseError("expected '+'", pos);
            ++pos;
            skip_ws();
        }
        first = false;
        std::int64_t mult = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            mult = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                mult = checked_add(checked_mul(mult, 10), text[pos++] - '0');
        }
        if (text.substr(pos, 3) != "q^{") throw ParseError("expected 'q^{'", pos);
        pos += 3;
        std::size_t close = pos;
        for (int depth = 1; close < text.size(); ++close) {
            if (text[close] == '{') ++depth;
            if (text[close] == '}' && --depth == 0) break;
        }
        if (close == text.size()) throw ParseError("unterminated 'q^{'", pos);
        Poly p = PolyParser(text.substr(pos, close - pos), mode, pos).parse();
        if (mult < 1) throw ParseError("multiplicity must be positive", pos);
        ms.insert(p, mult);
        pos = close + 1;
    }
    return ms;
}

}  // namespace knotpoly
