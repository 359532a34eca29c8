#include <doctest.h>

#include <limits>
#include <random>

#include "knotpoly/error.hpp"
#include "knotpoly/poly.hpp"

using namespace knotpoly;

namespace {

Poly random_poly(std::mt19937& rng, PolyMode mode) {
    std::uniform_int_distribution<int> terms(0, 4), exp(0, 3), coeff(-5, 5);
    Poly p(mode);
    const int k = terms(rng);
    for (int i = 0; i < k; ++i) {
        Exponents e(variable_count(mode));
        for (auto& v : e) v = exp(rng);
        p.add_term(e, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("canonical strings") {
    Poly p(PolyMode::quandle);
    p.add_term({1, 1}, 5);
    p.add_term({5, 1}, 5);
    CHECK(canonical_string(p) == "5s^5t+5st");
    CHECK(canonical_string(Poly(PolyMode::quandle)) == "0");
    CHECK(canonical_string(Poly::constant(PolyMode::quandle, -3)) == "-3");
    CHECK(canonical_string(Poly::monomial(PolyMode::quandle, {0, 2}, -1)) == "-t^2");
    CHECK(canonical_string(Poly::monomial(PolyMode::biquandle, {1, 1, 0, 0, 0, 0, 1, 1}, 2)) ==
          "2s_1s_2t_3t_4");
    CHECK(variable_name(PolyMode::biquandle, t_var(PolyMode::biquandle, 3)) == "t_3");
    CHECK(variable_name(PolyMode::quandle, s_var(PolyMode::quandle)) == "s");
}

TEST_CASE("zero coefficients vanish") {
    Poly p(PolyMode::quandle);
    p.add_term({1, 0}, 3);
    p.add_term({1, 0}, -3);
    CHECK(p.is_zero());
    CHECK(p == Poly(PolyMode::quandle));
    CHECK(p.constant_value() == 0);
}

TEST_CASE("parsing") {
    const auto p = parse_poly("5s^5t+5st", PolyMode::quandle);
    CHECK(p.coefficient_sum() == 10);
    CHECK(parse_poly("5st + 5ts^5", PolyMode::quandle) == p);
    CHECK(parse_poly("s^{10}t^{2}", PolyMode::quandle) == parse_poly("s^10t^2", PolyMode::quandle));
    CHECK(parse_poly("s_1t_1^3s_2", PolyMode::biquandle) ==
          Poly::monomial(PolyMode::biquandle, {1, 1, 0, 0, 3, 0, 0, 0}));
    CHECK(parse_poly("-2+s", PolyMode::quandle).constant_value() == std::nullopt);
    CHECK(parse_poly("0", PolyMode::quandle).is_zero());

    CHECK_THROWS_AS(parse_poly("", PolyMode::quandle), ParseError);
    CHECK_THROWS_AS(parse_poly("s_1", PolyMode::quandle), ParseError);
    CHECK_THROWS_AS(parse_poly("s_5", PolyMode::biquandle), ParseError);
    CHECK_THROWS_AS(parse_poly("s t", PolyMode::quandle), ParseError);
    CHECK_THROWS_AS(parse_poly("s^", PolyMode::quandle), ParseError);
    try {
        parse_poly("st+x", PolyMode::quandle);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("mode mismatch") {
    Poly q(PolyMode::quandle);
    Poly b(PolyMode::biquandle);
    CHECK_THROWS_AS(q += b, PreconditionError);
    CHECK_THROWS_AS(Poly::monomial(PolyMode::quandle, {1, 2, 3}), PreconditionError);
    CHECK_THROWS_AS(Poly::monomial(PolyMode::quandle, {-1, 0}), PreconditionError);
    CHECK_THROWS_AS(specialize_to_quandle(q, 1), PreconditionError);
    CHECK_THROWS_AS(s_var(PolyMode::biquandle, 5), PreconditionError);
}

TEST_CASE("overflow is reported") {
    Poly p = Poly::constant(PolyMode::quandle, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(p += Poly::constant(PolyMode::quandle, 1), OverflowError);
    const auto big = parse_poly("4611686018427387904s", PolyMode::quandle);
    CHECK_THROWS_AS(specialize(big, {{0, 4}}), OverflowError);
    CHECK_THROWS_AS(parse_poly("99999999999999999999s", PolyMode::quandle), OverflowError);
}

TEST_CASE("addition is commutative and associative") {
    std::mt19937 rng(1);
    for (int i = 0; i < 200; ++i) {
        const auto mode = i % 2 ? PolyMode::biquandle : PolyMode::quandle;
        const auto a = random_poly(rng, mode), b = random_poly(rng, mode),
                   c = random_poly(rng, mode);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(poly_add(a, b).coefficient_sum() == a.coefficient_sum() + b.coefficient_sum());
    }
}

TEST_CASE("canonical strings round trip and are injective") {
    std::mt19937 rng(2);
    std::map<std::string, Poly> seen;
    for (int i = 0; i < 300; ++i) {
        const auto mode = i % 2 ? PolyMode::biquandle : PolyMode::quandle;
        const auto p = random_poly(rng, mode);
        const auto s = canonical_string(p);
        CHECK(parse_poly(s, mode) == p);
        CHECK(from_pairs(mode, to_pairs(p)) == p);
        auto [it, fresh] = seen.emplace(s + (i % 2 ? "/b" : "/q"), p);
        if (!fresh) CHECK(it->second == p);
    }
}

TEST_CASE("terms are in descending lexicographic order") {
    const auto p = parse_poly("s + t^3 + s^2 + st + 1", PolyMode::quandle);
    const auto pairs = to_pairs(p);
    for (std::size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i - 1].first > pairs[i].first);
    CHECK(canonical_string(p) == "s^2+st+s+t^3+1");
}

TEST_CASE("specialization") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto mode = i % 2 ? PolyMode::biquandle : PolyMode::quandle;
        const auto p = random_poly(rng, mode);
        Assignment ones;
        for (std::size_t v = 0; v < variable_count(mode); ++v) ones[v] = 1;
        CHECK(specialize(p, ones).constant_value() == p.coefficient_sum());
    }
    const auto p = parse_poly("2s^2t+3t^2", PolyMode::quandle);
    CHECK(specialize(p, {{0, 3}}) == parse_poly("18t+3t^2", PolyMode::quandle));
    CHECK(specialize(p, {{0, 2}, {1, -1}}).constant_value() == -5);
    CHECK_THROWS_AS(specialize(p, {{2, 1}}), PreconditionError);

    const auto b = parse_poly("2s_1s_2t_3t_4+s_1t_1^3s_2t_2^3s_3^3t_3s_4^3t_4", PolyMode::biquandle);
    CHECK(specialize_to_quandle(b, 2) == parse_poly("2s+st^3", PolyMode::quandle));
    CHECK(specialize_to_quandle(b, 3) == parse_poly("2t+s^3t", PolyMode::quandle));
}

TEST_CASE("multisets") {
    PolyMultiset ms;
    const auto a = parse_poly("5s^2t^2", PolyMode::quandle);
    const auto b = parse_poly("s^2t^2", PolyMode::quandle);
    ms.insert(a, 20);
    ms.insert(b, 10);
    ms.insert(a);
    CHECK(ms.total() == 31);
    CHECK(ms.distinct() == 2);
    CHECK(ms.multiplicity(a) == 21);
    CHECK(ms.multiplicity(parse_poly("s", PolyMode::quandle)) == 0);
    CHECK(render(ms) == "21q^{5s^2t^2}+10q^{s^2t^2}");
    CHECK(parse_multiset(render(ms), PolyMode::quandle) == ms);
    CHECK(parse_multiset("10q^{s^{2}t^2} + 21q^{5s^2t^2}", PolyMode::quandle) == ms);
    CHECK(render(PolyMultiset{}) == "0");
    CHECK(parse_multiset("0", PolyMode::quandle) == PolyMultiset{});
    CHECK_THROWS_AS(parse_multiset("q^{s", PolyMode::quandle), ParseError);
    CHECK_THROWS_AS(parse_multiset("q^{s}+", PolyMode::quandle), ParseError);
    CHECK_THROWS_AS(parse_multiset("0q^{s}", PolyMode::quandle), ParseError);
    CHECK_THROWS_AS(ms.insert(a, 0), PreconditionError);
}

TEST_CASE("poly matrix") {
    PolyMatrix m(2, PolyMode::quandle);
    m.at(1, 0) = parse_poly("s", PolyMode::quandle);
    CHECK(m.size() == 2);
    CHECK(m.at(0, 1).is_zero());
    CHECK(canonical_string(m.at(1, 0)) == "s");
    CHECK_THROWS(m.at(2, 0));
}
