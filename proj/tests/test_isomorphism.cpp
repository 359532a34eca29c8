#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "knotpoly/construct.hpp"
#include "knotpoly/error.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/isomorphism.hpp"

using namespace knotpoly;
using namespace knotpoly::testing;

namespace {

template <class T>
bool brute_isomorphic(const T& a, const T& b) {
    if (a.size() != b.size()) return false;
    std::vector<Element> p(a.size());
    std::iota(p.begin(), p.end(), 1);
    do {
        if (relabel(a, p) == b) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST_CASE("the two latin quandles with equal matrices are not isomorphic") {
    const auto q1 = QuandleTable::from_rows(kLatin5[0]);
    const auto q2 = QuandleTable::from_rows(kLatin5[1]);
    CHECK(poly_matrix(q1) == poly_matrix(q2));
    const auto r = is_isomorphic(q1, q2);
    CHECK_FALSE(r.isomorphic);
    CHECK_FALSE(r.witness.has_value());
    CHECK_FALSE(brute_isomorphic(q1, q2));
}

TEST_CASE("agreement with brute force on the corpus") {
    const auto qs = small_quandles();
    for (const auto& a : qs)
        for (const auto& b : qs) {
            if (a.table.size() != b.table.size() || a.table.size() > 6) continue;
            INFO(a.name << " vs " << b.name);
            CHECK(is_isomorphic(a.table, b.table).isomorphic == brute_isomorphic(a.table, b.table));
        }
    const auto bs = small_biquandles();
    int compared = 0;
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i; j < bs.size() && compared < 400; ++j) {
            if (bs[i].table.size() != bs[j].table.size() || bs[i].table.size() > 5) continue;
            ++compared;
            INFO(bs[i].name << " vs " << bs[j].name);
            CHECK(is_isomorphic(bs[i].table, bs[j].table).isomorphic ==
                  brute_isomorphic(bs[i].table, bs[j].table));
        }
}

TEST_CASE("relabelled copies are isomorphic with a valid witness") {
    std::mt19937 rng(9);
    for (const auto& nq : small_quandles())
        for (int k = 0; k < 4; ++k) {
            const auto sigma = random_permutation(nq.table.size(), rng());
            const auto other = relabel(nq.table, sigma);
            const auto r = is_isomorphic(nq.table, other);
            REQUIRE(r.isomorphic);
            REQUIRE(r.witness.has_value());
            CHECK(is_homomorphism(nq.table, other, *r.witness));
            const auto back = is_isomorphic(other, nq.table);
            CHECK(back.isomorphic);
        }
    for (const auto& nb : small_biquandles()) {
        const auto sigma = random_permutation(nb.table.size(), rng());
        const auto other = relabel(nb.table, sigma);
        const auto r = is_isomorphic(nb.table, other);
        REQUIRE(r.isomorphic);
        CHECK(is_homomorphism(nb.table, other, *r.witness));
        CHECK(is_isomorphic(other, nb.table).isomorphic);
    }
}

TEST_CASE("reflexive") {
    for (const auto& nq : small_quandles()) {
        const auto r = is_isomorphic(nq.table, nq.table);
        CHECK(r.isomorphic);
        CHECK(is_homomorphism(nq.table, nq.table, *r.witness));
    }
    const auto tp = QuandleTable::from_rows(kTPrime);
    CHECK(is_isomorphic(tp, relabel(tp, random_permutation(10, 4))).isomorphic);
}

TEST_CASE("different polynomial matrices imply not isomorphic") {
    const auto qs = small_quandles();
    for (const auto& a : qs)
        for (const auto& b : qs)
            if (a.table.size() == b.table.size() && poly_matrix(a.table) != poly_matrix(b.table))
                CHECK_FALSE(is_isomorphic(a.table, b.table).isomorphic);
}

TEST_CASE("size and kind mismatches") {
    CHECK_FALSE(is_isomorphic(make_trivial_quandle(3), make_trivial_quandle(4)).isomorphic);
    CHECK_THROWS_AS(is_isomorphic(AnyTable(make_trivial_quandle(2)),
                                  AnyTable(make_alexander_biquandle(2, 1, 1))),
                    PreconditionError);
    CHECK(is_isomorphic(AnyTable(make_dihedral_quandle(3)), AnyTable(make_alexander_quandle(3, 2)))
              .isomorphic);
}

TEST_CASE("homomorphism check") {
    const auto d3 = make_dihedral_quandle(3);
    CHECK(is_homomorphism(d3, d3, {1, 2, 3}));
    CHECK(is_homomorphism(d3, d3, {1, 3, 2}));
    CHECK_FALSE(is_homomorphism(d3, d3, {1, 1, 2}));
    CHECK(is_homomorphism(d3, make_trivial_quandle(1), {1, 1, 1}));
}
