#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "knotpoly/construct.hpp"
#include "knotpoly/error.hpp"
#include "knotpoly/table.hpp"
#include "oracles.hpp"

using namespace knotpoly;
using namespace knotpoly::testing;

TEST_CASE("op tables reject malformed input") {
    CHECK_THROWS_AS(OpTable::from_rows({}), StructuralError);
    CHECK_THROWS_AS(OpTable::from_rows({{1, 2}, {2}}), StructuralError);
    CHECK_THROWS_AS(OpTable::from_rows({{1, 3}, {2, 2}}), StructuralError);
    CHECK_THROWS_AS(OpTable::from_rows({{0}}), StructuralError);
    CHECK_THROWS_AS(BiquandleTable::from_block_matrix({{1, 1, 1}, {1, 1, 1}}), StructuralError);
    CHECK_THROWS_AS(BiquandleTable::from_block_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}),
                    StructuralError);
}

TEST_CASE("op table accessors") {
    const auto t = OpTable::from_rows(kAlexanderQ);
    CHECK(t.size() == 4);
    CHECK(t(1, 2) == 4);
    CHECK(t.row(2) == std::vector<int>{3, 2, 2, 3});
    CHECK(t.column(2) == std::vector<int>{4, 2, 3, 1});
    CHECK(t.columns_are_permutations());
    CHECK_FALSE(t.row_is_permutation(1));
    CHECK(t.rows() == kAlexanderQ);
    const auto inv = t.inverse();
    for (int x = 1; x <= 4; ++x)
        for (int y = 1; y <= 4; ++y) CHECK(inv(t(x, y), y) == x);
    CHECK_THROWS_AS(OpTable::from_rows({{1, 1}, {1, 1}}).inverse(), PreconditionError);
}

TEST_CASE("validation report names the failing axiom") {
    const auto ok = validate_quandle(QuandleTable::from_rows(kAlexanderQ));
    CHECK(ok.valid());
    CHECK(ok.to_string() == "valid\n");

    const auto bad = validate_quandle(QuandleTable::from_rows({{1, 1, 1}, {3, 2, 2}, {2, 3, 2}}));
    REQUIRE_FALSE(bad.valid());
    CHECK(bad.violations.front() == Violation{"quandle.i", {3}});
    CHECK(bad.to_string().rfind("invalid\nviolation quandle.i (3)\n", 0) == 0);

    const auto cols = validate_quandle(QuandleTable::from_rows({{1, 1}, {1, 2}}));
    bool saw_columns = false;
    for (const auto& v : cols.violations) saw_columns |= v.axiom == "quandle.ii";
    CHECK(saw_columns);
}

TEST_CASE("the corpus validates") {
    for (const auto& q : small_quandles()) {
        INFO(q.name);
        CHECK(validate_quandle(q.table).valid());
    }
    for (const auto& b : small_biquandles()) {
        INFO(b.name);
        CHECK(validate_biquandle(b.table).valid());
    }
    CHECK(validate_quandle(QuandleTable::from_rows(kTPrime)).valid());
}

TEST_CASE("broken biquandles are rejected") {
    auto rows = kHopfTarget;
    rows[0][3] = 2;  // B2(1,1) = 2 breaks the idempotence-type axioms
    const auto rep = validate_biquandle(BiquandleTable::from_block_matrix(rows));
    CHECK_FALSE(rep.valid());

    // Four copies of a quandle: every operation x ▷ y fails the exchange laws.
    const auto q = make_dihedral_quandle(3).op();
    CHECK_FALSE(validate_biquandle(BiquandleTable({q, q, q, q})).valid());
}

TEST_CASE("exhaustive count of 3-element quandle tables") {
    int quandles = 0;
    std::vector<std::vector<int>> rows(3, std::vector<int>(3, 1));
    for (int code = 0; code < 19683; ++code) {
        int c = code;
        for (auto& r : rows)
            for (auto& v : r) {
                v = c % 3 + 1;
                c /= 3;
            }
        if (validate_quandle(QuandleTable::from_rows(rows)).valid()) ++quandles;
    }
    // trivial (1 labelling), dihedral (1), and the 2+1 quandle (3 labellings)
    CHECK(quandles == 5);
}

TEST_CASE("powers and column orders") {
    const auto q = make_dihedral_quandle(5);
    for (int y = 1; y <= 5; ++y) CHECK(column_order(q.op(), y) == 2);
    const auto a = make_alexander_quandle(7, 3);  // t = 3 has order 6 mod 7
    CHECK(column_order(a.op(), 1) == 6);

    std::mt19937 rng(7);
    for (const auto& nq : small_quandles()) {
        const auto& op = nq.table.op();
        const int n = op.size();
        std::uniform_int_distribution<int> el(1, n);
        std::uniform_int_distribution<int> k(-40, 40);
        for (int i = 0; i < 20; ++i) {
            const int x = el(rng), y = el(rng);
            const int e = k(rng);
            const auto ord = column_order(op, y);
            CHECK(quandle_pow(nq.table, x, y, e) == brute_pow(op, x, y, e));
            CHECK(quandle_pow(nq.table, x, y, e) == quandle_pow(nq.table, x, y, e % ord));
            CHECK(quandle_pow(nq.table, quandle_pow(nq.table, x, y, e), y, -e) == x);
        }
    }
    const auto b = make_alexander_biquandle(5, 2, 3);
    for (int i = 1; i <= 4; ++i)
        CHECK(biquandle_pow(b, i, 2, 4, 7) == brute_pow(b.block(i), 2, 4, 7));
    CHECK_THROWS_AS(iterate(OpTable::from_rows({{1, 1}, {1, 1}}), 1, 1, -1), PreconditionError);
}

TEST_CASE("closure matches the sweep oracle and is closed under inverses") {
    for (const auto& nq : small_quandles()) {
        const int n = nq.table.size();
        if (n > 10) continue;
        const auto inv = nq.table.op().inverse();
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::set<Element> seed;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) seed.insert(i + 1);
            const auto c = closure(nq.table, ElementSet(n, seed));
            const std::vector<const OpTable*> ops{&nq.table.op()};
            REQUIRE(c.to_vector() == brute_closure(ops, {seed.begin(), seed.end()}));
            CHECK(is_closed(nq.table, c));
            for (Element x : c.members())
                for (Element y : c.members()) REQUIRE(c.contains(inv(x, y)));
        }
    }
    const auto b = make_alexander_biquandle(6, 5, 1);
    const auto c = closure(b, ElementSet(6, {2}));
    std::vector<const OpTable*> ops;
    for (int i = 1; i <= 4; ++i) ops.push_back(&b.block(i));
    CHECK(c.to_vector() == brute_closure(ops, {2}));
    CHECK(is_closed(b, c));
    CHECK_THROWS_AS(closure(make_trivial_quandle(3), ElementSet(3, {})), PreconditionError);
}

TEST_CASE("orbits partition the quandle into subquandles") {
    const auto t = QuandleTable::from_rows(kTPrime);
    const auto o = orbits(t);
    REQUIRE(o.size() == 2);
    CHECK(o[0].to_string() == "{1,2,3,4,5}");
    CHECK(o[1].to_string() == "{6,7,8,9,10}");
    for (const auto& nq : small_quandles()) {
        std::set<Element> seen;
        for (const auto& part : orbits(nq.table)) {
            CHECK(is_closed(nq.table, part));
            CHECK(validate_quandle(subquandle(nq.table, part)).valid());
            for (Element x : part.members()) CHECK(seen.insert(x).second);
        }
        CHECK(seen.size() == static_cast<std::size_t>(nq.table.size()));
    }
    CHECK(orbits(make_trivial_quandle(4)).size() == 4);
    CHECK(orbits(make_dihedral_quandle(4)).size() == 2);
}

TEST_CASE("latin quandles") {
    for (const auto& rows : kLatin5) CHECK(is_latin(QuandleTable::from_rows(rows)));
    CHECK_FALSE(is_latin(QuandleTable::from_rows(kAlexanderQ)));
    CHECK(is_latin(make_dihedral_quandle(5)));
    CHECK_FALSE(is_latin(make_dihedral_quandle(4)));
}

TEST_CASE("relabeling preserves validity and composes") {
    for (const auto& nq : small_quandles()) {
        const auto sigma = random_permutation(nq.table.size(), 11);
        const auto r = relabel(nq.table, sigma);
        CHECK(validate_quandle(r).valid());
        for (int x = 1; x <= r.size(); ++x)
            for (int y = 1; y <= r.size(); ++y)
                REQUIRE(r(sigma[x - 1], sigma[y - 1]) == sigma[nq.table(x, y) - 1]);
    }
    const auto b = make_alexander_biquandle(5, 2, 3);
    const auto sigma = random_permutation(5, 3);
    const auto rb = relabel(b, sigma);
    CHECK(validate_biquandle(rb).valid());
    for (int i = 1; i <= 4; ++i)
        CHECK(rb.op(i, sigma[0], sigma[3]) == sigma[b.op(i, 1, 4) - 1]);
    CHECK_THROWS_AS(relabel(b, std::vector<int>{1, 1, 2, 3, 4}), PreconditionError);
}

TEST_CASE("block matrix round trip") {
    const auto b = BiquandleTable::from_block_matrix(kZ4S3T1);
    CHECK(b.block_matrix() == kZ4S3T1);
    CHECK(b.op(3, 1, 4) == 3);
    CHECK(table_size(AnyTable(b)) == 4);
}
