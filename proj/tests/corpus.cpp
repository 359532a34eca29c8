#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "knotpoly/construct.hpp"

namespace knotpoly::testing {

const Rows kAlexanderQ = {{1, 4, 4, 1}, {3, 2, 2, 3}, {2, 3, 3, 2}, {4, 1, 1, 4}};

const Rows kLatin5[3] = {
    {{1, 5, 4, 3, 2}, {3, 2, 1, 5, 4}, {5, 4, 3, 2, 1}, {2, 1, 5, 4, 3}, {4, 3, 2, 1, 5}},
    {{1, 4, 2, 5, 3}, {4, 2, 5, 3, 1}, {2, 5, 3, 1, 4}, {5, 3, 1, 4, 2}, {3, 1, 4, 2, 5}},
    {{1, 3, 5, 2, 4}, {5, 2, 4, 1, 3}, {4, 1, 3, 5, 2}, {3, 5, 2, 4, 1}, {2, 4, 1, 3, 5}},
};

const Rows kTPrime = {
    {1, 3, 5, 2, 4, 3, 1, 4, 2, 5},  {5, 2, 4, 1, 3, 5, 3, 1, 4, 2},
    {4, 1, 3, 5, 2, 2, 5, 3, 1, 4},  {3, 5, 2, 4, 1, 4, 2, 5, 3, 1},
    {2, 4, 1, 3, 5, 1, 4, 2, 5, 3},  {8, 9, 10, 6, 7, 6, 10, 9, 8, 7},
    {7, 8, 9, 10, 6, 8, 7, 6, 10, 9}, {6, 7, 8, 9, 10, 10, 9, 8, 7, 6},
    {10, 6, 7, 8, 9, 7, 6, 10, 9, 8}, {9, 10, 6, 7, 8, 9, 8, 7, 6, 10},
};

const Rows kZ4S3T1 = {
    {3, 1, 3, 1, 3, 1, 3, 1}, {4, 2, 4, 2, 4, 2, 4, 2}, {1, 3, 1, 3, 1, 3, 1, 3},
    {2, 4, 2, 4, 2, 4, 2, 4}, {3, 3, 3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2},
    {1, 1, 1, 1, 1, 1, 1, 1}, {4, 4, 4, 4, 4, 4, 4, 4},
};

const Rows kZ3S2T1 = {
    {3, 2, 1, 3, 2, 1}, {1, 3, 2, 1, 3, 2}, {2, 1, 3, 2, 1, 3},
    {2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1}, {3, 3, 3, 3, 3, 3},
};

const Rows kHopfTarget = {
    {1, 1, 1, 1, 1, 1}, {3, 2, 2, 3, 2, 2}, {2, 3, 3, 2, 3, 3},
    {1, 1, 1, 1, 1, 1}, {3, 2, 2, 3, 2, 2}, {2, 3, 3, 2, 3, 3},
};

namespace {

// Cayley table of S3 with elements e, (12), (13), (23), (123), (132).
Rows symmetric_group_3() {
    using Perm = std::array<int, 3>;
    const std::vector<Perm> elems = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                     {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    Rows table(6, std::vector<int>(6));
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = 0; b < 6; ++b) {
            Perm ab{};
            for (int i = 0; i < 3; ++i) ab[i] = elems[a][elems[b][i]];
            auto it = std::find(elems.begin(), elems.end(), ab);
            table[a][b] = static_cast<int>(it - elems.begin()) + 1;
        }
    }
    return table;
}

}  // namespace

std::vector<NamedQuandle> small_quandles() {
    std::vector<NamedQuandle> out;
    for (int n = 1; n <= 6; ++n) out.push_back({"trivial" + std::to_string(n), make_trivial_quandle(n)});
    for (int n = 3; n <= 6; ++n) out.push_back({"dihedral" + std::to_string(n), make_dihedral_quandle(n)});
    for (auto [n, t] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {6, 5}})
        out.push_back({"alexander" + std::to_string(n) + "_" + std::to_string(t),
                       make_alexander_quandle(n, t)});
    out.push_back({"alexanderQ", QuandleTable::from_rows(kAlexanderQ)});
    for (int i = 0; i < 3; ++i)
        out.push_back({"latin5_" + std::to_string(i + 1), QuandleTable::from_rows(kLatin5[i])});
    out.push_back({"s3_conj1", make_conjugation_quandle(symmetric_group_3(), 1)});
    out.push_back({"s3_conj2", make_conjugation_quandle(symmetric_group_3(), 2)});
    out.push_back({"f3_t2", make_alexander_quandle(3, {1, 0, 1})});  // Z_3[t]/(t^2+1), 9 elements
    return out;
}

std::vector<NamedBiquandle> small_biquandles() {
    std::vector<NamedBiquandle> out;
    for (int n = 2; n <= 6; ++n)
        for (int s = 1; s < n; ++s)
            for (int t = 1; t < n; ++t)
                if (std::gcd(s, n) == 1 && std::gcd(t, n) == 1)
                    out.push_back({"alexander_bq" + std::to_string(n) + "_" + std::to_string(s) +
                                       "_" + std::to_string(t),
                                   make_alexander_biquandle(n, s, t)});
    out.push_back({"hopf_target", BiquandleTable::from_block_matrix(kHopfTarget)});
    for (const auto& q : small_quandles())
        if (q.table.size() <= 6)
            for (int v = 1; v <= 4; ++v)
                out.push_back({q.name + "_as_bq" + std::to_string(v), quandle_to_biquandle(q.table, v)});
    return out;
}

std::vector<Element> random_permutation(int n, unsigned seed) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::mt19937 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace knotpoly::testing
