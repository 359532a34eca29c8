#pragma once

#include <cstdint>
#include <vector>

#include "knotpoly/diagram.hpp"
#include "knotpoly/poly.hpp"
#include "knotpoly/table.hpp"

namespace knotpoly {

/// Colors indexed by arc (quandle colorings) or by semiarc (biquandle
/// colorings).
using Coloring = std::vector<Element>;

/// All quandle colorings, in lexicographic order. At a crossing with
/// under-in arc x, over arc y and under-out arc z the rule is z = x ▷ y
/// when positive and z = x ▷⁻¹ y when negative. Requires the table's
/// columns to be permutations.
std::vector<Coloring> quandle_colorings(const Diagram& d, const QuandleTable& t);

/// All biquandle colorings, in lexicographic order. With under-in a and
/// over-in b, a positive crossing sends a to a^b (op2) and b to b_a (op4);
/// a negative one sends a to a^{b̄} (op1) and b to b_{ā} (op3).
std::vector<Coloring> biquandle_colorings(const Diagram& d, const BiquandleTable& t);

std::vector<Coloring> colorings(const Diagram& d, const AnyTable& t);

/// Checks every crossing relation.
bool is_coloring(const Diagram& d, const QuandleTable& t, const Coloring& c);
bool is_coloring(const Diagram& d, const BiquandleTable& t, const Coloring& c);

/// Image of the coloring's homomorphism: the closure of the colors used.
ElementSet hom_image(const Coloring& c, const AnyTable& t);

/// Φ: the multiset of subquandle (subbiquandle) polynomials of the images
/// of all colorings.
PolyMultiset phi(const Diagram& d, const AnyTable& t, std::int64_t m, std::int64_t n);

/// Entry (m, n) is phi(d, t, m, n) for 0 ≤ m, n < period(t). Colorings are
/// enumerated once.
using PhiMatrix = std::vector<std::vector<PolyMultiset>>;
PhiMatrix phi_matrix(const Diagram& d, const AnyTable& t);

}  // namespace knotpoly
