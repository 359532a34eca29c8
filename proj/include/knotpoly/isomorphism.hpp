#pragma once

#include <optional>
#include <vector>

#include "knotpoly/table.hpp"

namespace knotpoly {

struct IsoResult {
    bool isomorphic = false;
    /// witness[x-1] = φ(x); present exactly when isomorphic.
    std::optional<std::vector<Element>> witness;
};

/// Exact isomorphism test by backtracking over bijections. Candidate images
/// are restricted to elements with the same (r_m, c_n) profile for every
/// 0 ≤ m, n < N, and each assignment propagates the images it forces. A
/// returned witness has been checked against the full tables.
IsoResult is_isomorphic(const QuandleTable& a, const QuandleTable& b);
IsoResult is_isomorphic(const BiquandleTable& a, const BiquandleTable& b);

/// Throws PreconditionError when the tables are of different kinds.
IsoResult is_isomorphic(const AnyTable& a, const AnyTable& b);

/// True if φ(x op y) = φ(x) op φ(y) for every pair and operation, where
/// phi[x-1] = φ(x). The tables may differ in size.
bool is_homomorphism(const QuandleTable& a, const QuandleTable& b,
                     const std::vector<Element>& phi);
bool is_homomorphism(const BiquandleTable& a, const BiquandleTable& b,
                     const std::vector<Element>& phi);

}  // namespace knotpoly
