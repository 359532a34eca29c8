#pragma once

#include <string>
#include <vector>

#include "knotpoly/table.hpp"

namespace knotpoly {

// Every constructor fixes an ordering of the underlying set; the matching
// *_labels function names element i (1-based) in the usual notation.

/// Alexander quandle on Z_n, x ▷ y = t x + (1 - t) y. Element i is the
/// residue i for i < n and element n is 0. Throws ParameterError unless
/// gcd(t, n) = 1.
QuandleTable make_alexander_quandle(int n, int t);
std::vector<std::string> alexander_labels(int n);

/// Alexander quandle on Z_p[t]/(f) with x ▷ y = t x + (1 - t) y, where
/// `monic` lists the coefficients of f from the constant term up and ends
/// with 1. Element i encodes the residue whose base-p digits (constant term
/// first) spell i - 1, so for Z_2[t]/(t^2 + 1) the order is 0, 1, t, 1+t.
/// Throws ParameterError unless f is monic with a unit constant term.
QuandleTable make_alexander_quandle(int modulus, const std::vector<int>& monic);
std::vector<std::string> alexander_polynomial_labels(int modulus, std::size_t degree);

/// Dihedral quandle on Z_n, x ▷ y = 2y - x, element i is the residue i - 1.
QuandleTable make_dihedral_quandle(int n);

/// Conjugation quandle g ▷ h = h^{-e} g h^{e} on a group given by its
/// 1-based Cayley table. Throws StructuralError if the table is not a group.
QuandleTable make_conjugation_quandle(const std::vector<std::vector<int>>& group, int exponent);

/// x ▷ y = x.
QuandleTable make_trivial_quandle(int n);

/// Alexander biquandle on Z_n:
///   x^y = t x + (1 - s t) y,  x^{ȳ} = t^{-1} x + (1 - s^{-1} t^{-1}) y,
///   x_y = s x,                x_{ȳ} = s^{-1} x.
/// Element order as make_alexander_quandle(n, t). Throws ParameterError
/// unless s and t are units mod n.
BiquandleTable make_alexander_biquandle(int n, int s, int t);

/// The four ways of reading a quandle as a biquandle:
///   1: x^y = x▷y,    x^{ȳ} = x▷⁻¹y, x_y = x_{ȳ} = x
///   2: x^y = x▷⁻¹y,  x^{ȳ} = x▷y,   x_y = x_{ȳ} = x
///   3: x_y = x▷y,    x_{ȳ} = x▷⁻¹y, x^y = x^{ȳ} = x
///   4: x_y = x▷⁻¹y,  x_{ȳ} = x▷y,   x^y = x^{ȳ} = x
/// Requires the quandle's columns to be permutations.
BiquandleTable quandle_to_biquandle(const QuandleTable& q, int variant);

}  // namespace knotpoly
