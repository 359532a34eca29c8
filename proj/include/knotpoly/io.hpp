#pragma once

#include <string>
#include <string_view>

#include "knotpoly/table.hpp"

namespace knotpoly {

// Table files come in two flavours.
//
// Plain text: whitespace-separated integers, one matrix row per line; '#'
// starts a comment. A quandle is n rows of n entries, a biquandle the 2n×2n
// block matrix [B1 B2; B3 B4].
//
// JSON: {"n": 4, "matrix": [[...], ...]} for quandles and
// {"n": 3, "b1": ..., "b2": ..., "b3": ..., "b4": ...} for biquandles.
//
// Both readers reject jagged rows and entries outside 1..n with
// StructuralError (ParseError for syntax).

QuandleTable parse_quandle(std::string_view text);
BiquandleTable parse_biquandle(std::string_view text);
AnyTable parse_table(std::string_view text, bool biquandle);

std::string to_text(const QuandleTable& t);
std::string to_text(const BiquandleTable& t);
std::string to_json(const QuandleTable& t);
std::string to_json(const BiquandleTable& t);

std::string read_file(const std::string& path);

}  // namespace knotpoly
