#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace knotpoly {

/// One signed crossing. `labels` are the four incident semiarcs in
/// counterclockwise order starting from the incoming under-strand, so
/// labels[0] enters and labels[2] leaves along the under-strand. The
/// over-strand enters at labels[3] and leaves at labels[1] when the sign is
/// +1, and the other way round when it is -1.
struct Crossing {
    int sign = 1;
    std::array<int, 4> labels{};

    int under_in() const { return labels[0]; }
    int under_out() const { return labels[2]; }
    int over_in() const { return sign > 0 ? labels[3] : labels[1]; }
    int over_out() const { return sign > 0 ? labels[1] : labels[3]; }

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Signed planar-diagram code. The only diagram without crossings is the
/// unknot, one component.
struct PDCode {
    std::vector<Crossing> crossings;
    int components = 0;

    friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Checks the crossing list and counts components. Every label must be a
/// positive integer occurring exactly twice, once entering and once leaving
/// a crossing. Throws StructuralError; an empty list is rejected (use
/// builtin_diagram("unknot")).
PDCode make_pd(std::vector<Crossing> crossings);

/// Grammar: whitespace-separated terms `X+[a,b,c,d]` or `X-[a,b,c,d]`.
/// Throws ParseError with the byte offset of the problem.
PDCode parse_pd(std::string_view text);

/// Structured form: {"crossings": [{"sign": "+", "tuple": [a,b,c,d]}, ...]};
/// sign may also be +1 / -1. Throws ParseError or StructuralError.
PDCode parse_pd_json(std::string_view text);

/// Picks the JSON reader when the first non-blank character is '{'.
PDCode read_pd(std::string_view text);

std::string to_string(const PDCode& pd);

/// unknot, hopf, trefoil, trefoil_r1, trefoil_r2, figure8, knot_5_1,
/// knot_6_1. Throws PreconditionError for other names.
PDCode builtin_diagram(std::string_view name);
std::vector<std::string> builtin_names();

/// Oriented diagram with semiarcs (edges between crossing points) and arcs
/// (maximal runs of semiarcs joined through over-crossings). Semiarcs are
/// numbered 0.. in increasing label order; arcs 0.. in order of their first
/// semiarc.
class Diagram {
public:
    struct Roles {
        int sign = 1;
        int under_in = 0;
        int under_out = 0;
        int over_in = 0;
        int over_out = 0;
    };

    static Diagram from_pd(const PDCode& pd);

    int semiarc_count() const noexcept { return static_cast<int>(labels_.size()); }
    int arc_count() const noexcept { return arcs_; }
    int component_count() const noexcept { return components_; }

    /// Crossing roles in semiarc indices.
    const std::vector<Roles>& crossings() const noexcept { return crossings_; }

    int arc_of(int semiarc) const { return arc_of_.at(semiarc); }
    int successor(int semiarc) const { return successor_.at(semiarc); }
    int label(int semiarc) const { return labels_.at(semiarc); }

private:
    std::vector<int> labels_;
    std::vector<int> arc_of_;
    std::vector<int> successor_;
    std::vector<Roles> crossings_;
    int arcs_ = 0;
    int components_ = 0;
};

/// Knot quandle presentation: one generator per arc, one relation per
/// crossing, written with ▷ only (x▷y=z).
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::string> relations;

    std::string to_string() const;
};

Presentation presentation(const Diagram& d);

}  // namespace knotpoly
