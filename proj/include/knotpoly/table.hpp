#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace knotpoly {

/// Elements of a finite algebra of size n are the integers 1..n, matching
/// the row/column numbering of operation matrices.
using Element = int;

/// One n×n binary operation table. Entry (x, y) is x op y.
///
/// Construction checks shape and range only; algebraic axioms are the
/// business of the validators.
class OpTable {
public:
    OpTable() = default;

    /// Throws StructuralError on an empty, non-square or out-of-range table.
    static OpTable from_rows(const std::vector<std::vector<int>>& rows);

    /// Builds the table of `f(x, y)` for x, y in 1..n.
    template <class F>
    static OpTable generate(int n, F&& f) {
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) rows[x - 1][y - 1] = f(x, y);
        return from_rows(rows);
    }

    int size() const noexcept { return n_; }

    Element operator()(Element x, Element y) const { return cells_[index(x, y)]; }

    std::vector<Element> row(Element x) const;
    std::vector<Element> column(Element y) const;

    bool column_is_permutation(Element y) const;
    bool row_is_permutation(Element x) const;
    bool columns_are_permutations() const;

    /// Table of the inverse right action: inverse()(z, y) is the unique x
    /// with x op y = z. Requires every column to be a permutation.
    OpTable inverse() const;

    std::vector<std::vector<int>> rows() const;

    /// Applies the relabeling x ↦ sigma[x-1] to rows, columns and entries.
    OpTable relabeled(std::span<const Element> sigma) const;

    /// Induced operation on `members` (sorted), renumbered 1..|members|.
    /// Requires `members` closed under this operation.
    OpTable restricted(const std::vector<Element>& members) const;

    friend bool operator==(const OpTable&, const OpTable&) = default;

private:
    std::size_t index(Element x, Element y) const {
        return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(y - 1);
    }

    int n_ = 0;
    std::vector<Element> cells_;
};

/// A finite quandle given by its operation matrix, entry (i, j) = i ▷ j.
class QuandleTable {
public:
    QuandleTable() = default;
    explicit QuandleTable(OpTable op) : op_(std::move(op)) {}

    static QuandleTable from_rows(const std::vector<std::vector<int>>& rows) {
        return QuandleTable(OpTable::from_rows(rows));
    }

    int size() const noexcept { return op_.size(); }
    Element operator()(Element x, Element y) const { return op_(x, y); }
    const OpTable& op() const noexcept { return op_; }

    friend bool operator==(const QuandleTable&, const QuandleTable&) = default;

private:
    OpTable op_;
};

/// A finite biquandle as four operation blocks, indexed 1..4:
///   op1(x,y) = x^{ȳ}, op2(x,y) = x^y, op3(x,y) = x_{ȳ}, op4(x,y) = x_y.
/// The text layout is the block matrix [B1 B2; B3 B4].
class BiquandleTable {
public:
    BiquandleTable() = default;

    /// Throws StructuralError if the blocks differ in size.
    explicit BiquandleTable(std::array<OpTable, 4> blocks);

    /// Splits a 2n×2n block matrix into its four blocks.
    static BiquandleTable from_block_matrix(const std::vector<std::vector<int>>& rows);

    int size() const noexcept { return blocks_[0].size(); }

    /// `index` is 1..4.
    const OpTable& block(int index) const;
    const std::array<OpTable, 4>& blocks() const noexcept { return blocks_; }

    Element op(int index, Element x, Element y) const { return block(index)(x, y); }

    std::vector<std::vector<int>> block_matrix() const;

    friend bool operator==(const BiquandleTable&, const BiquandleTable&) = default;

private:
    std::array<OpTable, 4> blocks_;
};

using AnyTable = std::variant<QuandleTable, BiquandleTable>;

int table_size(const AnyTable& t);

/// A subset of 1..n for some parent algebra of size n. Members are kept
/// sorted and unique.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(int parent_size, std::set<Element> members);

    static ElementSet full(int parent_size);

    int parent_size() const noexcept { return parent_size_; }
    const std::set<Element>& members() const noexcept { return members_; }
    std::vector<Element> to_vector() const { return {members_.begin(), members_.end()}; }
    bool contains(Element x) const { return members_.count(x) != 0; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    std::string to_string() const;

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
    friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

private:
    int parent_size_ = 0;
    std::set<Element> members_;
};

/// One failed axiom instance, e.g. {"quandle.iii", {2, 1, 3}}.
struct Violation {
    std::string axiom;
    std::vector<int> witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
    std::string to_string() const;
};

ValidationReport validate_quandle(const QuandleTable& t);
ValidationReport validate_biquandle(const BiquandleTable& t);

/// Order of the column permutation y ↦ (· op y). Requires the column to be
/// a permutation.
std::int64_t column_order(const OpTable& op, Element y);

/// x op^k y. Negative k uses the inverse of the column permutation and
/// requires that column to be a permutation; k ≥ 0 works on any table.
Element iterate(const OpTable& op, Element x, Element y, std::int64_t k);

/// x ▷^k y.
Element quandle_pow(const QuandleTable& t, Element x, Element y, std::int64_t k);

/// op_i^k(x, y), i in 1..4.
Element biquandle_pow(const BiquandleTable& t, int op_index, Element x, Element y,
                      std::int64_t k);

/// Smallest superset of `seed` closed under ▷ (or under all four
/// biquandle operations). Since each right action permutes a finite set,
/// the result is also closed under the inverse operations. Throws
/// PreconditionError on an empty seed.
ElementSet closure(const QuandleTable& t, const ElementSet& seed);
ElementSet closure(const BiquandleTable& t, const ElementSet& seed);
ElementSet closure(const AnyTable& t, const ElementSet& seed);

bool is_closed(const QuandleTable& t, const ElementSet& s);
bool is_closed(const BiquandleTable& t, const ElementSet& s);

/// Orbits of the right action x ↦ x ▷ y (y ranging over Q), sorted by
/// smallest member.
std::vector<ElementSet> orbits(const QuandleTable& t);

bool is_latin(const QuandleTable& t);

/// Subquandle induced on a closed subset, renumbered in increasing order.
QuandleTable subquandle(const QuandleTable& t, const ElementSet& s);

/// Transport along the bijection x ↦ sigma[x-1].
QuandleTable relabel(const QuandleTable& t, std::span<const Element> sigma);
BiquandleTable relabel(const BiquandleTable& t, std::span<const Element> sigma);

}  // namespace knotpoly
