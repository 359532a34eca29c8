#include "knotpoly/table.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "knotpoly/error.hpp"

namespace knotpoly {

namespace {

std::vector<int> inverse_permutation(std::span<const Element> sigma, int n) {
    if (static_cast<int>(sigma.size()) != n)
        throw PreconditionError("relabeling has " + std::to_string(sigma.size()) +
                                " entries, expected " + std::to_string(n));
    std::vector<int> inv(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = sigma[i];
        if (v < 1 || v > n || inv[v - 1] != 0)
            throw PreconditionError("relabeling is not a permutation of 1.." + std::to_string(n));
        inv[v - 1] = i + 1;
    }
    return inv;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    std::int64_t g = std::gcd(a, b);
    std::int64_t q = a / g;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(q, b, &out)) throw OverflowError("lcm overflows 64 bits");
    return out;
}

}  // namespace

// ---------------------------------------------------------------- OpTable

OpTable OpTable::from_rows(const std::vector<std::vector<int>>& rows) {
    const auto n = rows.size();
    if (n == 0) throw StructuralError("operation table is empty");
    OpTable t;
    t.n_ = static_cast<int>(n);
    t.cells_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw StructuralError("row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            int v = rows[i][j];
            if (v < 1 || v > t.n_)
                throw StructuralError("entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ") = " + std::to_string(v) +
                                      " is outside 1.." + std::to_string(n));
            t.cells_.push_back(v);
        }
    }
    return t;
}

std::vector<Element> OpTable::row(Element x) const {
    return {cells_.begin() + static_cast<std::ptrdiff_t>(index(x, 1)),
            cells_.begin() + static_cast<std::ptrdiff_t>(index(x, 1) + n_)};
}

std::vector<Element> OpTable::column(Element y) const {
    std::vector<Element> col(n_);
    for (int x = 1; x <= n_; ++x) col[x - 1] = (*this)(x, y);
    return col;
}

bool OpTable::column_is_permutation(Element y) const {
    std::vector<bool> seen(n_ + 1, false);
    for (int x = 1; x <= n_; ++x) {
        int v = (*this)(x, y);
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool OpTable::row_is_permutation(Element x) const {
    std::vector<bool> seen(n_ + 1, false);
    for (int y = 1; y <= n_; ++y) {
        int v = (*this)(x, y);
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool OpTable::columns_are_permutations() const {
    for (int y = 1; y <= n_; ++y)
        if (!column_is_permutation(y)) return false;
    return true;
}

OpTable OpTable::inverse() const {
    OpTable inv;
    inv.n_ = n_;
    inv.cells_.assign(cells_.size(), 0);
    for (int y = 1; y <= n_; ++y) {
        for (int x = 1; x <= n_; ++x) {
            int z = (*this)(x, y);
            auto& slot = inv.cells_[inv.index(z, y)];
            if (slot != 0)
                throw PreconditionError("column " + std::to_string(y) +
                                        " is not a permutation; no inverse operation");
            slot = x;
        }
    }
    return inv;
}

std::vector<std::vector<int>> OpTable::rows() const {
    std::vector<std::vector<int>> out;
    out.reserve(n_);
    for (int x = 1; x <= n_; ++x) out.push_back(row(x));
    return out;
}

OpTable OpTable::relabeled(std::span<const Element> sigma) const {
    inverse_permutation(sigma, n_);
    OpTable out;
    out.n_ = n_;
    out.cells_.assign(cells_.size(), 0);
    for (int x = 1; x <= n_; ++x)
        for (int y = 1; y <= n_; ++y)
            out.cells_[out.index(sigma[x - 1], sigma[y - 1])] = sigma[(*this)(x, y) - 1];
    return out;
}

OpTable OpTable::restricted(const std::vector<Element>& members) const {
    std::map<Element, int> renumber;
    for (Element m : members) renumber.emplace(m, static_cast<int>(renumber.size()) + 1);
    std::vector<std::vector<int>> rows(members.size(), std::vector<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j < members.size(); ++j) {
            auto it = renumber.find((*this)(members[i], members[j]));
            if (it == renumber.end())
                throw PreconditionError("subset is not closed under the operation");
            rows[i][j] = it->second;
        }
    }
    return from_rows(rows);
}

// --------------------------------------------------------- BiquandleTable

BiquandleTable::BiquandleTable(std::array<OpTable, 4> blocks) : blocks_(std::move(blocks)) {
    for (const auto& b : blocks_)
        if (b.size() != blocks_[0].size() || b.size() == 0)
            throw StructuralError("biquandle blocks must be nonempty and of equal size");
}

BiquandleTable BiquandleTable::from_block_matrix(const std::vector<std::vector<int>>& rows) {
    const auto total = rows.size();
    if (total == 0 || total % 2 != 0)
        throw StructuralError("biquandle block matrix must have an even, nonzero number of rows");
    const auto n = total / 2;
    std::array<std::vector<std::vector<int>>, 4> parts;
    for (auto& p : parts) p.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < total; ++i) {
        if (rows[i].size() != total)
            throw StructuralError("block matrix row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(total));
        for (std::size_t j = 0; j < total; ++j) {
            std::size_t block = (i < n ? 0 : 2) + (j < n ? 0 : 1);
            parts[block][i % n][j % n] = rows[i][j];
        }
    }
    return BiquandleTable({OpTable::from_rows(parts[0]), OpTable::from_rows(parts[1]),
                           OpTable::from_rows(parts[2]), OpTable::from_rows(parts[3])});
}

const OpTable& BiquandleTable::block(int index) const {
    if (index < 1 || index > 4)
        throw PreconditionError("biquandle operation index must be 1..4, got " +
                                std::to_string(index));
    return blocks_[index - 1];
}

std::vector<std::vector<int>> BiquandleTable::block_matrix() const {
    const int n = size();
    std::vector<std::vector<int>> out(2 * n, std::vector<int>(2 * n));
    for (int b = 0; b < 4; ++b) {
        const int r0 = (b / 2) * n;
        const int c0 = (b % 2) * n;
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) out[r0 + x - 1][c0 + y - 1] = blocks_[b](x, y);
    }
    return out;
}

int table_size(const AnyTable& t) {
    return std::visit([](const auto& table) { return table.size(); }, t);
}

// ------------------------------------------------------------- ElementSet

ElementSet::ElementSet(int parent_size, std::set<Element> members)
    : parent_size_(parent_size), members_(std::move(members)) {
    for (Element m : members_)
        if (m < 1 || m > parent_size_)
            throw PreconditionError("element " + std::to_string(m) + " is outside 1.." +
                                    std::to_string(parent_size_));
}

ElementSet ElementSet::full(int parent_size) {
    std::set<Element> all;
    for (int x = 1; x <= parent_size; ++x) all.insert(x);
    return ElementSet(parent_size, std::move(all));
}

std::string ElementSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Element m : members_) {
        if (!first) out += ",";
        out += std::to_string(m);
        first = false;
    }
    return out + "}";
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    os << (valid() ? "valid" : "invalid") << "\n";
    for (const auto& v : violations) {
        os << "violation " << v.axiom << " (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
        os << ")\n";
    }
    return os.str();
}

// ------------------------------------------------------------- validation

namespace {

void check_columns(const OpTable& op, const std::string& axiom, std::vector<int> prefix,
                   std::vector<Violation>& out) {
    const int n = op.size();
    for (int y = 1; y <= n; ++y) {
        std::vector<bool> seen(n + 1, false);
        for (int x = 1; x <= n; ++x) {
            int v = op(x, y);
            if (seen[v]) {
                auto w = prefix;
                w.push_back(y);
                w.push_back(v);
                out.push_back({axiom, std::move(w)});
                break;
            }
            seen[v] = true;
        }
    }
}

}  // namespace

ValidationReport validate_quandle(const QuandleTable& t) {
    ValidationReport report;
    auto& out = report.violations;
    const auto& op = t.op();
    const int n = t.size();
    for (int a = 1; a <= n; ++a)
        if (op(a, a) != a) out.push_back({"quandle.i", {a}});
    check_columns(op, "quandle.ii", {}, out);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                if (op(op(a, b), c) != op(op(a, c), op(b, c)))
                    out.push_back({"quandle.iii", {a, b, c}});
    return report;
}

ValidationReport validate_biquandle(const BiquandleTable& t) {
    ValidationReport report;
    auto& out = report.violations;
    const int n = t.size();
    const auto& o1 = t.block(1);
    const auto& o2 = t.block(2);
    const auto& o3 = t.block(3);
    const auto& o4 = t.block(4);

    for (int b = 1; b <= 4; ++b) check_columns(t.block(b), "biquandle.columns", {b}, out);

    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            if (o1(o2(a, b), o4(b, a)) != a) out.push_back({"biquandle.1.i", {a, b}});
            if (o3(o4(b, a), o2(a, b)) != b) out.push_back({"biquandle.1.ii", {a, b}});
            if (o2(o1(a, b), o3(b, a)) != a) out.push_back({"biquandle.1.iii", {a, b}});
            if (o4(o3(b, a), o1(a, b)) != b) out.push_back({"biquandle.1.iv", {a, b}});
        }
    }

    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            bool found_x = false;
            bool found_y = false;
            for (int x = 1; x <= n && !found_x; ++x)
                found_x = x == o2(a, o3(b, x)) && a == o1(x, b) && b == o4(o3(b, x), a);
            for (int y = 1; y <= n && !found_y; ++y)
                found_y = y == o1(a, o4(b, y)) && a == o2(y, b) && b == o3(o4(b, y), a);
            if (!found_x) out.push_back({"biquandle.2.x", {a, b}});
            if (!found_y) out.push_back({"biquandle.2.y", {a, b}});
        }
    }

    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            for (int c = 1; c <= n; ++c) {
                if (o2(o2(a, b), c) != o2(o2(a, o4(c, b)), o2(b, c)))
                    out.push_back({"biquandle.3.i", {a, b, c}});
                if (o4(o4(c, b), a) != o4(o4(c, o2(a, b)), o4(b, a)))
                    out.push_back({"biquandle.3.ii", {a, b, c}});
                if (o2(o4(b, a), o4(c, o2(a, b))) != o4(o2(b, c), o2(a, o4(c, b))))
                    out.push_back({"biquandle.3.iii", {a, b, c}});
                if (o1(o1(a, b), c) != o1(o1(a, o3(c, b)), o1(b, c)))
                    out.push_back({"biquandle.3.iv", {a, b, c}});
                if (o3(o3(c, b), a) != o3(o3(c, o1(a, b)), o3(b, a)))
                    out.push_back({"biquandle.3.v", {a, b, c}});
                if (o1(o3(b, a), o3(c, o1(a, b))) != o3(o1(b, c), o1(a, o3(c, b))))
                    out.push_back({"biquandle.3.vi", {a, b, c}});
            }
        }
    }

    for (int a = 1; a <= n; ++a) {
        int xs = 0;
        int ys = 0;
        for (int x = 1; x <= n; ++x)
            if (x == o4(a, x) && a == o2(x, a)) ++xs;
        for (int y = 1; y <= n; ++y)
            if (y == o1(a, y) && a == o3(y, a)) ++ys;
        if (xs != 1) out.push_back({"biquandle.4.x", {a}});
        if (ys != 1) out.push_back({"biquandle.4.y", {a}});
    }
    return report;
}

// ------------------------------------------------------- iterated actions

std::int64_t column_order(const OpTable& op, Element y) {
    if (!op.column_is_permutation(y))
        throw PreconditionError("column " + std::to_string(y) + " is not a permutation");
    const int n = op.size();
    std::vector<bool> seen(n + 1, false);
    std::int64_t order = 1;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        std::int64_t len = 0;
        for (int x = start; !seen[x]; x = op(x, y)) {
            seen[x] = true;
            ++len;
        }
        order = checked_lcm(order, len);
    }
    return order;
}

Element iterate(const OpTable& op, Element x, Element y, std::int64_t k) {
    const int n = op.size();
    if (x < 1 || x > n || y < 1 || y > n)
        throw PreconditionError("element outside 1.." + std::to_string(n));
    if (op.column_is_permutation(y)) {
        std::vector<Element> cycle{x};
        for (Element z = op(x, y); z != x; z = op(z, y)) cycle.push_back(z);
        const auto len = static_cast<std::int64_t>(cycle.size());
        return cycle[static_cast<std::size_t>(((k % len) + len) % len)];
    }
    if (k < 0)
        throw PreconditionError("negative power needs column " + std::to_string(y) +
                                " to be a permutation");
    // Walk the functional graph until k is exhausted or the path repeats.
    std::vector<std::int64_t> first_visit(n + 1, -1);
    std::vector<Element> path;
    Element z = x;
    for (std::int64_t step = 0; step < k; ++step) {
        if (first_visit[z] >= 0) {
            const std::int64_t start = first_visit[z];
            const std::int64_t len = step - start;
            return path[static_cast<std::size_t>(start + (k - start) % len)];
        }
        first_visit[z] = step;
        path.push_back(z);
        z = op(z, y);
    }
    return z;
}

Element quandle_pow(const QuandleTable& t, Element x, Element y, std::int64_t k) {
    return iterate(t.op(), x, y, k);
}

Element biquandle_pow(const BiquandleTable& t, int op_index, Element x, Element y,
                      std::int64_t k) {
    return iterate(t.block(op_index), x, y, k);
}

// ---------------------------------------------------- closure and orbits

namespace {

template <std::size_t K>
ElementSet close_under(const std::array<const OpTable*, K>& ops, const ElementSet& seed) {
    if (seed.empty()) throw PreconditionError("closure of the empty set is undefined");
    const int n = ops[0]->size();
    if (seed.parent_size() != n)
        throw PreconditionError("seed belongs to an algebra of size " +
                                std::to_string(seed.parent_size()) + ", table has size " +
                                std::to_string(n));
    std::vector<bool> in(n + 1, false);
    std::vector<Element> members;
    std::deque<Element> pending;
    auto add = [&](Element e) {
        if (!in[e]) {
            in[e] = true;
            pending.push_back(e);
        }
    };
    for (Element e : seed.members()) add(e);
    while (!pending.empty()) {
        Element u = pending.front();
        pending.pop_front();
        members.push_back(u);
        for (Element v : members) {
            for (const OpTable* op : ops) {
                add((*op)(u, v));
                add((*op)(v, u));
            }
        }
    }
    return ElementSet(n, std::set<Element>(members.begin(), members.end()));
}

template <std::size_t K>
bool closed_under(const std::array<const OpTable*, K>& ops, const ElementSet& s) {
    for (Element a : s.members())
        for (Element b : s.members())
            for (const OpTable* op : ops)
                if (!s.contains((*op)(a, b))) return false;
    return true;
}

}  // namespace

ElementSet closure(const QuandleTable& t, const ElementSet& seed) {
    return close_under(std::array<const OpTable*, 1>{&t.op()}, seed);
}

ElementSet closure(const BiquandleTable& t, const ElementSet& seed) {
    return close_under(std::array<const OpTable*, 4>{&t.block(1), &t.block(2), &t.block(3),
                                                     &t.block(4)},
                       seed);
}

ElementSet closure(const AnyTable& t, const ElementSet& seed) {
    return std::visit([&](const auto& table) { return closure(table, seed); }, t);
}

bool is_closed(const QuandleTable& t, const ElementSet& s) {
    return s.parent_size() == t.size() &&
           closed_under(std::array<const OpTable*, 1>{&t.op()}, s);
}

bool is_closed(const BiquandleTable& t, const ElementSet& s) {
    return s.parent_size() == t.size() &&
           closed_under(std::array<const OpTable*, 4>{&t.block(1), &t.block(2), &t.block(3),
                                                      &t.block(4)},
                        s);
}

std::vector<ElementSet> orbits(const QuandleTable& t) {
    const int n = t.size();
    std::vector<int> label(n + 1, 0);
    std::vector<ElementSet> out;
    for (int start = 1; start <= n; ++start) {
        if (label[start] != 0) continue;
        const int id = static_cast<int>(out.size()) + 1;
        std::set<Element> members;
        std::deque<Element> pending{start};
        label[start] = id;
        while (!pending.empty()) {
            Element x = pending.front();
            pending.pop_front();
            members.insert(x);
            for (int y = 1; y <= n; ++y) {
                Element z = t(x, y);
                if (label[z] == 0) {
                    label[z] = id;
                    pending.push_back(z);
                }
            }
        }
        out.emplace_back(n, std::move(members));
    }
    return out;
}

bool is_latin(const QuandleTable& t) {
    for (int x = 1; x <= t.size(); ++x)
        if (!t.op().row_is_permutation(x)) return false;
    return true;
}

QuandleTable subquandle(const QuandleTable& t, const ElementSet& s) {
    if (s.empty()) throw PreconditionError("empty subquandle");
    return QuandleTable(t.op().restricted(s.to_vector()));
}

QuandleTable relabel(const QuandleTable& t, std::span<const Element> sigma) {
    return QuandleTable(t.op().relabeled(sigma));
}

BiquandleTable relabel(const BiquandleTable& t, std::span<const Element> sigma) {
    return BiquandleTable({t.block(1).relabeled(sigma), t.block(2).relabeled(sigma),
                           t.block(3).relabeled(sigma), t.block(4).relabeled(sigma)});
}

}  // namespace knotpoly
