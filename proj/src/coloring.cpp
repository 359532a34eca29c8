#include "knotpoly/coloring.hpp"

#include <algorithm>
#include <map>

#include "knotpoly/error.hpp"
#include "knotpoly/invariants.hpp"

namespace knotpoly {

namespace {

// value[out] = op(value[left], value[right]); solve(z, y) recovers left.
struct Relation {
    int out;
    int left;
    int right;
    const OpTable* op;
    const OpTable* solve;
};

/// Backtracking over variable assignments with propagation through
/// functional relations. Variables are chosen in index order and colors in
/// increasing order.
class RelationSearch {
public:
    RelationSearch(int variables, int colors, std::vector<Relation> relations)
        : colors_(colors), relations_(std::move(relations)), value_(variables, 0),
          watch_(variables) {
        for (std::size_t i = 0; i < relations_.size(); ++i) {
            const auto& r = relations_[i];
            for (int v : {r.out, r.left, r.right}) watch_[v].push_back(i);
        }
    }

    std::vector<Coloring> run() {
        search();
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    void search() {
        int next = -1;
        for (std::size_t v = 0; v < value_.size(); ++v) {
            if (value_[v] == 0) {
                next = static_cast<int>(v);
                break;
            }
        }
        if (next < 0) {
            found_.push_back(value_);
            return;
        }
        for (Element color = 1; color <= colors_; ++color) {
            const std::size_t mark = trail_.size();
            if (assign(next, color)) search();
            undo(mark);
        }
    }

    bool assign(int var, Element color) {
        std::vector<std::pair<int, Element>> queue{{var, color}};
        while (!queue.empty()) {
            auto [v, c] = queue.back();
            queue.pop_back();
            if (value_[v] != 0) {
                if (value_[v] != c) return false;
                continue;
            }
            value_[v] = c;
            trail_.push_back(v);
            for (std::size_t i : watch_[v]) {
                const Relation& r = relations_[i];
                const Element x = value_[r.left];
                const Element y = value_[r.right];
                const Element z = value_[r.out];
                if (x != 0 && y != 0)
                    queue.emplace_back(r.out, (*r.op)(x, y));
                else if (z != 0 && y != 0)
                    queue.emplace_back(r.left, (*r.solve)(z, y));
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            value_[trail_.back()] = 0;
            trail_.pop_back();
        }
    }

    int colors_;
    std::vector<Relation> relations_;
    Coloring value_;
    std::vector<std::vector<std::size_t>> watch_;
    std::vector<int> trail_;
    std::vector<Coloring> found_;
};

void require_permutation_columns(const OpTable& op) {
    if (!op.columns_are_permutations())
        throw PreconditionError("coloring needs every column of the target to be a permutation");
}

}  // namespace

std::vector<Coloring> quandle_colorings(const Diagram& d, const QuandleTable& t) {
    require_permutation_columns(t.op());
    const OpTable& fwd = t.op();
    const OpTable back = fwd.inverse();
    std::vector<Relation> relations;
    for (const auto& c : d.crossings()) {
        const bool positive = c.sign > 0;
        relations.push_back({d.arc_of(c.under_out), d.arc_of(c.under_in), d.arc_of(c.over_in),
                             positive ? &fwd : &back, positive ? &back : &fwd});
    }
    return RelationSearch(d.arc_count(), t.size(), std::move(relations)).run();
}

std::vector<Coloring> biquandle_colorings(const Diagram& d, const BiquandleTable& t) {
    std::array<OpTable, 4> inverses;
    for (int i = 1; i <= 4; ++i) {
        require_permutation_columns(t.block(i));
        inverses[i - 1] = t.block(i).inverse();
    }
    auto rel = [&](int out, int left, int right, int op) {
        return Relation{out, left, right, &t.block(op), &inverses[op - 1]};
    };
    std::vector<Relation> relations;
    for (const auto& c : d.crossings()) {
        if (c.sign > 0) {
            relations.push_back(rel(c.under_out, c.under_in, c.over_in, 2));
            relations.push_back(rel(c.over_out, c.over_in, c.under_in, 4));
        } else {
            relations.push_back(rel(c.under_out, c.under_in, c.over_in, 1));
            relations.push_back(rel(c.over_out, c.over_in, c.under_in, 3));
        }
    }
    return RelationSearch(d.semiarc_count(), t.size(), std::move(relations)).run();
}

std::vector<Coloring> colorings(const Diagram& d, const AnyTable& t) {
    if (const auto* q = std::get_if<QuandleTable>(&t)) return quandle_colorings(d, *q);
    return biquandle_colorings(d, std::get<BiquandleTable>(t));
}

bool is_coloring(const Diagram& d, const QuandleTable& t, const Coloring& col) {
    if (static_cast<int>(col.size()) != d.arc_count()) return false;
    for (Element e : col)
        if (e < 1 || e > t.size()) return false;
    for (const auto& c : d.crossings()) {
        const Element x = col[d.arc_of(c.under_in)];
        const Element y = col[d.arc_of(c.over_in)];
        const Element z = col[d.arc_of(c.under_out)];
        if ((c.sign > 0 ? t(x, y) : t(z, y)) != (c.sign > 0 ? z : x)) return false;
    }
    return true;
}

bool is_coloring(const Diagram& d, const BiquandleTable& t, const Coloring& col) {
    if (static_cast<int>(col.size()) != d.semiarc_count()) return false;
    for (Element e : col)
        if (e < 1 || e > t.size()) return false;
    for (const auto& c : d.crossings()) {
        const Element a = col[c.under_in];
        const Element b = col[c.over_in];
        const int under_op = c.sign > 0 ? 2 : 1;
        const int over_op = c.sign > 0 ? 4 : 3;
        if (t.op(under_op, a, b) != col[c.under_out] || t.op(over_op, b, a) != col[c.over_out])
            return false;
    }
    return true;
}

ElementSet hom_image(const Coloring& c, const AnyTable& t) {
    const int n = table_size(t);
    return closure(t, ElementSet(n, std::set<Element>(c.begin(), c.end())));
}

namespace {

// Distinct coloring images with their multiplicities.
std::map<ElementSet, std::int64_t> image_counts(const Diagram& d, const AnyTable& t) {
    std::map<std::set<Element>, std::int64_t> used;
    for (const auto& c : colorings(d, t)) ++used[std::set<Element>(c.begin(), c.end())];
    std::map<ElementSet, std::int64_t> images;
    const int n = table_size(t);
    for (const auto& [colors, count] : used) images[closure(t, ElementSet(n, colors))] += count;
    return images;
}

CycleData cycle_data(const AnyTable& t) {
    return std::visit([](const auto& table) { return CycleData(table); }, t);
}

}  // namespace

PolyMultiset phi(const Diagram& d, const AnyTable& t, std::int64_t m, std::int64_t n) {
    const CycleData cd = cycle_data(t);
    PolyMultiset out;
    for (const auto& [image, count] : image_counts(d, t))
        out.insert(cd.polynomial(image.to_vector(), m, n), count);
    return out;
}

PhiMatrix phi_matrix(const Diagram& d, const AnyTable& t) {
    const CycleData cd = cycle_data(t);
    const auto size = static_cast<std::size_t>(cd.period());
    if (cd.period() > 4096) throw PreconditionError("period too large for an invariant matrix");
    const auto images = image_counts(d, t);
    PhiMatrix out(size, std::vector<PolyMultiset>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            for (const auto& [image, count] : images)
                out[i][j].insert(cd.polynomial(image.to_vector(), static_cast<std::int64_t>(i),
                                               static_cast<std::int64_t>(j)),
                                 count);
    return out;
}

}  // namespace knotpoly
