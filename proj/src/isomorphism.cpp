#include "knotpoly/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "knotpoly/error.hpp"
#include "knotpoly/invariants.hpp"

namespace knotpoly {

namespace {

using Signature = std::vector<int>;

// Concatenated r_m and c_n counts over one period, for every operation.
std::vector<Signature> signatures(const CycleData& cd) {
    std::vector<Signature> out;
    for (Element x = 1; x <= cd.size(); ++x) {
        Signature sig;
        for (std::int64_t k = 0; k < cd.period(); ++k) {
            const ElementProfile p = cd.profile(x, k, k);
            sig.insert(sig.end(), p.r.begin(), p.r.end());
            sig.insert(sig.end(), p.c.begin(), p.c.end());
        }
        out.push_back(std::move(sig));
    }
    return out;
}

class IsoSearch {
public:
    IsoSearch(std::vector<const OpTable*> from, std::vector<const OpTable*> to,
              std::vector<std::vector<bool>> allowed)
        : from_(std::move(from)), to_(std::move(to)), allowed_(std::move(allowed)),
          n_(from_.front()->size()), image_(n_ + 1, 0), preimage_(n_ + 1, 0) {}

    std::optional<std::vector<Element>> run(const std::vector<Element>& order) {
        order_ = order;
        if (!search(0)) return std::nullopt;
        return std::vector<Element>(image_.begin() + 1, image_.end());
    }

private:
    bool search(std::size_t depth) {
        while (depth < order_.size() && image_[order_[depth]] != 0) ++depth;
        if (depth == order_.size()) return true;
        const Element x = order_[depth];
        for (Element u = 1; u <= n_; ++u) {
            if (!allowed_[x][u] || preimage_[u] != 0) continue;
            const std::size_t mark = trail_.size();
            if (assign(x, u) && search(depth + 1)) return true;
            undo(mark);
        }
        return false;
    }

    // Assigns x ↦ u and everything it forces; false on contradiction.
    bool assign(Element x, Element u) {
        std::vector<std::pair<Element, Element>> queue{{x, u}};
        while (!queue.empty()) {
            auto [a, v] = queue.back();
            queue.pop_back();
            if (image_[a] != 0) {
                if (image_[a] != v) return false;
                continue;
            }
            if (preimage_[v] != 0 || !allowed_[a][v]) return false;
            image_[a] = v;
            preimage_[v] = a;
            trail_.push_back(a);
            for (Element b = 1; b <= n_; ++b) {
                if (image_[b] == 0) continue;
                for (std::size_t k = 0; k < from_.size(); ++k) {
                    const OpTable& f = *from_[k];
                    const OpTable& g = *to_[k];
                    queue.emplace_back(f(a, b), g(image_[a], image_[b]));
                    queue.emplace_back(f(b, a), g(image_[b], image_[a]));
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const Element a = trail_.back();
            trail_.pop_back();
            preimage_[image_[a]] = 0;
            image_[a] = 0;
        }
    }

    std::vector<const OpTable*> from_;
    std::vector<const OpTable*> to_;
    std::vector<std::vector<bool>> allowed_;
    int n_;
    std::vector<Element> image_;
    std::vector<Element> preimage_;
    std::vector<Element> trail_;
    std::vector<Element> order_;
};

bool transports(const std::vector<const OpTable*>& from, const std::vector<const OpTable*>& to,
                const std::vector<Element>& phi) {
    const int n = from.front()->size();
    const int target = to.front()->size();
    if (static_cast<int>(phi.size()) != n) return false;
    if (std::any_of(phi.begin(), phi.end(), [target](Element v) { return v < 1 || v > target; }))
        return false;
    for (std::size_t k = 0; k < from.size(); ++k)
        for (Element x = 1; x <= n; ++x)
            for (Element y = 1; y <= n; ++y)
                if (phi[(*from[k])(x, y) - 1] != (*to[k])(phi[x - 1], phi[y - 1])) return false;
    return true;
}

template <class Table>
IsoResult decide(const Table& a, const Table& b, std::vector<const OpTable*> ops_a,
                 std::vector<const OpTable*> ops_b) {
    if (a.size() != b.size()) return {};
    const CycleData ca(a);
    const CycleData cb(b);
    if (ca.period() != cb.period()) return {};
    const int n = a.size();
    const auto sig_a = signatures(ca);
    const auto sig_b = signatures(cb);

    std::map<Signature, int> class_a;
    std::map<Signature, int> class_b;
    for (const auto& s : sig_a) ++class_a[s];
    for (const auto& s : sig_b) ++class_b[s];
    if (class_a != class_b) return {};

    std::vector<std::vector<bool>> allowed(n + 1, std::vector<bool>(n + 1, false));
    for (Element x = 1; x <= n; ++x)
        for (Element u = 1; u <= n; ++u) allowed[x][u] = sig_a[x - 1] == sig_b[u - 1];

    // Most constrained first: smallest profile class, ties by element.
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
        return class_a[sig_a[x - 1]] < class_a[sig_a[y - 1]];
    });

    IsoSearch search(ops_a, ops_b, std::move(allowed));
    auto phi = search.run(order);
    if (!phi) return {};
    if (!transports(ops_a, ops_b, *phi))
        throw Error("internal error: isomorphism witness failed verification");
    return {true, std::move(phi)};
}

std::vector<const OpTable*> ops_of(const QuandleTable& t) { return {&t.op()}; }
std::vector<const OpTable*> ops_of(const BiquandleTable& t) {
    return {&t.block(1), &t.block(2), &t.block(3), &t.block(4)};
}

}  // namespace

IsoResult is_isomorphic(const QuandleTable& a, const QuandleTable& b) {
    return decide(a, b, ops_of(a), ops_of(b));
}

IsoResult is_isomorphic(const BiquandleTable& a, const BiquandleTable& b) {
    return decide(a, b, ops_of(a), ops_of(b));
}

IsoResult is_isomorphic(const AnyTable& a, const AnyTable& b) {
    if (a.index() != b.index())
        throw PreconditionError("cannot compare a quandle with a biquandle");
    if (const auto* qa = std::get_if<QuandleTable>(&a))
        return is_isomorphic(*qa, std::get<QuandleTable>(b));
    return is_isomorphic(std::get<BiquandleTable>(a), std::get<BiquandleTable>(b));
}

bool is_homomorphism(const QuandleTable& a, const QuandleTable& b,
                     const std::vector<Element>& phi) {
    return transports(ops_of(a), ops_of(b), phi);
}

bool is_homomorphism(const BiquandleTable& a, const BiquandleTable& b,
                     const std::vector<Element>& phi) {
    return transports(ops_of(a), ops_of(b), phi);
}

}  // namespace knotpoly
