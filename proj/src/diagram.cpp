#include "knotpoly/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "knotpoly/error.hpp"

namespace knotpoly {

namespace {

struct LabelUse {
    int count = 0;
    int entering = 0;
    int leaving = 0;
};

// Semiarc successor along the orientation, keyed by label.
std::map<int, int> successor_labels(const std::vector<Crossing>& crossings) {
    std::map<int, int> next;
    for (const auto& c : crossings) {
        next[c.under_in()] = c.under_out();
        next[c.over_in()] = c.over_out();
    }
    return next;
}

}  // namespace

PDCode make_pd(std::vector<Crossing> crossings) {
    if (crossings.empty())
        throw StructuralError("diagram has no crossings; the unknot is available as a builtin");
    std::map<int, LabelUse> uses;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        const auto& c = crossings[i];
        const std::string where = "crossing " + std::to_string(i + 1);
        if (c.sign != 1 && c.sign != -1) throw StructuralError(where + ": sign must be +1 or -1");
        for (int label : c.labels) {
            if (label < 1) throw StructuralError(where + ": labels must be positive integers");
            ++uses[label].count;
        }
        ++uses[c.under_in()].entering;
        ++uses[c.over_in()].entering;
        ++uses[c.under_out()].leaving;
        ++uses[c.over_out()].leaving;
    }
    for (const auto& [label, use] : uses) {
        if (use.count != 2)
            throw StructuralError("label " + std::to_string(label) + " appears " +
                                  std::to_string(use.count) + " times, expected 2");
        if (use.entering != 1 || use.leaving != 1)
            throw StructuralError("label " + std::to_string(label) +
                                  " must enter one crossing and leave another; "
                                  "check the crossing signs");
    }
    PDCode pd;
    pd.crossings = std::move(crossings);
    const auto next = successor_labels(pd.crossings);
    std::map<int, bool> seen;
    for (const auto& [label, succ] : next) {
        if (seen[label]) continue;
        ++pd.components;
        for (int l = label; !seen[l]; l = next.at(l)) seen[l] = true;
    }
    return pd;
}

PDCode parse_pd(std::string_view text) {
    std::vector<Crossing> crossings;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char ch) {
        if (pos >= text.size() || text[pos] != ch)
            throw ParseError(std::string("expected '") + ch + "'", pos);
        ++pos;
    };
    skip_ws();
    if (pos == text.size())
        throw ParseError("empty diagram has no crossings; use builtin:unknot", pos);
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        const std::size_t start = pos;
        expect('X');
        Crossing c;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            c.sign = text[pos] == '+' ? 1 : -1;
            ++pos;
        } else {
            throw ParseError("expected crossing sign '+' or '-'", pos);
        }
        expect('[');
        std::vector<int> labels;
        while (true) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected a positive integer label", pos);
            const std::size_t label_pos = pos;
            long long v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos++] - '0');
                if (v > 1'000'000'000) throw ParseError("label too large", pos);
            }
            if (v == 0) throw ParseError("labels must be positive", label_pos);
            labels.push_back(static_cast<int>(v));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(']');
            break;
        }
        if (labels.size() != 4)
            throw ParseError("crossing has " + std::to_string(labels.size()) +
                                 " labels, expected 4",
                             start);
        std::copy(labels.begin(), labels.end(), c.labels.begin());
        crossings.push_back(c);
    }
    return make_pd(std::move(crossings));
}

PDCode parse_pd_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("crossings") || !doc["crossings"].is_array())
        throw StructuralError("PD JSON must be an object with a \"crossings\" array");
    std::vector<Crossing> crossings;
    for (const auto& item : doc["crossings"]) {
        if (!item.is_object() || !item.contains("sign") || !item.contains("tuple"))
            throw StructuralError("each crossing needs \"sign\" and \"tuple\"");
        Crossing c;
        const auto& sign = item["sign"];
        if (sign.is_string() && (sign == "+" || sign == "-"))
            c.sign = sign == "+" ? 1 : -1;
        else if (sign.is_number_integer() && (sign == 1 || sign == -1))
            c.sign = sign.get<int>();
        else
            throw StructuralError("unknown crossing sign " + sign.dump());
        const auto& tuple = item["tuple"];
        if (!tuple.is_array() || tuple.size() != 4)
            throw StructuralError("crossing tuple must have 4 labels");
        for (std::size_t i = 0; i < 4; ++i) {
            if (!tuple[i].is_number_integer())
                throw StructuralError("crossing labels must be integers");
            c.labels[i] = tuple[i].get<int>();
        }
        crossings.push_back(c);
    }
    return make_pd(std::move(crossings));
}

PDCode read_pd(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_pd_json(text);
    return parse_pd(text);
}

std::string to_string(const PDCode& pd) {
    std::string out;
    for (const auto& c : pd.crossings) {
        if (!out.empty()) out += " ";
        out += c.sign > 0 ? "X+[" : "X-[";
        for (std::size_t i = 0; i < 4; ++i) out += (i ? "," : "") + std::to_string(c.labels[i]);
        out += "]";
    }
    return out;
}

namespace {

const std::map<std::string, std::string, std::less<>>& builtin_codes() {
    static const std::map<std::string, std::string, std::less<>> codes = {
        {"hopf", "X+[1,3,2,4] X+[3,1,4,2]"},
        {"trefoil", "X-[1,4,2,5] X-[3,6,4,1] X-[5,2,6,3]"},
        // trefoil with a negative kink spliced into semiarc 6
        {"trefoil_r1", "X-[1,4,2,5] X-[3,8,4,1] X-[5,2,6,3] X-[6,7,7,8]"},
        // trefoil with semiarc 4 pushed over semiarc 1
        {"trefoil_r2", "X-[1,4,7,8] X+[7,10,9,8] X-[9,10,2,5] X-[3,6,4,1] X-[5,2,6,3]"},
        {"figure8", "X+[4,2,5,1] X+[8,6,1,5] X-[6,3,7,4] X-[2,7,3,8]"},
        {"knot_5_1", "X-[1,6,2,7] X-[3,8,4,9] X-[5,10,6,1] X-[7,2,8,3] X-[9,4,10,5]"},
        {"knot_6_1",
         "X-[1,4,2,5] X-[7,10,8,11] X+[3,9,4,8] X+[9,3,10,2] X-[5,12,6,1] X-[11,6,12,7]"},
    };
    return codes;
}

}  // namespace

PDCode builtin_diagram(std::string_view name) {
    if (name == "unknot") return PDCode{{}, 1};
    const auto& codes = builtin_codes();
    auto it = codes.find(name);
    if (it == codes.end())
        throw PreconditionError("unknown builtin diagram '" + std::string(name) + "'");
    return parse_pd(it->second);
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names{"unknot"};
    for (const auto& [name, code] : builtin_codes()) names.push_back(name);
    return names;
}

// ---------------------------------------------------------------- Diagram

Diagram Diagram::from_pd(const PDCode& pd) {
    Diagram d;
    if (pd.crossings.empty()) {
        if (pd.components != 1)
            throw StructuralError("a diagram without crossings must be a single unknot");
        d.labels_ = {1};
        d.arc_of_ = {0};
        d.successor_ = {0};
        d.arcs_ = 1;
        d.components_ = 1;
        return d;
    }
    const PDCode checked = make_pd(pd.crossings);

    std::map<int, int> index;
    for (const auto& c : checked.crossings)
        for (int l : c.labels) index.emplace(l, 0);
    for (auto& [label, i] : index) {
        i = static_cast<int>(d.labels_.size());
        d.labels_.push_back(label);
    }
    const int count = static_cast<int>(d.labels_.size());

    d.successor_.assign(count, -1);
    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : checked.crossings) {
        Roles r;
        r.sign = c.sign;
        r.under_in = index.at(c.under_in());
        r.under_out = index.at(c.under_out());
        r.over_in = index.at(c.over_in());
        r.over_out = index.at(c.over_out());
        d.crossings_.push_back(r);
        d.successor_[r.under_in] = r.under_out;
        d.successor_[r.over_in] = r.over_out;
        parent[find(r.over_in)] = find(r.over_out);
    }

    std::map<int, int> arc_ids;
    d.arc_of_.resize(count);
    for (int s = 0; s < count; ++s) {
        auto [it, inserted] = arc_ids.emplace(find(s), static_cast<int>(arc_ids.size()));
        d.arc_of_[s] = it->second;
    }
    d.arcs_ = static_cast<int>(arc_ids.size());
    d.components_ = checked.components;
    return d;
}

Presentation presentation(const Diagram& d) {
    Presentation p;
    auto name = [](int arc) { return "x" + std::to_string(arc + 1); };
    for (int a = 0; a < d.arc_count(); ++a) p.generators.push_back(name(a));
    for (const auto& c : d.crossings()) {
        const std::string in = name(d.arc_of(c.under_in));
        const std::string over = name(d.arc_of(c.over_in));
        const std::string out = name(d.arc_of(c.under_out));
        if (c.sign > 0)
            p.relations.push_back(in + "▷" + over + "=" + out);
        else
            p.relations.push_back(out + "▷" + over + "=" + in);
    }
    return p;
}

std::string Presentation::to_string() const {
    std::ostringstream os;
    os << "⟨";
    for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
    os << " | ";
    for (std::size_t i = 0; i < relations.size(); ++i) os << (i ? ", " : "") << relations[i];
    os << "⟩";
    return os.str();
}

}  // namespace knotpoly
