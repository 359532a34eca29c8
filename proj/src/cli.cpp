#include "knotpoly/cli.hpp"

#include <optional>

#include <CLI11.hpp>

#include "knotpoly/coloring.hpp"
#include "knotpoly/diagram.hpp"
#include "knotpoly/error.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/io.hpp"
#include "knotpoly/isomorphism.hpp"

namespace knotpoly {

namespace {

/// Invalid user input that is not one of the library's own error types.
class UsageError : public Error {
public:
    using Error::Error;
};

class InvalidTableError : public Error {
public:
    using Error::Error;
};

AnyTable load_table(const std::string& path, bool biquandle) {
    AnyTable t = parse_table(read_file(path), biquandle);
    const ValidationReport report = biquandle ? validate_biquandle(std::get<BiquandleTable>(t))
                                              : validate_quandle(std::get<QuandleTable>(t));
    if (!report.valid()) {
        const auto& v = report.violations.front();
        std::string witness;
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            witness += (i ? "," : "") + std::to_string(v.witness[i]);
        throw InvalidTableError(path + ": not a " + (biquandle ? "biquandle" : "quandle") +
                                " (" + std::to_string(report.violations.size()) +
                                " violations, first " + v.axiom + " at (" + witness + "))");
    }
    return t;
}

Diagram load_link(const std::string& source) {
    constexpr std::string_view prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0)
        return Diagram::from_pd(builtin_diagram(source.substr(prefix.size())));
    return Diagram::from_pd(read_pd(read_file(source)));
}

void print_matrix(std::ostream& out, const PolyMatrix& m) {
    out << "N=" << m.size() << "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j)
            out << (j ? " " : "") << canonical_string(m.at(i, j));
        out << "\n";
    }
}

struct Options {
    std::string table;
    std::string other;
    std::string target;
    std::string link;
    bool biquandle = false;
    bool list = false;
    bool matrix = false;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> n;
};

int execute(const std::string& command, const Options& o, std::ostream& out) {
    if (command == "validate") {
        const AnyTable t = parse_table(read_file(o.table), o.biquandle);
        const ValidationReport report =
            o.biquandle ? validate_biquandle(std::get<BiquandleTable>(t))
                        : validate_quandle(std::get<QuandleTable>(t));
        out << report.to_string();
        return report.valid() ? 0 : 1;
    }
    if (command == "qp" || command == "bp") {
        if (!o.m || !o.n) throw UsageError(command + " needs --m and --n");
        const AnyTable t = load_table(o.table, command == "bp");
        const Poly p = command == "bp" ? bp(std::get<BiquandleTable>(t), *o.m, *o.n)
                                       : qp(std::get<QuandleTable>(t), *o.m, *o.n);
        out << canonical_string(p) << "\n";
        return 0;
    }
    if (command == "polymatrix") {
        print_matrix(out, poly_matrix(load_table(o.table, o.biquandle)));
        return 0;
    }
    if (command == "iso") {
        const IsoResult r =
            is_isomorphic(load_table(o.table, o.biquandle), load_table(o.other, o.biquandle));
        if (!r.isomorphic) {
            out << "no\n";
            return 0;
        }
        out << "yes\nwitness";
        for (std::size_t i = 0; i < r.witness->size(); ++i)
            out << " " << i + 1 << "->" << (*r.witness)[i];
        out << "\n";
        return 0;
    }
    if (command == "colorings") {
        const AnyTable t = load_table(o.target, o.biquandle);
        const auto all = colorings(load_link(o.link), t);
        out << all.size() << "\n";
        if (o.list) {
            for (const auto& c : all) {
                for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
                out << "\n";
            }
        }
        return 0;
    }
    if (command == "invariant") {
        if (o.matrix == (o.m.has_value() || o.n.has_value()))
            throw UsageError("invariant needs either --m and --n, or --matrix");
        if (!o.matrix && !(o.m && o.n)) throw UsageError("invariant needs both --m and --n");
        const AnyTable t = load_table(o.target, o.biquandle);
        const Diagram d = load_link(o.link);
        if (!o.matrix) {
            out << render(phi(d, t, *o.m, *o.n)) << "\n";
            return 0;
        }
        const PhiMatrix pm = phi_matrix(d, t);
        out << "N=" << pm.size() << "\n";
        for (std::size_t i = 0; i < pm.size(); ++i)
            for (std::size_t j = 0; j < pm.size(); ++j)
                out << "(" << i << "," << j << ") " << render(pm[i][j]) << "\n";
        return 0;
    }
    if (command == "presentation") {
        out << presentation(load_link(o.link)).to_string() << "\n";
        return 0;
    }
    throw UsageError("no subcommand given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial invariants of finite quandles and biquandles", "knotpoly"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "check the quandle or biquandle axioms");
    validate->add_option("table", o.table, "table file")->required();
    validate->add_flag("--biquandle", o.biquandle, "read a biquandle block matrix");

    for (const char* name : {"qp", "bp"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + "_{m,n} of a table");
        sub->add_option("table", o.table, "table file")->required();
        sub->add_option("--m", o.m, "first index")->required();
        sub->add_option("--n", o.n, "second index")->required();
    }

    auto* pm = app.add_subcommand("polymatrix", "N×N polynomial matrix");
    pm->add_option("table", o.table, "table file")->required();
    pm->add_flag("--biquandle", o.biquandle, "read a biquandle block matrix");

    auto* iso = app.add_subcommand("iso", "decide isomorphism");
    iso->add_option("a", o.table, "first table file")->required();
    iso->add_option("b", o.other, "second table file")->required();
    iso->add_flag("--biquandle", o.biquandle, "read biquandle block matrices");

    auto* col = app.add_subcommand("colorings", "count colorings of a link diagram");
    col->add_option("--target", o.target, "target table file")->required();
    col->add_option("--link", o.link, "PD file or builtin:NAME")->required();
    col->add_flag("--biquandle", o.biquandle, "biquandle colorings of semiarcs");
    col->add_flag("--list", o.list, "print every coloring");

    auto* inv = app.add_subcommand("invariant", "subquandle polynomial link invariant");
    inv->add_option("--target", o.target, "target table file")->required();
    inv->add_option("--link", o.link, "PD file or builtin:NAME")->required();
    inv->add_option("--m", o.m, "first index");
    inv->add_option("--n", o.n, "second index");
    inv->add_flag("--matrix", o.matrix, "all N×N entries");
    inv->add_flag("--biquandle", o.biquandle, "biquandle target");

    auto* pres = app.add_subcommand("presentation", "knot quandle presentation of a diagram");
    pres->add_option("--link", o.link, "PD file or builtin:NAME")->required();

    auto fail = [&](const char* kind, const std::string& msg, int code) {
        err << "knotpoly: error[" << kind << "]: " << msg << "\n";
        return code;
    };

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 1);
    }

    try {
        return execute(app.get_subcommands().front()->get_name(), o, out);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), 1);
    } catch (const IoError& e) {
        return fail("io", e.what(), 1);
    } catch (const ParseError& e) {
        return fail("parse", e.what(), 1);
    } catch (const StructuralError& e) {
        return fail("structure", e.what(), 1);
    } catch (const InvalidTableError& e) {
        return fail("invalid-table", e.what(), 1);
    } catch (const ParameterError& e) {
        return fail("parameter", e.what(), 1);
    } catch (const PreconditionError& e) {
        return fail("precondition", e.what(), 1);
    } catch (const OverflowError& e) {
        return fail("overflow", e.what(), 1);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 2);
    }
}

}  // namespace knotpoly
