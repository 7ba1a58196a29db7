#include "hyperkit/cli.hpp"

#include "hyperkit/amenability.hpp"
#include "hyperkit/builders.hpp"
#include "hyperkit/characters.hpp"
#include "hyperkit/errors.hpp"
#include "hyperkit/io.hpp"
#include "hyperkit/uncertainty.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace hyperkit::cli {

namespace {

using io::Json;

struct Options {
    int precision = 12;
    std::string mode;
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
    std::string emit;
};

struct Context {
    Options opt;
    std::ostream& out;
    std::ostream& err;

    [[nodiscard]] std::optional<Arithmetic> mode() const {
        if (opt.mode == "exact") return Arithmetic::exact;
        if (opt.mode == "float") return Arithmetic::floating;
        return std::nullopt;
    }
    [[nodiscard]] bool show_exact() const { return opt.mode != "float"; }

    [[nodiscard]] std::string real(double x) const {
        if (x == 0.0 || std::abs(x) < std::pow(10.0, -opt.precision - 2)) x = 0.0;
        std::ostringstream s;
        s << std::setprecision(opt.precision) << x;
        return s.str();
    }
    [[nodiscard]] std::string complex(Complex z) const {
        const std::string re = real(z.real());
        const std::string im = real(z.imag());
        if (im == "0") return re;
        const std::string sign = im.front() == '-' ? "" : "+";
        if (re == "0") return im + "i";
        return re + sign + im + "i";
    }
};

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << line << '\n';
    }
}

FiniteHypergroup load(const Context& ctx, const std::string& path) {
    return FiniteHypergroup::create(io::read_hypergroup_file(path, ctx.mode()));
}

/// Exact builders produce exact hypergroups; --mode float converts.
FiniteHypergroup apply_mode(const Context& ctx, FiniteHypergroup h) {
    return ctx.mode() == Arithmetic::floating ? io::to_floating(h) : h;
}

std::string haar_text(const Context& ctx, const FiniteHypergroup& h, std::size_t x) {
    return h.exact() && ctx.show_exact() ? to_string(h.exact_haar()[x]) : ctx.real(h.haar()[x]);
}

std::string total_text(const Context& ctx, const FiniteHypergroup& h) {
    return h.exact() && ctx.show_exact() ? to_string(h.exact_total_mass()) : ctx.real(h.total_mass());
}

Json haar_json(const Context& ctx, const FiniteHypergroup& h) {
    Json doc;
    doc["hypergroup"] = h.name();
    doc["arithmetic"] = h.exact() ? "exact" : "float";
    doc["commutative"] = h.commutative();
    doc["group"] = is_group(h);
    Json weights = Json::object();
    for (std::size_t x = 0; x < h.size(); ++x) weights[h.label(x)] = haar_text(ctx, h, x);
    doc["haar"] = std::move(weights);
    doc["total"] = total_text(ctx, h);
    return doc;
}

void describe(const Context& ctx, const FiniteHypergroup& h) {
    if (ctx.opt.json) {
        Json doc = haar_json(ctx, h);
        doc["hypergroup_file"] = io::to_json(h);
        ctx.out << doc.dump(2) << '\n';
        return;
    }
    ctx.out << h.name() << ": " << h.size() << " element(s), " << (h.exact() ? "exact" : "float") << ", "
            << (h.commutative() ? "commutative" : "noncommutative") << (is_group(h) ? ", group" : "") << '\n';
    std::vector<std::vector<std::string>> rows{{"element", "involution", "haar"}};
    for (std::size_t x = 0; x < h.size(); ++x) rows.push_back({h.label(x), h.label(h.involution(x)), haar_text(ctx, h, x)});
    rows.push_back({"total", "", total_text(ctx, h)});
    print_table(ctx.out, rows);
    ctx.out << "products:\n";
    for (std::size_t x = 0; x < h.size(); ++x) {
        for (std::size_t y = 0; y < h.size(); ++y) {
            std::string line = "  " + h.label(x) + " * " + h.label(y) + " =";
            bool first = true;
            for (const auto& t : h.product(x, y)) {
                line += (first ? " " : " + ") + (h.exact() && ctx.show_exact() ? to_string(t.exact) : ctx.real(t.value)) +
                        " " + h.label(t.element);
                first = false;
            }
            ctx.out << line << '\n';
        }
    }
}

void emit(const Context& ctx, const FiniteHypergroup& h) {
    if (!ctx.opt.emit.empty()) io::write_hypergroup_file(h, ctx.opt.emit);
}

std::string value_text(const Context& ctx, const CharacterTable& t, std::size_t i, std::size_t x) {
    return t.exact() && ctx.show_exact() ? to_string(t.exact_value(i, x)) : ctx.complex(t.value(i, x));
}

std::string k_text(const Context& ctx, const CharacterTable& t, std::size_t i) {
    return t.exact() && ctx.show_exact() ? to_string(t.exact_hyperdim(i)) : ctx.real(t.hyperdim()[i]);
}

int cmd_validate(const Context& ctx, const std::string& path) {
    const RawHypergroup raw = io::read_hypergroup_file(path, ctx.mode());
    const ValidationReport report = validate(raw);
    if (ctx.opt.json) {
        Json doc;
        doc["hypergroup"] = raw.name;
        doc["passed"] = report.passed;
        Json list = Json::array();
        for (const auto& v : report.violations) {
            Json item;
            item["axiom"] = v.axiom;
            Json where = Json::array();
            for (std::size_t i : v.indices) where.push_back(raw.labels[i]);
            item["at"] = std::move(where);
            item["residual"] = ctx.real(v.residual);
            list.push_back(std::move(item));
        }
        doc["violations"] = std::move(list);
        doc["omitted"] = report.omitted;
        ctx.out << doc.dump(2) << '\n';
    } else if (report.passed) {
        ctx.out << raw.name << ": valid hypergroup (" << raw.size() << " elements, "
                << (raw.arithmetic == Arithmetic::exact ? "exact" : "float") << ")\n";
    } else {
        ctx.out << raw.name << ": " << report.violations.size() + report.omitted << " axiom violation(s)\n";
        for (const auto& v : report.violations) {
            std::string where;
            for (std::size_t i = 0; i < v.indices.size(); ++i) where += (i ? "," : "") + raw.labels[v.indices[i]];
            ctx.out << "  " << v.axiom << " at (" << where << ") residual " << ctx.real(v.residual) << '\n';
        }
        if (report.omitted) ctx.out << "  ... " << report.omitted << " more\n";
    }
    return report.passed ? kSuccess : kVerificationFailure;
}

int cmd_haar(const Context& ctx, const std::string& path) {
    const FiniteHypergroup h = load(ctx, path);
    if (ctx.opt.json) {
        ctx.out << haar_json(ctx, h).dump(2) << '\n';
        return kSuccess;
    }
    std::vector<std::vector<std::string>> rows{{"element", "haar"}};
    for (std::size_t x = 0; x < h.size(); ++x) rows.push_back({h.label(x), haar_text(ctx, h, x)});
    rows.push_back({"total", total_text(ctx, h)});
    print_table(ctx.out, rows);
    return kSuccess;
}

int cmd_chars(const Context& ctx, const std::string& path) {
    const FiniteHypergroup h = load(ctx, path);
    const CharacterTable t = characters(h, ctx.opt.seed);
    if (ctx.opt.json) {
        Json doc;
        doc["hypergroup"] = h.name();
        doc["exact"] = t.exact() && ctx.show_exact();
        Json list = Json::array();
        for (std::size_t i = 0; i < t.size(); ++i) {
            Json c;
            c["index"] = i;
            c["k"] = k_text(ctx, t, i);
            c["d"] = t.dim()[i];
            Json values = Json::object();
            for (std::size_t x = 0; x < h.size(); ++x) values[h.label(x)] = value_text(ctx, t, i, x);
            c["values"] = std::move(values);
            list.push_back(std::move(c));
        }
        doc["characters"] = std::move(list);
        doc["multiplicativity_residual"] = ctx.real(t.multiplicativity_residual());
        ctx.out << doc.dump(2) << '\n';
        return kSuccess;
    }
    ctx.out << "character table of " << h.name() << (t.exact() && ctx.show_exact() ? " (exact)" : "") << '\n';
    std::vector<std::vector<std::string>> rows{{"char", "k", "d"}};
    for (const auto& l : h.labels()) rows.front().push_back(l);
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<std::string> row{"chi" + std::to_string(i), k_text(ctx, t, i), std::to_string(t.dim()[i])};
        for (std::size_t x = 0; x < h.size(); ++x) row.push_back(value_text(ctx, t, i, x));
        rows.push_back(std::move(row));
    }
    print_table(ctx.out, rows);
    return kSuccess;
}

int cmd_dual(const Context& ctx, const std::string& path) {
    const FiniteHypergroup h = load(ctx, path);
    const CharacterTable t = characters(h, ctx.opt.seed);
    const DualResult r = dual_hypergroup(t);
    if (!r.is_hypergroup()) {
        const auto& o = r.obstruction();
        const std::string value = o.exact && ctx.show_exact() ? to_string(*o.exact) : ctx.complex(o.coefficient);
        if (ctx.opt.json) {
            Json doc;
            doc["hypergroup"] = h.name();
            doc["dual_is_hypergroup"] = false;
            doc["obstruction"] = {{"i", o.i}, {"j", o.j}, {"k", o.k}, {"coefficient", value}};
            ctx.out << doc.dump(2) << '\n';
        } else {
            ctx.out << "dual of " << h.name() << " is not a hypergroup\n"
                    << "  chi" << o.i << " * chi" << o.j << " has coefficient " << value << " on chi" << o.k << '\n';
        }
        return kVerificationFailure;
    }
    const FiniteHypergroup dual = apply_mode(ctx, r.dual());
    describe(ctx, dual);
    emit(ctx, dual);
    return kSuccess;
}

int cmd_build(const Context& ctx, const FiniteHypergroup& h) {
    const FiniteHypergroup out = apply_mode(ctx, h);
    describe(ctx, out);
    emit(ctx, out);
    return kSuccess;
}

std::vector<std::size_t> parse_subset(const FiniteHypergroup& h, const std::string& spec) {
    std::vector<std::size_t> subset;
    std::stringstream ss(spec);
    std::string label;
    while (std::getline(ss, label, ',')) {
        if (label.empty()) continue;
        auto idx = h.index_of(label);
        if (!idx) throw StructuralError("unknown element label '" + label + "' in --sub");
        subset.push_back(*idx);
    }
    if (subset.empty()) throw StructuralError("--sub needs at least one label");
    return subset;
}

int cmd_am(const Context& ctx, const std::string& path) {
    const FiniteHypergroup h = load(ctx, path);
    const CharacterTable t = characters(h, ctx.opt.seed);
    const AMReport r = amenability(t);
    const std::string value = r.exact_am && ctx.show_exact() ? to_string(*r.exact_am) : ctx.real(r.am);
    if (ctx.opt.json) {
        Json doc;
        doc["hypergroup"] = h.name();
        doc["am"] = value;
        doc["group"] = is_group(h);
        doc["residual_identity"] = ctx.real(r.residual_identity);
        doc["residual_commute"] = ctx.real(r.residual_commute);
        Json diag = Json::array();
        for (const auto& row : r.diagonal) {
            Json jr = Json::array();
            for (auto z : row) jr.push_back(ctx.complex(z));
            diag.push_back(std::move(jr));
        }
        doc["diagonal"] = std::move(diag);
        ctx.out << doc.dump(2) << '\n';
    } else {
        ctx.out << value << '\n';
    }
    return kSuccess;
}

Json report_json(const Context& ctx, const FiniteHypergroup& h, const UncertaintyReport& r) {
    Json doc;
    doc["support_size"] = ctx.real(r.support_size);
    doc["dual_mass"] = ctx.real(r.dual_mass);
    doc["lhs"] = ctx.real(r.lhs);
    doc["ratio"] = ctx.real(r.ratio);
    doc["holds"] = r.holds;
    doc["supp_tolerance"] = ctx.real(r.supp_tolerance);
    Json support = Json::array();
    for (std::size_t x : r.support) support.push_back(h.label(x));
    doc["support"] = std::move(support);
    Json dual = Json::array();
    for (std::size_t i : r.dual_support) dual.push_back("chi" + std::to_string(i));
    doc["dual_support"] = std::move(dual);
    return doc;
}

int cmd_uncertainty(const Context& ctx, const std::string& path, const std::string& fn) {
    const FiniteHypergroup h = load(ctx, path);
    const CharacterTable t = characters(h, ctx.opt.seed);
    const UncertaintyReport r = uncertainty_check(t, io::read_function_file(fn, h));
    if (ctx.opt.json) {
        ctx.out << report_json(ctx, h, r).dump(2) << '\n';
    } else {
        print_table(ctx.out, {{"lambda(H)", ctx.real(r.lhs)},
                              {"lambda(supp f)", ctx.real(r.support_size)},
                              {"dual mass", ctx.real(r.dual_mass)},
                              {"ratio", ctx.real(r.ratio)},
                              {"holds", r.holds ? "yes" : "no"}});
    }
    return r.holds ? kSuccess : kVerificationFailure;
}

int cmd_scan(const Context& ctx, const std::string& path, std::size_t random) {
    const FiniteHypergroup h = load(ctx, path);
    const CharacterTable t = characters(h, ctx.opt.seed);
    const TightnessScan s = tightness_scan(t, random, ctx.opt.seed);
    if (ctx.opt.json) {
        Json doc;
        doc["hypergroup"] = h.name();
        doc["evaluated"] = s.evaluated;
        doc["best"] = {{"witness", s.best.description}, {"ratio", ctx.real(s.best.ratio)}};
        Json subs = Json::array();
        for (const auto& e : s.subhypergroup_indicators) subs.push_back({{"witness", e.description}, {"ratio", ctx.real(e.ratio)}});
        doc["subhypergroup_indicators"] = std::move(subs);
        doc["violations"] = s.violations.size();
        ctx.out << doc.dump(2) << '\n';
    } else {
        ctx.out << "evaluated " << s.evaluated << " functions on " << h.name() << '\n'
                << "best ratio " << ctx.real(s.best.ratio) << " (" << s.best.description << ")\n";
        std::vector<std::vector<std::string>> rows{{"subhypergroup indicator", "ratio"}};
        for (const auto& e : s.subhypergroup_indicators) rows.push_back({e.description, ctx.real(e.ratio)});
        print_table(ctx.out, rows);
        if (!s.violations.empty()) ctx.out << s.violations.size() << " violation(s) of the inequality\n";
    }
    return s.violations.empty() ? kSuccess : kVerificationFailure;
}

int cmd_fourier(const Context& ctx, const std::string& path, const std::string& fn) {
    const FiniteHypergroup h = load(ctx, path);
    const CharacterTable t = characters(h, ctx.opt.seed);
    const std::vector<Complex> c = fourier(t, io::read_function_file(fn, h));
    if (ctx.opt.json) {
        Json doc;
        doc["hypergroup"] = h.name();
        Json list = Json::array();
        for (std::size_t i = 0; i < c.size(); ++i)
            list.push_back({{"character", "chi" + std::to_string(i)}, {"k", k_text(ctx, t, i)}, {"coefficient", ctx.complex(c[i])}});
        doc["coefficients"] = std::move(list);
        ctx.out << doc.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"char", "k", "coefficient"}};
        for (std::size_t i = 0; i < c.size(); ++i)
            rows.push_back({"chi" + std::to_string(i), k_text(ctx, t, i), ctx.complex(c[i])});
        print_table(ctx.out, rows);
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite hypergroup toolkit: Haar measures, characters, duals, amenability constants"};
    app.require_subcommand(1);
    Options opt;
    int code = kSuccess;

    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--precision", opt.precision, "Significant digits for floating output")->check(CLI::Range(1, 17));
        cmd->add_option("--mode", opt.mode, "Arithmetic: exact or float")->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--seed", opt.seed, "Seed for the eigen-splitting and random scans");
        cmd->add_flag("--json", opt.json, "Machine-readable output");
        cmd->add_option("--emit", opt.emit, "Write the constructed hypergroup to this file");
    };

    std::string file, file2, cayley, fn, sub, p;
    std::size_t random = 256;

    auto* validate_cmd = app.add_subcommand("validate", "Check the hypergroup axioms");
    validate_cmd->add_option("file", file, "Hypergroup file")->required();
    auto* haar_cmd = app.add_subcommand("haar", "Haar weights");
    haar_cmd->add_option("file", file, "Hypergroup file")->required();
    auto* chars_cmd = app.add_subcommand("chars", "Character table with hyperdimensions");
    chars_cmd->add_option("file", file, "Hypergroup file")->required();
    auto* dual_cmd = app.add_subcommand("dual", "Dual hypergroup or the obstruction to one");
    dual_cmd->add_option("file", file, "Hypergroup file")->required();
    auto* conj_cmd = app.add_subcommand("conj", "Conjugacy-class hypergroup of a group");
    conj_cmd->add_option("--cayley", cayley, "Cayley table file")->required();
    auto* group_cmd = app.add_subcommand("group", "A group as a hypergroup");
    group_cmd->add_option("--cayley", cayley, "Cayley table file")->required();
    auto* hp_cmd = app.add_subcommand("hp", "Two-element hypergroup H_p");
    hp_cmd->add_option("--p", p, "p >= 1, rational or decimal")->required();
    auto* join_cmd = app.add_subcommand("join", "Hypergroup join K v J");
    join_cmd->add_option("fileK", file, "Hypergroup K")->required();
    join_cmd->add_option("fileJ", file2, "Hypergroup J")->required();
    auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by a subhypergroup");
    quotient_cmd->add_option("file", file, "Hypergroup file")->required();
    quotient_cmd->add_option("--sub", sub, "Comma-separated subhypergroup labels")->required();
    auto* am_cmd = app.add_subcommand("am", "Amenability constant of l1(H, lambda)");
    am_cmd->add_option("file", file, "Hypergroup file")->required();
    auto* unc_cmd = app.add_subcommand("uncertainty", "Uncertainty inequality for one function");
    unc_cmd->add_option("file", file, "Hypergroup file")->required();
    unc_cmd->add_option("--fn", fn, "Function file")->required();
    auto* scan_cmd = app.add_subcommand("scan", "Search for functions close to equality");
    scan_cmd->add_option("file", file, "Hypergroup file")->required();
    scan_cmd->add_option("--random", random, "Number of random sparse functions");
    auto* fourier_cmd = app.add_subcommand("fourier", "Fourier coefficients of a function");
    fourier_cmd->add_option("file", file, "Hypergroup file")->required();
    fourier_cmd->add_option("--fn", fn, "Function file")->required();
    for (auto* cmd : app.get_subcommands({})) common(cmd);

    std::vector<const char*> argv{"hyperkit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kSuccess : kParseError;
    }

    if (const char* env = std::getenv("HYPERKIT_SEED"); env && *env) {
        try {
            opt.seed = std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            err << "error: HYPERKIT_SEED is not an unsigned integer\n";
            return kParseError;
        }
    }
    const Context ctx{opt, out, err};

    try {
        if (validate_cmd->parsed()) code = cmd_validate(ctx, file);
        else if (haar_cmd->parsed()) code = cmd_haar(ctx, file);
        else if (chars_cmd->parsed()) code = cmd_chars(ctx, file);
        else if (dual_cmd->parsed()) code = cmd_dual(ctx, file);
        else if (conj_cmd->parsed()) code = cmd_build(ctx, conjugacy_hypergroup(io::read_cayley_file(cayley)));
        else if (group_cmd->parsed()) code = cmd_build(ctx, group_hypergroup(io::read_cayley_file(cayley)));
        else if (hp_cmd->parsed()) code = cmd_build(ctx, ctx.mode() == Arithmetic::floating ? hp(parse_rational(p).get_d())
                                                                                             : hp(parse_rational(p)));
        else if (join_cmd->parsed()) code = cmd_build(ctx, join(load(ctx, file), load(ctx, file2)).hypergroup);
        else if (quotient_cmd->parsed()) {
            const FiniteHypergroup h = load(ctx, file);
            code = cmd_build(ctx, quotient(h, parse_subset(h, sub)).hypergroup);
        }
        else if (am_cmd->parsed()) code = cmd_am(ctx, file);
        else if (unc_cmd->parsed()) code = cmd_uncertainty(ctx, file, fn);
        else if (scan_cmd->parsed()) code = cmd_scan(ctx, file, random);
        else if (fourier_cmd->parsed()) code = cmd_fourier(ctx, file, fn);
    } catch (const VerificationError& e) {
        out << e.what() << '\n';
        return kVerificationFailure;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const NumericalDegeneracyError& e) {
        err << "numerical degeneracy: " << e.what() << '\n';
        return kNumericalDegeneracy;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
    return code;
}

}  // namespace hyperkit::cli
