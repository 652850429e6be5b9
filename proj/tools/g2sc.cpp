// Command-line front end: verification suites, Schubert tables, ring reductions, octonion helpers.
#include "g2sc/json_io.hpp"
#include "g2sc/octonion.hpp"
#include "g2sc/parse.hpp"
#include "g2sc/presentation.hpp"
#include "g2sc/random.hpp"
#include "g2sc/schubert.hpp"
#include "g2sc/suites.hpp"
#include "g2sc/weyl.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace g2sc;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string family = "paper";
    std::string presentation;
    std::string basis = "f";
    std::string suite = "all";
    std::string element;
    std::vector<std::string> args;
    std::string at;
};

bool json_mode(const Options& o) { return o.format == "json"; }

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("G2SC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("G2SC_SEED", std::string("not an unsigned integer: ") + env);
        }
    }
    return kDefaultSeed;
}

BasisKind basis_kind(const Options& o) { return o.basis == "e" ? BasisKind::EBasis : BasisKind::FBasis; }

const char* basis_letter(const Options& o) { return o.basis == "e" ? "e" : "f"; }

std::string default_presentation(FamilyKind k) {
    switch (k) {
        case FamilyKind::Point: return "fl-half-point";
        case FamilyKind::ChernTwisted: return "fl-half-bundle-twisted";
        case FamilyKind::EquivariantChern:
        case FamilyKind::EquivariantGraham: return "equivariant-half";
        default: return "fl-half-bundle";
    }
}

json oct_json(const Oct<Rat>& u) {
    json coords = json::array();
    coords.push_back(to_string(u.s));
    for (const auto& x : u.v) coords.push_back(to_string(x));
    return coords;
}

int cmd_verify(const Options& o, std::ostream& os) {
    std::uint64_t seed = resolve_seed(o);
    auto reports = run_suite(o.suite, seed);
    std::size_t failures = 0;
    if (json_mode(o)) {
        json j = {{"seed", seed}, {"suites", json::array()}};
        for (const auto& r : reports) {
            json s = {{"suite", r.suite}, {"ok", r.ok()}, {"checks", json::array()}};
            for (const auto& c : r.checks) s["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            j["suites"].push_back(s);
            failures += r.failures();
        }
        j["failures"] = failures;
        os << j.dump(2) << "\n";
    } else {
        os << "seed " << seed << "\n";
        for (const auto& r : reports) {
            os << "[" << r.suite << "]\n";
            for (const auto& c : r.checks) {
                os << (c.ok ? "  PASS " : "  FAIL ") << c.name << "\n";
                for (const auto& d : c.detail) os << "       " << d << "\n";
            }
            failures += r.failures();
        }
        os << (failures ? std::to_string(failures) + " failure(s)" : std::string("all checks passed")) << "\n";
    }
    return failures ? 1 : 0;
}

int cmd_table(const Options& o, std::ostream& os) {
    FamilyKind k = family_from_name(o.family);
    auto fam = generate_family(k);
    if (json_mode(o)) {
        json j = {{"family", family_name(k)}, {"entries", json::array()}};
        for (const auto& w : all_elements()) {
            auto [a, b] = w.pair();
            j["entries"].push_back(
                {{"word", w.name()}, {"pair", {a, b}}, {"length", w.length()}, {"terms", terms_json(fam[w])}});
        }
        os << j.dump(2) << "\n";
    } else {
        os << "family " << family_name(k) << "\n";
        for (const auto& w : all_elements()) {
            auto [a, b] = w.pair();
            os << w.name() << " (" << a << " " << b << ", length " << w.length() << "): " << to_string(fam[w]) << "\n";
        }
    }
    return 0;
}

std::string joined(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
    return s;
}

int cmd_reduce(const Options& o, std::ostream& os) {
    Presentation p = presentation_by_name(o.presentation.empty() ? "fl-half-bundle" : o.presentation);
    std::string text = joined(o.args);
    MPoly f = parse_poly(text);
    NormalForm nf = normal_form(p, f);
    if (json_mode(o)) {
        json coeffs = json::array();
        for (std::size_t i = 0; i < p.basis.size(); ++i)
            coeffs.push_back({{"monomial", to_string(p.basis[i])}, {"terms", terms_json(nf.coeffs[i])}});
        os << json{{"presentation", p.name}, {"input", to_string(f)}, {"normal_form", to_string(p, nf)},
                   {"basis", coeffs}}
                  .dump(2)
           << "\n";
    } else {
        os << to_string(p, nf) << "\n";
    }
    return 0;
}

int cmd_expand(const Options& o, std::ostream& os) {
    FamilyKind k = family_from_name(o.family);
    auto fam = generate_family(k);
    Presentation p = presentation_by_name(o.presentation.empty() ? default_presentation(k) : o.presentation);
    MPoly f = parse_poly(joined(o.args));
    auto coeffs = schubert_expand(f, fam, p);
    if (json_mode(o)) {
        json j = {{"family", family_name(k)}, {"presentation", p.name}, {"coefficients", json::array()}};
        for (const auto& w : all_elements())
            if (!coeffs[w.index()].is_zero())
                j["coefficients"].push_back({{"word", w.name()}, {"terms", terms_json(coeffs[w.index()])}});
        os << j.dump(2) << "\n";
    } else {
        std::string s;
        for (const auto& w : all_elements()) {
            const MPoly& c = coeffs[w.index()];
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += (c == 1 ? std::string() : "(" + to_string(c) + ")*") + "P_" + w.name();
        }
        os << (s.empty() ? "0" : s) << "\n";
    }
    return 0;
}

int cmd_oct_mul(const Options& o, std::ostream& os) {
    if (o.args.size() != 2) throw CLI::ValidationError("oct-mul", "expects two octonions");
    auto ctx = standard_forms(basis_kind(o));
    char b = basis_letter(o)[0];
    auto u = parse_oct(o.args[0], b), v = parse_oct(o.args[1], b);
    auto p = oct_mul(ctx, u, v);
    if (json_mode(o))
        os << json{{"basis", basis_letter(o)}, {"u", oct_json(u)}, {"v", oct_json(v)}, {"product", oct_json(p)},
                   {"norm_product", to_string(norm(ctx, p))}}
                  .dump(2)
           << "\n";
    else
        os << "(" << to_string(u, basis_letter(o)) << ") * (" << to_string(v, basis_letter(o))
           << ") = " << to_string(p, basis_letter(o)) << "\n";
    return 0;
}

int cmd_kernel(const Options& o, std::ostream& os) {
    if (o.args.size() != 1) throw CLI::ValidationError("kernel", "expects one vector");
    auto ctx = standard_forms(basis_kind(o));
    auto u = parse_oct(o.args[0], basis_letter(o)[0]);
    if (u.s != 0) throw CLI::ValidationError("kernel", "vector must be imaginary");
    auto ker = isotropic_kernel(ctx, u.v);
    if (json_mode(o)) {
        json j = {{"u", oct_json(u)}, {"kernel", json::array()}};
        for (const auto& v : ker) j["kernel"].push_back(oct_json(Oct<Rat>::imag(v)));
        os << j.dump(2) << "\n";
    } else {
        os << "E_u for u = " << to_string(u.v, basis_letter(o)) << ":\n";
        for (const auto& v : ker) os << "  " << to_string(v, basis_letter(o)) << "\n";
    }
    return 0;
}

int cmd_bryant(const Options& o, std::ostream& os) {
    auto gamma = standard_gamma(basis_kind(o));
    auto beta = standard_beta(basis_kind(o));
    auto rep = bryant_form(gamma);
    bool equal = rep.form == beta;
    if (json_mode(o)) {
        json m = json::array();
        for (const auto& row : rep.form.m) {
            json r = json::array();
            for (const auto& x : row) r.push_back(to_string(x));
            m.push_back(r);
        }
        os << json{{"basis", basis_letter(o)}, {"form", m}, {"nondegenerate", rep.nondegenerate},
                   {"divisible", rep.divisible}, {"equals_beta", equal}}
                  .dump(2)
           << "\n";
    } else {
        os << "Bryant form of the standard gamma (" << basis_letter(o) << "-basis):\n";
        for (const auto& row : rep.form.m) {
            os << " ";
            for (const auto& x : row) os << " " << std::setw(3) << to_string(x);
            os << "\n";
        }
        os << "nondegenerate: " << (rep.nondegenerate ? "yes" : "no") << ", equals beta: " << (equal ? "yes" : "no")
           << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_cell(const Options& o, std::ostream& os) {
    const auto& ctx = standard_forms(BasisKind::FBasis);
    std::vector<MPoly> params{X(Var::a), X(Var::b), X(Var::c), X(Var::d), X(Var::e), X(Var::g)};
    if (!o.at.empty()) {
        std::vector<MPoly> vals;
        std::stringstream ss(o.at);
        std::string piece;
        while (std::getline(ss, piece, ',')) vals.push_back(parse_poly(piece));
        if (vals.size() != 6) throw CLI::ValidationError("--at", "expects six values a,b,c,d,e,g");
        params = vals;
    }
    auto [r1, r2] = big_cell_rows<MPoly>(params[0], params[1], params[2], params[3], params[4], params[5]);
    auto p = oct_mul(ctx, Oct<MPoly>::imag(r1), Oct<MPoly>::imag(r2));
    bool iso = ctx.beta.eval(r1, r1).is_zero() && ctx.beta.eval(r2, r2).is_zero();
    bool ok = p.is_zero() && iso;
    auto row_json = [](const VecV<MPoly>& r) {
        json j = json::array();
        for (const auto& x : r) j.push_back(to_string(x));
        return j;
    };
    if (json_mode(o)) {
        os << json{{"row1", row_json(r1)}, {"row2", row_json(r2)}, {"product_zero", p.is_zero()}, {"isotropic", iso}}
                  .dump(2)
           << "\n";
    } else {
        auto show = [&](const VecV<MPoly>& r) {
            std::string s = "(";
            for (int i = 0; i < 7; ++i) s += (i ? ", " : "") + to_string(r[i]);
            return s + ")";
        };
        os << "row1 = " << show(r1) << "\nrow2 = " << show(r2) << "\n";
        os << "row1 * row2 = " << to_string(p) << "\n";
        os << "beta(row_i, row_i) = 0: " << (iso ? "yes" : "no") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_weyl(const Options& o, std::ostream& os) {
    std::vector<WeylElt> els;
    if (o.element.empty()) els = all_elements();
    else els.push_back(WeylElt::parse(o.element));
    if (json_mode(o)) {
        json j = json::array();
        for (const auto& w : els) {
            std::vector<int> perm(embed_s7(w).images.begin(), embed_s7(w).images.end());
            auto [a, b] = w.pair();
            j.push_back({{"word", w.name()}, {"pair", {a, b}}, {"length", w.length()}, {"perm", perm},
                         {"inverse", inv(w).name()}});
        }
        os << j.dump(2) << "\n";
    } else {
        for (const auto& w : els) {
            auto [a, b] = w.pair();
            os << std::left << std::setw(7) << w.name() << " " << a << " " << b << "  length " << w.length()
               << "  perm " << embed_s7(w).str() << "  inverse " << inv(w).name() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for G2 flag varieties and their Schubert classes"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::uint64_t seed_value = 0;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    auto* seed_opt = app.add_option("--seed", seed_value, "Seed for randomized checks (default: G2SC_SEED or fixed)");
    app.add_option("--out", o.out, "Write output to this file instead of stdout");

    std::string families;
    for (auto k : all_families()) families += (families.empty() ? "" : ", ") + family_name(k);
    std::string pres;
    for (const auto& n : presentation_names()) pres += (pres.empty() ? "" : ", ") + n;
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("suite", o.suite, "Suite name")->check(CLI::IsMember(suites));

    auto* table = app.add_subcommand("table", "Print the 12 Schubert polynomials of a family");
    table->add_option("--family", o.family, "One of: " + families);

    auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a polynomial in a presentation");
    reduce_cmd->add_option("--presentation", o.presentation, "One of: " + pres);
    reduce_cmd->add_option("poly", o.args, "Polynomial")->required();

    auto* expand = app.add_subcommand("expand", "Expand a class in the Schubert basis of a family");
    expand->add_option("--family", o.family, "One of: " + families);
    expand->add_option("--presentation", o.presentation, "Ring used for the expansion");
    expand->add_option("poly", o.args, "Polynomial")->required();

    auto* octmul = app.add_subcommand("oct-mul", "Multiply two octonions, e.g. \"f2\" \"f3\"");
    octmul->add_option("--basis", o.basis)->check(CLI::IsMember({"f", "e"}));
    octmul->add_option("operands", o.args, "Two octonions")->required()->expected(2);

    auto* kernel = app.add_subcommand("kernel", "Isotropic kernel E_u of an isotropic imaginary u");
    kernel->add_option("--basis", o.basis)->check(CLI::IsMember({"f", "e"}));
    kernel->add_option("u", o.args)->required()->expected(1);

    auto* bryant = app.add_subcommand("bryant", "Bilinear form induced by the standard trilinear form");
    bryant->add_option("--basis", o.basis)->check(CLI::IsMember({"f", "e"}));

    auto* cell = app.add_subcommand("cell", "Check the big-cell parametrization");
    cell->add_option("--at", o.at, "Comma-separated values for a,b,c,d,e,g (default symbolic)");

    auto* weyl = app.add_subcommand("weyl", "List W(G2), or describe one element given as word or pair");
    weyl->add_option("element", o.element);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (seed_opt->count()) o.seed = seed_value;

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            std::cerr << "cannot open " << o.out << "\n";
            return 2;
        }
    }
    std::ostream& os = o.out.empty() ? std::cout : file;
    try {
        if (*verify) return cmd_verify(o, os);
        if (*table) return cmd_table(o, os);
        if (*reduce_cmd) return cmd_reduce(o, os);
        if (*expand) return cmd_expand(o, os);
        if (*octmul) return cmd_oct_mul(o, os);
        if (*kernel) return cmd_kernel(o, os);
        if (*bryant) return cmd_bryant(o, os);
        if (*cell) return cmd_cell(o, os);
        if (*weyl) return cmd_weyl(o, os);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
