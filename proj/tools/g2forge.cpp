// g2forge — exact-arithmetic analysis of locally conformal closed
// G2-structures and SU(3)-structures on low-dimensional Lie algebras.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "g2forge/report.hpp"

namespace {

using namespace g2forge;

struct Options {
    std::string format = "text";
    std::string ring = "exact";
    double tolerance = 1e-9;
    std::string algebra_text;
    std::string catalog_name;
    std::string phi_text;
    std::string theta_text;
};

LieAlgebra resolve_algebra(const Options& o) {
    if (!o.algebra_text.empty() && !o.catalog_name.empty())
        throw Error("pass either --algebra or --catalog, not both");
    if (!o.algebra_text.empty()) return parse_structure_tuple(o.algebra_text);
    if (!o.catalog_name.empty()) return catalog_get(o.catalog_name).algebra;
    throw Error("an algebra is required: --algebra \"(…)\" or --catalog <name>");
}

AltForm resolve_phi(const Options& o, const LieAlgebra& g) {
    if (!o.phi_text.empty()) return parse_form(o.phi_text, g.dim(), 3);
    if (!o.catalog_name.empty()) {
        const auto& e = catalog_get(o.catalog_name);
        if (e.phi) return *e.phi;
    }
    if (g.dim() != 7) throw Error("the default 3-form needs a 7-dimensional algebra; pass --phi");
    return parse_form("e127+e347+e567+e135-e146-e236-e245", 7, 3);
}

AltForm maybe_float(const Options& o, const AltForm& f) {
    if (o.ring != "float") return f;
    AltForm out(f.dim(), f.degree());
    for (const auto& [idx, c] : f.terms()) out.add_term(idx, Scalar(c.to_double()));
    return out;
}

void emit(const Options& o, const Report& r) {
    if (o.format == "json") {
        std::cout << r.to_json().dump(2) << "\n";
    } else {
        std::cout << r.to_text();
    }
}

int cmd_analyze(const Options& o) {
    LieAlgebra g = resolve_algebra(o);
    AltForm phi = maybe_float(o, resolve_phi(o, g));
    Report r;
    r.command = "analyze";
    auto def = is_g2(phi, o.tolerance);
    if (!def.definite) {
        Json j;
        j["definite"] = false;
        r.sections["classification"] = j;
        emit(o, r);
        return 0;
    }
    G2Analysis a(g, phi, o.tolerance);
    Json cls = classification_section(a);
    cls["definite"] = true;
    r.sections["classification"] = cls;
    r.sections["torsion"] = torsion_section(a);
    r.sections["lee"] = render_form(a.lee_form());
    emit(o, r);
    return 0;
}

int cmd_cohomology(const Options& o) {
    LieAlgebra g = resolve_algebra(o);
    if (o.theta_text.empty()) throw Error("cohomology requires --theta <1-form>");
    AltForm theta = parse_form(o.theta_text, g.dim(), 1);
    Report r;
    r.command = "cohomology";
    r.sections["cohomology"] = cohomology_section(lichnerowicz_cohomology(g, theta));
    emit(o, r);
    return 0;
}

int cmd_exact(const Options& o) {
    LieAlgebra g = resolve_algebra(o);
    AltForm phi = resolve_phi(o, g);
    AltForm theta = o.theta_text.empty() ? G2Analysis(g, phi, o.tolerance).lee_form()
                                         : parse_form(o.theta_text, g.dim(), 1);
    auto res = solve_exact(g, phi, theta);
    Report r;
    r.command = "exact";
    Json j;
    j["theta"] = render_form(theta);
    j["exact"] = res.feasible;
    j["rank"] = res.rank;
    j["rank_augmented"] = res.rank_augmented;
    if (res.feasible) j["sigma"] = render_form(res.sigma);
    r.sections["cohomology"] = j;
    emit(o, r);
    return 0;
}

int cmd_kind(const Options& o) {
    LieAlgebra g = resolve_algebra(o);
    AltForm phi = resolve_phi(o, g);
    G2Analysis a(g, phi, o.tolerance);
    AltForm theta = o.theta_text.empty() ? a.lee_form() : parse_form(o.theta_text, g.dim(), 1);
    auto cls = a.classify();
    if (!cls.lcc || !cls.lee.has_value() || *cls.lee != theta) {
        std::cerr << "g2forge: the structure is not LCC with the given Lee form\n";
        return 1;
    }
    auto v = kind(g, phi, theta);
    auto fk = first_kind_solve(g, phi, theta);
    Report r;
    r.command = "kind";
    Json j = kind_section(v, theta);
    j["first_kind_witness_solvable"] = fk.feasible;
    r.sections["kind"] = j;
    emit(o, r);
    if ((v.kind == Kind::first) != fk.feasible) {
        std::cerr << "g2forge: internal cross-check mismatch between kind() and first_kind_solve()\n";
        return 1;
    }
    return 0;
}

int cmd_extend(const Options& o, const std::string& base_text, const std::string& derivation_text) {
    LieAlgebra base = parse_structure_tuple(base_text);
    Endo d = parse_matrix(derivation_text, base.dim());
    if (!is_derivation(base, d)) throw Error("the matrix is not a derivation of the base algebra");
    auto ext = rank_one_extension(base, Derivation(base, d));
    auto preds = algebra_predicates(ext.total);
    Report r;
    r.command = "extend";
    Json j;
    j["base"] = render_tuple(base);
    j["tuple"] = render_tuple(ext.total);
    j["eta_index"] = ext.eta_index;
    j["nilpotent"] = preds.nilpotent;
    j["solvable"] = preds.solvable;
    j["unimodular"] = preds.unimodular;
    r.sections["extension"] = j;
    emit(o, r);
    return 0;
}

int cmd_catalog(const Options& o, bool list, const std::string& name) {
    Report r;
    r.command = "catalog";
    if (list) {
        Json arr = Json::array();
        for (const auto& e : catalog_entries()) {
            Json j;
            j["name"] = e.name;
            j["provenance"] = e.provenance;
            j["dim"] = e.algebra.dim();
            arr.push_back(std::move(j));
        }
        Json j;
        j["entries"] = arr;
        r.sections["catalog"] = j;
    } else {
        const auto& e = catalog_get(name);
        Json j;
        j["name"] = e.name;
        j["provenance"] = e.provenance;
        j["tuple"] = render_tuple(e.algebra);
        auto preds = algebra_predicates(e.algebra);
        j["nilpotent"] = preds.nilpotent;
        j["solvable"] = preds.solvable;
        j["unimodular"] = preds.unimodular;
        if (e.omega) j["omega"] = render_form(*e.omega);
        if (e.psi) j["psi"] = render_form(*e.psi);
        if (e.phi) j["phi"] = render_form(*e.phi);
        if (e.expected_lee) j["lee"] = render_form(*e.expected_lee);
        if (!e.derivations.empty()) {
            Json ds = Json::object();
            for (const auto& [dn, dm] : e.derivations) ds[dn] = json_matrix(dm.matrix());
            j["derivations"] = ds;
        }
        r.sections["catalog"] = j;
    }
    emit(o, r);
    return 0;
}

int cmd_verify_paper(const Options& o) {
    auto certs = verify_paper();
    Report r;
    r.command = "verify-paper";
    r.sections["certificates"] = certificates_section(certs);
    emit(o, r);
    return all_verified(certs) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* env = std::getenv("G2FORGE_FORMAT")) opt.format = env;

    CLI::App app{"exact-arithmetic analysis of LCC G2-structures on Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--ring", opt.ring, "coefficient ring: exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tolerance", opt.tolerance, "residual tolerance for the float ring");

    auto add_inputs = [&](CLI::App* sub, bool with_phi, bool with_theta) {
        sub->add_option("--algebra", opt.algebra_text, "structure tuple, e.g. \"(0,0,0,0,e12,e13,0)\"");
        sub->add_option("--catalog", opt.catalog_name, "built-in entry name (see `catalog list`)");
        if (with_phi) sub->add_option("--phi", opt.phi_text, "3-form (default: standard form / attached)");
        if (with_theta) sub->add_option("--theta", opt.theta_text, "closed 1-form, e.g. \"e7\"");
    };

    auto* analyze = app.add_subcommand("analyze", "classify a G2-structure: metric, torsion, Lee form");
    add_inputs(analyze, true, false);
    auto* cohomology = app.add_subcommand("cohomology", "Lichnerowicz cohomology relative to a closed 1-form");
    add_inputs(cohomology, false, true);
    auto* exact = app.add_subcommand("exact", "solve d_theta(sigma) = phi or prove infeasibility");
    add_inputs(exact, true, true);
    auto* kindcmd = app.add_subcommand("kind", "first/second kind of an LCC structure");
    add_inputs(kindcmd, true, true);

    std::string base_text, derivation_text;
    auto* extend = app.add_subcommand("extend", "rank-one extension by a derivation");
    extend->add_option("--base", base_text, "structure tuple of the base algebra")->required();
    extend->add_option("--derivation", derivation_text, "dim² rationals (row-major) or a JSON array")->required();

    auto* catalog = app.add_subcommand("catalog", "browse the built-in algebra registry");
    auto* cat_list = catalog->add_subcommand("list", "list entries");
    std::string show_name;
    auto* cat_show = catalog->add_subcommand("show", "show one entry");
    cat_show->add_option("name", show_name, "entry name")->required();
    catalog->require_subcommand(1);
    (void)cat_list;

    auto* verify = app.add_subcommand("verify-paper", "run the complete certificate battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return cmd_analyze(opt);
        if (*cohomology) return cmd_cohomology(opt);
        if (*exact) return cmd_exact(opt);
        if (*kindcmd) return cmd_kind(opt);
        if (*extend) return cmd_extend(opt, base_text, derivation_text);
        if (*catalog) return cmd_catalog(opt, cat_list->parsed(), show_name);
        if (*verify) return cmd_verify_paper(opt);
    } catch (const ParseError& e) {
        std::cerr << "g2forge: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "g2forge: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "g2forge: internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
