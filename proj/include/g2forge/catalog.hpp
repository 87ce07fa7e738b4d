#pragma once

#include "g2forge/parse.hpp"
#include "g2forge/su3.hpp"

#include <json.hpp>

namespace g2forge {

// Built-in registry of the algebras and structures the verification battery
// runs on, keyed by the names they are usually cited under: the eleven
// nilpotent algebras n1…n11 carrying closed G2-structures, the two
// six-dimensional coupled algebras h1, h2, and the three rank-one
// extension examples ex5.1…ex5.3.

struct CatalogEntry {
    std::string name;
    std::string provenance;
    LieAlgebra algebra;
    std::optional<AltForm> omega;         // attached SU(3) pair, adapted basis
    std::optional<AltForm> psi;
    std::optional<AltForm> phi;           // attached G2 3-form
    std::optional<AltForm> expected_lee;  // for the LCC examples
    std::vector<std::pair<std::string, Endo>> derivations;
};

namespace detail {

inline Endo diag_endo(std::vector<Rational> d) {
    Endo e(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) e.at(static_cast<int>(i), static_cast<int>(i)) = Scalar(d[i]);
    return e;
}

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    auto omega6 = parse_form("e12+e34+e56", 6, 2);
    auto psi6 = parse_form("e135-e146-e236-e245", 6, 3);
    auto phi7 = parse_form("e127+e347+e567+e135-e146-e236-e245", 7, 3);

    auto add_nilpotent = [&](const std::string& name, const std::string& tuple) {
        CatalogEntry e;
        e.name = name;
        e.provenance = "proposition 4.5 list (nilpotent algebras with closed G2-structures)";
        e.algebra = parse_structure_tuple(tuple);
        out.push_back(std::move(e));
    };
    add_nilpotent("n1", "(0,0,0,0,e12,e13,0)");
    add_nilpotent("n2", "(0,0,0,e12,e13,e23,0)");
    add_nilpotent("n3", "(0,0,e12,0,0,e13+e24,e15)");
    add_nilpotent("n4", "(0,0,e12,0,0,e13,e14+e25)");
    add_nilpotent("n5", "(0,0,0,e12,e13,e14,e15)");
    add_nilpotent("n6", "(0,0,0,e12,e13,e14+e23,e15)");
    add_nilpotent("n7", "(0,0,e12,e13,e23,e15+e24,e16+e34)");
    add_nilpotent("n8", "(0,0,e12,e13,e23,e15+e24,e16+e34+e25)");
    add_nilpotent("n9", "(0,0,e12,0,e13+e24,e14,e46+e34+e15+e23)");
    add_nilpotent("n10", "(0,0,e12,0,e13,e24+e23,e25+e34+e15+e16-3e26)");
    add_nilpotent("n11", "(0,0,0,e12,e23,-e13,2e26-2e34-2e16+2e25)");

    {
        CatalogEntry h1;
        h1.name = "h1";
        h1.provenance = "theorem 5.1 (nilpotent algebras with coupled SU(3)-structures)";
        h1.algebra = parse_structure_tuple("(0,0,0,0,e14+e23,e13-e24)");
        h1.omega = omega6;
        h1.psi = psi6;
        Endo d1 = diag_endo({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1), Rational(1)});
        Endo d2(6), d3(6);
        d2.at(2, 0) = Scalar(Rational(-1));
        d2.at(3, 1) = Scalar(Rational(-1));
        d2.at(0, 2) = Scalar(Rational(1));
        d2.at(1, 3) = Scalar(Rational(1));
        d3.at(2, 0) = Scalar(Rational(2));
        d3.at(3, 1) = Scalar(Rational(2));
        d3.at(0, 2) = Scalar(Rational(1));
        d3.at(1, 3) = Scalar(Rational(1));
        h1.derivations = {{"D1", d1}, {"D2", d2}, {"D3", d3}};
        out.push_back(std::move(h1));
    }
    {
        CatalogEntry h2;
        h2.name = "h2";
        h2.provenance = "theorem 5.1 (nilpotent algebras with coupled SU(3)-structures)";
        h2.algebra = parse_structure_tuple("(0,0,0,e13,e14+e23,e13-e15-e24)");
        h2.omega = omega6;
        h2.psi = psi6;
        out.push_back(std::move(h2));
    }

    auto add_extension = [&](const std::string& name, const std::string& tuple, const std::string& prov,
                             const AltForm& lee) {
        CatalogEntry e;
        e.name = name;
        e.provenance = prov;
        e.algebra = parse_structure_tuple(tuple);
        e.phi = phi7;
        e.expected_lee = lee;
        out.push_back(std::move(e));
    };
    auto eta = parse_form("e7", 7, 1);
    add_extension("ex5.1", "(1/2e17,1/2e27,1/2e37,1/2e47,e14+e23+e57,e13-e24+e67,0)",
                  "example 5.1 (Einstein, LCC, not exact)", -eta);
    add_extension("ex5.2", "(e37,e47,-e17,-e27,e14+e23,e13-e24,0)",
                  "example 5.2 (LCC of the first kind)", eta);
    add_extension("ex5.3", "(e37,e47,2e17,2e27,e14+e23,e13-e24,0)",
                  "example 5.3 (exact LCC of the second kind)", eta);

    {
        CatalogEntry ab6;
        ab6.name = "abelian6";
        ab6.provenance = "control case";
        ab6.algebra = LieAlgebra::abelian(6);
        ab6.omega = omega6;
        ab6.psi = psi6;
        out.push_back(std::move(ab6));
        CatalogEntry ab7;
        ab7.name = "abelian7";
        ab7.provenance = "control case";
        ab7.algebra = LieAlgebra::abelian(7);
        ab7.phi = phi7;
        out.push_back(std::move(ab7));
    }
    return out;
}

} // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
}

inline const CatalogEntry& catalog_get(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e;
    std::string msg = "unknown catalog entry '" + name + "'; available:";
    for (const auto& n : catalog_names()) msg += " " + n;
    throw Error(msg);
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct Certificate {
    std::string claim_id;
    std::string paper_ref;
    bool verified = false;
    nlohmann::json evidence;
};

inline nlohmann::json certificate_json(const Certificate& c) {
    return nlohmann::json{{"claim_id", c.claim_id},
                          {"paper_ref", c.paper_ref},
                          {"status", c.verified ? "verified" : "failed"},
                          {"evidence", c.evidence}};
}

namespace detail {

template <class F>
Certificate run_certificate(const std::string& id, const std::string& ref, F&& body) {
    Certificate c;
    c.claim_id = id;
    c.paper_ref = ref;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.verified = false;
        c.evidence["error"] = e.what();
    }
    return c;
}

} // namespace detail

// The symbolic non-existence certificate: over the generic closed 1-form
// θ = Σ θ_k e^k and the generic 2-form σ = Σ σ_jk e^jk, the d_θ-exact
// 3-form φ = dσ − θ∧σ has b_φ(e_j, e_j) identically zero at the designated
// diagonal index, so b_φ is never definite and no LCC structure exists.
struct Prop45Data {
    int diagonal_index = 0;
    Scalar entry;                        // the diagonal polynomial
    std::vector<std::string> theta_free; // surviving θ variables
};

inline Prop45Data prop45_diagonal(const LieAlgebra& g, int diagonal_index) {
    const int n = g.dim();
    std::vector<std::string> names;
    for (int k = 1; k <= n; ++k) names.push_back("t" + std::to_string(k));
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) names.push_back("s" + std::to_string(j) + std::to_string(k));
    auto vars = make_vars(names, 8);

    // Closedness constraints: dθ = 0 as a linear system on the θ_k.
    Matrix dm(static_cast<int>(multi_indices(n, 2).size()), n);
    for (int k = 1; k <= n; ++k) {
        auto col = to_coords(g.differential(k));
        for (std::size_t r = 0; r < col.size(); ++r) dm.at(static_cast<int>(r), k - 1) = col[r];
    }
    auto closed = null_space_with_columns(dm);

    Prop45Data data;
    data.diagonal_index = diagonal_index;

    // θ = Σ_m t_{f_m} · v^{(m)}: the free θ_k keep their own names and the
    // constrained ones become linear combinations of them.
    AltForm theta(n, 1);
    for (std::size_t m = 0; m < closed.basis.size(); ++m) {
        const auto& v = closed.basis[m];
        std::string var = "t" + std::to_string(closed.free_columns[m] + 1);
        for (int k = 0; k < n; ++k) {
            if (v[static_cast<std::size_t>(k)].is_zero()) continue;
            theta.add_term({static_cast<unsigned char>(k + 1)},
                           Scalar(Polynomial::variable(vars, var)) * v[static_cast<std::size_t>(k)]);
        }
        data.theta_free.push_back(var);
    }

    AltForm sigma(n, 2);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            sigma.add_term({static_cast<unsigned char>(j), static_cast<unsigned char>(k)},
                           Scalar(Polynomial::variable(vars, "s" + std::to_string(j) + std::to_string(k))));

    AltForm phi = g.d(sigma) - wedge(theta, sigma);
    data.entry = b_map_entry(phi, diagonal_index, diagonal_index);
    return data;
}

inline Certificate prop45_certificate(const std::string& name) {
    const auto& entry = catalog_get(name);
    if (name.size() < 2 || name[0] != 'n')
        throw Error("prop45_certificate expects one of n1..n11");
    int index = std::stoi(name.substr(1));
    int diagonal = index <= 6 ? 6 : 7;
    return detail::run_certificate(
        "prop-4.5-" + name, "proposition 4.5 (" + name + ")", [&](Certificate& c) {
            auto data = prop45_diagonal(entry.algebra, diagonal);
            c.verified = data.entry.is_zero();
            c.evidence["algebra"] = name;
            c.evidence["diagonal_index"] = data.diagonal_index;
            c.evidence["free_theta_variables"] = data.theta_free;
            c.evidence["polynomial"] = data.entry.to_string();
        });
}

// Control: the same computation on the abelian algebra must NOT collapse,
// otherwise the certificate machinery would be vacuous.
inline Certificate prop45_abelian_control() {
    return detail::run_certificate(
        "prop-4.5-abelian-control", "proposition 4.5 (control)", [&](Certificate& c) {
            auto data = prop45_diagonal(LieAlgebra::abelian(7), 6);
            c.verified = !data.entry.is_zero();
            c.evidence["diagonal_index"] = 6;
            c.evidence["polynomial_terms"] =
                data.entry.ring() == Ring::polynomial
                    ? static_cast<int>(data.entry.polynomial().terms().size())
                    : 0;
        });
}

// ---------------------------------------------------------------------------
// The verification battery
// ---------------------------------------------------------------------------

inline std::vector<Certificate> verify_paper() {
    using detail::run_certificate;
    std::vector<Certificate> certs;
    auto phi7 = parse_form("e127+e347+e567+e135-e146-e236-e245", 7, 3);
    auto eta = parse_form("e7", 7, 1);

    // Jacobi for every catalog entry (construction re-validates d² = 0).
    for (const auto& e : catalog_entries()) {
        certs.push_back(run_certificate("jacobi-" + e.name, e.provenance, [&](Certificate& c) {
            auto rebuilt = LieAlgebra::from_structure_constants(
                e.algebra.dim(), std::vector<AltForm>(e.algebra.differentials()));
            c.verified = rebuilt == e.algebra;
            c.evidence["tuple"] = render_tuple(e.algebra);
        }));
    }

    // SU(3) pairs and coupling constants.
    for (const char* name : {"h1", "h2"}) {
        const auto& e = catalog_get(name);
        certs.push_back(run_certificate(std::string(name) + "-su3-valid", "theorem 5.1", [&](Certificate& c) {
            auto v = validate_su3(e.algebra, *e.omega, *e.psi);
            c.verified = v.ok();
            if (!v.ok()) c.evidence["failed"] = v.failed;
        }));
        certs.push_back(run_certificate(std::string(name) + "-coupled-constant",
                                        std::string(name) == "h1" ? "section 5 (d_h1 ω = −ψ)" : "theorem 5.1",
                                        [&](Certificate& c) {
                                            auto v = validate_su3(e.algebra, *e.omega, *e.psi);
                                            auto cls = classify_su3(*v.pair);
                                            c.verified = cls.coupled() &&
                                                         *cls.coupled_constant == Scalar(Rational(-1));
                                            c.evidence["coupling_constant"] =
                                                cls.coupled_constant ? cls.coupled_constant->to_string() : "none";
                                            c.evidence["half_flat"] = cls.half_flat;
                                        }));
    }

    // Nilsoliton identity on h1.
    certs.push_back(run_certificate("eq-rs-nilsoliton-h1", "equation (RS)", [&](Certificate& c) {
        const auto& h1 = catalog_get("h1");
        auto m = MetricData::euclidean(h1.algebra);
        Endo ric = ricci_operator(h1.algebra, m);
        Endo d1 = h1.derivations[0].second;
        Endo expected = Scalar(Rational(-3)) * Endo::identity(6) + Scalar(Rational(4)) * d1;
        auto ns = nilsoliton_check(h1.algebra, m);
        c.verified = ric == expected && ns.feasible && ns.lambda == Scalar(Rational(-3)) &&
                     ns.derivation == Scalar(Rational(4)) * d1;
        c.evidence["lambda"] = ns.feasible ? ns.lambda.to_string() : "infeasible";
    }));

    // Derivations and the extension tuples.
    {
        const auto& h1 = catalog_get("h1");
        const char* exnames[3] = {"ex5.1", "ex5.2", "ex5.3"};
        for (int i = 0; i < 3; ++i) {
            const auto& [dname, dmap] = h1.derivations[static_cast<std::size_t>(i)];
            certs.push_back(run_certificate("derivation-" + dname, "section 5", [&](Certificate& c) {
                c.verified = is_derivation(h1.algebra, dmap);
            }));
            certs.push_back(run_certificate(std::string(exnames[i]) + "-extension-tuple",
                                            catalog_get(exnames[i]).provenance, [&](Certificate& c) {
                                                auto ext = rank_one_extension(h1.algebra,
                                                                              Derivation(h1.algebra, dmap));
                                                c.verified = ext.total == catalog_get(exnames[i]).algebra;
                                                c.evidence["tuple"] = render_tuple(ext.total);
                                            }));
        }
    }

    // Metric, Einstein property, Lee forms, torsion, subcomplex, exactness
    // and kind for the three examples.
    certs.push_back(run_certificate("ex-5.1-metric", "example 5.1 (g_φ = g + η²)", [&](Certificate& c) {
        G2Analysis a(catalog_get("ex5.1").algebra, phi7);
        c.verified = a.ring() == AnalysisRing::exact && a.metric_gram() == Matrix::identity(7) &&
                     a.volume_scale() == Scalar(Rational(1)) && a.orientation_sign() == 1;
    }));
    certs.push_back(run_certificate("ex-5.1-einstein", "example 5.1 (Ric = −3 Id)", [&](Certificate& c) {
        const auto& e = catalog_get("ex5.1");
        G2Analysis a(e.algebra, phi7);
        MetricData m(e.algebra, a.metric_gram());
        c.verified = ricci_operator(e.algebra, m) == Scalar(Rational(-3)) * Endo::identity(7);
    }));
    certs.push_back(run_certificate("ex-5.1-unimodularity", "example 5.1 (tr ad_{e7} = 4)", [&](Certificate& c) {
        auto p = algebra_predicates(catalog_get("ex5.1").algebra);
        c.verified = !p.unimodular && p.solvable && !p.nilpotent && p.ad_traces[6] == Scalar(Rational(4));
        c.evidence["trace_ad_e7"] = p.ad_traces[6].to_string();
    }));
    certs.push_back(run_certificate("ex-5.2-5.3-unimodular", "remark after example 5.3", [&](Certificate& c) {
        auto p2 = algebra_predicates(catalog_get("ex5.2").algebra);
        auto p3 = algebra_predicates(catalog_get("ex5.3").algebra);
        c.verified = p2.unimodular && p2.solvable && p3.unimodular && p3.solvable;
    }));

    for (const char* name : {"ex5.1", "ex5.2", "ex5.3"}) {
        const auto& e = catalog_get(name);
        std::string id(name);
        id.insert(2, "-");  // ex5.1 -> ex-5.1
        certs.push_back(run_certificate(id + "-lee-form", e.provenance, [&](Certificate& c) {
            G2Analysis a(e.algebra, phi7);
            auto cls = a.classify();
            c.verified = cls.lcc && !cls.closed && cls.lee.has_value() && *cls.lee == *e.expected_lee;
            c.evidence["lee"] = render_form(a.lee_form());
        }));
        certs.push_back(run_certificate(id + "-torsion", "section 3 remark (τ₁ = θ/3)", [&](Certificate& c) {
            G2Analysis a(e.algebra, phi7);
            auto t = a.torsion_forms();
            AltForm rhs1 = t.tau0 * a.star_phi() + Scalar(Rational(3)) * wedge(t.tau1, a.phi()) + a.star(t.tau3);
            AltForm rhs2 = Scalar(Rational(4)) * wedge(t.tau1, a.star_phi()) + wedge(t.tau2, a.phi());
            c.verified = t.tau0.is_zero() && t.tau3.is_zero() &&
                         t.tau1 == Scalar(Rational(1, 3)) * *e.expected_lee && rhs1 == a.dphi() &&
                         rhs2 == a.dstar_phi();
            c.evidence["tau2"] = render_form(t.tau2);
        }));
        certs.push_back(run_certificate(id + "-lcc-subcomplex", "proposition 3.2", [&](Certificate& c) {
            G2Analysis a(e.algebra, phi7);
            c.verified = a.lcc_subcomplex_check() && a.classify().lcc;
        }));
    }

    certs.push_back(run_certificate("ex-5.1-not-exact", "example 5.1 (φ ≠ d_θσ)", [&](Certificate& c) {
        const auto& e = catalog_get("ex5.1");
        auto r = solve_exact(e.algebra, phi7, *e.expected_lee);
        c.verified = !r.feasible && r.rank_augmented == r.rank + 1;
        c.evidence["rank"] = r.rank;
        c.evidence["rank_augmented"] = r.rank_augmented;
    }));
    certs.push_back(run_certificate("ex-5.2-exact-first-kind", "example 5.2 + proposition 4.2", [&](Certificate& c) {
        const auto& e = catalog_get("ex5.2");
        auto fk = first_kind_solve(e.algebra, phi7, *e.expected_lee);
        if (!fk.feasible) return;
        AltForm sigma = interior(fk.witness, phi7);
        G2Analysis a(e.algebra, phi7);
        auto split = a.project2(sigma);
        c.verified = d_theta(e.algebra, *e.expected_lee, sigma) == phi7 && split.kappa14.is_zero() &&
                     pair_form_vector(*e.expected_lee, fk.witness) == Scalar(Rational(-1));
        c.evidence["witness"] = render_form(sigma);
    }));
    certs.push_back(run_certificate("ex-5.3-exact-witness", "example 5.3 (φ = d_θγ)", [&](Certificate& c) {
        const auto& e = catalog_get("ex5.3");
        auto r = solve_exact(e.algebra, phi7, *e.expected_lee);
        auto gamma = parse_form("5/7e12-3/7e14+3/7e23-1/7e34-e56", 7, 2);
        G2Analysis a(e.algebra, phi7);
        auto split = a.project2(gamma);
        c.verified = r.feasible && d_theta(e.algebra, *e.expected_lee, gamma) == phi7 &&
                     d_theta(e.algebra, *e.expected_lee, r.sigma) == phi7 && !split.kappa14.is_zero();
        c.evidence["solver_sigma"] = render_form(r.sigma);
        c.evidence["gamma_in_lambda2_7"] = false;
    }));

    {
        struct KindCase {
            const char* name;
            Kind expected;
        };
        for (auto [name, expected] : {KindCase{"ex5.1", Kind::second}, KindCase{"ex5.2", Kind::first},
                                      KindCase{"ex5.3", Kind::second}}) {
            const auto& e = catalog_get(name);
            std::string id(name);
            id.insert(2, "-");
            certs.push_back(run_certificate(id + "-kind", e.provenance, [&, expected](Certificate& c) {
                auto v = kind(e.algebra, phi7, *e.expected_lee);
                auto fk = first_kind_solve(e.algebra, phi7, *e.expected_lee);
                c.verified = v.kind == expected && fk.feasible == (expected == Kind::first);
                c.evidence["kind"] = v.kind == Kind::first ? "first" : "second";
                c.evidence["automorphism_dimension"] = static_cast<int>(v.automorphism_basis.size());
            }));
        }
    }

    certs.push_back(run_certificate("ex-5.3-automorphisms", "example 5.3 (aut = span{e5, e6})", [&](Certificate& c) {
        const auto& e = catalog_get("ex5.3");
        auto basis = automorphism_algebra(e.algebra, phi7);
        bool ok = basis.size() == 2;
        for (const auto& x : basis)
            for (int i = 0; i < 7; ++i)
                if (i != 4 && i != 5 && !x[i].is_zero()) ok = false;
        // e5 and e6 lie in the span
        if (ok) {
            Matrix m(7, 2);
            for (int j = 0; j < 2; ++j)
                for (int i = 0; i < 7; ++i) m.at(i, j) = basis[static_cast<std::size_t>(j)][i];
            ok = solve_linear_exact(m, Vec::basis(7, 5).coords()).feasible &&
                 solve_linear_exact(m, Vec::basis(7, 6).coords()).feasible;
        }
        c.verified = ok;
    }));

    // Dixmier vanishing: H_θ = 0 for every nonzero closed θ in a basis.
    for (int i = 1; i <= 11; ++i) {
        std::string name = "n" + std::to_string(i);
        const auto& e = catalog_get(name);
        certs.push_back(run_certificate("dixmier-" + name, "section 4.2 (Lichnerowicz cohomology vanishes)",
                                        [&](Certificate& c) {
                                            Matrix dm(static_cast<int>(multi_indices(7, 2).size()), 7);
                                            for (int k = 1; k <= 7; ++k) {
                                                auto col = to_coords(e.algebra.differential(k));
                                                for (std::size_t r = 0; r < col.size(); ++r)
                                                    dm.at(static_cast<int>(r), k - 1) = col[r];
                                            }
                                            auto closed = null_space(dm);
                                            bool ok = !closed.empty();
                                            int checked = 0;
                                            for (const auto& v : closed) {
                                                auto theta = from_coords(7, 1, v);
                                                if (theta.is_zero()) continue;
                                                ++checked;
                                                auto table = lichnerowicz_cohomology(e.algebra, theta);
                                                for (int k = 0; k <= 7; ++k)
                                                    if (table.dims[static_cast<std::size_t>(k)] != 0) ok = false;
                                            }
                                            c.verified = ok && checked > 0;
                                            c.evidence["closed_1forms_checked"] = checked;
                                        }));
    }

    // The eleven symbolic certificates plus the control case.
    for (int i = 1; i <= 11; ++i) certs.push_back(prop45_certificate("n" + std::to_string(i)));
    certs.push_back(prop45_abelian_control());

    // The rank-one bridge predictions against the independent analyzers.
    {
        const auto& h1 = catalog_get("h1");
        auto v = validate_su3(h1.algebra, *h1.omega, *h1.psi);
        for (const auto& [dname, dmap] : h1.derivations) {
            certs.push_back(run_certificate("prop-4.2-bridge-" + dname, "proposition 4.2", [&](Certificate& c) {
                auto out = g2_from_su3(*v.pair, Derivation(h1.algebra, dmap));
                if (!out.prediction.available) return;
                G2Analysis a(out.extension.total, out.phi);
                bool ok = a.lee_form() == out.prediction.lee && a.classify().lcc;
                ok = ok && (a.classify().closed == out.prediction.closed);
                if (out.prediction.exact) {
                    ok = ok && d_theta(out.extension.total, a.lee_form(), out.prediction.exact_witness) == out.phi;
                    auto kv = kind(out.extension.total, out.phi, a.lee_form());
                    ok = ok && ((kv.kind == Kind::first) == out.prediction.first_kind);
                } else {
                    // no exactness prediction: check against the solver anyway
                    auto r = solve_exact(out.extension.total, out.phi, a.lee_form());
                    c.evidence["solver_exact"] = r.feasible;
                }
                c.verified = ok;
                c.evidence["lee"] = render_form(out.prediction.lee);
            }));
        }
    }

    certs.push_back(run_certificate("thm-4.4-roundtrip-ex-5.2", "theorem 4.4 + proposition 4.3", [&](Certificate& c) {
        const auto& e = catalog_get("ex5.2");
        Vec x = -Vec::basis(7, 7);
        auto r = split_exact_lcc(e.algebra, phi7, *e.expected_lee, x);
        const auto& h1 = catalog_get("h1");
        bool ok = r.base.algebra == h1.algebra && r.mu.is_zero() && r.validation.ok();
        // coupling constant: |c| = 1, sign fixed by the ε convention
        ok = ok && r.coupling == Scalar(Rational(1));
        auto rm = split_exact_lcc(e.algebra, phi7, *e.expected_lee, x, -1);
        ok = ok && rm.coupling == Scalar(Rational(-1)) && rm.omega == *h1.omega;
        c.verified = ok;
        c.evidence["coupling_default_epsilon"] = r.coupling.to_string();
        c.evidence["mu"] = r.mu.to_string();
    }));

    return certs;
}

inline bool all_verified(const std::vector<Certificate>& certs) {
    for (const auto& c : certs)
        if (!c.verified) return false;
    return true;
}

} // namespace g2forge
