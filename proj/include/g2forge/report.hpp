#pragma once

#include "g2forge/catalog.hpp"

namespace g2forge {

// Command reports. One JSON object per run with a fixed key order, so text
// and JSON renderings are both line-stable across runs and platforms.
using Json = nlohmann::ordered_json;

struct Report {
    std::string command;
    Json sections = Json::object();

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["sections"] = sections;
        return j;
    }

    std::string to_text() const {
        std::string out;
        for (auto& [name, body] : sections.items()) {
            out += name + ":\n";
            render(body, "  ", out);
        }
        return out;
    }

private:
    static bool is_leaf_array(const Json& j) {
        if (!j.is_array()) return false;
        for (const auto& v : j)
            if (v.is_object() || v.is_array()) return false;
        return true;
    }

    static std::string leaf_array_text(const Json& j) {
        std::string out = "[";
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += ", ";
            first = false;
            out += scalar_text(v);
        }
        return out + "]";
    }

    static void render(const Json& j, const std::string& indent, std::string& out) {
        if (j.is_object()) {
            for (auto& [k, v] : j.items()) {
                if (is_leaf_array(v)) {
                    out += indent + k + ": " + leaf_array_text(v) + "\n";
                } else if (v.is_object() || v.is_array()) {
                    out += indent + k + ":\n";
                    render(v, indent + "  ", out);
                } else {
                    out += indent + k + ": " + scalar_text(v) + "\n";
                }
            }
        } else if (j.is_array()) {
            for (const auto& v : j) {
                if (is_leaf_array(v)) {
                    out += indent + "- " + leaf_array_text(v) + "\n";
                } else if (v.is_object() || v.is_array()) {
                    out += indent + "-\n";
                    render(v, indent + "  ", out);
                } else {
                    out += indent + "- " + scalar_text(v) + "\n";
                }
            }
        } else {
            out += indent + scalar_text(j) + "\n";
        }
    }

    static std::string scalar_text(const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }
};

inline Json json_matrix(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json json_vector(const Vec& v) {
    Json out = Json::array();
    for (int i = 0; i < v.dim(); ++i) out.push_back(v[i].to_string());
    return out;
}

inline Json classification_section(const G2Analysis& a) {
    auto cls = a.classify();
    Json j;
    j["ring"] = a.ring() == AnalysisRing::exact ? "exact" : "float";
    j["orientation_sign"] = a.orientation_sign();
    j["volume_scale"] = a.volume_scale().to_string();
    j["metric"] = json_matrix(a.metric_gram());
    j["closed"] = cls.closed;
    j["coclosed"] = cls.coclosed;
    j["torsion_free"] = cls.torsion_free;
    j["lcc"] = cls.lcc;
    j["lcp"] = cls.lcp;
    j["lcc_subcomplex"] = a.lcc_subcomplex_check();
    return j;
}

inline Json torsion_section(const G2Analysis& a) {
    auto t = a.torsion_forms();
    Json j;
    j["tau0"] = t.tau0.to_string();
    j["tau1"] = render_form(t.tau1);
    j["tau2"] = render_form(t.tau2);
    j["tau3"] = render_form(t.tau3);
    return j;
}

inline Json cohomology_section(const CohomologyTable& t) {
    Json j;
    j["theta"] = render_form(t.theta);
    j["dims"] = t.dims;
    Json reps = Json::array();
    for (const auto& degree : t.representatives) {
        Json layer = Json::array();
        for (const auto& r : degree) layer.push_back(render_form(r));
        reps.push_back(std::move(layer));
    }
    j["representatives"] = reps;
    return j;
}

inline Json kind_section(const KindVerdict& v, const AltForm& theta) {
    Json j;
    j["kind"] = v.kind == Kind::first ? "first" : "second";
    j["theta"] = render_form(theta);
    j["automorphism_dimension"] = static_cast<int>(v.automorphism_basis.size());
    Json basis = Json::array();
    for (const auto& x : v.automorphism_basis) basis.push_back(json_vector(x));
    j["automorphism_basis"] = basis;
    j["ell_theta_image"] = v.ell_theta_surjective ? "all-of-R" : "zero";
    if (v.witness) j["witness"] = json_vector(*v.witness);
    return j;
}

inline Json certificates_section(const std::vector<Certificate>& certs) {
    Json arr = Json::array();
    int failed = 0;
    for (const auto& c : certs) {
        arr.push_back(Json(certificate_json(c)));
        if (!c.verified) ++failed;
    }
    Json j;
    j["total"] = static_cast<int>(certs.size());
    j["failed"] = failed;
    j["results"] = arr;
    return j;
}

} // namespace g2forge
