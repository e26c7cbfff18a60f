#pragma once

#include "homology.hpp"
#include "presentation_file.hpp"
#include "quad.hpp"
#include "spinc.hpp"
#include "torsion.hpp"

#include <json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace spinq {

/// A command outcome in both machine- and human-readable form.  The JSON
/// document is the contract: rationals appear as reduced "p/q" strings,
/// arbitrary-precision integers as decimal strings, and only the Gauss
/// residual diagnostics are floating point.
struct Report {
    nlohmann::json data;
    std::string text;
};

namespace detail {

inline nlohmann::json matrix_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string rational_str(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

constexpr std::size_t table_print_cap = 1000;

} // namespace detail

inline Report report_analyze(const PresentationFile& pf, const HomologyGroup& g) {
    nlohmann::json j;
    j["command"] = "analyze";
    j["name"] = pf.name;
    j["n"] = pf.n;
    j["matrix"] = detail::matrix_json(g.matrix());
    j["det"] = g.det().str();
    j["order"] = g.order().str();
    nlohmann::json factors = nlohmann::json::array();
    for (const Int& d : g.invariant_factors()) factors.push_back(d.str());
    j["invariant_factors"] = factors;

    nlohmann::json gen_gram = nlohmann::json::array();
    for (std::size_t i = 0; i < g.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < g.rank(); ++k)
            row.push_back(g.linking(g.generator(i), g.generator(k)).str());
        gen_gram.push_back(std::move(row));
    }
    j["linking_on_generators"] = gen_gram;

    const bool full = g.order() <= 100;
    j["truncated"] = !full;
    std::ostringstream out;
    out << "presentation";
    if (!pf.name.empty()) out << " '" << pf.name << "'";
    out << ": n = " << pf.n << ", det = " << g.det() << "\n";
    out << "|H| = " << g.order() << ", factors [";
    for (std::size_t i = 0; i < g.invariant_factors().size(); ++i)
        out << (i ? ", " : "") << g.invariant_factors()[i];
    out << "]\n";
    if (full) {
        nlohmann::json classes = nlohmann::json::array();
        nlohmann::json table = nlohmann::json::array();
        std::vector<HomologyClass> all = g.all_classes();
        for (const HomologyClass& a : all) classes.push_back(to_string(a));
        std::vector<IntVector> lifts;
        lifts.reserve(all.size());
        for (const HomologyClass& a : all) lifts.push_back(g.lift(a));
        out << "linking pairing (classes in lexicographic order):\n";
        for (std::size_t i = 0; i < all.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            out << "  " << to_string(all[i]) << ":";
            for (std::size_t k = 0; k < all.size(); ++k) {
                QmodZ v = g.linking_on_lifts(lifts[i], lifts[k]);
                row.push_back(v.str());
                out << " " << v.str();
            }
            table.push_back(std::move(row));
            out << "\n";
        }
        j["classes"] = classes;
        j["linking_table"] = table;
    } else {
        out << "linking pairing on invariant-factor generators:\n";
        for (std::size_t i = 0; i < g.rank(); ++i) {
            out << "  ";
            for (std::size_t k = 0; k < g.rank(); ++k)
                out << (k ? " " : "") << g.linking(g.generator(i), g.generator(k)).str();
            out << "\n";
        }
        out << "(full table omitted: |H| > 100)\n";
    }
    return Report{std::move(j), out.str()};
}

inline Report report_spinc(const PresentationFile& pf, const HomologyGroup& g,
                           const std::string& encoding) {
    nlohmann::json j;
    j["command"] = "spinc";
    j["name"] = pf.name;
    j["order"] = g.order().str();
    j["encoding"] = encoding;

    std::ostringstream out;
    out << "|H| = " << g.order() << " Spin^c structures, listed by " << encoding
        << " representative\n";
    out << "  charge <-> chern (label)\n";

    nlohmann::json rows = nlohmann::json::array();
    if (encoding == "charge") {
        for (const IntVector& k : charge_enumerate(g)) {
            SpincClass s = spinc_normalize(g, charge_to_chern(g, k));
            nlohmann::json row;
            row["charge"] = to_string(k);
            row["chern"] = to_string(s.rep);
            row["label"] = spinc_label(s);
            rows.push_back(std::move(row));
            out << "  " << to_string(k) << " <-> " << to_string(s.rep) << "  ("
                << spinc_label(s) << ")\n";
        }
    } else {
        for (const SpincClass& s : chern_enumerate(g)) {
            IntVector k = charge_normalize(g, chern_to_charge(g, s.rep));
            nlohmann::json row;
            row["charge"] = to_string(k);
            row["chern"] = to_string(s.rep);
            row["label"] = spinc_label(s);
            rows.push_back(std::move(row));
            out << "  " << to_string(k) << " <-> " << to_string(s.rep) << "  ("
                << spinc_label(s) << ")\n";
        }
    }
    j["classes"] = rows;

    nlohmann::json declared = nlohmann::json::array();
    for (const IntVector& v : pf.chern_vectors) {
        SpincClass s = spinc_normalize(g, v);
        nlohmann::json row;
        row["input"] = "chern " + to_string(v);
        row["label"] = spinc_label(s);
        declared.push_back(std::move(row));
        out << "declared chern " << to_string(v) << " -> " << spinc_label(s) << "\n";
    }
    for (const IntVector& v : pf.charges) {
        SpincClass s = spinc_normalize(g, charge_to_chern(g, charge_normalize(g, v)));
        nlohmann::json row;
        row["input"] = "charge " + to_string(v);
        row["label"] = spinc_label(s);
        declared.push_back(std::move(row));
        out << "declared charge " << to_string(v) << " -> " << spinc_label(s) << "\n";
    }
    j["declared"] = declared;
    return Report{std::move(j), out.str()};
}

inline Report report_quad(const PresentationFile& pf, const HomologyGroup& g,
                          const SpincClass& sigma, const QuadraticFunction& phi,
                          const GaussData& gd) {
    nlohmann::json j;
    j["command"] = "quad";
    j["name"] = pf.name;
    j["order"] = g.order().str();
    j["sigma"] = spinc_label(sigma);

    std::ostringstream out;
    out << "phi for " << spinc_label(sigma) << " on |H| = " << g.order() << " classes\n";
    if (phi.values.size() <= detail::table_print_cap) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < phi.values.size(); ++i) {
            nlohmann::json row;
            row["class"] = to_string(g.class_at(i));
            row["value"] = phi.values[i].str();
            rows.push_back(std::move(row));
            out << "  phi" << to_string(g.class_at(i)) << " = " << phi.values[i].str() << "\n";
        }
        j["phi"] = rows;
    } else {
        out << "  (table omitted: |H| > " << detail::table_print_cap << ")\n";
    }

    nlohmann::json gauss_j;
    gauss_j["modulus_squared"] = detail::rational_str(gd.modulus_squared);
    gauss_j["d"] = gd.d.str();
    gauss_j["denominator_bound"] = gd.denominator_bound.str();
    gauss_j["modulus_residual"] = gd.modulus_residual;
    gauss_j["phase_residual"] = gd.phase_residual;
    j["gauss"] = gauss_j;
    out << "|S|^2 = " << detail::rational_str(gd.modulus_squared)
        << " (residual " << gd.modulus_residual << ")\n";
    out << "d = " << gd.d.str() << " (denominator bound " << gd.denominator_bound
        << ", phase residual " << gd.phase_residual << ")\n";
    return Report{std::move(j), out.str()};
}

inline Report report_verify(const PresentationFile& pf, const TheoremReport& tr) {
    nlohmann::json j;
    j["command"] = "verify";
    j["name"] = pf.name;
    j["order"] = tr.order.str();
    j["mode"] = tr.used_full_tables ? "full-tables" : "separable";
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream out;
    out << "theorem check (q == phi) over " << tr.order << " Spin^c structures ["
        << (tr.used_full_tables ? "full tables" : "separable comparison") << "]\n";
    for (const TheoremEntry& e : tr.entries) {
        nlohmann::json row;
        row["charge"] = to_string(e.charge_rep);
        row["sigma"] = spinc_label(e.sigma);
        row["pass"] = e.pass;
        rows.push_back(std::move(row));
        out << "  " << to_string(e.charge_rep) << "  " << spinc_label(e.sigma) << "  "
            << (e.pass ? "PASS" : "FAIL") << "\n";
    }
    j["entries"] = rows;
    j["all_pass"] = tr.all_pass;
    out << (tr.all_pass ? "all structures PASS" : "structures FAILED") << "\n";
    return Report{std::move(j), out.str()};
}

inline Report report_verify_companion(const PresentationFile& pf, const HomologyGroup& g,
                                      const PresentationFile& companion_pf, const Isometry& iso,
                                      const TheoremReport& tr) {
    Report inner = report_verify(companion_pf, tr);
    nlohmann::json j;
    j["command"] = "verify";
    j["name"] = pf.name;
    j["order"] = g.order().str();
    j["mode"] = "companion";
    nlohmann::json images = nlohmann::json::array();
    std::ostringstream out;
    out << "presentation is not diagonal; matched against split companion";
    if (!companion_pf.name.empty()) out << " '" << companion_pf.name << "'";
    out << "\nisometry on invariant-factor generators:\n";
    for (std::size_t k = 0; k < iso.images.size(); ++k) {
        images.push_back(to_string(iso.images[k]));
        out << "  g" << (k + 1) << " -> " << to_string(iso.images[k]) << "\n";
    }
    j["isometry_images"] = images;
    j["companion"] = inner.data;
    j["all_pass"] = tr.all_pass;
    out << inner.text;
    return Report{std::move(j), out.str()};
}

inline Report report_torsion(const PresentationFile& pf, const HomologyGroup& g,
                             const FamilyReport& fr) {
    nlohmann::json j;
    j["command"] = "torsion";
    j["name"] = pf.name;
    j["order"] = g.order().str();
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream out;
    out << "torsion family over |H| = " << g.order() << " (" << fr.reports.size()
        << " table" << (fr.reports.size() == 1 ? "" : "s") << ")\n";
    for (const TorsionReport& r : fr.reports) {
        nlohmann::json row;
        row["sigma"] = spinc_label(r.sigma);
        row["axiom_ok"] = r.axiom_ok;
        row["matches_phi"] = r.matches_phi;
        row["c_sigma"] = r.c_sigma.str();
        row["d_sigma"] = r.d_sigma.str();
        row["c_m"] = r.c_m.str();
        rows.push_back(std::move(row));
        out << "  " << spinc_label(r.sigma) << ": axiom " << (r.axiom_ok ? "ok" : "FAIL")
            << ", q == phi " << (r.matches_phi ? "ok" : "FAIL") << ", c_sigma = "
            << r.c_sigma.str() << ", d_sigma = " << r.d_sigma.str() << ", c(M) = "
            << r.c_m.str() << "\n";
    }
    j["tables"] = rows;
    j["equivariance_checked"] = fr.equivariance_checked;
    j["c_m"] = fr.c_m.str();
    j["consistent"] = fr.ok;
    if (fr.equivariance_checked)
        out << "translation identity holds across the family\n";
    out << "c(M) = " << fr.c_m.str() << (fr.ok ? "" : " (EXTRACTED q DISAGREES WITH phi)")
        << "\n";
    return Report{std::move(j), out.str()};
}

} // namespace spinq
