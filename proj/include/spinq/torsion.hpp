#pragma once

#include "errors.hpp"
#include "homology.hpp"
#include "quad.hpp"
#include "spinc.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace spinq {

/// Coefficients of a Reidemeister-Turaev torsion element of Q[H], one exact
/// rational per homology class, labelled by the Spin^c structure it belongs
/// to.  Torsion is ingested, never computed: the surgery formulas for tau
/// live outside this library.
struct TorsionTable {
    HomologyGroup group;
    SpincClass sigma;
    std::vector<Rational> values; // indexed by class index

    const Rational& at(const HomologyClass& c) const { return values[group.index_of(c)]; }
};

inline TorsionTable make_torsion_table(const HomologyGroup& g, const SpincClass& sigma,
                                       std::vector<Rational> values) {
    if (values.size() != g.class_count())
        throw IncompleteTable("torsion table for " + spinc_label(sigma) + " has " +
                              std::to_string(values.size()) + " entries, expected " +
                              std::to_string(g.class_count()));
    return TorsionTable{g, sigma, std::move(values)};
}

/// tau(h) = t0 - phi(-h) as exact rationals: the shape every genuine torsion
/// table has mod 1.  Used for fixtures and round-trip checks.
inline TorsionTable synthesize_torsion(const QuadraticFunction& phi, const SpincClass& sigma,
                                       const Rational& t0) {
    const HomologyGroup& g = phi.group;
    std::vector<Rational> values;
    values.reserve(g.class_count());
    for (std::size_t i = 0; i < g.class_count(); ++i)
        values.push_back(t0 - phi.at(g.negate(g.class_at(i))).representative());
    return TorsionTable{g, sigma, std::move(values)};
}

/// The translated table (h . tau)(x) = tau(x - h), relabelled to h . sigma.
inline TorsionTable translate_torsion(const TorsionTable& t, const HomologyClass& h) {
    const HomologyGroup& g = t.group;
    std::vector<Rational> values;
    values.reserve(t.values.size());
    for (std::size_t i = 0; i < t.values.size(); ++i)
        values.push_back(t.values[g.index_of(g.add(g.class_at(i), g.negate(h)))]);
    return TorsionTable{g, act(g, h, t.sigma), std::move(values)};
}

/// Result of checking tau(h1+h2) - tau(h1) - tau(h2) + tau(0) = -lambda(h1,h2)
/// mod 1.  When the identity fails, h1/h2 name a failing pair.
struct AxiomVerdict {
    bool ok;
    HomologyClass h1, h2;
    QmodZ expected, actual;
};

inline AxiomVerdict check_axiom(const TorsionTable& t) {
    const HomologyGroup& g = t.group;
    const std::size_t count = g.class_count();
    if (t.values.size() != count)
        throw IncompleteTable("torsion table has " + std::to_string(t.values.size()) +
                              " entries, expected " + std::to_string(count));
    const Rational& t0 = t.values[0];

    auto defect_matches = [&](const HomologyClass& h1, const HomologyClass& h2, AxiomVerdict& v) {
        Rational delta = t.at(g.add(h1, h2)) - t.at(h1) - t.at(h2) + t0;
        QmodZ actual{delta};
        QmodZ expected = -g.linking(h1, h2);
        if (actual == expected) return true;
        v = AxiomVerdict{false, h1, h2, expected, actual};
        return false;
    };

    AxiomVerdict v{true, g.zero(), g.zero(), QmodZ(), QmodZ()};
    if (count <= 128) {
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i; j < count; ++j)
                if (!defect_matches(g.class_at(i), g.class_at(j), v)) return v;
    } else {
        // Pairs against generators suffice: the defect is a cocycle, so
        // holding on (h, generator) for all h forces the general identity.
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t k = 0; k < g.rank(); ++k)
                if (!defect_matches(g.class_at(i), g.generator(k), v)) return v;
    }
    return v;
}

/// q(h) = tau(0) - tau(-h) mod 1; refines lambda once the axiom holds.
inline QuadraticFunction extract_q(const TorsionTable& t) {
    AxiomVerdict v = check_axiom(t);
    if (!v.ok)
        throw AxiomViolation("torsion table for " + spinc_label(t.sigma) +
                             " violates the pairing axiom at (" + to_string(v.h1) + ", " +
                             to_string(v.h2) + "): expected " + v.expected.str() + ", got " +
                             v.actual.str());
    const HomologyGroup& g = t.group;
    QuadraticFunction q{g, {}};
    q.values.reserve(t.values.size());
    for (std::size_t i = 0; i < t.values.size(); ++i)
        q.values.push_back(QmodZ(t.values[0] - t.values[g.index_of(g.negate(g.class_at(i)))]));
    return q;
}

/// Everything one torsion table determines.
struct TorsionReport {
    SpincClass sigma;
    bool axiom_ok;
    bool matches_phi;
    QmodZ c_sigma; // tau(0) mod 1
    QmodZ d_sigma; // Gauss phase of the extracted refinement
    QmodZ c_m;     // c_sigma - d_sigma
};

struct FamilyReport {
    std::vector<TorsionReport> reports;
    bool equivariance_checked;
    QmodZ c_m;
    bool ok;
};

/// Process a family of torsion tables over one presentation: verify the
/// pairing axiom per table, extract q and compare with phi, compute
/// c_sigma, d_sigma and c(M) = c_sigma - d_sigma, verify the translation
/// identity tau_{h.sigma}(x) = tau_sigma(x - h) across tables, and check
/// that c(M) comes out the same for every structure.
inline FamilyReport c_invariant(const std::vector<TorsionTable>& tables,
                                double tolerance = 1e-6) {
    if (tables.empty())
        throw IncompleteTable("no torsion tables supplied");
    const HomologyGroup& g = tables.front().group;

    FamilyReport family;
    family.equivariance_checked = tables.size() > 1;
    family.ok = true;

    for (const TorsionTable& t : tables) {
        if (t.group.presentation() != g.presentation())
            throw InconsistentFamily("torsion tables come from different presentations");
        QuadraticFunction q = extract_q(t);
        TorsionReport r;
        r.sigma = t.sigma;
        r.axiom_ok = true;
        r.matches_phi = q == phi_from_chern(g, t.sigma.rep);
        r.c_sigma = QmodZ(t.values[0]);
        r.d_sigma = gauss(q, tolerance).d;
        r.c_m = r.c_sigma - r.d_sigma;
        family.ok = family.ok && r.matches_phi;
        family.reports.push_back(std::move(r));
    }

    for (std::size_t i = 1; i < tables.size(); ++i) {
        HomologyClass h = spinc_difference(g, tables[i].sigma, tables.front().sigma);
        for (std::size_t x = 0; x < g.class_count(); ++x) {
            const Rational& got = tables[i].values[x];
            const Rational& want =
                tables.front().values[g.index_of(g.add(g.class_at(x), g.negate(h)))];
            if (got != want)
                throw InconsistentFamily(
                    "translation identity fails between " + spinc_label(tables.front().sigma) +
                    " and " + spinc_label(tables[i].sigma) + " at class " +
                    to_string(g.class_at(x)));
        }
    }

    family.c_m = family.reports.front().c_m;
    for (const TorsionReport& r : family.reports)
        if (r.c_m != family.c_m)
            throw InconsistentFamily("c(M) differs between " +
                                     spinc_label(family.reports.front().sigma) + " (" +
                                     family.c_m.str() + ") and " + spinc_label(r.sigma) + " (" +
                                     r.c_m.str() + ")");
    return family;
}

} // namespace spinq
