#pragma once

#include "errors.hpp"
#include "homology.hpp"
#include "spinc.hpp"

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

namespace spinq {

/// A function H_1 -> Q/Z stored as a full exact value table indexed by
/// class index.  Tables are small by design; everything here targets desk
/// scale groups.
struct QuadraticFunction {
    HomologyGroup group;
    std::vector<QmodZ> values;

    const QmodZ& at_index(std::size_t i) const { return values[i]; }
    const QmodZ& at(const HomologyClass& c) const { return values[group.index_of(c)]; }

    bool operator==(const QuadraticFunction& o) const {
        return group.presentation() == o.group.presentation() && values == o.values;
    }
    bool operator!=(const QuadraticFunction& o) const { return !(*this == o); }
};

/// phi_sigma(x) = -(X^T B^{-1} X - X^T B^{-1} s) / 2 mod 1 on any lift X of
/// x, where s is a Chern vector.  Changing the lift by B w or s by 2 B w
/// moves the value by an integer, so the table is well defined.  The overall
/// sign matches the orientation convention under which the group acts on
/// Chern vectors by s - 2h.
inline QuadraticFunction phi_from_chern(const HomologyGroup& g, const IntVector& s) {
    validate_chern(g, s);
    const IntMatrix& a = g.adjugate();
    const Int two_det = 2 * g.det();
    const IntVector as = a * s;
    QuadraticFunction f{g, {}};
    const std::size_t count = g.class_count();
    f.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        IntVector x = g.lift(g.class_at(i));
        f.values.push_back(QmodZ(dot(x, as) - dot(x, a * x), two_det));
    }
    return f;
}

namespace detail {

inline void require_diagonal(const HomologyGroup& g) {
    if (!g.matrix().is_diagonal())
        throw NotAlgebraicallySplit("presentation matrix is not diagonal");
}

} // namespace detail

/// Value of phi_sigma on the i-th meridian class for a diagonal matrix:
/// -(1 - s_i) / (2 b_ii) mod 1.
inline QmodZ phi_on_meridian_split(const HomologyGroup& g, const IntVector& s, std::size_t i) {
    detail::require_diagonal(g);
    validate_chern(g, s);
    return QmodZ(s[i] - 1, 2 * g.matrix()(i, i));
}

/// The quadratic refinement of the linking pairing determined by its values
/// on the meridian classes.  For a lift X,
///   F(X) = sum_j X_j v_j + sum_j C(X_j, 2) lam_jj + sum_{i<j} X_i X_j lam_ij,
/// which refines lambda by construction.  F descends to the quotient iff it
/// is integral on the columns of B; those n checks are performed first.
inline QuadraticFunction quad_extend(const HomologyGroup& g, const std::vector<QmodZ>& gen_values) {
    const std::size_t n = g.presentation().size();
    if (gen_values.size() != n)
        throw DimensionMismatch("need one generator value per meridian");
    const IntMatrix& a = g.adjugate();
    std::vector<std::vector<QmodZ>> lam(n, std::vector<QmodZ>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lam[i][j] = QmodZ(-a(i, j), g.det());

    auto eval = [&](const IntVector& x) {
        QmodZ v;
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] == 0) continue;
            v += gen_values[j] * x[j];
            v += lam[j][j] * choose2(x[j]);
            for (std::size_t i = 0; i < j; ++i)
                if (x[i] != 0) v += lam[i][j] * (x[i] * x[j]);
        }
        return v;
    };

    for (std::size_t j = 0; j < n; ++j) {
        QmodZ defect = eval(g.matrix().column(j));
        if (!defect.is_zero())
            throw ConsistencyError("meridian values do not define a function on the quotient: "
                                   "relator " + std::to_string(j + 1) + " evaluates to " +
                                   defect.str());
    }

    QuadraticFunction f{g, {}};
    const std::size_t count = g.class_count();
    f.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        f.values.push_back(eval(g.lift(g.class_at(i))));
    return f;
}

/// q_sigma for a charge k on a diagonal presentation, determined by
/// q([m_j]) = 1/2 - k_j / (2 b_jj) and quadratic extension.
inline QuadraticFunction q_from_charge_split(const HomologyGroup& g, const IntVector& k) {
    detail::require_diagonal(g);
    validate_charge(g, k);
    std::vector<QmodZ> gen(k.size());
    for (std::size_t j = 0; j < k.size(); ++j)
        gen[j] = QmodZ(g.matrix()(j, j) - k[j], 2 * g.matrix()(j, j));
    return quad_extend(g, gen);
}

/// (h . q)(x) = q(x) + lambda(h, x); matches phi under the Spin^c action:
/// h . phi_sigma = phi_{h . sigma}.
inline QuadraticFunction act_on_quad(const QuadraticFunction& q, const HomologyClass& h) {
    const HomologyGroup& g = q.group;
    IntVector lift_h = g.lift(h);
    QuadraticFunction f{g, {}};
    f.values.reserve(q.values.size());
    for (std::size_t i = 0; i < q.values.size(); ++i)
        f.values.push_back(q.values[i] + g.linking_on_lifts(lift_h, g.lift(g.class_at(i))));
    return f;
}

/// Gauss sum data for a quadratic refinement q:
///   S = sum_x e^{2 pi i q(x)} = sqrt(|H|) e^{2 pi i d}.
/// The modulus is |H| exactly whenever q refines a nondegenerate pairing,
/// which holds for every function built here; the numeric residuals guard
/// the reconstruction of the exact phase d, a rational with denominator
/// dividing 4N where N is the lcm of the value denominators.
struct GaussData {
    Int group_order;
    Rational modulus_squared;
    QmodZ d;
    Int denominator_bound;
    double modulus_residual;
    double phase_residual;
};

inline GaussData gauss(const QuadraticFunction& q, double tolerance = 1e-6) {
    const std::size_t count = q.group.class_count();
    if (q.values.size() != count)
        throw DimensionMismatch("value table does not cover the group");
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    long double re = 0, im = 0;
    Int n_lcm = 1;
    for (const QmodZ& v : q.values) {
        long double t = two_pi * v.to_long_double();
        re += cosl(t);
        im += sinl(t);
        n_lcm = lcm(n_lcm, v.den());
    }
    const long double order = static_cast<long double>(count);
    const long double mod2 = re * re + im * im;
    const double mod_residual = static_cast<double>(fabsl(mod2 - order));
    if (mod_residual > tolerance * static_cast<double>(count))
        throw DegenerateFunction("Gauss sum modulus deviates from sqrt(|H|): residual " +
                                 std::to_string(mod_residual));

    const Int bound = 4 * n_lcm;
    long double theta = atan2l(im, re) / two_pi; // in (-1/2, 1/2]
    long double scaled = theta * bound.convert_to<long double>();
    Int p = static_cast<long long>(llroundl(scaled));
    const double phase_residual =
        static_cast<double>(fabsl(scaled - p.convert_to<long double>())) /
        static_cast<double>(bound.convert_to<long double>());
    if (phase_residual > tolerance)
        throw DegenerateFunction("Gauss sum phase does not snap to a multiple of 1/" +
                                 bound.str() + ": residual " + std::to_string(phase_residual));

    GaussData out;
    out.group_order = count;
    out.modulus_squared = Rational(count);
    out.d = QmodZ(p, bound);
    out.denominator_bound = bound;
    out.modulus_residual = mod_residual;
    out.phase_residual = phase_residual;
    return out;
}

/// Block sum of two presentations with the concatenated Chern vector.
struct PresentedSpinc {
    HomologyGroup group;
    SpincClass sigma;
};

inline PresentedSpinc direct_sum(const HomologyGroup& g1, const SpincClass& s1,
                                 const HomologyGroup& g2, const SpincClass& s2) {
    IntMatrix b = IntMatrix::block_diag(g1.matrix(), g2.matrix());
    HomologyGroup g{SurgeryPresentation(std::move(b))};
    IntVector rep = s1.rep;
    rep.insert(rep.end(), s2.rep.begin(), s2.rep.end());
    SpincClass sigma = spinc_normalize(g, rep);
    return {std::move(g), std::move(sigma)};
}

/// Orientation reversal: negate the matrix, keep the Chern representative.
/// The lattices 2 im(B) and 2 im(-B) coincide, so the representative stays
/// canonical; all phi values change sign.
inline PresentedSpinc negate(const HomologyGroup& g, const SpincClass& s) {
    IntMatrix b = g.matrix();
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = -b(i, j);
    HomologyGroup ng{SurgeryPresentation(std::move(b))};
    SpincClass sigma = spinc_normalize(ng, s.rep);
    return {std::move(ng), std::move(sigma)};
}

/// A pairing-preserving isomorphism between the homology groups of two
/// presentations, stored as images of the invariant-factor generators.
struct Isometry {
    std::vector<HomologyClass> images;
};

inline HomologyClass apply_isometry(const Isometry& iso, const HomologyGroup& codomain,
                                    const HomologyClass& x) {
    HomologyClass y = codomain.zero();
    for (std::size_t k = 0; k < iso.images.size(); ++k)
        y = codomain.add(y, codomain.scale(x.coords[k], iso.images[k]));
    return y;
}

/// Search for an isomorphism H_1(B_1) -> H_1(B_2) preserving the linking
/// pairing.  Generators are matched by depth-first search over candidate
/// images in lexicographic class order; preserving the pairing on generator
/// pairs forces it everywhere, and nondegeneracy forces injectivity, so the
/// first complete assignment is a genuine isometry.
inline Isometry match_presentations(const HomologyGroup& g1, const HomologyGroup& g2) {
    if (g1.order() != g2.order())
        throw NoMatch("groups have different orders: " + g1.order().str() + " vs " +
                      g2.order().str());
    const std::size_t r = g1.rank();
    const IntVector& d = g1.invariant_factors();
    const std::size_t count2 = g2.class_count();

    std::vector<std::vector<QmodZ>> gram(r, std::vector<QmodZ>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            gram[i][j] = g1.linking(g1.generator(i), g1.generator(j));

    std::vector<HomologyClass> images;
    images.reserve(r);

    auto search = [&](auto&& self, std::size_t slot) -> bool {
        if (slot == r) return true;
        for (std::size_t idx = 0; idx < count2; ++idx) {
            HomologyClass y = g2.class_at(idx);
            if (g2.scale(d[slot], y) != g2.zero()) continue;
            if (g2.linking(y, y) != gram[slot][slot]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < slot && ok; ++j)
                ok = g2.linking(images[j], y) == gram[j][slot];
            if (!ok) continue;
            images.push_back(y);
            if (self(self, slot + 1)) return true;
            images.pop_back();
        }
        return false;
    };
    if (!search(search, 0))
        throw NoMatch("no isomorphism preserves the linking pairing");
    return Isometry{std::move(images)};
}

/// Outcome of comparing q_sigma with phi_sigma for one structure.
struct TheoremEntry {
    IntVector charge_rep;
    SpincClass sigma;
    bool pass;
};

struct TheoremReport {
    Int order;
    bool used_full_tables;
    std::vector<TheoremEntry> entries;
    bool all_pass;
};

/// Check q_sigma == phi_sigma for every Spin^c structure of a diagonal
/// presentation.  Small groups compare complete tables.  Larger ones use
/// the separable form both functions take over a diagonal matrix: the
/// cross terms of q and phi vanish identically, so table equality is
/// equivalent to agreement on every multiple of every meridian, checked
/// coordinate by coordinate.
inline TheoremReport verify_theorem_split(const HomologyGroup& g) {
    detail::require_diagonal(g);
    const IntMatrix& b = g.matrix();
    const std::size_t n = g.presentation().size();
    constexpr std::size_t full_table_cap = 128;
    const bool full = g.class_count() <= full_table_cap;

    TheoremReport report;
    report.order = g.order();
    report.used_full_tables = full;
    report.all_pass = true;

    // Agreement along meridian j depends only on (j, k_j); memoize it so the
    // per-class loop stays linear even for large groups.
    std::vector<std::map<Int, bool>> agreed(n);
    auto meridian_agrees = [&](std::size_t j, const Int& kj, const Int& sj) {
        auto it = agreed[j].find(kj);
        if (it != agreed[j].end()) return it->second;
        const Int& bj = b(j, j);
        const Int two_bj = 2 * bj;
        // q restricted to m_j must vanish on the relator b_jj m_j.
        QmodZ defect = QmodZ(bj - kj, two_bj) * bj + QmodZ(-1, bj) * choose2(bj);
        if (!defect.is_zero())
            throw ConsistencyError("charge values do not descend to the quotient");
        bool ok = true;
        const Int bnd = abs(bj);
        for (Int t = 0; t < bnd && ok; ++t) {
            // q(t m_j) and phi(t m_j), both over the common denominator 2 b_jj
            Int qn = t * (bj - kj) - t * (t - 1);
            Int pn = t * sj - t * t;
            ok = floor_mod(qn - pn, two_bj) == 0;
        }
        agreed[j][kj] = ok;
        return ok;
    };

    for (const IntVector& k : charge_enumerate(g)) {
        IntVector s = charge_to_chern(g, k);
        TheoremEntry entry{k, spinc_normalize(g, s), true};
        if (full) {
            entry.pass = q_from_charge_split(g, k) == phi_from_chern(g, entry.sigma.rep);
        } else {
            for (std::size_t j = 0; j < n && entry.pass; ++j)
                entry.pass = meridian_agrees(j, k[j], s[j]);
        }
        report.all_pass = report.all_pass && entry.pass;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace spinq
