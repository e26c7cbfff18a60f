#pragma once

#include "errors.hpp"
#include "int_matrix.hpp"

#include <cstddef>
#include <vector>

namespace spinq {

/// u * b * v = d with u, v unimodular and d = diag(d_1, ..., d_n),
/// d_i > 0, d_1 | d_2 | ... | d_n.  u_inv is maintained alongside u so
/// callers can move between coordinates without re-inverting.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix u_inv;
    IntMatrix v;
    IntMatrix d;
};

inline SmithDecomposition smith(const IntMatrix& b) {
    if (!b.is_square())
        throw DimensionMismatch("smith reduction needs a square matrix");
    const std::size_t n = b.rows();
    IntMatrix a = b;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix u_inv = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);

    auto row_add = [&](std::size_t i, std::size_t j, const Int& c) {
        a.add_row_multiple(i, j, c);
        u.add_row_multiple(i, j, c);
        u_inv.add_col_multiple(j, i, -c);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    };
    auto row_neg = [&](std::size_t i) {
        a.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    };
    auto col_add = [&](std::size_t j, std::size_t i, const Int& c) {
        a.add_col_multiple(j, i, c);
        v.add_col_multiple(j, i, c);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot: smallest nonzero absolute value, ties to the lowest
            // row index and then the lowest column index.
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    Int mag = abs(a(i, j));
                    if (!found || mag < best) {
                        found = true;
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found)
                throw SingularMatrix("matrix is singular");
            row_swap(t, pi);
            col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                if (q != 0) row_add(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0) col_add(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the block; if not, fold the
            // offending row into row t and reduce again.
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        row_add(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) row_neg(t);
    }
    return {u, u_inv, v, a};
}

/// h = b * c with c unimodular, h upper triangular, h(i,i) > 0 and
/// 0 <= h(i,j) < h(i,i) for j > i.  The columns of h span the same
/// lattice as the columns of b, and the triangular shape makes coset
/// reduction a single back-substitution pass.
struct HermiteBasis {
    IntMatrix h;
    IntMatrix c;
};

inline HermiteBasis hermite(const IntMatrix& b) {
    if (!b.is_square())
        throw DimensionMismatch("hermite reduction needs a square matrix");
    const std::size_t n = b.rows();
    IntMatrix a = b;
    IntMatrix c = IntMatrix::identity(n);

    auto col_add = [&](std::size_t j, std::size_t i, const Int& q) {
        a.add_col_multiple(j, i, q);
        c.add_col_multiple(j, i, q);
    };

    for (std::size_t ii = n; ii-- > 0;) {
        for (;;) {
            bool found = false;
            std::size_t cmin = 0;
            Int best;
            for (std::size_t j = 0; j <= ii; ++j) {
                if (a(ii, j) == 0) continue;
                Int mag = abs(a(ii, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    cmin = j;
                }
            }
            if (!found)
                throw SingularMatrix("matrix is singular");
            bool clean = true;
            for (std::size_t j = 0; j <= ii; ++j) {
                if (j == cmin || a(ii, j) == 0) continue;
                Int q = a(ii, j) / a(ii, cmin);
                if (q != 0) col_add(j, cmin, -q);
                if (a(ii, j) != 0) clean = false;
            }
            if (clean) {
                a.swap_cols(cmin, ii);
                c.swap_cols(cmin, ii);
                break;
            }
        }
        if (a(ii, ii) < 0) {
            a.negate_col(ii);
            c.negate_col(ii);
        }
    }

    // Reduce above-diagonal entries into [0, h(i,i)).  Working upward keeps
    // already-reduced rows intact: adding column i only touches rows <= i.
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j) {
            Int q = floor_div(a(i, j), a(i, i));
            if (q != 0) col_add(j, i, -q);
        }
    return {a, c};
}

/// Canonical representative of v modulo the column lattice of the basis:
/// the unique vector in v + lattice with every coordinate in [0, h(j,j)).
inline IntVector coset_normal_form(const IntVector& v, const HermiteBasis& basis) {
    const IntMatrix& h = basis.h;
    if (v.size() != h.rows())
        throw DimensionMismatch("vector length does not match lattice rank");
    IntVector w = v;
    for (std::size_t j = h.rows(); j-- > 0;) {
        Int q = floor_div(w[j], h(j, j));
        if (q == 0) continue;
        for (std::size_t k = 0; k <= j; ++k) w[k] -= q * h(k, j);
    }
    return w;
}

/// True when v lies in the column lattice of the basis.
inline bool lattice_contains(const HermiteBasis& basis, const IntVector& v) {
    const IntMatrix& h = basis.h;
    if (v.size() != h.rows())
        throw DimensionMismatch("vector length does not match lattice rank");
    IntVector w = v;
    for (std::size_t j = h.rows(); j-- > 0;) {
        if (w[j] % h(j, j) != 0) return false;
        Int q = w[j] / h(j, j);
        if (q == 0) continue;
        for (std::size_t k = 0; k <= j; ++k) w[k] -= q * h(k, j);
    }
    return is_zero(w);
}

/// All coset representatives in normal form, in lexicographic order
/// (first coordinate most significant).  Their number is det(h).
inline std::vector<IntVector> coset_enumerate(const HermiteBasis& basis) {
    const IntMatrix& h = basis.h;
    const std::size_t n = h.rows();
    Int total = 1;
    for (std::size_t j = 0; j < n; ++j) total *= h(j, j);
    if (total > 50'000'000)
        throw Error("coset enumeration of " + total.str() + " elements is out of scope");
    std::vector<IntVector> out;
    out.reserve(total.convert_to<std::size_t>());
    IntVector w(n);
    for (;;) {
        out.push_back(w);
        std::size_t j = n;
        while (j-- > 0) {
            if (++w[j] < h(j, j)) break;
            w[j] = 0;
            if (j == 0) return out;
        }
        if (n == 0) return out;
    }
}

} // namespace spinq
