#pragma once

#include <spinq/spinq.hpp>

#include <cstdint>
#include <random>

// Deterministic random objects for property tests.  Seeds are fixed at the
// call sites so failures reproduce.
namespace testutil {

using spinq::Int;
using spinq::IntMatrix;
using spinq::IntVector;

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            int v = dist(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

/// Resamples until det != 0 and |det| <= max_det.
inline IntMatrix random_symmetric_nonsingular(std::mt19937_64& rng, std::size_t max_n, int lo,
                                              int hi, long max_det) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_n);
    for (;;) {
        IntMatrix m = random_symmetric(rng, size_dist(rng), lo, hi);
        Int det = m.determinant();
        if (det != 0 && spinq::abs(det) <= max_det) return m;
    }
}

/// Diagonal matrix with entries in [-9,9] \ {0}.
inline IntMatrix random_framed_diagonal(std::mt19937_64& rng, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_n);
    std::uniform_int_distribution<int> framing(-9, 8);
    const std::size_t n = size_dist(rng);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        int f = framing(rng);
        if (f >= 0) ++f; // skip zero
        m(i, i) = f;
    }
    return m;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = dist(rng);
    return v;
}

/// A random (not necessarily canonical) Chern vector for the group.
inline IntVector random_chern(std::mt19937_64& rng, const spinq::HomologyGroup& g) {
    IntVector s = spinq::chern_base(g);
    IntVector t = random_vector(rng, s.size(), -6, 6);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += 2 * t[i];
    return s;
}

inline IntVector random_charge(std::mt19937_64& rng, const spinq::HomologyGroup& g) {
    IntVector k = spinq::charge_base(g);
    IntVector t = random_vector(rng, k.size(), -6, 6);
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += 2 * t[i];
    return k;
}

inline spinq::HomologyGroup group_of(const IntMatrix& b) {
    return spinq::homology_of(spinq::SurgeryPresentation(b));
}

/// B^{-1} * v as exact rationals.
inline std::vector<spinq::Rational> rational_solve(const spinq::RationalMatrix& inv,
                                                   const IntVector& v) {
    std::vector<spinq::Rational> x(inv.rows());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j)
            x[i] += inv(i, j) * spinq::Rational(v[j]);
    return x;
}

} // namespace testutil
