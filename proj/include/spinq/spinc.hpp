#pragma once

#include "errors.hpp"
#include "homology.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace spinq {

/// Spin^c structures are encoded two ways on a surgery presentation:
/// Chern vectors s with s_i = B_ii mod 2, taken modulo 2 * im(B), and
/// charges k with k_i = 1 + sum_{j != i} B_ij mod 2, also modulo 2 * im(B).
/// Both are plain integer vectors; SpincClass pins the canonical Chern
/// representative so classes can be compared and labelled.
struct SpincClass {
    IntVector rep;

    bool operator==(const SpincClass& o) const { return rep == o.rep; }
    bool operator!=(const SpincClass& o) const { return !(*this == o); }
    bool operator<(const SpincClass& o) const { return rep < o.rep; }
};

inline std::ostream& operator<<(std::ostream& os, const SpincClass& s) {
    return os << to_string(s.rep);
}

/// The diagonal of B: the Chern vector of a reference structure.
inline IntVector chern_base(const HomologyGroup& g) {
    const IntMatrix& b = g.matrix();
    IntVector s(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) s[i] = b(i, i);
    return s;
}

/// Off-diagonal row sums plus one: the charge of a reference structure.
inline IntVector charge_base(const HomologyGroup& g) {
    const IntMatrix& b = g.matrix();
    IntVector k(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        k[i] = 1;
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (j != i) k[i] += b(i, j);
    }
    return k;
}

inline bool is_chern_vector(const HomologyGroup& g, const IntVector& s) {
    if (s.size() != g.presentation().size()) return false;
    const IntMatrix& b = g.matrix();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!is_even(s[i] - b(i, i))) return false;
    return true;
}

inline bool is_charge(const HomologyGroup& g, const IntVector& k) {
    if (k.size() != g.presentation().size()) return false;
    IntVector base = charge_base(g);
    for (std::size_t i = 0; i < k.size(); ++i)
        if (!is_even(k[i] - base[i])) return false;
    return true;
}

inline void validate_chern(const HomologyGroup& g, const IntVector& s) {
    if (!is_chern_vector(g, s))
        throw InvalidChernVector("not a Chern vector for this presentation: " + to_string(s));
}

inline void validate_charge(const HomologyGroup& g, const IntVector& k) {
    if (!is_charge(g, k))
        throw InvalidCharge("not a charge for this presentation: " + to_string(k));
}

/// Canonical representative modulo 2 * im(B).
inline SpincClass spinc_normalize(const HomologyGroup& g, const IntVector& s) {
    validate_chern(g, s);
    return SpincClass{coset_normal_form(s, g.spinc_lattice())};
}

inline IntVector charge_normalize(const HomologyGroup& g, const IntVector& k) {
    validate_charge(g, k);
    return coset_normal_form(k, g.spinc_lattice());
}

namespace detail {

inline std::vector<IntVector> enumerate_mod_2b(const HomologyGroup& g, const IntVector& base) {
    std::vector<IntVector> out;
    out.reserve(g.class_count());
    for (const IntVector& t : coset_enumerate(g.lattice()))
        out.push_back(coset_normal_form(base + Int(2) * t, g.spinc_lattice()));
    std::sort(out.begin(), out.end());
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] == out[i + 1])
            throw ConsistencyError("coset representatives collide");
    return out;
}

} // namespace detail

/// All Chern-vector classes, canonically represented, in lexicographic
/// order.  There are exactly |H_1| of them.
inline std::vector<SpincClass> chern_enumerate(const HomologyGroup& g) {
    std::vector<SpincClass> out;
    for (IntVector& v : detail::enumerate_mod_2b(g, chern_base(g)))
        out.push_back(SpincClass{std::move(v)});
    return out;
}

/// All charge classes, canonically represented, in lexicographic order.
inline std::vector<IntVector> charge_enumerate(const HomologyGroup& g) {
    return detail::enumerate_mod_2b(g, charge_base(g));
}

/// Chern vector of the structure with charge k; an involutive change of
/// encoding on representatives, compatible with reduction mod 2 * im(B).
inline IntVector charge_to_chern(const HomologyGroup& g, const IntVector& k) {
    validate_charge(g, k);
    const IntMatrix& b = g.matrix();
    IntVector s(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) {
        s[j] = 1 - k[j];
        for (std::size_t i = 0; i < b.rows(); ++i) s[j] += b(i, j);
    }
    return s;
}

inline IntVector chern_to_charge(const HomologyGroup& g, const IntVector& s) {
    validate_chern(g, s);
    const IntMatrix& b = g.matrix();
    IntVector k(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        k[j] = 1 - s[j];
        for (std::size_t i = 0; i < b.rows(); ++i) k[j] += b(i, j);
    }
    return k;
}

/// Free transitive action of H_1 on Spin^c classes: h acts by subtracting
/// twice a lift of h from the Chern representative.  The sign is pinned by
/// the affine compatibility of the associated quadratic functions with the
/// linking pairing.
inline SpincClass act(const HomologyGroup& g, const HomologyClass& h, const SpincClass& sigma) {
    IntVector shift = g.lift(h);
    IntVector s = sigma.rep;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= 2 * shift[i];
    return spinc_normalize(g, s);
}

/// The unique h with act(h, from) == to.
inline HomologyClass spinc_difference(const HomologyGroup& g, const SpincClass& to,
                                      const SpincClass& from) {
    IntVector d(from.rep.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = from.rep[i] - to.rep[i];
    // from - to lies in 2Z^n modulo 2 im(B) since both encode structures;
    // halve a representative inside 2Z^n to recover h.
    IntVector half = coset_normal_form(d, g.spinc_lattice());
    for (std::size_t i = 0; i < half.size(); ++i) {
        if (half[i] % 2 != 0)
            throw ConsistencyError("Spin^c classes do not differ by a group element");
        half[i] /= 2;
    }
    return g.project(half);
}

inline std::string spinc_label(const SpincClass& sigma) {
    std::string out = "s=";
    for (std::size_t i = 0; i < sigma.rep.size(); ++i) {
        if (i) out += ",";
        out += sigma.rep[i].str();
    }
    return out;
}

inline IntVector parse_spinc_label(const std::string& label) {
    std::string body = label;
    if (body.rfind("s=", 0) == 0) body = body.substr(2);
    IntVector out;
    std::string tok;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i < body.size() && body[i] != ',') {
            tok += body[i];
            continue;
        }
        try {
            if (tok.empty()) throw std::invalid_argument("empty coordinate");
            out.emplace_back(tok);
        } catch (const std::exception&) {
            throw ParseError("bad Spin^c label: " + label);
        }
        tok.clear();
    }
    return out;
}

} // namespace spinq
