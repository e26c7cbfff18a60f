#pragma once

#include "errors.hpp"
#include "int_matrix.hpp"
#include "normal_form.hpp"
#include "qmodz.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace spinq {

/// Framed-link surgery data: a symmetric integer linking matrix with
/// nonzero determinant, so the presented 3-manifold is a rational
/// homology sphere.
struct SurgeryPresentation {
    IntMatrix matrix;
    Int det;

    explicit SurgeryPresentation(IntMatrix b) : matrix(std::move(b)) {
        if (!matrix.is_square())
            throw DimensionMismatch("linking matrix must be square");
        if (!matrix.is_symmetric())
            throw Error("linking matrix must be symmetric");
        det = matrix.determinant();
        if (det == 0)
            throw NotRationalHomologySphere("linking matrix has determinant zero");
    }

    std::size_t size() const { return matrix.rows(); }

    bool operator==(const SurgeryPresentation& o) const { return matrix == o.matrix; }
    bool operator!=(const SurgeryPresentation& o) const { return !(*this == o); }
};

/// A first-homology class in invariant-factor coordinates.  Positions with
/// trivial factor are dropped, so the trivial group has the empty tuple as
/// its only class.
struct HomologyClass {
    IntVector coords;

    bool operator==(const HomologyClass& o) const { return coords == o.coords; }
    bool operator!=(const HomologyClass& o) const { return !(*this == o); }
    bool operator<(const HomologyClass& o) const { return coords < o.coords; }
};

inline std::string to_string(const HomologyClass& c) { return to_string(c.coords); }

inline std::ostream& operator<<(std::ostream& os, const HomologyClass& c) {
    return os << to_string(c);
}

/// H_1 of the presented manifold: coker(B) on meridian generators, with
/// the Smith data needed to move between meridian words and invariant-factor
/// coordinates, plus cached lattice bases and the adjugate of B so that the
/// linking pairing is a single exact division.
class HomologyGroup {
public:
    explicit HomologyGroup(SurgeryPresentation pres)
        : presentation_(std::move(pres)),
          smith_(smith(presentation_.matrix)),
          lattice_(hermite(presentation_.matrix)) {
        const std::size_t n = presentation_.size();
        for (std::size_t i = 0; i < n; ++i)
            if (smith_.d(i, i) != 1) {
                factors_.push_back(smith_.d(i, i));
                positions_.push_back(i);
            }
        order_ = 1;
        for (const auto& d : factors_) order_ *= d;

        IntMatrix two_b = presentation_.matrix;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) two_b(i, j) *= 2;
        spinc_lattice_ = hermite(two_b);

        RationalMatrix inv = inverse_rational(presentation_.matrix);
        adjugate_ = IntMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational entry = inv(i, j) * Rational(presentation_.det);
                adjugate_(i, j) = boost::multiprecision::numerator(entry);
            }
    }

    const SurgeryPresentation& presentation() const { return presentation_; }
    const IntMatrix& matrix() const { return presentation_.matrix; }
    const Int& det() const { return presentation_.det; }
    const SmithDecomposition& smith_data() const { return smith_; }
    const IntVector& invariant_factors() const { return factors_; }
    const Int& order() const { return order_; }
    const HermiteBasis& lattice() const { return lattice_; }
    const HermiteBasis& spinc_lattice() const { return spinc_lattice_; }
    const IntMatrix& adjugate() const { return adjugate_; }

    std::size_t rank() const { return factors_.size(); }

    /// Class of a meridian word x in Z^n.
    HomologyClass project(const IntVector& x) const {
        if (x.size() != presentation_.size())
            throw DimensionMismatch("meridian word has wrong length");
        IntVector y = smith_.u * x;
        HomologyClass c;
        c.coords.reserve(factors_.size());
        for (std::size_t k = 0; k < factors_.size(); ++k)
            c.coords.push_back(floor_mod(y[positions_[k]], factors_[k]));
        return c;
    }

    /// A meridian word representing the class; project(lift(c)) == c.
    IntVector lift(const HomologyClass& c) const {
        check(c);
        IntVector y(presentation_.size());
        for (std::size_t k = 0; k < factors_.size(); ++k)
            y[positions_[k]] = c.coords[k];
        return smith_.u_inv * y;
    }

    HomologyClass zero() const { return HomologyClass{IntVector(factors_.size())}; }

    HomologyClass generator(std::size_t k) const {
        HomologyClass c = zero();
        c.coords[k] = 1;
        return c;
    }

    HomologyClass add(const HomologyClass& a, const HomologyClass& b) const {
        check(a);
        check(b);
        HomologyClass c;
        c.coords.reserve(factors_.size());
        for (std::size_t k = 0; k < factors_.size(); ++k)
            c.coords.push_back(floor_mod(a.coords[k] + b.coords[k], factors_[k]));
        return c;
    }

    HomologyClass negate(const HomologyClass& a) const { return scale(-1, a); }

    HomologyClass scale(const Int& m, const HomologyClass& a) const {
        check(a);
        HomologyClass c;
        c.coords.reserve(factors_.size());
        for (std::size_t k = 0; k < factors_.size(); ++k)
            c.coords.push_back(floor_mod(m * a.coords[k], factors_[k]));
        return c;
    }

    Int order_of(const HomologyClass& a) const {
        check(a);
        Int m = 1;
        for (std::size_t k = 0; k < factors_.size(); ++k)
            m = lcm(m, factors_[k] / gcd(a.coords[k], factors_[k]));
        return m;
    }

    std::size_t class_count() const {
        if (order_ > 50'000'000)
            throw Error("group of order " + order_.str() + " is out of enumeration scope");
        return order_.convert_to<std::size_t>();
    }

    /// Classes are indexed lexicographically by coordinates.
    std::size_t index_of(const HomologyClass& a) const {
        check(a);
        Int idx = 0;
        for (std::size_t k = 0; k < factors_.size(); ++k)
            idx = idx * factors_[k] + a.coords[k];
        if (idx >= 50'000'000)
            throw Error("class index out of enumeration scope");
        return idx.convert_to<std::size_t>();
    }

    HomologyClass class_at(std::size_t index) const {
        Int idx = index;
        HomologyClass c = zero();
        for (std::size_t k = factors_.size(); k-- > 0;) {
            c.coords[k] = idx % factors_[k];
            idx /= factors_[k];
        }
        if (idx != 0)
            throw Error("class index exceeds group order");
        return c;
    }

    std::vector<HomologyClass> all_classes() const {
        std::vector<HomologyClass> out;
        out.reserve(class_count());
        for (std::size_t i = 0; i < class_count(); ++i) out.push_back(class_at(i));
        return out;
    }

    /// lambda(x, y) = -X^T B^{-1} Y mod 1 on any lifts X, Y.  The sign makes
    /// the quadratic functions built from Chern vectors refine lambda itself
    /// rather than its negative.
    QmodZ linking_on_lifts(const IntVector& x, const IntVector& y) const {
        if (x.size() != presentation_.size() || y.size() != presentation_.size())
            throw DimensionMismatch("lift has wrong length");
        return QmodZ(-dot(x, adjugate_ * y), presentation_.det);
    }

    QmodZ linking(const HomologyClass& a, const HomologyClass& b) const {
        return linking_on_lifts(lift(a), lift(b));
    }

private:
    void check(const HomologyClass& a) const {
        if (a.coords.size() != factors_.size())
            throw DimensionMismatch("class has wrong number of coordinates");
    }

    SurgeryPresentation presentation_;
    SmithDecomposition smith_;
    HermiteBasis lattice_;
    HermiteBasis spinc_lattice_;
    IntVector factors_;
    std::vector<std::size_t> positions_;
    Int order_;
    IntMatrix adjugate_;
};

inline HomologyGroup homology_of(const SurgeryPresentation& p) { return HomologyGroup(p); }

} // namespace spinq
