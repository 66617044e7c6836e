#pragma once

#include <string>
#include <utility>

#include "spirality/bigint.hpp"

namespace spirality {

/// Names the (section, fiber) basis of one torus side. Homology arithmetic
/// refuses to combine classes carrying different tags, so accidental
/// cross-basis computation is impossible rather than merely discouraged.
class BasisTag {
public:
    explicit BasisTag(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    friend bool operator==(const BasisTag& x, const BasisTag& y) { return x.name_ == y.name_; }
    friend bool operator!=(const BasisTag& x, const BasisTag& y) { return !(x == y); }

private:
    std::string name_;
};

/// First-homology class of a torus, written a*[section] + b*[fiber] in the
/// basis the tag names. A boundary circle of a horizontal piece must have
/// a != 0: a circle with a = 0 is a multiple of the fiber and bounds no
/// horizontal sheet.
struct HomologyClass {
    BigInt a;
    BigInt b;
    BasisTag basis;

    bool horizontal_admissible() const { return a != 0; }

    friend bool operator==(const HomologyClass& x, const HomologyClass& y) {
        return x.a == y.a && x.b == y.b && x.basis == y.basis;
    }
    friend bool operator!=(const HomologyClass& x, const HomologyClass& y) { return !(x == y); }
};

/// Algebraic intersection number u.a * v.b - u.b * v.a.
/// Throws BasisError unless both classes carry the same basis tag.
BigInt wedge(const HomologyClass& u, const HomologyClass& v);

HomologyClass negate(const HomologyClass& c);

/// Homology action of a torus gluing, near side to far side. Column
/// convention: (a, b) maps to (p*a + q*b, r*a + s*b).
///
/// |det| = 1 always holds for a homeomorphism; |q| = 1 is the simplicity
/// condition (the two sides' fibers intersect exactly once). `make`
/// enforces both; `unchecked` skips them so parsed documents with broken
/// matrices can still be validated and reported instead of being
/// unrepresentable.
class GluingMatrix {
public:
    static GluingMatrix make(BigInt p, BigInt q, BigInt r, BigInt s);
    static GluingMatrix unchecked(BigInt p, BigInt q, BigInt r, BigInt s);

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& r() const { return r_; }
    const BigInt& s() const { return s_; }

    BigInt det() const { return p_ * s_ - q_ * r_; }
    bool unimodular() const { return det() == 1 || det() == -1; }
    bool simple() const { return q_ == 1 || q_ == -1; }

    /// Inverse matrix (maps far side back to near). Throws MatrixError if
    /// the matrix is not unimodular.
    GluingMatrix inverse() const;

    friend bool operator==(const GluingMatrix& x, const GluingMatrix& y) {
        return x.p_ == y.p_ && x.q_ == y.q_ && x.r_ == y.r_ && x.s_ == y.s_;
    }
    friend bool operator!=(const GluingMatrix& x, const GluingMatrix& y) { return !(x == y); }

private:
    GluingMatrix(BigInt p, BigInt q, BigInt r, BigInt s)
        : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {}

    BigInt p_, q_, r_, s_;
};

/// Rewrites c, read in the near-side basis of the gluing J decorates, in
/// the far-side basis named by far_basis. Callers pass the torus at hand,
/// so the result is tagged correctly by construction.
HomologyClass transport(const GluingMatrix& J, const HomologyClass& c, const BasisTag& far_basis);

} // namespace spirality
