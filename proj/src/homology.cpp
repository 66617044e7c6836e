#include "spirality/homology.hpp"

namespace spirality {

BigInt wedge(const HomologyClass& u, const HomologyClass& v) {
    if (u.basis != v.basis)
        throw BasisError("wedge of classes in different bases: \"" + u.basis.name() +
                         "\" vs \"" + v.basis.name() + "\"");
    return u.a * v.b - u.b * v.a;
}

HomologyClass negate(const HomologyClass& c) {
    return HomologyClass{-c.a, -c.b, c.basis};
}

GluingMatrix GluingMatrix::make(BigInt p, BigInt q, BigInt r, BigInt s) {
    GluingMatrix J = unchecked(std::move(p), std::move(q), std::move(r), std::move(s));
    if (!J.unimodular())
        throw MatrixError("gluing matrix must have |det| = 1, got det = " + decimal(J.det()));
    if (!J.simple())
        throw MatrixError("gluing matrix must have |q| = 1, got q = " + decimal(J.q()));
    return J;
}

GluingMatrix GluingMatrix::unchecked(BigInt p, BigInt q, BigInt r, BigInt s) {
    return GluingMatrix(std::move(p), std::move(q), std::move(r), std::move(s));
}

GluingMatrix GluingMatrix::inverse() const {
    BigInt d = det();
    if (d != 1 && d != -1)
        throw MatrixError("cannot invert a matrix with det = " + decimal(d));
    // For |det| = 1 the adjugate divided by det stays integral.
    return GluingMatrix(d * s_, d * -q_, d * -r_, d * p_);
}

HomologyClass transport(const GluingMatrix& J, const HomologyClass& c, const BasisTag& far_basis) {
    return HomologyClass{J.p() * c.a + J.q() * c.b, J.r() * c.a + J.s() * c.b, far_basis};
}

} // namespace spirality
