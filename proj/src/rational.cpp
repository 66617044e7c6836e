#include "spirality/rational.hpp"

namespace spirality {

PositiveRational PositiveRational::reduce(const BigInt& num, const BigInt& den) {
    if (num == 0) throw ZeroSlopeError("zero numerator in slope reduction");
    if (den == 0) throw ZeroSlopeError("zero denominator in slope reduction");
    BigInt n = abs(num);
    BigInt d = abs(den);
    BigInt g = gcd(n, d);
    return PositiveRational(n / g, d / g);
}

PositiveRational PositiveRational::reciprocal() const {
    return PositiveRational(den_, num_);
}

PositiveRational PositiveRational::pow(unsigned exponent) const {
    if (exponent == 0) return PositiveRational();
    using boost::multiprecision::pow;
    return PositiveRational(pow(num_, exponent), pow(den_, exponent));
}

std::string PositiveRational::str() const {
    return decimal(num_) + "/" + decimal(den_);
}

PositiveRational operator*(const PositiveRational& x, const PositiveRational& y) {
    // Cross-cancel so intermediate products stay reduced.
    BigInt g1 = gcd(x.num_, y.den_);
    BigInt g2 = gcd(y.num_, x.den_);
    return PositiveRational((x.num_ / g1) * (y.num_ / g2), (x.den_ / g2) * (y.den_ / g1));
}

PositiveRational reduce(const BigInt& num, const BigInt& den) {
    return PositiveRational::reduce(num, den);
}

} // namespace spirality
