#pragma once

#include <string>

#include "spirality/bigint.hpp"

namespace spirality {

/// A strictly positive rational kept in lowest terms.
///
/// Slopes, spiralities and governors are absolute values by definition, so
/// the constructor takes |num| / |den| and the value zero does not exist in
/// this type: a zero input is a hard error, never a representable state.
class PositiveRational {
public:
    /// The multiplicative identity 1/1.
    PositiveRational() : num_(1), den_(1) {}

    /// |num| / |den| in lowest terms. Throws ZeroSlopeError if either
    /// argument is zero.
    static PositiveRational reduce(const BigInt& num, const BigInt& den);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_one() const { return num_ == 1 && den_ == 1; }

    PositiveRational reciprocal() const;

    /// Nonnegative integer power; exponent 0 gives 1/1.
    PositiveRational pow(unsigned exponent) const;

    /// Renders as "p/q"; the denominator is printed even when it is 1.
    std::string str() const;

    friend PositiveRational operator*(const PositiveRational& x, const PositiveRational& y);
    friend bool operator==(const PositiveRational& x, const PositiveRational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator<(const PositiveRational& x, const PositiveRational& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator>(const PositiveRational& x, const PositiveRational& y) { return y < x; }
    friend bool operator<=(const PositiveRational& x, const PositiveRational& y) { return !(y < x); }
    friend bool operator>=(const PositiveRational& x, const PositiveRational& y) { return !(x < y); }

private:
    PositiveRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

    BigInt num_;
    BigInt den_;
};

/// Free-function spelling of the slope constructor.
PositiveRational reduce(const BigInt& num, const BigInt& den);

} // namespace spirality
