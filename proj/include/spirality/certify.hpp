#pragma once

#include <string>

#include "spirality/bigint.hpp"
#include "spirality/rational.hpp"

namespace spirality {

enum class Verdict { Certified, NotCertified };

/// Distinguishing certificate for two family members. The certificate is
/// sound because a quasi-isometry would force the spirality value of the
/// larger member to be dominated by a bounded power of the smaller
/// member's governor; when it is not, no quasi-isometry exists.
struct Certificate {
    BigInt n;
    BigInt m;
    PositiveRational spirality_value; // of the larger index, on its 2-crossing cycle
    PositiveRational governor_value;  // of the smaller index
    Verdict verdict = Verdict::NotCertified;
    std::string trace; // exact inequality, human readable
};

/// True when w strictly exceeds governor^(2*crossings), the largest
/// spirality value a cycle with that many crossings can reach in a
/// surface the governor bounds. governor must be >= 1.
bool exceeds_governor_bound(const PositiveRational& w, const PositiveRational& governor,
                            unsigned crossings);

/// Compares family members n and m (both >= 1). Certifies exactly when
/// the indices differ and the spirality value (2N+1)^2 of the larger
/// index N exceeds the fourth power of the smaller index's governor
/// 2M+1, which reduces to the integer inequality (2M+1)^2 < 2N+1.
/// Both routes are evaluated and must agree.
Certificate certify_distinct(const BigInt& n, const BigInt& m);

} // namespace spirality
