#include "spirality/certify.hpp"

#include <algorithm>

#include "spirality/errors.hpp"

namespace spirality {

bool exceeds_governor_bound(const PositiveRational& w, const PositiveRational& governor,
                            unsigned crossings) {
    if (governor < PositiveRational())
        throw ParameterError("governor " + governor.str() + " is below 1");
    return w > governor.pow(2 * crossings);
}

Certificate certify_distinct(const BigInt& n, const BigInt& m) {
    if (n < 1 || m < 1)
        throw ParameterError("family indices must be >= 1, got " + decimal(n) + " and " + decimal(m));

    const BigInt& big = std::max(n, m);
    const BigInt& small = std::min(n, m);

    Certificate cert;
    cert.n = n;
    cert.m = m;
    cert.spirality_value = PositiveRational::reduce((2 * big + 1) * (2 * big + 1), 1);
    cert.governor_value = PositiveRational::reduce(2 * small + 1, 1);

    bool certified =
        n != m && exceeds_governor_bound(cert.spirality_value, cert.governor_value, 2);

    // Integer form of the same inequality; the two routes must agree.
    BigInt lhs = (2 * small + 1) * (2 * small + 1);
    BigInt rhs = 2 * big + 1;
    if (n != m && certified != (lhs < rhs))
        throw ConstructionBug("certificate inequality routes disagree");

    cert.verdict = certified ? Verdict::Certified : Verdict::NotCertified;
    if (n == m) {
        cert.trace = "NOT-CERTIFIED: n = m = " + decimal(n) + ", a member is itself";
    } else {
        cert.trace = std::string(certified ? "CERTIFIED" : "NOT-CERTIFIED") + ": (2·" +
                     decimal(small) + "+1)² = " + decimal(lhs) +
                     (certified ? " < " : " ≥ ") + decimal(rhs) + " = 2·" + decimal(big) +
                     "+1";
    }
    return cert;
}

} // namespace spirality
