#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spirality/surface.hpp"

namespace spirality {

/// One boundary torus of a requested horizontal piece, carrying the two
/// boundary classes (u, v) = (section coefficient, fiber coefficient) the
/// piece must realize there. Section coefficients must be positive.
struct RwBoundary {
    std::array<std::pair<BigInt, BigInt>, 2> classes;
};

/// Request for a connected horizontal piece over a trivial circle bundle:
/// base genus plus the boundary class data, two circles per boundary torus.
struct RwRequest {
    BigInt genus;
    std::vector<RwBoundary> boundaries;

    BigInt base_chi() const { return 2 - 2 * genus - BigInt(boundaries.size()); }
};

/// Outcome of checking the existence conditions: either the common
/// covering degree, or the list of failed conditions.
struct RwCheck {
    std::optional<BigInt> degree;
    std::vector<Violation> violations;

    bool ok() const { return degree.has_value(); }
};

/// Existence conditions for a horizontal piece with the requested
/// boundary behavior: fiber coefficients sum to zero, section
/// coefficients on each boundary torus have equal sums (the covering
/// degree), and degree * chi(base) is even.
RwCheck rw_check(const RwRequest& req);

struct RwError : Error {
    std::vector<Violation> violations;

    RwError(std::string message, std::vector<Violation> v)
        : Error(std::move(message)), violations(std::move(v)) {}
};

/// Numerical data of the piece rw_check promises.
struct RwPiece {
    BigInt degree;
    BigInt genus;
    BigInt boundary_circles; // always two per boundary torus
};

/// Builds the piece data or throws RwError carrying the rw_check
/// violations.
RwPiece rw_build_piece(const RwRequest& req);

/// Genus of a connected degree-`degree` horizontal cover with two boundary
/// circles per boundary torus over a base with the given Euler
/// characteristic: (2 - 2*boundary_tori - degree*chi) / 2. Throws
/// GenusError if that is fractional or negative.
BigInt covering_genus(const BigInt& boundary_tori, const BigInt& degree, const BigInt& chi);

/// The bounded pair: a two-block open manifold whose single JSJ torus is
/// glued by (1 1; 2 1), carrying a two-piece horizontal surface with one
/// free boundary torus. n >= 0; n = 0 gives the separable control case.
HorizontalSurface build_open_pair(const BigInt& n);

/// Doubles an open pair along all free boundary tori: blocks and pieces
/// touching a free boundary fuse with their mirror image, everything else
/// is duplicated with ids suffixed "_mirror". The result is closed. Throws
/// DoublingError when there is no free boundary, when a mirror id would
/// collide, or when the circle pattern is inconsistent.
HorizontalSurface double_pair(const HorizontalSurface& open_pair);

/// A member of the certified family: the closed pair plus its
/// distinguishing cycle gamma through the two original edges.
struct FamilySpec {
    BigInt n;
    HorizontalSurface surface;
    Cycle gamma;

    const GraphManifold& manifold() const { return surface.manifold; }
};

/// Doubled pair for index n >= 1, with governor 2n+1 and
/// spirality(gamma) = (2n+1)^2. Both are re-derived and cross-checked
/// before returning.
FamilySpec build_family(const BigInt& n);

/// First `count` members of the sparse index schedule t(1) = 1,
/// t(j+1) = (2*t(j) + 1)^2 + 1. Consecutive members satisfy
/// (2*t(j) + 1)^2 < 2*t(j+1) + 1, which is what the certificates need.
std::vector<BigInt> sparse_index_set(std::size_t count);

} // namespace spirality
