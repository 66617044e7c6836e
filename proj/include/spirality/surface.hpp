#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spirality/manifold.hpp"
#include "spirality/rational.hpp"

namespace spirality {

/// Circle lying on one side of a JSJ torus.
struct TorusAttachment {
    std::string torus;
    Side side = Side::Near;

    friend bool operator==(const TorusAttachment& x, const TorusAttachment& y) {
        return x.torus == y.torus && x.side == y.side;
    }
    friend bool operator!=(const TorusAttachment& x, const TorusAttachment& y) { return !(x == y); }
};

/// Circle lying on a free boundary torus of an open manifold.
struct FreeAttachment {
    std::string block;
    std::string label;

    friend bool operator==(const FreeAttachment& x, const FreeAttachment& y) {
        return x.block == y.block && x.label == y.label;
    }
    friend bool operator!=(const FreeAttachment& x, const FreeAttachment& y) { return !(x == y); }
};

using CircleAttachment = std::variant<TorusAttachment, FreeAttachment>;

/// Connected horizontal sheet over one block: a degree-d cover of the base
/// surface. Euler characteristic bookkeeping ties genus, boundary count and
/// degree together; the validator enforces it.
struct SurfacePiece {
    std::string id;
    std::string block;
    BigInt degree;
    BigInt genus;

    friend bool operator==(const SurfacePiece& x, const SurfacePiece& y) {
        return x.id == y.id && x.block == y.block && x.degree == y.degree && x.genus == y.genus;
    }
    friend bool operator!=(const SurfacePiece& x, const SurfacePiece& y) { return !(x == y); }
};

/// One boundary circle of a piece, with its homology class written in the
/// basis of the torus side it lies on.
struct SurfaceCircle {
    std::string id;
    std::string piece;
    CircleAttachment attachment;
    HomologyClass homology;

    friend bool operator==(const SurfaceCircle& x, const SurfaceCircle& y) {
        return x.id == y.id && x.piece == y.piece && x.attachment == y.attachment &&
               x.homology == y.homology;
    }
    friend bool operator!=(const SurfaceCircle& x, const SurfaceCircle& y) { return !(x == y); }
};

/// Identification of a near-side circle with a far-side circle across a
/// JSJ torus. The transported near class must equal the far class up to
/// sign for the circles to actually match up.
struct SurfaceEdge {
    std::string id;
    std::string near_circle;
    std::string far_circle;

    friend bool operator==(const SurfaceEdge& x, const SurfaceEdge& y) {
        return x.id == y.id && x.near_circle == y.near_circle && x.far_circle == y.far_circle;
    }
    friend bool operator!=(const SurfaceEdge& x, const SurfaceEdge& y) { return !(x == y); }
};

/// A horizontal surface carried by a graph manifold, presented as pieces
/// over blocks glued along circles over JSJ tori.
struct HorizontalSurface {
    GraphManifold manifold;
    std::map<std::string, SurfacePiece> pieces;
    std::map<std::string, SurfaceCircle> circles;
    std::map<std::string, SurfaceEdge> edges;

    const SurfacePiece* find_piece(const std::string& id) const;
    const SurfaceCircle* find_circle(const std::string& id) const;
    const SurfaceEdge* find_edge(const std::string& id) const;

    const SurfaceEdge& edge_or_throw(const std::string& id) const;
    const SurfaceCircle& circle_or_throw(const std::string& id) const;

    /// Block boundary this circle sits on, resolved against the manifold;
    /// nullopt when the attachment dangles.
    std::optional<BoundaryRef> attachment_boundary(const SurfaceCircle& c) const;

    /// Basis tag the circle's class must be written in.
    BasisTag attachment_basis(const SurfaceCircle& c) const;

    /// Circles of one piece, sorted by id.
    std::vector<const SurfaceCircle*> circles_of_piece(const std::string& piece_id) const;

    /// chi of the piece as an abstract surface: 2 - 2*genus - #circles.
    BigInt piece_chi(const SurfacePiece& p) const;

    friend bool operator==(const HorizontalSurface& x, const HorizontalSurface& y) {
        return x.manifold == y.manifold && x.pieces == y.pieces && x.circles == y.circles &&
               x.edges == y.edges;
    }
    friend bool operator!=(const HorizontalSurface& x, const HorizontalSurface& y) {
        return !(x == y);
    }
};

/// Structural checks: piece/circle/edge references resolve, degrees and
/// genera are consistent with Euler characteristic, every label of a
/// covered block carries circles summing to the degree, circle classes are
/// horizontal and written in the right basis, edges pair near with far
/// over one torus compatibly, glued circles pair exactly once, and the
/// surface dual graph is connected.
ValidationReport validate_surface(const HorizontalSurface& s);

/// Dual graph: one vertex per piece, one edge per surface edge, tail at
/// the near circle's piece and head at the far circle's piece.
Multigraph surface_dual_graph(const HorizontalSurface& s);

/// Slope of a directed edge: |m / m'| where m and m' are the section
/// coefficients of the initial and terminal circle. Forward runs near to
/// far. Throws UnknownIdError for a missing edge, ZeroSlopeError if a
/// section coefficient vanishes.
PositiveRational slope(const HorizontalSurface& s, const std::string& edge_id, Dir dir);

/// Same value computed the long way round: write the initial circle's
/// class as a*[initial fiber] + b*[terminal fiber] by Cramer's rule in the
/// initial side's basis and return |b / a|. Throws FiberBasisError when
/// the two fibers do not span. Agreement with slope() on every valid edge
/// is the central consistency check of the calculus.
PositiveRational slope_fiber_decomposition(const HorizontalSurface& s, const std::string& edge_id,
                                           Dir dir);

/// Largest slope over all directed edges. Throws NoEdgesError when the
/// surface has no edges. Always >= 1 because slopes come in reciprocal
/// pairs.
PositiveRational governor(const HorizontalSurface& s);

/// Product of directed slopes along a closed walk. The empty walk gives
/// 1/1. Throws UnknownIdError for a missing edge and BrokenCycleError when
/// consecutive steps do not chain head-to-tail around the walk.
PositiveRational spirality(const HorizontalSurface& s, const Cycle& cycle);

/// Fundamental cycles of the surface dual graph.
std::vector<Cycle> cycle_basis(const HorizontalSurface& s,
                               TreeOrder order = TreeOrder::AscendingIds);

/// Spiralities of the fundamental cycles, in basis order. These generate
/// the image of the spirality homomorphism.
std::vector<PositiveRational> spirality_image_generators(const HorizontalSurface& s,
                                                         TreeOrder order = TreeOrder::AscendingIds);

/// True when every generator is 1/1, i.e. the spirality homomorphism is
/// trivial and the surface is separable.
bool is_separable(const HorizontalSurface& s, TreeOrder order = TreeOrder::AscendingIds);

/// Number of JSJ crossings of a walk: its step count.
std::size_t crossing_number(const Cycle& cycle);

} // namespace spirality
