#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spirality/bigint.hpp"
#include "spirality/graph.hpp"
#include "spirality/homology.hpp"

namespace spirality {

/// One JSJ block: the trivial circle bundle over a compact orientable
/// surface F of the given genus with one boundary circle per label.
/// chi(F) = 2 - 2*genus - #labels must be negative for the block geometry
/// to exist; the validator enforces it.
struct SeifertBlock {
    std::string id;
    BigInt genus;
    std::vector<std::string> boundary;

    BigInt base_chi() const { return 2 - 2 * genus - BigInt(boundary.size()); }

    friend bool operator==(const SeifertBlock& x, const SeifertBlock& y) {
        return x.id == y.id && x.genus == y.genus && x.boundary == y.boundary;
    }
    friend bool operator!=(const SeifertBlock& x, const SeifertBlock& y) { return !(x == y); }
};

enum class Side { Near, Far };

inline const char* to_string(Side s) { return s == Side::Near ? "near" : "far"; }

/// Names one boundary torus of one block.
struct BoundaryRef {
    std::string block;
    std::string label;

    friend bool operator==(const BoundaryRef& x, const BoundaryRef& y) {
        return x.block == y.block && x.label == y.label;
    }
    friend bool operator!=(const BoundaryRef& x, const BoundaryRef& y) { return !(x == y); }
    friend bool operator<(const BoundaryRef& x, const BoundaryRef& y) {
        return x.block != y.block ? x.block < y.block : x.label < y.label;
    }
};

/// Basis tag of a free (unglued) boundary torus.
BasisTag boundary_basis(const std::string& block, const std::string& label);

/// A JSJ torus gluing two block boundaries. The matrix acts on homology
/// from the near side's (section, fiber) basis to the far side's.
struct JsjTorus {
    std::string id;
    BoundaryRef near;
    BoundaryRef far;
    GluingMatrix matrix;

    BasisTag basis(Side side) const;
    const BoundaryRef& side_ref(Side side) const { return side == Side::Near ? near : far; }

    friend bool operator==(const JsjTorus& x, const JsjTorus& y) {
        return x.id == y.id && x.near == y.near && x.far == y.far && x.matrix == y.matrix;
    }
    friend bool operator!=(const JsjTorus& x, const JsjTorus& y) { return !(x == y); }
};

/// A simple graph manifold presented combinatorially: blocks plus torus
/// gluings. `closed` records the intent that every block boundary is glued;
/// validate_manifold checks the claim against the gluing data.
struct GraphManifold {
    std::map<std::string, SeifertBlock> blocks;
    std::map<std::string, JsjTorus> tori;
    bool closed = false;

    const SeifertBlock* find_block(const std::string& id) const;
    const JsjTorus* find_torus(const std::string& id) const;

    /// The torus side glued to this block boundary, if any.
    std::optional<std::pair<std::string, Side>> glued_side(const BoundaryRef& ref) const;

    /// Block boundaries not glued to any torus, sorted.
    std::vector<BoundaryRef> free_boundaries() const;

    friend bool operator==(const GraphManifold& x, const GraphManifold& y) {
        return x.blocks == y.blocks && x.tori == y.tori && x.closed == y.closed;
    }
    friend bool operator!=(const GraphManifold& x, const GraphManifold& y) { return !(x == y); }
};

enum class Severity { Error, Warning };

struct Violation {
    Severity severity = Severity::Error;
    std::string code;    // stable machine-readable tag, e.g. "not-simple"
    std::string subject; // id of the offending object
    std::string message;

    friend bool operator==(const Violation& x, const Violation& y) {
        return x.severity == y.severity && x.code == y.code && x.subject == y.subject &&
               x.message == y.message;
    }
};

struct ValidationReport {
    std::vector<Violation> items;

    /// True when the report carries no errors; warnings do not invalidate.
    bool ok() const;
    std::size_t error_count() const;
    std::size_t warning_count() const;
    bool has(const std::string& code) const;

    /// Multi-line rendering, one violation per line, deterministic order.
    std::string str() const;
};

ValidationReport validate_manifold(const GraphManifold& m);

/// Geometric intersection number of the two sides' fibers, computed by
/// transporting the near fiber across the gluing and wedging with the far
/// fiber. Equals |q|; simple gluings give 1.
BigInt fiber_intersection(const JsjTorus& t);

/// Dual graph: one vertex per block, one edge per JSJ torus.
Multigraph dual_graph(const GraphManifold& m);

} // namespace spirality
