#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace spirality {

/// Orientation of one edge traversal. Forward runs from the near endpoint
/// to the far endpoint, matching the "+" sign in documents.
enum class Dir { Forward, Backward };

inline Dir flip(Dir d) { return d == Dir::Forward ? Dir::Backward : Dir::Forward; }

struct CycleStep {
    std::string edge;
    Dir dir = Dir::Forward;

    friend bool operator==(const CycleStep& x, const CycleStep& y) {
        return x.edge == y.edge && x.dir == y.dir;
    }
    friend bool operator!=(const CycleStep& x, const CycleStep& y) { return !(x == y); }
};

/// A directed edge walk. Closedness is a property checked by the
/// operations that require it, not by the type.
using Cycle = std::vector<CycleStep>;

/// Undirected multigraph with string-identified vertices and edges.
/// Loops and parallel edges are allowed. Vertices and edges are kept
/// sorted by id so every traversal below is deterministic.
struct Multigraph {
    struct Edge {
        std::string id;
        std::string tail; // near endpoint
        std::string head; // far endpoint
    };

    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    static Multigraph make(std::vector<std::string> vertices, std::vector<Edge> edges);

    bool has_vertex(const std::string& id) const;
    const Edge* find_edge(const std::string& id) const;
};

std::size_t component_count(const Multigraph& g);

/// Empty and single-vertex graphs count as connected.
bool connected(const Multigraph& g);

/// Rank of the cycle space: |edges| - |vertices| + |components|.
std::size_t cycle_rank(const Multigraph& g);

/// Tie-break rule for spanning tree construction. Edges are offered to the
/// tree in ascending or descending id order; results downstream of the
/// basis (separability verdicts, spirality images as a set of values up to
/// the group they generate) must not depend on the choice.
enum class TreeOrder { AscendingIds, DescendingIds };

/// Fundamental cycles of a deterministic spanning forest. One cycle per
/// non-tree edge, in scan order; each runs the non-tree edge Forward and
/// returns along the unique tree path.
std::vector<Cycle> fundamental_cycles(const Multigraph& g, TreeOrder order);

} // namespace spirality
