#pragma once

// Hand-assembled pairs used across the test binaries. These are written
// out literally, independent of the construct module, so they can serve
// as oracles for it.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spirality/surface.hpp"

namespace spirality::testing {

// Unqualified calls to spirality() collide with the namespace name under
// a using-directive; tests route through this alias instead.
inline PositiveRational walk_spirality(const HorizontalSurface& s, const Cycle& c) {
    return ::spirality::spirality(s, c);
}

// Two blocks joined by one JSJ torus glued with (1 1; 2 1); the right
// block keeps a free boundary torus carrying two free circles. Valid for
// every n >= 0; slopes across the torus are (2n+1)/1 and its reciprocal.
inline HorizontalSurface sample_open_pair(const BigInt& n) {
    GraphManifold m;
    m.blocks["L"] = SeifertBlock{"L", 1, {"x1"}};
    m.blocks["R"] = SeifertBlock{"R", 1, {"y1", "y2"}};
    m.tori.emplace("T", JsjTorus{"T", {"L", "x1"}, {"R", "y1"}, GluingMatrix::make(1, 1, 2, 1)});
    m.closed = false;

    const JsjTorus& t = m.tori.at("T");
    BasisTag near = t.basis(Side::Near);
    BasisTag far = t.basis(Side::Far);
    BasisTag rim = boundary_basis("R", "y2");

    HorizontalSurface s;
    s.manifold = m;
    BigInt u = 2 * n + 2;
    s.pieces["PL"] = SurfacePiece{"PL", "L", u, n + 1};
    s.pieces["PR"] = SurfacePiece{"PR", "R", u, 2 * n + 1};
    s.circles.emplace("u1", SurfaceCircle{"u1", "PL", TorusAttachment{"T", Side::Near},
                                          HomologyClass{1, 2 * n, near}});
    s.circles.emplace("u2", SurfaceCircle{"u2", "PL", TorusAttachment{"T", Side::Near},
                                          HomologyClass{2 * n + 1, -2 * n, near}});
    s.circles.emplace("w1", SurfaceCircle{"w1", "PR", TorusAttachment{"T", Side::Far},
                                          HomologyClass{2 * n + 1, 2 * n + 2, far}});
    s.circles.emplace("w2", SurfaceCircle{"w2", "PR", TorusAttachment{"T", Side::Far},
                                          HomologyClass{1, 2 * n + 2, far}});
    s.circles.emplace("f1", SurfaceCircle{"f1", "PR", FreeAttachment{"R", "y2"},
                                          HomologyClass{1, -(2 * n + 2), rim}});
    s.circles.emplace("f2", SurfaceCircle{"f2", "PR", FreeAttachment{"R", "y2"},
                                          HomologyClass{2 * n + 1, -(2 * n + 2), rim}});
    s.edges["e1"] = SurfaceEdge{"e1", "u1", "w1"};
    s.edges["e2"] = SurfaceEdge{"e2", "u2", "w2"};
    return s;
}

// The same manifold carrying a degree-one surface: a single circle on each
// torus side, so the dual graph is two vertices joined by one edge.
inline HorizontalSurface tree_pair() {
    GraphManifold m;
    m.blocks["L"] = SeifertBlock{"L", 1, {"x1"}};
    m.blocks["R"] = SeifertBlock{"R", 1, {"y1", "y2"}};
    m.tori.emplace("T", JsjTorus{"T", {"L", "x1"}, {"R", "y1"}, GluingMatrix::make(1, 1, 2, 1)});
    m.closed = false;

    const JsjTorus& t = m.tori.at("T");

    HorizontalSurface s;
    s.manifold = m;
    s.pieces["QL"] = SurfacePiece{"QL", "L", 1, 1};
    s.pieces["QR"] = SurfacePiece{"QR", "R", 1, 1};
    s.circles.emplace("v1", SurfaceCircle{"v1", "QL", TorusAttachment{"T", Side::Near},
                                          HomologyClass{1, 0, t.basis(Side::Near)}});
    s.circles.emplace("w1", SurfaceCircle{"w1", "QR", TorusAttachment{"T", Side::Far},
                                          HomologyClass{1, 2, t.basis(Side::Far)}});
    s.circles.emplace("f1", SurfaceCircle{"f1", "QR", FreeAttachment{"R", "y2"},
                                          HomologyClass{1, -2, boundary_basis("R", "y2")}});
    s.edges["d1"] = SurfaceEdge{"d1", "v1", "w1"};
    return s;
}

// The same pair doubled by hand: a third block mirrors L across a second
// torus into R, whose base fuses to genus 2 with two boundary circles.
inline HorizontalSurface sample_closed_pair(const BigInt& n) {
    GraphManifold m;
    m.blocks["L"] = SeifertBlock{"L", 1, {"x1"}};
    m.blocks["L2"] = SeifertBlock{"L2", 1, {"x1"}};
    m.blocks["R"] = SeifertBlock{"R", 2, {"y1", "y2"}};
    m.tori.emplace("T", JsjTorus{"T", {"L", "x1"}, {"R", "y1"}, GluingMatrix::make(1, 1, 2, 1)});
    m.tori.emplace("T2", JsjTorus{"T2", {"L2", "x1"}, {"R", "y2"}, GluingMatrix::make(1, 1, 2, 1)});
    m.closed = true;

    BasisTag near = m.tori.at("T").basis(Side::Near);
    BasisTag far = m.tori.at("T").basis(Side::Far);
    BasisTag near2 = m.tori.at("T2").basis(Side::Near);
    BasisTag far2 = m.tori.at("T2").basis(Side::Far);

    HorizontalSurface s;
    s.manifold = m;
    BigInt u = 2 * n + 2;
    s.pieces["PL"] = SurfacePiece{"PL", "L", u, n + 1};
    s.pieces["PL2"] = SurfacePiece{"PL2", "L2", u, n + 1};
    s.pieces["PR"] = SurfacePiece{"PR", "R", u, 4 * n + 3};
    s.circles.emplace("u1", SurfaceCircle{"u1", "PL", TorusAttachment{"T", Side::Near},
                                          HomologyClass{1, 2 * n, near}});
    s.circles.emplace("u2", SurfaceCircle{"u2", "PL", TorusAttachment{"T", Side::Near},
                                          HomologyClass{2 * n + 1, -2 * n, near}});
    s.circles.emplace("w1", SurfaceCircle{"w1", "PR", TorusAttachment{"T", Side::Far},
                                          HomologyClass{2 * n + 1, 2 * n + 2, far}});
    s.circles.emplace("w2", SurfaceCircle{"w2", "PR", TorusAttachment{"T", Side::Far},
                                          HomologyClass{1, 2 * n + 2, far}});
    s.circles.emplace("u3", SurfaceCircle{"u3", "PL2", TorusAttachment{"T2", Side::Near},
                                          HomologyClass{1, 2 * n, near2}});
    s.circles.emplace("u4", SurfaceCircle{"u4", "PL2", TorusAttachment{"T2", Side::Near},
                                          HomologyClass{2 * n + 1, -2 * n, near2}});
    s.circles.emplace("w3", SurfaceCircle{"w3", "PR", TorusAttachment{"T2", Side::Far},
                                          HomologyClass{2 * n + 1, 2 * n + 2, far2}});
    s.circles.emplace("w4", SurfaceCircle{"w4", "PR", TorusAttachment{"T2", Side::Far},
                                          HomologyClass{1, 2 * n + 2, far2}});
    s.edges["e1"] = SurfaceEdge{"e1", "u1", "w1"};
    s.edges["e2"] = SurfaceEdge{"e2", "u2", "w2"};
    s.edges["e3"] = SurfaceEdge{"e3", "u3", "w3"};
    s.edges["e4"] = SurfaceEdge{"e4", "u4", "w4"};
    return s;
}

// One block glued to itself: the surface dual graph is a single vertex
// with a loop edge. Everything here has slope 1/1.
inline HorizontalSurface loop_pair() {
    GraphManifold m;
    m.blocks["B"] = SeifertBlock{"B", 1, {"a1", "a2"}};
    m.tori.emplace("T", JsjTorus{"T", {"B", "a1"}, {"B", "a2"}, GluingMatrix::make(1, 1, 2, 1)});
    m.closed = true;

    BasisTag near = m.tori.at("T").basis(Side::Near);
    BasisTag far = m.tori.at("T").basis(Side::Far);

    HorizontalSurface s;
    s.manifold = m;
    s.pieces["P"] = SurfacePiece{"P", "B", 2, 2};
    s.circles.emplace("ca", SurfaceCircle{"ca", "P", TorusAttachment{"T", Side::Near},
                                          HomologyClass{2, 0, near}});
    s.circles.emplace("cb", SurfaceCircle{"cb", "P", TorusAttachment{"T", Side::Far},
                                          HomologyClass{2, 4, far}});
    s.edges["e"] = SurfaceEdge{"e", "ca", "cb"};
    return s;
}

inline long pick(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// A random valid open pair: two blocks, one torus with a random simple
// unimodular gluing, one piece per block, two circles per torus side and
// two free circles. Circle classes are drawn so every validator check
// holds by construction.
inline HorizontalSurface random_pair(std::mt19937_64& rng) {
    for (;;) {
        long q = pick(rng, 0, 1) ? 1 : -1;
        long d = pick(rng, 0, 1) ? 1 : -1;
        long p = pick(rng, -5, 5);
        long ss = pick(rng, -5, 5);
        long r = (p * ss - d) * q;

        long ca = pick(rng, 1, 6);
        long cc = pick(rng, 1, 6);
        if ((ca + cc) % 2 != 0) cc += 1;
        long cb = pick(rng, -6, 6);
        long cd = pick(rng, -6, 6);
        long fa1 = p * ca + q * cb;
        long fb1 = r * ca + ss * cb;
        long fa2 = p * cc + q * cd;
        long fb2 = r * cc + ss * cd;
        if (fa1 == 0 || fa2 == 0) continue;
        if (pick(rng, 0, 1)) {
            fa1 = -fa1;
            fb1 = -fb1;
        }
        if (pick(rng, 0, 1)) {
            fa2 = -fa2;
            fb2 = -fb2;
        }

        GraphManifold m;
        m.blocks["L"] = SeifertBlock{"L", 1, {"x1"}};
        m.blocks["R"] = SeifertBlock{"R", 1, {"y1", "y2"}};
        m.tori.emplace("T", JsjTorus{"T", {"L", "x1"}, {"R", "y1"},
                                     GluingMatrix::make(p, q, r, ss)});
        m.closed = false;

        BasisTag near = m.tori.at("T").basis(Side::Near);
        BasisTag far = m.tori.at("T").basis(Side::Far);
        BasisTag rim = boundary_basis("R", "y2");

        BigInt u = ca + cc;
        BigInt u2 = abs(BigInt(fa1)) + abs(BigInt(fa2));
        long x = pick(rng, 1, static_cast<long>(u2) - 1);
        long s1 = pick(rng, 0, 1) ? 1 : -1;
        long s2 = pick(rng, 0, 1) ? 1 : -1;

        HorizontalSurface s;
        s.manifold = m;
        s.pieces["PL"] = SurfacePiece{"PL", "L", u, u / 2};
        s.pieces["PR"] = SurfacePiece{"PR", "R", u2, u2 - 1};
        s.circles.emplace("u1", SurfaceCircle{"u1", "PL", TorusAttachment{"T", Side::Near},
                                              HomologyClass{ca, cb, near}});
        s.circles.emplace("u2", SurfaceCircle{"u2", "PL", TorusAttachment{"T", Side::Near},
                                              HomologyClass{cc, cd, near}});
        s.circles.emplace("w1", SurfaceCircle{"w1", "PR", TorusAttachment{"T", Side::Far},
                                              HomologyClass{fa1, fb1, far}});
        s.circles.emplace("w2", SurfaceCircle{"w2", "PR", TorusAttachment{"T", Side::Far},
                                              HomologyClass{fa2, fb2, far}});
        s.circles.emplace("f1", SurfaceCircle{"f1", "PR", FreeAttachment{"R", "y2"},
                                              HomologyClass{s1 * x, pick(rng, -6, 6), rim}});
        s.circles.emplace("f2", SurfaceCircle{"f2", "PR", FreeAttachment{"R", "y2"},
                                              HomologyClass{s2 * (static_cast<long>(u2) - x),
                                                            pick(rng, -6, 6), rim}});
        s.edges["e1"] = SurfaceEdge{"e1", "u1", "w1"};
        s.edges["e2"] = SurfaceEdge{"e2", "u2", "w2"};
        return s;
    }
}

// Pieces a directed step leaves from and arrives at.
inline std::pair<std::string, std::string> step_pieces(const HorizontalSurface& s,
                                                       const CycleStep& step) {
    const SurfaceEdge& e = s.edges.at(step.edge);
    const std::string& np = s.circles.at(e.near_circle).piece;
    const std::string& fp = s.circles.at(e.far_circle).piece;
    if (step.dir == Dir::Forward) return {np, fp};
    return {fp, np};
}

inline std::string walk_end(const HorizontalSurface& s, const Cycle& walk,
                            const std::string& base) {
    std::string cur = base;
    for (const auto& step : walk) cur = step_pieces(s, step).second;
    return cur;
}

// Random closed walk anchored at `base`: a few random steps, then the
// deterministic shortest way home.
inline Cycle random_closed_walk(std::mt19937_64& rng, const HorizontalSurface& s,
                                const std::string& base) {
    struct Option {
        std::string edge;
        Dir dir;
        std::string to;
    };
    std::map<std::string, std::vector<Option>> incidence;
    for (const auto& [id, e] : s.edges) {
        const std::string& np = s.circles.at(e.near_circle).piece;
        const std::string& fp = s.circles.at(e.far_circle).piece;
        incidence[np].push_back({id, Dir::Forward, fp});
        incidence[fp].push_back({id, Dir::Backward, np});
    }

    Cycle walk;
    std::string cur = base;
    std::size_t len = rng() % 7;
    for (std::size_t i = 0; i < len; ++i) {
        const auto& options = incidence[cur];
        if (options.empty()) break;
        const Option& o = options[rng() % options.size()];
        walk.push_back(CycleStep{o.edge, o.dir});
        cur = o.to;
    }

    // Breadth-first path home over the same incidence lists.
    while (cur != base) {
        std::map<std::string, Option> via;
        std::vector<std::string> frontier{cur};
        std::map<std::string, std::string> parent{{cur, ""}};
        bool found = false;
        while (!frontier.empty() && !found) {
            std::vector<std::string> next;
            for (const auto& v : frontier) {
                for (const auto& o : incidence[v]) {
                    if (parent.count(o.to)) continue;
                    parent[o.to] = v;
                    via.emplace(o.to, o);
                    next.push_back(o.to);
                    if (o.to == base) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            frontier = std::move(next);
        }
        // Reconstruct cur -> base and append.
        std::vector<Option> home;
        for (std::string v = base; v != cur; v = parent.at(v)) home.push_back(via.at(v));
        for (auto it = home.rbegin(); it != home.rend(); ++it)
            walk.push_back(CycleStep{it->edge, it->dir});
        cur = base;
    }
    return walk;
}

} // namespace spirality::testing
