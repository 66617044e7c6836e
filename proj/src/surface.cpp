#include "spirality/surface.hpp"

#include <set>

namespace spirality {

const SurfacePiece* HorizontalSurface::find_piece(const std::string& id) const {
    auto it = pieces.find(id);
    return it == pieces.end() ? nullptr : &it->second;
}

const SurfaceCircle* HorizontalSurface::find_circle(const std::string& id) const {
    auto it = circles.find(id);
    return it == circles.end() ? nullptr : &it->second;
}

const SurfaceEdge* HorizontalSurface::find_edge(const std::string& id) const {
    auto it = edges.find(id);
    return it == edges.end() ? nullptr : &it->second;
}

const SurfaceEdge& HorizontalSurface::edge_or_throw(const std::string& id) const {
    const SurfaceEdge* e = find_edge(id);
    if (!e) throw UnknownIdError("no edge \"" + id + "\"");
    return *e;
}

const SurfaceCircle& HorizontalSurface::circle_or_throw(const std::string& id) const {
    const SurfaceCircle* c = find_circle(id);
    if (!c) throw UnknownIdError("no circle \"" + id + "\"");
    return *c;
}

std::optional<BoundaryRef> HorizontalSurface::attachment_boundary(const SurfaceCircle& c) const {
    if (const auto* ta = std::get_if<TorusAttachment>(&c.attachment)) {
        const JsjTorus* t = manifold.find_torus(ta->torus);
        if (!t) return std::nullopt;
        return t->side_ref(ta->side);
    }
    const auto& fa = std::get<FreeAttachment>(c.attachment);
    return BoundaryRef{fa.block, fa.label};
}

BasisTag HorizontalSurface::attachment_basis(const SurfaceCircle& c) const {
    if (const auto* ta = std::get_if<TorusAttachment>(&c.attachment)) {
        const JsjTorus* t = manifold.find_torus(ta->torus);
        if (!t) return BasisTag("torus:" + ta->torus + ":" + to_string(ta->side));
        return t->basis(ta->side);
    }
    const auto& fa = std::get<FreeAttachment>(c.attachment);
    return boundary_basis(fa.block, fa.label);
}

std::vector<const SurfaceCircle*> HorizontalSurface::circles_of_piece(
    const std::string& piece_id) const {
    std::vector<const SurfaceCircle*> out;
    for (const auto& [id, c] : circles)
        if (c.piece == piece_id) out.push_back(&c);
    return out;
}

BigInt HorizontalSurface::piece_chi(const SurfacePiece& p) const {
    return 2 - 2 * p.genus - BigInt(circles_of_piece(p.id).size());
}

ValidationReport validate_surface(const HorizontalSurface& s) {
    ValidationReport rep;
    auto err = [&](std::string code, std::string subject, std::string message) {
        rep.items.push_back({Severity::Error, std::move(code), std::move(subject), std::move(message)});
    };

    if (s.pieces.empty()) err("empty-surface", "-", "a horizontal surface needs at least one piece");

    for (const auto& [id, p] : s.pieces) {
        if (p.id != id)
            err("id-mismatch", id, "piece stored under key \"" + id + "\" carries id \"" + p.id + "\"");
        if (p.degree < 1)
            err("bad-degree", id, "covering degree " + decimal(p.degree) + " must be at least 1");
        if (p.genus < 0) err("negative-genus", id, "piece genus " + decimal(p.genus) + " is negative");
        const SeifertBlock* b = s.manifold.find_block(p.block);
        if (!b) {
            err("unknown-block", id, "piece covers missing block \"" + p.block + "\"");
            continue;
        }
        BigInt expected = p.degree * b->base_chi();
        if (s.piece_chi(p) != expected)
            err("chi-mismatch", id,
                "piece has chi = " + decimal(s.piece_chi(p)) + " but a degree-" + decimal(p.degree) +
                    " cover of \"" + p.block + "\" needs chi = " + decimal(expected));
        for (const auto& label : b->boundary) {
            BigInt sum = 0;
            for (const auto* c : s.circles_of_piece(id)) {
                auto ref = s.attachment_boundary(*c);
                if (ref && *ref == BoundaryRef{p.block, label}) sum += abs(c->homology.a);
            }
            if (sum != p.degree)
                err("degree-sum", id + ":" + label,
                    "section coefficients over this boundary sum to " + decimal(sum) +
                        ", expected the degree " + decimal(p.degree));
        }
    }

    for (const auto& [id, c] : s.circles) {
        if (c.id != id)
            err("id-mismatch", id, "circle stored under key \"" + id + "\" carries id \"" + c.id + "\"");
        const SurfacePiece* p = s.find_piece(c.piece);
        if (!p) err("unknown-piece", id, "circle belongs to missing piece \"" + c.piece + "\"");
        std::optional<BoundaryRef> ref;
        if (const auto* ta = std::get_if<TorusAttachment>(&c.attachment)) {
            if (!s.manifold.find_torus(ta->torus)) {
                err("unknown-torus", id, "circle lies on missing torus \"" + ta->torus + "\"");
            } else {
                ref = s.attachment_boundary(c);
            }
        } else {
            const auto& fa = std::get<FreeAttachment>(c.attachment);
            const SeifertBlock* b = s.manifold.find_block(fa.block);
            bool label_ok = false;
            if (b)
                for (const auto& label : b->boundary) label_ok = label_ok || label == fa.label;
            if (!b || !label_ok) {
                err("unknown-boundary", id,
                    "circle lies on missing boundary \"" + fa.block + ":" + fa.label + "\"");
            } else if (s.manifold.glued_side({fa.block, fa.label})) {
                err("not-free", id, "circle claims free boundary \"" + fa.block + ":" + fa.label +
                                        "\" but that boundary is glued to a JSJ torus");
            } else {
                ref = BoundaryRef{fa.block, fa.label};
            }
        }
        if (ref && p && ref->block != p->block)
            err("wrong-block", id, "circle sits on block \"" + ref->block +
                                       "\" but its piece covers \"" + p->block + "\"");
        if (c.homology.basis != s.attachment_basis(c))
            err("basis-tag", id, "class written in basis \"" + c.homology.basis.name() +
                                     "\", attachment requires \"" + s.attachment_basis(c).name() + "\"");
        if (!c.homology.horizontal_admissible())
            err("horizontality", id, "section coefficient is 0; the circle cannot bound a horizontal sheet");
    }

    std::map<std::string, std::vector<std::string>> uses;
    for (const auto& [id, e] : s.edges) {
        if (e.id != id)
            err("id-mismatch", id, "edge stored under key \"" + id + "\" carries id \"" + e.id + "\"");
        const SurfaceCircle* near = s.find_circle(e.near_circle);
        const SurfaceCircle* far = s.find_circle(e.far_circle);
        if (!near) err("unknown-circle", id, "edge names missing circle \"" + e.near_circle + "\"");
        if (!far) err("unknown-circle", id, "edge names missing circle \"" + e.far_circle + "\"");
        if (!near || !far) continue;
        if (e.near_circle == e.far_circle) {
            err("degenerate-edge", id, "edge pairs circle \"" + e.near_circle + "\" with itself");
            continue;
        }
        uses[e.near_circle].push_back(id);
        uses[e.far_circle].push_back(id);
        const auto* tn = std::get_if<TorusAttachment>(&near->attachment);
        const auto* tf = std::get_if<TorusAttachment>(&far->attachment);
        if (!tn || !tf || tn->torus != tf->torus || tn->side != Side::Near ||
            tf->side != Side::Far) {
            err("edge-attachment", id,
                "edge must pair a near-side circle with a far-side circle of one torus");
            continue;
        }
        const JsjTorus* t = s.manifold.find_torus(tn->torus);
        if (!t) continue; // unknown-torus already reported for the circles
        HomologyClass moved = transport(t->matrix, near->homology, t->basis(Side::Far));
        if (moved != far->homology && negate(moved) != far->homology)
            err("edge-compat", id,
                "transported near class (" + decimal(moved.a) + ", " + decimal(moved.b) +
                    ") does not match the far class (" + decimal(far->homology.a) + ", " +
                    decimal(far->homology.b) + ") up to sign");
    }

    for (const auto& [id, c] : s.circles) {
        auto it = uses.find(id);
        std::size_t n = it == uses.end() ? 0 : it->second.size();
        bool glued = std::holds_alternative<TorusAttachment>(c.attachment);
        if (glued && n == 0)
            err("unpaired-circle", id, "circle lies on a JSJ torus but no edge pairs it");
        if (n > 1) {
            std::string list;
            for (const auto& e : it->second) list += (list.empty() ? "" : ", ") + e;
            err("circle-reused", id, "circle appears in more than one edge: " + list);
        }
        if (!glued && n > 0)
            err("free-circle-paired", id, "circle on a free boundary cannot appear in an edge");
    }

    if (!connected(surface_dual_graph(s)))
        err("disconnected", "-", "surface dual graph is not connected");

    return rep;
}

Multigraph surface_dual_graph(const HorizontalSurface& s) {
    std::vector<std::string> vertices;
    for (const auto& [id, p] : s.pieces) vertices.push_back(id);
    std::vector<Multigraph::Edge> edges;
    for (const auto& [id, e] : s.edges) {
        const SurfaceCircle* near = s.find_circle(e.near_circle);
        const SurfaceCircle* far = s.find_circle(e.far_circle);
        if (!near || !far) continue; // left to validate_surface to report
        edges.push_back({id, near->piece, far->piece});
        vertices.push_back(near->piece);
        vertices.push_back(far->piece);
    }
    return Multigraph::make(std::move(vertices), std::move(edges));
}

namespace {

struct EdgeEnds {
    const SurfaceCircle* initial;
    const SurfaceCircle* terminal;
};

EdgeEnds directed_ends(const HorizontalSurface& s, const std::string& edge_id, Dir dir) {
    const SurfaceEdge& e = s.edge_or_throw(edge_id);
    const SurfaceCircle& near = s.circle_or_throw(e.near_circle);
    const SurfaceCircle& far = s.circle_or_throw(e.far_circle);
    if (dir == Dir::Forward) return {&near, &far};
    return {&far, &near};
}

} // namespace

PositiveRational slope(const HorizontalSurface& s, const std::string& edge_id, Dir dir) {
    EdgeEnds ends = directed_ends(s, edge_id, dir);
    return PositiveRational::reduce(ends.initial->homology.a, ends.terminal->homology.a);
}

PositiveRational slope_fiber_decomposition(const HorizontalSurface& s, const std::string& edge_id,
                                           Dir dir) {
    const SurfaceEdge& e = s.edge_or_throw(edge_id);
    const SurfaceCircle& near = s.circle_or_throw(e.near_circle);
    const SurfaceCircle& far = s.circle_or_throw(e.far_circle);
    const auto* ta = std::get_if<TorusAttachment>(&near.attachment);
    if (!ta) throw UnknownIdError("edge \"" + edge_id + "\" is not carried by a JSJ torus");
    const JsjTorus* t = s.manifold.find_torus(ta->torus);
    if (!t) throw UnknownIdError("edge \"" + edge_id + "\" names missing torus \"" + ta->torus + "\"");

    // Work entirely in the initial side's basis: its own fiber, the other
    // side's fiber pulled across the gluing, and the initial circle class.
    BasisTag own = dir == Dir::Forward ? t->basis(Side::Near) : t->basis(Side::Far);
    const HomologyClass& c = dir == Dir::Forward ? near.homology : far.homology;
    HomologyClass fiber_initial{0, 1, own};
    HomologyClass fiber_terminal =
        dir == Dir::Forward
            ? transport(t->matrix.inverse(), HomologyClass{0, 1, t->basis(Side::Far)}, own)
            : transport(t->matrix, HomologyClass{0, 1, t->basis(Side::Near)}, own);

    BigInt span = wedge(fiber_initial, fiber_terminal);
    if (span != 1 && span != -1)
        throw FiberBasisError("the two fibers of torus \"" + t->id +
                              "\" intersect |" + decimal(abs(span)) + "| times and do not span");
    // Cramer: c = a*fiber_initial + b*fiber_terminal.
    BigInt a = wedge(c, fiber_terminal) / span;
    BigInt b = wedge(c, fiber_initial) / -span;
    return PositiveRational::reduce(b, a);
}

PositiveRational governor(const HorizontalSurface& s) {
    if (s.edges.empty()) throw NoEdgesError("governor of a surface with no edges is undefined");
    PositiveRational best;
    bool first = true;
    for (const auto& [id, e] : s.edges)
        for (Dir dir : {Dir::Forward, Dir::Backward}) {
            PositiveRational v = slope(s, id, dir);
            if (first || best < v) best = v;
            first = false;
        }
    return best;
}

PositiveRational spirality(const HorizontalSurface& s, const Cycle& cycle) {
    PositiveRational product;
    if (cycle.empty()) return product;

    auto piece_ends = [&](const CycleStep& step) {
        EdgeEnds ends = directed_ends(s, step.edge, step.dir);
        return std::make_pair(ends.initial->piece, ends.terminal->piece);
    };

    std::string expected = piece_ends(cycle.front()).first;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        auto [from, to] = piece_ends(cycle[i]);
        if (from != expected)
            throw BrokenCycleError("step " + std::to_string(i + 1) + " (edge \"" + cycle[i].edge +
                                   "\") starts at piece \"" + from + "\" but the walk stands at \"" +
                                   expected + "\"");
        expected = to;
        product = product * slope(s, cycle[i].edge, cycle[i].dir);
    }
    std::string start = piece_ends(cycle.front()).first;
    if (expected != start)
        throw BrokenCycleError("walk ends at piece \"" + expected + "\" but started at \"" + start +
                               "\"");
    return product;
}

std::vector<Cycle> cycle_basis(const HorizontalSurface& s, TreeOrder order) {
    return fundamental_cycles(surface_dual_graph(s), order);
}

std::vector<PositiveRational> spirality_image_generators(const HorizontalSurface& s,
                                                         TreeOrder order) {
    std::vector<PositiveRational> gens;
    for (const auto& cycle : cycle_basis(s, order)) gens.push_back(spirality(s, cycle));
    return gens;
}

bool is_separable(const HorizontalSurface& s, TreeOrder order) {
    for (const auto& g : spirality_image_generators(s, order))
        if (!g.is_one()) return false;
    return true;
}

std::size_t crossing_number(const Cycle& cycle) {
    return cycle.size();
}

} // namespace spirality
