#include "spirality/manifold.hpp"

#include <set>

namespace spirality {

BasisTag boundary_basis(const std::string& block, const std::string& label) {
    return BasisTag("boundary:" + block + ":" + label);
}

BasisTag JsjTorus::basis(Side side) const {
    return BasisTag("torus:" + id + ":" + to_string(side));
}

const SeifertBlock* GraphManifold::find_block(const std::string& id) const {
    auto it = blocks.find(id);
    return it == blocks.end() ? nullptr : &it->second;
}

const JsjTorus* GraphManifold::find_torus(const std::string& id) const {
    auto it = tori.find(id);
    return it == tori.end() ? nullptr : &it->second;
}

std::optional<std::pair<std::string, Side>> GraphManifold::glued_side(const BoundaryRef& ref) const {
    for (const auto& [id, t] : tori) {
        if (t.near == ref) return std::make_pair(id, Side::Near);
        if (t.far == ref) return std::make_pair(id, Side::Far);
    }
    return std::nullopt;
}

std::vector<BoundaryRef> GraphManifold::free_boundaries() const {
    std::set<BoundaryRef> glued;
    for (const auto& [id, t] : tori) {
        glued.insert(t.near);
        glued.insert(t.far);
    }
    std::vector<BoundaryRef> free;
    for (const auto& [id, b] : blocks)
        for (const auto& label : b.boundary) {
            BoundaryRef ref{id, label};
            if (!glued.count(ref)) free.push_back(ref);
        }
    return free;
}

bool ValidationReport::ok() const { return error_count() == 0; }

std::size_t ValidationReport::error_count() const {
    std::size_t n = 0;
    for (const auto& v : items)
        if (v.severity == Severity::Error) ++n;
    return n;
}

std::size_t ValidationReport::warning_count() const { return items.size() - error_count(); }

bool ValidationReport::has(const std::string& code) const {
    for (const auto& v : items)
        if (v.code == code) return true;
    return false;
}

std::string ValidationReport::str() const {
    std::string out;
    for (const auto& v : items) {
        out += v.severity == Severity::Error ? "  [error] " : "  [warning] ";
        out += v.code + " " + v.subject + ": " + v.message + "\n";
    }
    return out;
}

ValidationReport validate_manifold(const GraphManifold& m) {
    ValidationReport rep;
    auto err = [&](std::string code, std::string subject, std::string message) {
        rep.items.push_back({Severity::Error, std::move(code), std::move(subject), std::move(message)});
    };
    auto warn = [&](std::string code, std::string subject, std::string message) {
        rep.items.push_back({Severity::Warning, std::move(code), std::move(subject), std::move(message)});
    };

    for (const auto& [id, b] : m.blocks) {
        if (b.id != id)
            err("id-mismatch", id, "block stored under key \"" + id + "\" carries id \"" + b.id + "\"");
        if (b.genus < 0)
            err("negative-genus", id, "block genus " + decimal(b.genus) + " is negative");
        if (b.boundary.empty())
            err("no-boundary", id, "block has no boundary circles");
        std::set<std::string> seen;
        for (const auto& label : b.boundary)
            if (!seen.insert(label).second)
                err("duplicate-label", id, "boundary label \"" + label + "\" repeats");
        if (b.genus >= 0 && !b.boundary.empty() && b.base_chi() >= 0)
            err("nonnegative-chi", id,
                "base surface has chi = " + decimal(b.base_chi()) + ", must be negative");
    }

    auto check_side = [&](const JsjTorus& t, Side side) {
        const BoundaryRef& ref = t.side_ref(side);
        const SeifertBlock* b = m.find_block(ref.block);
        if (!b) {
            err("unknown-block", t.id, std::string(to_string(side)) + " side names missing block \"" +
                                           ref.block + "\"");
            return false;
        }
        for (const auto& label : b->boundary)
            if (label == ref.label) return true;
        err("unknown-label", t.id, std::string(to_string(side)) + " side names missing boundary \"" +
                                       ref.block + ":" + ref.label + "\"");
        return false;
    };

    std::map<BoundaryRef, std::string> used;
    for (const auto& [id, t] : m.tori) {
        if (t.id != id)
            err("id-mismatch", id, "torus stored under key \"" + id + "\" carries id \"" + t.id + "\"");
        bool near_ok = check_side(t, Side::Near);
        bool far_ok = check_side(t, Side::Far);
        if (near_ok && far_ok && t.near == t.far)
            err("degenerate-torus", id, "near and far sides name the same block boundary");
        for (Side side : {Side::Near, Side::Far}) {
            const BoundaryRef& ref = t.side_ref(side);
            auto [it, fresh] = used.emplace(ref, id + ":" + to_string(side));
            if (!fresh)
                err("boundary-reused", id, "boundary \"" + ref.block + ":" + ref.label +
                                               "\" already glued at " + it->second);
        }
        if (!t.matrix.unimodular())
            err("not-unimodular", id, "gluing matrix has det = " + decimal(t.matrix.det()) +
                                          ", must be +1 or -1");
        BigInt fi = fiber_intersection(t);
        if (fi != 1)
            err("not-simple", id, "fiber intersection number is " + decimal(fi) +
                                      ", must be 1 for a simple gluing");
        else if (t.matrix.det() == 1)
            warn("orientation", id, "gluing has det = +1; orientation-reversing convention is det = -1");
    }

    if (m.tori.empty()) err("no-jsj-torus", "-", "a graph manifold needs at least one JSJ torus");

    auto free = m.free_boundaries();
    if (m.closed && !free.empty()) {
        std::string list;
        for (const auto& ref : free) list += (list.empty() ? "" : ", ") + ref.block + ":" + ref.label;
        err("not-closed", "-", "closed flag is set but free boundaries remain: " + list);
    }
    if (!m.closed && free.empty() && !m.blocks.empty())
        warn("closed-claim", "-", "no free boundaries remain; manifold is closed despite the flag");

    if (!connected(dual_graph(m)))
        err("disconnected", "-", "block graph is not connected");

    return rep;
}

BigInt fiber_intersection(const JsjTorus& t) {
    HomologyClass near_fiber{0, 1, t.basis(Side::Near)};
    HomologyClass far_fiber{0, 1, t.basis(Side::Far)};
    return abs(wedge(transport(t.matrix, near_fiber, t.basis(Side::Far)), far_fiber));
}

Multigraph dual_graph(const GraphManifold& m) {
    std::vector<std::string> vertices;
    for (const auto& [id, b] : m.blocks) vertices.push_back(id);
    std::vector<Multigraph::Edge> edges;
    for (const auto& [id, t] : m.tori) {
        edges.push_back({id, t.near.block, t.far.block});
        // Dangling torus sides must stay representable for diagnosis.
        vertices.push_back(t.near.block);
        vertices.push_back(t.far.block);
    }
    return Multigraph::make(std::move(vertices), std::move(edges));
}

} // namespace spirality
