#include "spirality/construct.hpp"

#include <set>

namespace spirality {

namespace {

void require_valid(const HorizontalSurface& s, const char* what) {
    ValidationReport mr = validate_manifold(s.manifold);
    ValidationReport sr = validate_surface(s);
    if (!mr.ok() || !sr.ok())
        throw ConstructionBug(std::string(what) + " failed validation:\n" + mr.str() + sr.str());
}

} // namespace

RwCheck rw_check(const RwRequest& req) {
    RwCheck out;
    auto fail = [&](std::string code, std::string subject, std::string message) {
        out.violations.push_back(
            {Severity::Error, std::move(code), std::move(subject), std::move(message)});
    };

    if (req.genus < 1)
        fail("base-genus", "-", "base genus " + decimal(req.genus) + " must be at least 1");
    if (req.boundaries.empty()) fail("no-boundary", "-", "request has no boundary tori");
    for (std::size_t i = 0; i < req.boundaries.size(); ++i)
        for (const auto& [u, v] : req.boundaries[i].classes)
            if (u < 1)
                fail("nonpositive-section", "boundary " + std::to_string(i + 1),
                     "section coefficient " + decimal(u) + " must be positive");
    if (!out.violations.empty()) return out;

    BigInt fiber_sum = 0;
    for (const auto& b : req.boundaries)
        for (const auto& [u, v] : b.classes) fiber_sum += v;
    if (fiber_sum != 0)
        fail("fiber-sum", "-", "fiber coefficients sum to " + decimal(fiber_sum) + ", must be 0");

    BigInt degree = req.boundaries.front().classes[0].first + req.boundaries.front().classes[1].first;
    bool degrees_agree = true;
    for (std::size_t i = 0; i < req.boundaries.size(); ++i) {
        BigInt sum = req.boundaries[i].classes[0].first + req.boundaries[i].classes[1].first;
        if (sum != degree) {
            fail("degree-mismatch", "boundary " + std::to_string(i + 1),
                 "section coefficients sum to " + decimal(sum) + ", boundary 1 sums to " +
                     decimal(degree));
            degrees_agree = false;
        }
    }

    if (degrees_agree) {
        BigInt euler = degree * req.base_chi();
        if (euler % 2 != 0)
            fail("odd-euler", "-",
                 "degree * chi(base) = " + decimal(euler) + " is odd, no cover exists");
    }

    if (out.violations.empty()) out.degree = degree;
    return out;
}

RwPiece rw_build_piece(const RwRequest& req) {
    RwCheck check = rw_check(req);
    if (!check.ok()) {
        std::string msg = "horizontal piece request is unsatisfiable:";
        for (const auto& v : check.violations) msg += " [" + v.code + "] " + v.message + ";";
        throw RwError(std::move(msg), std::move(check.violations));
    }
    BigInt tori(req.boundaries.size());
    BigInt genus = covering_genus(tori, *check.degree, req.base_chi());
    return RwPiece{*check.degree, genus, 2 * tori};
}

BigInt covering_genus(const BigInt& boundary_tori, const BigInt& degree, const BigInt& chi) {
    BigInt doubled = 2 - 2 * boundary_tori - degree * chi;
    if (doubled % 2 != 0)
        throw GenusError("cover with 2 - 2t - u*chi = " + decimal(doubled) + " has no integer genus");
    BigInt genus = doubled / 2;
    if (genus < 0) throw GenusError("cover genus " + decimal(genus) + " is negative");
    return genus;
}

HorizontalSurface build_open_pair(const BigInt& n) {
    if (n < 0) throw ParameterError("family parameter must be >= 0, got " + decimal(n));

    GraphManifold m;
    m.blocks["left"] = SeifertBlock{"left", 1, {"a1"}};
    m.blocks["middle"] = SeifertBlock{"middle", 1, {"a1", "a2"}};
    m.tori.emplace("T1", JsjTorus{"T1", {"left", "a1"}, {"middle", "a1"},
                                  GluingMatrix::make(1, 1, 2, 1)});
    m.closed = false;

    const JsjTorus& t = m.tori.at("T1");
    BasisTag near = t.basis(Side::Near);
    BasisTag far = t.basis(Side::Far);
    BasisTag rim = boundary_basis("middle", "a2");

    HomologyClass c1_left{1, 2 * n, near};
    HomologyClass c2_left{2 * n + 1, -2 * n, near};
    HomologyClass c1_middle = transport(t.matrix, c1_left, far);
    HomologyClass c2_middle = transport(t.matrix, c2_left, far);
    if (c1_middle.a != 2 * n + 1 || c1_middle.b != 2 * n + 2 || c2_middle.a != 1 ||
        c2_middle.b != 2 * n + 2)
        throw ConstructionBug("transported boundary classes do not match their closed forms");
    HomologyClass c3{1, -(2 * n + 2), rim};
    HomologyClass c4{2 * n + 1, -(2 * n + 2), rim};

    RwRequest left_req{1, {RwBoundary{{{std::pair(c1_left.a, c1_left.b),
                                        std::pair(c2_left.a, c2_left.b)}}}}};
    RwRequest middle_req{1, {RwBoundary{{{std::pair(c1_middle.a, c1_middle.b),
                                          std::pair(c2_middle.a, c2_middle.b)}}},
                             RwBoundary{{{std::pair(c3.a, c3.b), std::pair(c4.a, c4.b)}}}}};
    RwPiece left_piece = rw_build_piece(left_req);
    RwPiece middle_piece = rw_build_piece(middle_req);
    if (left_piece.degree != middle_piece.degree)
        throw ConstructionBug("the two pieces disagree on the covering degree");

    HorizontalSurface s;
    s.manifold = m;
    s.pieces["left"] = SurfacePiece{"left", "left", left_piece.degree, left_piece.genus};
    s.pieces["middle"] = SurfacePiece{"middle", "middle", middle_piece.degree, middle_piece.genus};
    s.circles.emplace("c1_left", SurfaceCircle{"c1_left", "left",
                                               TorusAttachment{"T1", Side::Near}, c1_left});
    s.circles.emplace("c2_left", SurfaceCircle{"c2_left", "left",
                                               TorusAttachment{"T1", Side::Near}, c2_left});
    s.circles.emplace("c1_middle", SurfaceCircle{"c1_middle", "middle",
                                                 TorusAttachment{"T1", Side::Far}, c1_middle});
    s.circles.emplace("c2_middle", SurfaceCircle{"c2_middle", "middle",
                                                 TorusAttachment{"T1", Side::Far}, c2_middle});
    s.circles.emplace("c3", SurfaceCircle{"c3", "middle", FreeAttachment{"middle", "a2"}, c3});
    s.circles.emplace("c4", SurfaceCircle{"c4", "middle", FreeAttachment{"middle", "a2"}, c4});
    s.edges["c1"] = SurfaceEdge{"c1", "c1_left", "c1_middle"};
    s.edges["c2"] = SurfaceEdge{"c2", "c2_left", "c2_middle"};

    require_valid(s, "open pair");
    return s;
}

namespace {

const std::string kMirror = "_mirror";

} // namespace

HorizontalSurface double_pair(const HorizontalSurface& open_pair) {
    const GraphManifold& m = open_pair.manifold;
    {
        ValidationReport mr = validate_manifold(m);
        ValidationReport sr = validate_surface(open_pair);
        if (!mr.ok() || !sr.ok())
            throw DoublingError("cannot double an invalid pair:\n" + mr.str() + sr.str());
    }
    std::vector<BoundaryRef> free = m.free_boundaries();
    if (free.empty()) throw DoublingError("manifold has no free boundary tori to double along");
    std::set<BoundaryRef> free_set(free.begin(), free.end());

    std::set<std::string> fused_blocks;
    for (const auto& ref : free) fused_blocks.insert(ref.block);

    auto fresh = [&](const auto& map, const std::string& id) {
        if (map.count(id + kMirror))
            throw DoublingError("mirror id \"" + id + kMirror + "\" collides with an existing id");
        return id + kMirror;
    };

    GraphManifold d;
    d.closed = true;
    for (const auto& [id, b] : m.blocks) {
        if (fused_blocks.count(id)) {
            SeifertBlock fused;
            fused.id = id;
            for (const auto& label : b.boundary)
                if (!free_set.count({id, label})) fused.boundary.push_back(label);
            std::size_t kept = fused.boundary.size();
            if (kept == 0)
                throw DoublingError("doubling would close block \"" + id +
                                    "\" off from every JSJ torus");
            for (std::size_t i = 0; i < kept; ++i) {
                std::string mirrored = fused.boundary[i] + kMirror;
                for (const auto& label : b.boundary)
                    if (label == mirrored)
                        throw DoublingError("mirror label \"" + mirrored +
                                            "\" collides on block \"" + id + "\"");
                fused.boundary.push_back(mirrored);
            }
            // Genus from the doubled Euler characteristic.
            BigInt chi2 = 2 * b.base_chi();
            BigInt doubled = 2 - BigInt(fused.boundary.size()) - chi2;
            if (doubled % 2 != 0 || doubled < 0)
                throw ConstructionBug("fused block \"" + id + "\" has no valid genus");
            fused.genus = doubled / 2;
            d.blocks[id] = std::move(fused);
        } else {
            d.blocks[id] = b;
            SeifertBlock mirror = b;
            mirror.id = fresh(m.blocks, id);
            d.blocks[mirror.id] = std::move(mirror);
        }
    }

    auto mirror_ref = [&](const BoundaryRef& ref) {
        if (fused_blocks.count(ref.block)) return BoundaryRef{ref.block, ref.label + kMirror};
        return BoundaryRef{ref.block + kMirror, ref.label};
    };
    for (const auto& [id, t] : m.tori) {
        d.tori.emplace(id, t);
        JsjTorus mirror{fresh(m.tori, id), mirror_ref(t.near), mirror_ref(t.far), t.matrix};
        d.tori.emplace(mirror.id, std::move(mirror));
    }

    auto circle_is_free = [&](const SurfaceCircle& c) {
        const auto* fa = std::get_if<FreeAttachment>(&c.attachment);
        return fa && free_set.count({fa->block, fa->label});
    };

    std::set<std::string> fused_pieces;
    for (const auto& [id, c] : open_pair.circles)
        if (circle_is_free(c)) fused_pieces.insert(c.piece);

    HorizontalSurface out;
    out.manifold = std::move(d);

    for (const auto& [id, p] : open_pair.pieces) {
        bool block_fused = fused_blocks.count(p.block) != 0;
        if (fused_pieces.count(id) != block_fused)
            throw DoublingError("piece \"" + id + "\" and block \"" + p.block +
                                "\" disagree about touching the free boundary");
        if (block_fused) {
            SurfacePiece fused = p;
            BigInt kept = 0;
            for (const auto* c : open_pair.circles_of_piece(id))
                if (!circle_is_free(*c)) ++kept;
            BigInt chi2 = 2 * open_pair.piece_chi(p);
            BigInt doubled = 2 - 2 * kept - chi2;
            if (doubled % 2 != 0 || doubled < 0)
                throw ConstructionBug("fused piece \"" + id + "\" has no valid genus");
            fused.genus = doubled / 2;
            out.pieces[id] = std::move(fused);
        } else {
            out.pieces[id] = p;
            SurfacePiece mirror = p;
            mirror.id = fresh(open_pair.pieces, id);
            mirror.block = p.block + kMirror;
            out.pieces[mirror.id] = std::move(mirror);
        }
    }

    for (const auto& [id, c] : open_pair.circles) {
        if (circle_is_free(c)) continue; // free circles fuse into the interior
        out.circles.emplace(id, c);
        const auto& ta = std::get<TorusAttachment>(c.attachment);
        SurfaceCircle mirror = c;
        mirror.id = fresh(open_pair.circles, id);
        mirror.piece = fused_pieces.count(c.piece) ? c.piece : c.piece + kMirror;
        mirror.attachment = TorusAttachment{ta.torus + kMirror, ta.side};
        mirror.homology =
            HomologyClass{c.homology.a, c.homology.b,
                          out.manifold.tori.at(ta.torus + kMirror).basis(ta.side)};
        out.circles.emplace(mirror.id, std::move(mirror));
    }

    for (const auto& [id, e] : open_pair.edges) {
        out.edges.emplace(id, e);
        SurfaceEdge mirror{fresh(open_pair.edges, id), e.near_circle + kMirror,
                           e.far_circle + kMirror};
        out.edges.emplace(mirror.id, std::move(mirror));
    }

    require_valid(out, "doubled pair");
    return out;
}

FamilySpec build_family(const BigInt& n) {
    if (n < 1) throw ParameterError("family index must be >= 1, got " + decimal(n));

    HorizontalSurface closed = double_pair(build_open_pair(n));
    Cycle gamma{CycleStep{"c1", Dir::Backward}, CycleStep{"c2", Dir::Forward}};
    FamilySpec spec{n, std::move(closed), std::move(gamma)};

    BigInt en = 2 * n + 1;
    PositiveRational expected_governor = PositiveRational::reduce(en, 1);
    PositiveRational expected_spirality = PositiveRational::reduce(en * en, 1);
    if (spec.surface.pieces.size() != 3 || spec.surface.edges.size() != 4 ||
        spec.manifold().blocks.size() != 3 || spec.manifold().tori.size() != 2)
        throw ConstructionBug("family member has unexpected shape");
    if (governor(spec.surface) != expected_governor)
        throw ConstructionBug("family governor disagrees with 2n+1");
    if (spirality(spec.surface, spec.gamma) != expected_spirality)
        throw ConstructionBug("family spirality disagrees with (2n+1)^2");
    if (crossing_number(spec.gamma) != 2)
        throw ConstructionBug("family cycle does not cross exactly twice");
    return spec;
}

std::vector<BigInt> sparse_index_set(std::size_t count) {
    if (count < 1) throw ParameterError("sparse index schedule needs at least one member");
    std::vector<BigInt> out{1};
    while (out.size() < count) {
        BigInt t = out.back();
        BigInt next = (2 * t + 1) * (2 * t + 1) + 1;
        out.push_back(std::move(next));
    }
    return out;
}

} // namespace spirality
