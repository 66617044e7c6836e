#include "spirality/document.hpp"

#include <cstddef>
#include <utility>

#include "json.hpp"

namespace spirality {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw DocumentError(where + ": " + what);
}

// nlohmann renders "[json.exception.parse_error.N] parse error at line L,
// column C: ..."; keep everything from "line L" on.
std::string trim_parse_error(const std::string& what) {
    std::string msg = what;
    if (auto tag = msg.find("] "); tag != std::string::npos) msg = msg.substr(tag + 2);
    const std::string prefix = "parse error at ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    return msg;
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, "missing key \"" + key + "\"");
    return *it;
}

std::string get_string(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

BigInt get_bigint(const Json& j, const std::string& where) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return parse_bigint(j.get<std::string>());
        } catch (const ParameterError& e) {
            fail(where, e.what());
        }
    }
    if (j.is_number_float())
        fail(where, "expected an integer; numbers beyond int64 must be written as decimal strings");
    fail(where, "expected an integer");
}

const Json& element(const Json& j, std::size_t i, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j.at(i);
}

std::size_t array_size(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j.size();
}

Dir parse_dir(const std::string& text, const std::string& where) {
    if (text == "+") return Dir::Forward;
    if (text == "-" || text == "−") return Dir::Backward;
    fail(where, "expected \"+\" or \"-\", got \"" + text + "\"");
}

Json render_int(const BigInt& v) {
    if (fits_int64(v)) return Json(to_int64(v));
    return Json(decimal(v));
}

} // namespace

PairDocument parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DocumentError(trim_parse_error(e.what()));
    }
    if (!j.is_object()) fail("document", "top level must be an object");

    PairDocument doc;
    GraphManifold& m = doc.surface.manifold;

    const Json& blocks = member(j, "blocks", "document");
    for (std::size_t i = 0; i < array_size(blocks, "blocks"); ++i) {
        std::string where = "blocks[" + std::to_string(i) + "]";
        const Json& jb = element(blocks, i, "blocks");
        SeifertBlock b;
        b.id = get_string(member(jb, "id", where), where + ".id");
        b.genus = get_bigint(member(jb, "genus", where), where + ".genus");
        const Json& labels = member(jb, "boundary", where);
        for (std::size_t k = 0; k < array_size(labels, where + ".boundary"); ++k)
            b.boundary.push_back(get_string(labels.at(k), where + ".boundary[" + std::to_string(k) + "]"));
        if (!m.blocks.emplace(b.id, b).second) fail(where, "duplicate block id \"" + b.id + "\"");
    }

    const Json& tori = member(j, "tori", "document");
    for (std::size_t i = 0; i < array_size(tori, "tori"); ++i) {
        std::string where = "tori[" + std::to_string(i) + "]";
        const Json& jt = element(tori, i, "tori");
        std::string id = get_string(member(jt, "id", where), where + ".id");
        auto side = [&](const char* key) {
            const Json& js = member(jt, key, where);
            std::string sw = where + "." + key;
            return BoundaryRef{get_string(member(js, "block", sw), sw + ".block"),
                               get_string(member(js, "label", sw), sw + ".label")};
        };
        const Json& jm = member(jt, "matrix", where);
        if (!jm.is_array() || jm.size() != 2) fail(where + ".matrix", "expected two rows");
        BigInt entries[4];
        for (std::size_t row = 0; row < 2; ++row) {
            const Json& jr = jm.at(row);
            std::string rw = where + ".matrix[" + std::to_string(row) + "]";
            if (!jr.is_array() || jr.size() != 2) fail(rw, "expected two integers");
            for (std::size_t col = 0; col < 2; ++col)
                entries[2 * row + col] = get_bigint(jr.at(col), rw + "[" + std::to_string(col) + "]");
        }
        JsjTorus t{id, side("near"), side("far"),
                   GluingMatrix::unchecked(entries[0], entries[1], entries[2], entries[3])};
        if (!m.tori.emplace(id, std::move(t)).second) fail(where, "duplicate torus id \"" + id + "\"");
    }

    m.closed = m.free_boundaries().empty();

    const Json& pieces = member(j, "pieces", "document");
    for (std::size_t i = 0; i < array_size(pieces, "pieces"); ++i) {
        std::string where = "pieces[" + std::to_string(i) + "]";
        const Json& jp = element(pieces, i, "pieces");
        SurfacePiece p;
        p.id = get_string(member(jp, "id", where), where + ".id");
        p.block = get_string(member(jp, "block", where), where + ".block");
        p.degree = get_bigint(member(jp, "degree", where), where + ".degree");
        p.genus = get_bigint(member(jp, "genus", where), where + ".genus");
        if (!doc.surface.pieces.emplace(p.id, p).second)
            fail(where, "duplicate piece id \"" + p.id + "\"");
    }

    const Json& circles = member(j, "circles", "document");
    for (std::size_t i = 0; i < array_size(circles, "circles"); ++i) {
        std::string where = "circles[" + std::to_string(i) + "]";
        const Json& jc = element(circles, i, "circles");
        SurfaceCircle c{"", "", TorusAttachment{}, HomologyClass{0, 0, BasisTag("")}};
        c.id = get_string(member(jc, "id", where), where + ".id");
        c.piece = get_string(member(jc, "piece", where), where + ".piece");
        bool torus_form = jc.is_object() && jc.contains("torus");
        bool free_form = jc.is_object() && jc.contains("block");
        if (torus_form == free_form)
            fail(where, "a circle carries either \"torus\"+\"side\" or \"block\"+\"label\"");
        BasisTag basis("");
        if (torus_form) {
            std::string torus = get_string(member(jc, "torus", where), where + ".torus");
            std::string side_text = get_string(member(jc, "side", where), where + ".side");
            Side side;
            if (side_text == "near")
                side = Side::Near;
            else if (side_text == "far")
                side = Side::Far;
            else
                fail(where + ".side", "expected \"near\" or \"far\", got \"" + side_text + "\"");
            c.attachment = TorusAttachment{torus, side};
            basis = BasisTag("torus:" + torus + ":" + to_string(side));
        } else {
            std::string block = get_string(member(jc, "block", where), where + ".block");
            std::string label = get_string(member(jc, "label", where), where + ".label");
            c.attachment = FreeAttachment{block, label};
            basis = boundary_basis(block, label);
        }
        const Json& jcls = member(jc, "class", where);
        if (!jcls.is_array() || jcls.size() != 2) fail(where + ".class", "expected two integers");
        c.homology = HomologyClass{get_bigint(jcls.at(0), where + ".class[0]"),
                                   get_bigint(jcls.at(1), where + ".class[1]"), basis};
        if (!doc.surface.circles.emplace(c.id, std::move(c)).second)
            fail(where, "duplicate circle id");
    }

    const Json& edges = member(j, "edges", "document");
    for (std::size_t i = 0; i < array_size(edges, "edges"); ++i) {
        std::string where = "edges[" + std::to_string(i) + "]";
        const Json& je = element(edges, i, "edges");
        SurfaceEdge e;
        e.id = get_string(member(je, "id", where), where + ".id");
        e.near_circle = get_string(member(je, "near_circle", where), where + ".near_circle");
        e.far_circle = get_string(member(je, "far_circle", where), where + ".far_circle");
        if (!doc.surface.edges.emplace(e.id, e).second)
            fail(where, "duplicate edge id \"" + e.id + "\"");
    }

    if (j.contains("cycles")) {
        const Json& cycles = j.at("cycles");
        if (!cycles.is_object()) fail("cycles", "expected an object of named walks");
        for (const auto& [name, steps] : cycles.items()) {
            std::string where = "cycles." + name;
            Cycle cycle;
            for (std::size_t i = 0; i < array_size(steps, where); ++i) {
                const Json& js = steps.at(i);
                std::string sw = where + "[" + std::to_string(i) + "]";
                if (!js.is_array() || js.size() != 2) fail(sw, "expected [edge, \"+\"|\"-\"]");
                cycle.push_back(CycleStep{get_string(js.at(0), sw + "[0]"),
                                          parse_dir(get_string(js.at(1), sw + "[1]"), sw + "[1]")});
            }
            doc.cycles.emplace(name, std::move(cycle));
        }
    }

    return doc;
}

std::string serialize_document(const PairDocument& doc) {
    const HorizontalSurface& s = doc.surface;
    Json j = Json::object();

    Json blocks = Json::array();
    for (const auto& [id, b] : s.manifold.blocks) {
        Json jb = Json::object();
        jb["id"] = b.id;
        jb["genus"] = render_int(b.genus);
        jb["boundary"] = b.boundary;
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);

    Json tori = Json::array();
    for (const auto& [id, t] : s.manifold.tori) {
        Json jt = Json::object();
        jt["id"] = t.id;
        jt["near"] = Json{{"block", t.near.block}, {"label", t.near.label}};
        jt["far"] = Json{{"block", t.far.block}, {"label", t.far.label}};
        jt["matrix"] = Json::array({Json::array({render_int(t.matrix.p()), render_int(t.matrix.q())}),
                                    Json::array({render_int(t.matrix.r()), render_int(t.matrix.s())})});
        tori.push_back(std::move(jt));
    }
    j["tori"] = std::move(tori);

    Json pieces = Json::array();
    for (const auto& [id, p] : s.pieces) {
        Json jp = Json::object();
        jp["id"] = p.id;
        jp["block"] = p.block;
        jp["degree"] = render_int(p.degree);
        jp["genus"] = render_int(p.genus);
        pieces.push_back(std::move(jp));
    }
    j["pieces"] = std::move(pieces);

    Json circles = Json::array();
    for (const auto& [id, c] : s.circles) {
        Json jc = Json::object();
        jc["id"] = c.id;
        jc["piece"] = c.piece;
        if (const auto* ta = std::get_if<TorusAttachment>(&c.attachment)) {
            jc["torus"] = ta->torus;
            jc["side"] = to_string(ta->side);
        } else {
            const auto& fa = std::get<FreeAttachment>(c.attachment);
            jc["block"] = fa.block;
            jc["label"] = fa.label;
        }
        jc["class"] = Json::array({render_int(c.homology.a), render_int(c.homology.b)});
        circles.push_back(std::move(jc));
    }
    j["circles"] = std::move(circles);

    Json edges = Json::array();
    for (const auto& [id, e] : s.edges) {
        Json je = Json::object();
        je["id"] = e.id;
        je["near_circle"] = e.near_circle;
        je["far_circle"] = e.far_circle;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);

    if (!doc.cycles.empty()) {
        Json cycles = Json::object();
        for (const auto& [name, cycle] : doc.cycles) {
            Json steps = Json::array();
            for (const auto& step : cycle)
                steps.push_back(Json::array({step.edge, step.dir == Dir::Forward ? "+" : "-"}));
            cycles[name] = std::move(steps);
        }
        j["cycles"] = std::move(cycles);
    }

    return j.dump(2) + "\n";
}

PairDocument family_document(const FamilySpec& spec) {
    PairDocument doc;
    doc.surface = spec.surface;
    doc.cycles.emplace("gamma", spec.gamma);
    return doc;
}

} // namespace spirality
