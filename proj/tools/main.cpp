#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spirality/certify.hpp"
#include "spirality/construct.hpp"
#include "spirality/document.hpp"
#include "spirality/surface.hpp"

namespace {

using namespace spirality;

// Exit codes: 0 success / certified, 1 not certified, 2 parse or file
// error, 3 validation failure, 4 unknown id, 5 bad cycle, 6 bad parameter.
constexpr int kOk = 0;
constexpr int kNotCertified = 1;
constexpr int kParseError = 2;
constexpr int kInvalid = 3;
constexpr int kUnknownId = 4;
constexpr int kBadCycle = 5;
constexpr int kBadParameter = 6;
constexpr int kInternal = 70;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string report_line(const char* what, const ValidationReport& rep) {
    if (rep.items.empty()) return std::string(what) + " validation: ok\n";
    std::string out = std::string(what) + " validation: " + std::to_string(rep.error_count()) +
                      " error(s), " + std::to_string(rep.warning_count()) + " warning(s)\n";
    return out + rep.str();
}

struct Loaded {
    PairDocument doc;
    ValidationReport manifold_report;
    ValidationReport surface_report;

    bool ok() const { return manifold_report.ok() && surface_report.ok(); }
};

Loaded load(const std::string& path) {
    Loaded l;
    l.doc = parse_document(read_file(path));
    l.manifold_report = validate_manifold(l.doc.surface.manifold);
    l.surface_report = validate_surface(l.doc.surface);
    return l;
}

// Shared entry for the commands that need a valid document before they can
// compute anything. Prints reports to stderr on failure.
int load_valid(const std::string& path, Loaded& out) {
    out = load(path);
    if (!out.ok()) {
        std::cerr << report_line("manifold", out.manifold_report)
                  << report_line("surface", out.surface_report);
        return kInvalid;
    }
    return kOk;
}

int cmd_inspect(const std::string& path) {
    Loaded l = load(path);
    const HorizontalSurface& s = l.doc.surface;
    const GraphManifold& m = s.manifold;

    std::cout << "manifold: blocks=" << m.blocks.size() << " tori=" << m.tori.size()
              << " closed=" << (m.closed ? "yes" : "no")
              << " free-boundaries=" << m.free_boundaries().size() << "\n";
    std::cout << "surface: pieces=" << s.pieces.size() << " circles=" << s.circles.size()
              << " edges=" << s.edges.size() << "\n";
    std::cout << report_line("manifold", l.manifold_report)
              << report_line("surface", l.surface_report);
    if (!l.ok()) return kInvalid;

    Multigraph omega = dual_graph(m);
    Multigraph omega_s = surface_dual_graph(s);
    std::cout << "dual graph (manifold): vertices=" << omega.vertices.size()
              << " edges=" << omega.edges.size() << "\n";
    std::cout << "dual graph (surface): vertices=" << omega_s.vertices.size()
              << " edges=" << omega_s.edges.size() << " rank=" << cycle_rank(omega_s) << "\n";
    std::cout << "governor: " << governor(s).str() << "\n";
    if (is_separable(s)) {
        std::cout << "separability: separable\n";
    } else {
        std::cout << "separability: non-separable: generators = {";
        bool first = true;
        for (const auto& g : spirality_image_generators(s)) {
            std::cout << (first ? "" : ", ") << g.str();
            first = false;
        }
        std::cout << "}\n";
    }
    return kOk;
}

int cmd_slope(const std::string& path, const std::string& edge_id, const std::string& from) {
    Loaded l;
    if (int rc = load_valid(path, l)) return rc;
    const HorizontalSurface& s = l.doc.surface;
    const SurfaceEdge& e = s.edge_or_throw(edge_id);
    const std::string& near_piece = s.circle_or_throw(e.near_circle).piece;
    const std::string& far_piece = s.circle_or_throw(e.far_circle).piece;
    Dir dir;
    if (from == near_piece)
        dir = Dir::Forward; // loops run near to far
    else if (from == far_piece)
        dir = Dir::Backward;
    else
        throw UnknownIdError("edge \"" + edge_id + "\" has no endpoint at piece \"" + from + "\"");
    std::cout << slope(s, edge_id, dir).str() << "\n";
    return kOk;
}

Cycle parse_inline_cycle(const std::string& text) {
    Cycle cycle;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        auto colon = item.rfind(':');
        if (colon == std::string::npos || colon == 0)
            throw ParameterError("cycle step \"" + item + "\" is not of the form edge:+ or edge:-");
        std::string sign = item.substr(colon + 1);
        Dir dir;
        if (sign == "+")
            dir = Dir::Forward;
        else if (sign == "-" || sign == "−")
            dir = Dir::Backward;
        else
            throw ParameterError("cycle step \"" + item + "\" must end in :+ or :-");
        cycle.push_back(CycleStep{item.substr(0, colon), dir});
    }
    if (cycle.empty()) throw ParameterError("empty cycle argument");
    return cycle;
}

int cmd_spirality(const std::string& path, const std::string& cycle_arg) {
    Loaded l;
    if (int rc = load_valid(path, l)) return rc;
    Cycle cycle;
    if (cycle_arg.find(':') != std::string::npos) {
        cycle = parse_inline_cycle(cycle_arg);
    } else {
        auto it = l.doc.cycles.find(cycle_arg);
        if (it == l.doc.cycles.end())
            throw UnknownIdError("document names no cycle \"" + cycle_arg + "\"");
        cycle = it->second;
    }
    std::cout << spirality::spirality(l.doc.surface, cycle).str() << "\n";
    return kOk;
}

int cmd_separable(const std::string& path) {
    Loaded l;
    if (int rc = load_valid(path, l)) return rc;
    if (is_separable(l.doc.surface)) {
        std::cout << "separable\n";
        return kOk;
    }
    std::cout << "non-separable: generators = {";
    bool first = true;
    for (const auto& g : spirality_image_generators(l.doc.surface)) {
        std::cout << (first ? "" : ", ") << g.str();
        first = false;
    }
    std::cout << "}\n";
    return kOk;
}

int cmd_family(const std::string& n_text, const std::string& out_path) {
    BigInt n = parse_bigint(n_text);
    FamilySpec spec = build_family(n);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DocumentError("cannot write \"" + out_path + "\"");
    out << serialize_document(family_document(spec));
    if (!out.flush()) throw DocumentError("cannot write \"" + out_path + "\"");
    return kOk;
}

int cmd_certify(const std::string& n_text, const std::string& m_text) {
    Certificate cert = certify_distinct(parse_bigint(n_text), parse_bigint(m_text));
    std::cout << cert.trace << "\n";
    return cert.verdict == Verdict::Certified ? kOk : kNotCertified;
}

int cmd_sparse(const std::string& k_text) {
    BigInt k = parse_bigint(k_text);
    if (k < 1 || k > 1000000)
        throw ParameterError("member count must be between 1 and 1000000, got " + decimal(k));
    for (const auto& t : sparse_index_set(static_cast<std::size_t>(to_int64(k))))
        std::cout << decimal(t) << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"slope, spirality and separability calculator for horizontal surfaces in simple "
                 "graph manifolds"};
    app.require_subcommand(1);

    std::string path, edge_id, from, cycle_arg, n_text, m_text, k_text, out_path;

    CLI::App* inspect = app.add_subcommand("inspect", "validate a pair document and summarize it");
    inspect->add_option("file", path, "pair document")->required();

    CLI::App* slope_cmd = app.add_subcommand("slope", "slope of one directed edge");
    slope_cmd->add_option("file", path, "pair document")->required();
    slope_cmd->add_option("--edge", edge_id, "edge id")->required();
    slope_cmd->add_option("--from", from, "piece the traversal starts at")->required();

    CLI::App* spirality_cmd = app.add_subcommand("spirality", "spirality of a closed walk");
    spirality_cmd->add_option("file", path, "pair document")->required();
    spirality_cmd->add_option("--cycle", cycle_arg, "named cycle or inline walk edge:+,edge:-")
        ->required();

    CLI::App* separable = app.add_subcommand("separable", "separability verdict for the surface");
    separable->add_option("file", path, "pair document")->required();

    CLI::App* family = app.add_subcommand("family", "write one member of the certified family");
    family->add_option("--n", n_text, "family index, n >= 1")->required();
    family->add_option("--out", out_path, "output path")->required();

    CLI::App* certify = app.add_subcommand("certify", "distinguish two family members");
    certify->add_option("--n", n_text, "first index")->required();
    certify->add_option("--m", m_text, "second index")->required();

    CLI::App* sparse = app.add_subcommand("sparse", "print the sparse index schedule");
    sparse->add_option("--k", k_text, "member count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadParameter;
    }

    try {
        if (inspect->parsed()) return cmd_inspect(path);
        if (slope_cmd->parsed()) return cmd_slope(path, edge_id, from);
        if (spirality_cmd->parsed()) return cmd_spirality(path, cycle_arg);
        if (separable->parsed()) return cmd_separable(path);
        if (family->parsed()) return cmd_family(n_text, out_path);
        if (certify->parsed()) return cmd_certify(n_text, m_text);
        if (sparse->parsed()) return cmd_sparse(k_text);
    } catch (const DocumentError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const UnknownIdError& e) {
        std::cerr << "unknown id: " << e.what() << "\n";
        return kUnknownId;
    } catch (const BrokenCycleError& e) {
        std::cerr << "bad cycle: " << e.what() << "\n";
        return kBadCycle;
    } catch (const ParameterError& e) {
        std::cerr << "bad parameter: " << e.what() << "\n";
        return kBadParameter;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
