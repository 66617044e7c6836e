#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "spirality/errors.hpp"
#include "spirality/surface.hpp"

using namespace spirality;
using namespace spirality::testing;

TEST_CASE("sample surfaces validate cleanly") {
    for (long n : {0L, 1L, 3L}) CHECK(validate_surface(sample_open_pair(n)).ok());
    for (long n : {1L, 2L}) CHECK(validate_surface(sample_closed_pair(n)).ok());
    CHECK(validate_surface(loop_pair()).ok());
}

TEST_CASE("piece chi bookkeeping") {
    HorizontalSurface s = sample_open_pair(1);
    CHECK(s.piece_chi(s.pieces.at("PL")) == -4);
    CHECK(s.piece_chi(s.pieces.at("PR")) == -8);
    auto circles = s.circles_of_piece("PR");
    REQUIRE(circles.size() == 4);
    CHECK(circles[0]->id == "f1");
    CHECK(circles[3]->id == "w2");
}

TEST_CASE("slope reads section coefficients") {
    HorizontalSurface s = sample_open_pair(1);
    CHECK(slope(s, "e1", Dir::Backward).str() == "3/1");
    CHECK(slope(s, "e1", Dir::Forward).str() == "1/3");
    CHECK(slope(s, "e2", Dir::Forward).str() == "3/1");
    CHECK(slope(s, "e2", Dir::Backward).str() == "1/3");
    CHECK_THROWS_AS(slope(s, "nope", Dir::Forward), UnknownIdError);
}

TEST_CASE("slope values scale with the gluing parameter") {
    for (long n : {0L, 2L, 7L}) {
        HorizontalSurface s = sample_open_pair(n);
        CHECK(slope(s, "e1", Dir::Backward) == reduce(2 * n + 1, 1));
        CHECK(slope(s, "e2", Dir::Forward) == reduce(2 * n + 1, 1));
    }
}

TEST_CASE("the fiber decomposition route agrees with the direct one") {
    std::vector<HorizontalSurface> samples{sample_open_pair(0), sample_open_pair(1),
                                           sample_open_pair(5), sample_closed_pair(1),
                                           sample_closed_pair(3), loop_pair()};
    for (const auto& s : samples)
        for (const auto& [id, e] : s.edges)
            for (Dir dir : {Dir::Forward, Dir::Backward}) {
                PositiveRational direct = slope(s, id, dir);
                CHECK(direct == slope_fiber_decomposition(s, id, dir));
                CHECK((direct * slope(s, id, flip(dir))).is_one());
            }
}

TEST_CASE("fiber decomposition needs spanning fibers") {
    HorizontalSurface s = sample_open_pair(1);
    s.manifold.tori.at("T").matrix = GluingMatrix::unchecked(1, 0, 0, 1);
    CHECK_THROWS_AS(slope_fiber_decomposition(s, "e1", Dir::Forward), FiberBasisError);
}

TEST_CASE("vanishing section coefficients are rejected") {
    HorizontalSurface s = sample_open_pair(1);
    s.circles.at("w1").homology.a = 0;
    CHECK_THROWS_AS(slope(s, "e1", Dir::Forward), ZeroSlopeError);
}

TEST_CASE("governor is the largest directed slope") {
    CHECK(governor(sample_open_pair(1)).str() == "3/1");
    CHECK(governor(sample_open_pair(0)).str() == "1/1");
    CHECK(governor(sample_open_pair(10)).str() == "21/1");
    CHECK(governor(sample_closed_pair(1)).str() == "3/1");
    CHECK(governor(loop_pair()).str() == "1/1");

    HorizontalSurface s = sample_open_pair(1);
    s.edges.clear();
    CHECK_THROWS_AS(governor(s), NoEdgesError);
}

TEST_CASE("spirality multiplies slopes along a walk") {
    HorizontalSurface s = sample_closed_pair(1);
    CHECK(walk_spirality(s, {}).is_one());
    Cycle gamma{{"e1", Dir::Backward}, {"e2", Dir::Forward}};
    CHECK(walk_spirality(s, gamma).str() == "9/1");
    Cycle backtrack{{"e1", Dir::Forward}, {"e1", Dir::Backward}};
    CHECK(walk_spirality(s, backtrack).is_one());

    Cycle reversed = gamma;
    std::reverse(reversed.begin(), reversed.end());
    for (auto& step : reversed) step.dir = flip(step.dir);
    CHECK(walk_spirality(s, reversed) == walk_spirality(s, gamma).reciprocal());

    HorizontalSurface open = sample_open_pair(1);
    CHECK(walk_spirality(open, gamma).str() == "9/1");
}

TEST_CASE("broken walks are rejected with a location") {
    HorizontalSurface s = sample_open_pair(1);
    CHECK_THROWS_AS(walk_spirality(s, {{"e1", Dir::Forward}}), BrokenCycleError);
    try {
        walk_spirality(s, {{"e1", Dir::Forward}, {"e2", Dir::Forward}});
        FAIL("expected BrokenCycleError");
    } catch (const BrokenCycleError& e) {
        CHECK(std::string(e.what()).find("step 2 (edge \"e2\")") != std::string::npos);
    }
    CHECK_THROWS_AS(walk_spirality(s, {{"ghost", Dir::Forward}}), UnknownIdError);
}

TEST_CASE("cycle basis of a tree is empty") {
    HorizontalSurface s = tree_pair();
    REQUIRE(validate_surface(s).ok());
    CHECK(cycle_basis(s).empty());
    CHECK(spirality_image_generators(s).empty());
    CHECK(is_separable(s));
}

TEST_CASE("two parallel edges leave one generator") {
    HorizontalSurface s = sample_open_pair(1);
    auto basis = cycle_basis(s);
    REQUIRE(basis.size() == 1);
    CHECK(walk_spirality(s, basis[0]) == reduce(9, 1));
    auto gens = spirality_image_generators(s);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == reduce(9, 1));
    CHECK_FALSE(is_separable(s));
}

TEST_CASE("loop surface has a one-step basis and is separable") {
    HorizontalSurface s = loop_pair();
    auto basis = cycle_basis(s);
    REQUIRE(basis.size() == 1);
    REQUIRE(basis[0].size() == 1);
    CHECK(basis[0][0] == CycleStep{"e", Dir::Forward});
    CHECK(walk_spirality(s, basis[0]).is_one());
    CHECK(is_separable(s));
    CHECK(is_separable(s, TreeOrder::DescendingIds));
}

TEST_CASE("closed pair generators and separability") {
    HorizontalSurface s = sample_closed_pair(1);
    auto gens = spirality_image_generators(s);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].str() == "9/1");
    CHECK(gens[1].str() == "9/1");
    CHECK_FALSE(is_separable(s));

    auto reversed = spirality_image_generators(s, TreeOrder::DescendingIds);
    REQUIRE(reversed.size() == 2);
    CHECK(reversed[0].str() == "1/9");
    CHECK(reversed[1].str() == "1/9");
    CHECK_FALSE(is_separable(s, TreeOrder::DescendingIds));
}

TEST_CASE("crossing number counts steps") {
    CHECK(crossing_number({}) == 0);
    CHECK(crossing_number({{"e1", Dir::Backward}, {"e2", Dir::Forward}}) == 2);
}

TEST_CASE("surface dual graph shape") {
    Multigraph g = surface_dual_graph(sample_closed_pair(1));
    CHECK(g.vertices.size() == 3);
    CHECK(g.edges.size() == 4);
    CHECK(cycle_rank(g) == 2);
    const Multigraph::Edge* e = g.find_edge("e1");
    REQUIRE(e != nullptr);
    CHECK(e->tail == "PL");
    CHECK(e->head == "PR");
}

TEST_CASE("validator catches broken surfaces") {
    auto check_code = [](HorizontalSurface s, const std::string& code) {
        ValidationReport rep = validate_surface(s);
        CAPTURE(code);
        CAPTURE(rep.str());
        CHECK_FALSE(rep.ok());
        CHECK(rep.has(code));
    };

    HorizontalSurface base = sample_open_pair(1);

    {
        HorizontalSurface s = base;
        s.circles.at("u1").homology = HomologyClass{0, 5, s.circles.at("u1").homology.basis};
        check_code(s, "horizontality");
        check_code(s, "degree-sum");
    }
    {
        HorizontalSurface s = base;
        s.circles.at("u1").homology.a = 2;
        check_code(s, "degree-sum");
    }
    {
        HorizontalSurface s = base;
        s.pieces.at("PL").genus = 5;
        check_code(s, "chi-mismatch");
    }
    {
        HorizontalSurface s = base;
        s.pieces.at("PL").degree = 0;
        check_code(s, "bad-degree");
    }
    {
        HorizontalSurface s = base;
        s.pieces.at("PL").genus = -1;
        check_code(s, "negative-genus");
    }
    {
        HorizontalSurface s = base;
        s.pieces.at("PL").block = "ghost";
        check_code(s, "unknown-block");
    }
    {
        HorizontalSurface s = base;
        s.circles.at("u1").piece = "PR";
        check_code(s, "wrong-block");
    }
    {
        HorizontalSurface s = base;
        s.circles.at("u1").piece = "ghost";
        check_code(s, "unknown-piece");
    }
    {
        HorizontalSurface s = base;
        s.circles.at("u1").homology.basis = BasisTag("torus:T:far");
        check_code(s, "basis-tag");
    }
    {
        HorizontalSurface s = base;
        s.circles.at("u1").attachment = TorusAttachment{"ghost", Side::Near};
        check_code(s, "unknown-torus");
    }
    {
        HorizontalSurface s = base;
        s.circles.at("f1").attachment = FreeAttachment{"R", "nope"};
        check_code(s, "unknown-boundary");
    }
    {
        HorizontalSurface s = base;
        s.circles.at("f1").attachment = FreeAttachment{"R", "y1"};
        check_code(s, "not-free");
    }
    {
        HorizontalSurface s = base;
        s.edges.at("e1").far_circle = "u1";
        check_code(s, "degenerate-edge");
    }
    {
        HorizontalSurface s = base;
        s.edges.at("e1").far_circle = "u2";
        check_code(s, "edge-attachment");
        check_code(s, "unpaired-circle");
    }
    {
        HorizontalSurface s = base;
        s.circles.at("w1").homology.b = 5;
        check_code(s, "edge-compat");
    }
    {
        HorizontalSurface s = base;
        s.edges.erase("e2");
        check_code(s, "unpaired-circle");
    }
    {
        HorizontalSurface s = base;
        s.edges["e3"] = SurfaceEdge{"e3", "u1", "w1"};
        check_code(s, "circle-reused");
    }
    {
        HorizontalSurface s = base;
        s.edges["e3"] = SurfaceEdge{"e3", "u2", "f1"};
        check_code(s, "free-circle-paired");
    }
    {
        HorizontalSurface s = base;
        s.edges.at("e1").near_circle = "ghost";
        check_code(s, "unknown-circle");
    }
    {
        HorizontalSurface s = base;
        s.pieces.clear();
        s.circles.clear();
        s.edges.clear();
        check_code(s, "empty-surface");
    }
    {
        auto node_key = [](HorizontalSurface s) {
            auto node = s.pieces.extract("PL");
            node.key() = "PLX";
            s.pieces.insert(std::move(node));
            return s;
        };
        check_code(node_key(base), "id-mismatch");
    }
}

TEST_CASE("a split surface over one manifold is flagged disconnected") {
    HorizontalSurface s = loop_pair();
    BasisTag near = s.manifold.tori.at("T").basis(Side::Near);
    BasisTag far = s.manifold.tori.at("T").basis(Side::Far);
    s.pieces["P2"] = SurfacePiece{"P2", "B", 2, 2};
    s.circles.emplace("cc", SurfaceCircle{"cc", "P2", TorusAttachment{"T", Side::Near},
                                          HomologyClass{2, 0, near}});
    s.circles.emplace("cd", SurfaceCircle{"cd", "P2", TorusAttachment{"T", Side::Far},
                                          HomologyClass{2, 4, far}});
    s.edges["e2"] = SurfaceEdge{"e2", "cc", "cd"};
    ValidationReport rep = validate_surface(s);
    CHECK_FALSE(rep.ok());
    CHECK(rep.has("disconnected"));
    CHECK(rep.error_count() == 1);
}

TEST_CASE("random pairs validate and keep slope routes consistent") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        HorizontalSurface s = random_pair(rng);
        CHECK(validate_surface(s).ok());
        for (const auto& [id, e] : s.edges) {
            PositiveRational fwd = slope(s, id, Dir::Forward);
            PositiveRational bwd = slope(s, id, Dir::Backward);
            CHECK((fwd * bwd).is_one());
            CHECK(fwd == slope_fiber_decomposition(s, id, Dir::Forward));
            CHECK(bwd == slope_fiber_decomposition(s, id, Dir::Backward));
            CHECK(governor(s) >= fwd);
            CHECK(governor(s) >= bwd);
        }
    }
}

TEST_CASE("spirality is a walk homomorphism") {
    std::mt19937_64 rng(42);
    std::vector<HorizontalSurface> samples{sample_closed_pair(1), sample_closed_pair(2),
                                           loop_pair()};
    for (int i = 0; i < 150; ++i) {
        const HorizontalSurface& s = samples[i % samples.size()];
        std::string base = s.pieces.begin()->first;
        Cycle one = random_closed_walk(rng, s, base);
        Cycle two = random_closed_walk(rng, s, base);

        Cycle joined = one;
        joined.insert(joined.end(), two.begin(), two.end());
        CHECK(walk_spirality(s, joined) == walk_spirality(s, one) * walk_spirality(s, two));

        Cycle reversed = one;
        std::reverse(reversed.begin(), reversed.end());
        for (auto& step : reversed) step.dir = flip(step.dir);
        CHECK(walk_spirality(s, reversed) == walk_spirality(s, one).reciprocal());

        if (!one.empty()) {
            std::size_t cut = rng() % one.size();
            Cycle rotated(one.begin() + cut, one.end());
            rotated.insert(rotated.end(), one.begin(), one.begin() + cut);
            CHECK(walk_spirality(s, rotated) == walk_spirality(s, one));
        }
    }
}

TEST_CASE("separability verdict is stable across tree orders") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        HorizontalSurface s = random_pair(rng);
        CHECK(is_separable(s, TreeOrder::AscendingIds) ==
              is_separable(s, TreeOrder::DescendingIds));
    }
    for (long n : {1L, 2L, 3L}) {
        HorizontalSurface s = sample_closed_pair(n);
        CHECK(is_separable(s, TreeOrder::AscendingIds) ==
              is_separable(s, TreeOrder::DescendingIds));
    }
}
