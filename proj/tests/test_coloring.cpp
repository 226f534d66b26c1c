#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hyperchroma/coloring.hpp"
#include "hyperchroma/generators.hpp"
#include "oracles.hpp"

using namespace hyperchroma;

TEST_CASE("coloring verification", "[coloring]") {
    Hypergraph lit = h3_prime_literal();
    // The optimal 5-coloring: 012 alone, then {036,147,258}, {048,156},
    // {057,234}, {138,267}.
    EdgeColoring five{{0, 1, 2, 3, 4, 1, 2, 3, 1, 4}, 5};
    CHECK(verify_coloring(lit, five));

    EdgeColoring clash = five;
    clash.color[5] = 0;  // 147 meets 012
    CHECK_FALSE(verify_coloring(lit, clash));

    EdgeColoring narrow = five;
    narrow.num_colors = 4;
    CHECK_THROWS_AS(verify_coloring(lit, narrow), std::invalid_argument);
    CHECK_THROWS_AS(verify_coloring(lit, EdgeColoring{{0, 1}, 2}), std::invalid_argument);
    CHECK_THROWS_AS(verify_coloring(lit, EdgeColoring{std::vector<int>(10, -1), 5}),
                    std::invalid_argument);

    CHECK(verify_coloring(make_h(3, {}), EdgeColoring{}));
    EdgeColoring distinct{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 10};
    CHECK(verify_coloring(lit, distinct));
}

TEST_CASE("greedy coloring", "[coloring]") {
    Hypergraph matching = make_h(6, {{0, 1}, {2, 3}, {4, 5}});
    EdgeColoring c = greedy_color(matching);
    CHECK(c.num_colors == 1);
    CHECK(verify_coloring(matching, c));

    Hypergraph star6 = make_h(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
    CHECK(greedy_color(star6).num_colors == 6);

    Hypergraph lit = h3_prime_literal();
    EdgeColoring lc = greedy_color(lit);
    CHECK(verify_coloring(lit, lc));
    CHECK(lc.num_colors == 6);

    std::vector<int> reversed(lit.m());
    for (int i = 0; i < lit.m(); ++i) reversed[i] = lit.m() - 1 - i;
    EdgeColoring rc = greedy_color(lit, reversed);
    CHECK(verify_coloring(lit, rc));
    CHECK(rc.num_colors <= 10);

    Hypergraph path = make_h(3, {{0, 1}, {1, 2}});
    CHECK(greedy_color(path, {0, 1}).color == std::vector<int>{0, 1});
    CHECK(greedy_color(path, {1, 0}).color == std::vector<int>{1, 0});
    CHECK_THROWS_AS(greedy_color(path, {0}), std::invalid_argument);
}

TEST_CASE("exact chromatic index on the named instances", "[coloring]") {
    struct Pin {
        Hypergraph h;
        int q;
    };
    const Pin pins[] = {
        {truncated_plane(2).hypergraph, 3},
        {truncated_plane(3).hypergraph, 4},
        {h3_prime_literal(), 5},
        {twisted_plane(3).hypergraph, 5},
        {field_plane(2).hypergraph, 3},
        {field_plane(3).hypergraph, 4},
        {make_h(2, {{0, 1}}), 1},
        {make_h(4, {}), 0},
    };
    for (const Pin& pin : pins) {
        CAPTURE(pin.h.n(), pin.h.m());
        ExactResult r = exact_chromatic_index(pin.h);
        CHECK(r.q == pin.q);
        CHECK(r.witness.num_colors == pin.q);
        if (pin.h.m() > 0) CHECK(verify_coloring(pin.h, r.witness));
        CHECK(oracle::chromatic_index(pin.h) == pin.q);
    }
}

TEST_CASE("exact chromatic index of the order-4 twist", "[coloring]") {
    // Independent sandwich: brute-force largest intersecting family gives
    // the lower bound, the constructive coloring the upper bound.
    HkMember w4 = twisted_plane(4);
    ExactResult r = exact_chromatic_index(w4.hypergraph);
    CHECK(r.q == 7);
    CHECK(verify_coloring(w4.hypergraph, r.witness));
    CHECK(oracle::max_intersecting(w4.hypergraph) == 7);
    EdgeColoring constructed = color_twisted_plane(w4.hypergraph, w4.coords, 1);
    CHECK(constructed.num_colors == 7);
    CHECK(verify_coloring(w4.hypergraph, constructed));
}

TEST_CASE("exact solver budget", "[coloring]") {
    Hypergraph lit = h3_prime_literal();
    CHECK_FALSE(exact_chromatic_index_budget(lit, 2).has_value());
    auto roomy = exact_chromatic_index_budget(lit, 1'000'000);
    REQUIRE(roomy.has_value());
    CHECK(roomy->q == 5);
}

TEST_CASE("slope coloring of field planes", "[coloring]") {
    for (int k : {2, 3, 4, 5}) {
        CAPTURE(k);
        Plane p = field_plane(k);
        EdgeColoring c = color_affine_plane(p.hypergraph, p.coords);
        CHECK(c.num_colors == k + 1);
        CHECK(verify_coloring(p.hypergraph, c));
    }

    Plane p3 = field_plane(3);
    EdgeColoring c3 = color_affine_plane(p3.hypergraph, p3.coords);
    CHECK(c3.color[edge_index(p3.hypergraph, {0, 1, 2})] == 3);  // vertical class
    CHECK(c3.color[edge_index(p3.hypergraph, {0, 3, 6})] == 0);  // slope 0
    CHECK(c3.color[edge_index(p3.hypergraph, {0, 4, 8})] == 1);  // slope 1

    HkMember trunc = truncated_plane(3);
    CHECK_THROWS_WITH(color_affine_plane(trunc.hypergraph, trunc.coords),
                      "not a field plane of order 3");
}

TEST_CASE("star-pairing coloring of class members", "[coloring]") {
    Hypergraph lit = h3_prime_literal();
    HkCertificate cert = check_class_Hk(lit, 3);
    EdgeColoring c = color_class_Hk(lit, cert);
    CHECK(c.num_colors == 7);
    CHECK(verify_coloring(lit, c));
    CHECK(c.color[0] == 0);

    HkMember trunc = truncated_plane(3);
    EdgeColoring tc = color_class_Hk(trunc.hypergraph, trunc.certificate);
    CHECK(tc.num_colors == 7);
    CHECK(verify_coloring(trunc.hypergraph, tc));

    HkMember w5 = twisted_plane(5);
    EdgeColoring wc = color_class_Hk(w5.hypergraph, w5.certificate);
    CHECK(wc.num_colors == 16);  // 1 + 5*ceil(5/2)
    CHECK(verify_coloring(w5.hypergraph, wc));

    HkCertificate bad = check_class_Hk(field_plane(3).hypergraph, 3);
    CHECK_THROWS_WITH(color_class_Hk(field_plane(3).hypergraph, bad),
                      "certificate does not witness class membership");
}

TEST_CASE("twist coloring", "[coloring]") {
    HkMember w3 = twisted_plane(3);
    EdgeColoring a = color_twisted_plane(w3.hypergraph, w3.coords, 1);
    EdgeColoring b = color_twisted_plane(w3.hypergraph, w3.coords, 2);
    CHECK(a.num_colors == 5);
    CHECK(b.num_colors == 5);
    CHECK(verify_coloring(w3.hypergraph, a));
    CHECK(verify_coloring(w3.hypergraph, b));
    CHECK(a.color != b.color);

    HkMember w4 = twisted_plane(4);
    for (int lambda = 1; lambda < 4; ++lambda) {
        EdgeColoring c = color_twisted_plane(w4.hypergraph, w4.coords, lambda);
        CHECK(c.num_colors == 7);
        CHECK(verify_coloring(w4.hypergraph, c));
    }

    CHECK_THROWS_AS(color_twisted_plane(w3.hypergraph, w3.coords, 0), std::invalid_argument);
    CHECK_THROWS_AS(color_twisted_plane(w3.hypergraph, w3.coords, 3), std::invalid_argument);
    CHECK_THROWS_WITH(color_twisted_plane(h3_prime_literal(), w3.coords, 1),
                      "not the twisted plane of order 3");
}

TEST_CASE("criticality", "[coloring]") {
    Hypergraph trunc = truncated_plane(3).hypergraph;
    CHECK(is_critical(trunc, 0));
    CHECK_FALSE(is_critical(trunc, 1));
    CriticalityReport tr = critical_edges(trunc);
    CHECK(tr.q == 4);
    CHECK(tr.critical == std::vector<int>{0});

    // Removing the distinguished edge of the literal member drops q to 4;
    // no other deletion does.
    Hypergraph lit = h3_prime_literal();
    CriticalityReport lr = critical_edges(lit);
    CHECK(lr.q == 5);
    CHECK(lr.critical == std::vector<int>{0});
    for (int e = 0; e < lit.m(); ++e) {
        int q_after = oracle::chromatic_index(lit.remove_edge(e));
        CHECK((q_after == 4) == (e == 0));
    }

    CriticalityReport matching = critical_edges(make_h(4, {{0, 1}, {2, 3}}));
    CHECK(matching.q == 1);
    CHECK(matching.critical.empty());

    CriticalityReport single = critical_edges(make_h(2, {{0, 1}}));
    CHECK(single.critical == std::vector<int>{0});

    CHECK(critical_edges(make_h(3, {})).critical.empty());
}

TEST_CASE("criticality is thread-count independent", "[coloring]") {
    Hypergraph lit = h3_prime_literal();
    CriticalityReport serial = critical_edges(lit, 1);
    for (int threads : {2, 3}) {
        CriticalityReport parallel = critical_edges(lit, threads);
        CHECK(parallel.q == serial.q);
        CHECK(parallel.critical == serial.critical);
    }
}

TEST_CASE("coloring counts up to relabeling", "[coloring]") {
    Hypergraph lit = h3_prime_literal();
    CHECK(count_colorings_up_to_relabel(lit, 5, true) == 2);
    CHECK(count_colorings_up_to_relabel(lit, 5, false) == 2);
    CHECK(count_colorings_up_to_relabel(lit, 4, true) == 0);
    CHECK(oracle::colorings_up_to_relabel(lit, 5) == 2);

    Hypergraph w3 = twisted_plane(3).hypergraph;
    CHECK(count_colorings_up_to_relabel(w3, 5, true) == 2);
    CHECK(oracle::colorings_up_to_relabel(w3, 5) == 2);

    Hypergraph single = make_h(2, {{0, 1}});
    CHECK(count_colorings_up_to_relabel(single, 1, true) == 1);
    CHECK(count_colorings_up_to_relabel(single, 2, false) == 1);
    CHECK(count_colorings_up_to_relabel(single, 2, true) == 0);

    Hypergraph path = make_h(3, {{0, 1}, {1, 2}});
    CHECK(count_colorings_up_to_relabel(path, 2, true) == 1);
    CHECK(oracle::colorings_up_to_relabel(path, 2) == 1);

    Hypergraph empty = make_h(2, {});
    CHECK(count_colorings_up_to_relabel(empty, 0, true) == 1);
    CHECK(count_colorings_up_to_relabel(empty, 3, true) == 0);
    CHECK(count_colorings_up_to_relabel(empty, 3, false) == 1);

    CHECK_THROWS_AS(count_colorings_up_to_relabel(twisted_plane(5).hypergraph, 3, true),
                    std::invalid_argument);
    CHECK(count_colorings_up_to_relabel(twisted_plane(5).hypergraph, 1, true, 26) == 0);
    CHECK_THROWS_AS(count_colorings_up_to_relabel(lit, -1, true), std::invalid_argument);
}

TEST_CASE("order-4 twist coloring count", "[coloring][counts]") {
    // k-1 = 3 surjective 7-colorings up to relabeling, one per nonzero slope.
    Hypergraph w4 = twisted_plane(4).hypergraph;
    CHECK(count_colorings_up_to_relabel(w4, 7, true) == 3);
}
