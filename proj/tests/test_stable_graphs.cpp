#include "pregraphs.hpp"

#include <cycov/stable_graphs.hpp>
#include <cycov/branching.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace cycov;
using pregraphs::Explorer;
using pregraphs::for_each_pregraph;

namespace {

Vertex i0(int id, int genus, int d) { return {id, Colour::I0, genus, std::vector<int>(d - 1, 0)}; }
Vertex i1(int id, int genus, std::vector<int> free) { return {id, Colour::I1, genus, std::move(free)}; }

// d=2 elliptic tail: I0 vertex of genus g-1 and an I1 elliptic curve with 3 free fixed points.
Graph elliptic_tail(int g) { return {2, {i0(0, g - 1, 2), i1(1, 1, {3})}, {{0, 1, 0, 1}}, {}}; }

std::set<std::vector<int>> codes(const std::vector<AutoGraph>& gs) {
    std::set<std::vector<int>> out;
    for (const auto& a : gs) out.insert(canonical_graph(a.graph()).code);
    return out;
}

} // namespace

TEST(VertexData, Examples) {
    auto a = vertex_data(elliptic_tail(2), 1);
    EXPECT_EQ(a.k, 4);
    EXPECT_EQ(a.g_quotient, 0);

    Graph b{3, {i1(0, 1, {1, 0})}, {}, {{0, 1, 1, false}}};
    auto db = vertex_data(b, 0);
    EXPECT_EQ(db.k_m, (std::vector<int>{3, 0}));
    EXPECT_EQ(db.k, 3);
    EXPECT_EQ(db.g_quotient, 0);
    EXPECT_EQ(db.nu, 1);
    EXPECT_EQ(db.g_double_prime, 2);

    Graph c{3, {i1(0, 1, {0, 1})}, {}, {{0, 1, 1, false}}};
    try {
        (void)vertex_data(c, 0);
        FAIL() << "expected a violation";
    } catch (const ConstraintViolation& e) {
        EXPECT_EQ(e.violations().front().clause, "vertex-star");
    }
}

TEST(GraphGenus, Examples) {
    EXPECT_EQ(graph_genus({2, {i0(0, 1, 2)}, {}, {{0, 0, 0, false}}}), 2);
    EXPECT_EQ(graph_genus({2, {i0(0, 1, 2), i0(1, 1, 2)}, {{0, 1, 0, 0}}, {}}), 2);
    EXPECT_EQ(graph_genus({2, {i0(0, 1, 2), i0(1, 0, 2)}, {{0, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}}, {}}), 3);
}

TEST(Stability, Examples) {
    EXPECT_FALSE(is_stable({2, {i0(0, 0, 2), i0(1, 2, 2)}, {{0, 1, 0, 0}, {0, 1, 0, 0}}, {}}));
    for (int g = 2; g <= 8; ++g) EXPECT_TRUE(is_stable(elliptic_tail(g)));
    EXPECT_TRUE(is_stable({2, {i0(0, 2, 2)}, {}, {}}));
}

TEST(Smoothing, Examples) {
    PreGraph chain{Graph{3, {i0(0, 1, 3), i0(1, 1, 3)}, {{0, 1, 0, 0}}, {}}};
    ASSERT_EQ(smoothable_nodes(chain).size(), 1u);
    auto merged = smooth_node(chain, smoothable_nodes(chain).front());
    ASSERT_EQ(merged.graph().vertices.size(), 1u);
    EXPECT_EQ(merged.graph().vertices[0].genus, 2);
    EXPECT_EQ(merged.graph().vertices[0].colour, Colour::I0);

    // d=5 loop {2,3}; genus 4 because an order-5 automorphism of an elliptic curve has no fixed points
    PreGraph loop{Graph{5, {i1(0, 4, {1, 0, 0, 1})}, {}, {{0, 2, 3, false}}}};
    ASSERT_EQ(smoothable_nodes(loop).size(), 1u);
    auto smoothed = smooth_node(loop, smoothable_nodes(loop).front());
    EXPECT_EQ(smoothed.graph().vertices[0].genus, 5);
    EXPECT_TRUE(smoothed.graph().loops.empty());
    EXPECT_EQ(graph_genus(smoothed.graph()), 5);

    Graph raw{3, {i1(0, 1, {1, 0})}, {}, {{0, 0, 0, true}}};
    EXPECT_FALSE(is_smoothable(raw, {EdgeRef::Kind::Loop, 0}));
    raw.d = 2;
    EXPECT_TRUE(is_smoothable(raw, {EdgeRef::Kind::Loop, 0}));

    PreGraph swapped{Graph{2, {i1(0, 1, {4})}, {}, {{0, 0, 0, true}}}};
    auto s = smooth_node(swapped, {EdgeRef::Kind::Loop, 0});
    EXPECT_EQ(s.graph().vertices[0].genus, 2);
    EXPECT_EQ(s.graph().vertices[0].free_branching, (std::vector<int>{6}));
    EXPECT_TRUE(s.graph().loops.empty());
}

TEST(Smoothing, RejectsNonSmoothable) {
    AutoGraph t{elliptic_tail(3)};
    EXPECT_THROW(smooth_node(t, {EdgeRef::Kind::Link, 0}), ConstraintViolation);
    EXPECT_THROW(smooth_node(t, {EdgeRef::Kind::Link, 5}), UsageError);
}

TEST(Simplify, Examples) {
    PreGraph chain{Graph{2, {i0(0, 1, 2), i0(1, 1, 2), i1(2, 1, {3})}, {{0, 1, 0, 0}, {1, 2, 0, 1}}, {}}};
    auto r = simplify(chain);
    EXPECT_EQ(r.trace.size(), 1u);
    EXPECT_EQ(canonical_graph(r.graph.graph()), canonical_graph(elliptic_tail(3)));

    AutoGraph done{elliptic_tail(4)};
    auto same = simplify(done);
    EXPECT_TRUE(same.trace.empty());
    EXPECT_EQ(same.graph, done);

    PreGraph pair{Graph{2, {i1(0, 1, {3}), i1(1, 1, {3})}, {{0, 1, 1, 1}}, {}}};
    auto one = simplify(pair).graph.graph();
    ASSERT_EQ(one.vertices.size(), 1u);
    EXPECT_EQ(one.vertices[0].genus, 2);
    EXPECT_EQ(one.vertices[0].colour, Colour::I1);
    EXPECT_EQ(one.vertices[0].free_branching, (std::vector<int>{6}));
}

TEST(Simplify, AllIdentityPreGraphHasNoMaximalType) {
    PreGraph p{Graph{2, {i0(0, 1, 2), i0(1, 1, 2)}, {{0, 1, 0, 0}}, {}}};
    auto q = simplify_pre(p);
    EXPECT_EQ(q.graph().vertices.size(), 1u);
    EXPECT_THROW(simplify(p), ConstraintViolation);
}

TEST(Simplify, ConfluentGenusPreservingIdempotent) {
    long checked = 0;
    Explorer ex;
    for (int d : {2, 3})
        for (int g = 2; g <= 4; ++g) {
            for_each_pregraph(g, d, [&](const PreGraph& p) {
                const auto ends = ex.run(p);
                const auto direct = simplify_pre(p);
                ASSERT_EQ(ends.size(), 1u) << to_text(p.graph());
                EXPECT_EQ(*ends.begin(), canonical_graph(direct.graph()).code);
                EXPECT_EQ(graph_genus(direct.graph()), graph_genus(p.graph()));
                EXPECT_TRUE(smoothable_nodes(direct).empty());
                EXPECT_EQ(simplify_pre(direct), direct);
                ++checked;
            });
        }
    EXPECT_TRUE(ex.genus_kept);
    EXPECT_GT(checked, 4000);
}

TEST(Enlarge, TypeOneRecolours) {
    AutoGraph two{Graph{3, {i1(0, 1, {2, 0}), i1(1, 1, {2, 0})}, {{0, 1, 1, 1}}, {}}};
    auto rec = recolour_to_identity(two.graph(), {1});
    EXPECT_EQ(rec.graph().links.front(), (Link{0, 1, 1, 0}));
    auto e = enlarge_type1(two, 1);
    EXPECT_EQ(e.graph(), rec.graph());
    EXPECT_EQ(stratum_dimension(two), 0);
    EXPECT_EQ(stratum_dimension(e), 1);
    EXPECT_THROW(enlarge_type2(two, 1), UsageError);
    EXPECT_THROW(enlarge_type1(AutoGraph(elliptic_tail(3)), 1), UsageError);
}

TEST(Enlarge, EllipticTailRecolouringKeepsDimension) {
    // j -- I0(1) -- tail, all d=2
    AutoGraph g{Graph{2, {i1(0, 1, {3}), i0(1, 1, 2), i1(2, 1, {3})}, {{0, 1, 1, 0}, {1, 2, 0, 1}}, {}}};
    EXPECT_EQ(stratum_dimension(g), 4);
    EXPECT_EQ(stratum_dimension(recolour_to_identity(g.graph(), {2}).graph()), 4);
    auto e = enlarge_max(g, 0);
    EXPECT_EQ(canonical_graph(e.graph()), canonical_graph(elliptic_tail(3)));
    EXPECT_EQ(stratum_dimension(e), 5);
}

TEST(Enlarge, MaxIsAComposition) {
    long checked = 0;
    for (int g = 2; g <= 4; ++g)
        for (int d : {2, 3, 5}) {
            for (const auto& a : enumerate_graphs(g, d)) {
                const auto i1s = a.graph().ids_of(Colour::I1);
                if (i1s.size() < 2) continue;
                const int dim = stratum_dimension(a);
                for (int j : i1s) {
                    auto target = enlarge_max(a, j);
                    AutoGraph cur = a;
                    for (;;) {
                        int other = -1;
                        for (int id : cur.graph().ids_of(Colour::I1))
                            if (id != j) other = id;
                        if (other < 0) break;
                        auto step = detail::meets_i0(cur.graph(), other) ? enlarge_type2(cur, other) : enlarge_type1(cur, other);
                        EXPECT_GE(stratum_dimension(step), stratum_dimension(cur));
                        EXPECT_EQ(graph_genus(step.graph()), g);
                        cur = step;
                    }
                    EXPECT_EQ(canonical_graph(cur.graph()), canonical_graph(target.graph()));
                    EXPECT_GT(stratum_dimension(target), dim);
                    ++checked;
                }
            }
        }
    EXPECT_GT(checked, 50);
}

TEST(StratumDimension, Examples) {
    for (int g = 2; g <= 10; ++g) EXPECT_EQ(stratum_dimension(AutoGraph(elliptic_tail(g))), 3 * g - 4);
    AutoGraph lone{Graph{3, {i1(0, 1, {1, 0})}, {}, {{0, 1, 1, false}}}};
    EXPECT_EQ(stratum_dimension(lone), 0);
    EXPECT_EQ(graph_genus(lone.graph()), 2);
}

TEST(StratumDimension, SmoothVertexMatchesLocus) {
    for (int g = 2; g <= 7; ++g)
        for (int p : primes_up_to(2 * g + 1))
            for (const auto& x : enumerate_admissible(g, p)) {
                AutoGraph a{Graph{p, {i1(0, g, x.datum.sequence().counts())}, {}, {}}};
                EXPECT_EQ(stratum_dimension(a), locus(g, x.datum).dim);
            }
}

TEST(StratumDimension, RejectsUnstableSummand) {
    // a genus-0 I0 vertex with two ends fails stability; stratum_dimension reports it
    Graph g{2, {i0(0, 0, 2), i1(1, 1, {3}), i1(2, 1, {3})}, {{0, 1, 0, 1}, {0, 2, 0, 1}}, {}};
    EXPECT_THROW(stratum_dimension(g), ConstraintViolation);
}

TEST(Canonical, Examples) {
    Graph g{5, {i1(0, 2, {0, 0, 0, 0}), i0(1, 1, 5)}, {{0, 1, 3, 0}}, {{0, 1, 1, false}}};
    Graph relabelled{5, {i0(7, 1, 5), i1(3, 2, {0, 0, 0, 0})}, {{7, 3, 0, 3}}, {{3, 1, 1, false}}};
    EXPECT_EQ(canonical_graph(g), canonical_graph(relabelled));

    // every label times 2
    Graph doubled{5, {i1(0, 2, {0, 0, 0, 0}), i0(1, 1, 5)}, {{0, 1, 1, 0}}, {{0, 2, 2, false}}};
    EXPECT_EQ(canonical_graph(g), canonical_graph(doubled));

    Graph a{5, {i1(0, 2, {1, 0, 0, 0})}, {}, {{0, 1, 3, false}}};
    Graph b{5, {i1(0, 2, {1, 0, 0, 0})}, {}, {{0, 3, 1, false}}};
    EXPECT_EQ(canonical_graph(a), canonical_graph(b));
    EXPECT_NO_THROW(AutoGraph{a});

    // different genus split is a different type
    Graph other{5, {i1(0, 2, {0, 0, 0, 0}), i0(1, 2, 5)}, {{0, 1, 3, 0}}, {{0, 1, 1, false}}};
    EXPECT_NE(canonical_graph(g), canonical_graph(other));
}

TEST(Canonical, InvariantUnderRandomRelabelAndUnits) {
    std::mt19937 rng(5);
    for (int g = 2; g <= 4; ++g)
        for (int d : {3, 5, 7})
            for (const auto& a : enumerate_graphs(g, d)) {
                const Graph& src = a.graph();
                std::vector<int> order(src.vertices.size());
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                const auto us = units(d);
                const int r = us[rng() % us.size()];
                Graph moved = detail::relabel(src, order, r);
                EXPECT_EQ(canonical_graph(moved), canonical_graph(src));
            }
}

TEST(StableShapes, CountsMatchStableGraphs) {
    EXPECT_EQ(stable_shapes(2).size(), 7u);
    EXPECT_EQ(stable_shapes(3).size(), 42u);
}

TEST(Enumerate, Examples) {
    auto with_edges = enumerate_graphs(2, 2, [](const AutoGraph& a) { return !a.graph().links.empty(); });
    EXPECT_TRUE(codes(with_edges).count(canonical_graph(elliptic_tail(2)).code));

    auto i1_pair = enumerate_graphs(2, 2, [](const AutoGraph& a) {
        for (const auto& l : a.graph().links)
            if (l.label_u && l.label_v) return true;
        return false;
    });
    EXPECT_TRUE(i1_pair.empty());
}

TEST(Enumerate, Postconditions) {
    for (int g = 2; g <= 4; ++g)
        for (int d : {2, 3, 5, 7}) {
            if (g == 4 && d > 3) continue;
            const auto all = enumerate_graphs(g, d);
            EXPECT_EQ(codes(all).size(), all.size());
            for (const auto& a : all) {
                const Graph& gr = a.graph();
                EXPECT_TRUE(is_stable(gr));
                EXPECT_EQ(graph_genus(gr), g);
                EXPECT_TRUE(check_autograph(gr).empty());
                EXPECT_LE(static_cast<int>(gr.vertices.size()), 2 * g - 2);
                EXPECT_LE(static_cast<int>(gr.links.size() + gr.loops.size()), 3 * g - 3);
                for (const auto& v : gr.vertices) EXPECT_NO_THROW(vertex_data(gr, v.id));
                EXPECT_EQ(canonical_graph(gr).graph, gr);
                if (d == 2) {
                    EXPECT_TRUE(gr.loops.empty());
                    for (const auto& l : gr.links) EXPECT_TRUE(l.label_u == 0 || l.label_v == 0);
                }
            }
        }
}

TEST(Enumerate, SmoothTypesAppear) {
    // the one-vertex graphs are exactly the admissible smooth data
    for (int g = 2; g <= 4; ++g)
        for (int p : primes_up_to(2 * g + 1)) {
            std::set<std::vector<int>> single;
            for (const auto& a : enumerate_graphs(g, p, [](const AutoGraph& x) { return x.graph().vertices.size() == 1 && x.graph().loops.empty(); }))
                single.insert(canonical_datum(BranchingSequence(p, a.graph().vertices[0].free_branching)).sequence().counts());
            std::set<std::vector<int>> smooth;
            for (const auto& x : enumerate_admissible(g, p))
                if (x.datum.sequence().total() > 0 || x.h > 0) smooth.insert(x.datum.sequence().counts());
            EXPECT_EQ(single, smooth) << g << "," << p;
        }
}

TEST(DivisorException, Examples) {
    EXPECT_EQ(divisor_exception(elliptic_tail(5)), DivisorException::EllipticTail);
    Graph pair{2, {i1(0, 1, {3}), i1(1, 1, {3})}, {{0, 1, 1, 1}}, {}};
    EXPECT_NO_THROW(PreGraph{pair});
    EXPECT_EQ(divisor_exception(pair), DivisorException::Genus2Pair);
    EXPECT_EQ(divisor_exception(Graph{3, {i1(0, 1, {2, 0}), i1(1, 1, {2, 0})}, {{0, 1, 1, 1}}, {}}),
              DivisorException::None);
}

TEST(ExceptionalPattern, Examples) {
    AutoGraph iia{Graph{5, {i1(0, 2, {0, 0, 0, 0}), i0(1, 1, 5)}, {{0, 1, 3, 0}}, {{0, 1, 1, false}}}};
    EXPECT_EQ(exceptional_pattern(iia), ExceptionalPattern::IIa);

    auto star = [](int ga, int gb, int gc) {
        return AutoGraph{Graph{5, {i1(0, 2, {0, 0, 0, 0}), i0(1, ga, 5), i0(2, gb, 5), i0(3, gc, 5)},
                               {{0, 1, 3, 0}, {0, 2, 1, 0}, {0, 3, 1, 0}}, {}}};
    };
    EXPECT_EQ(exceptional_pattern(star(1, 1, 1)), ExceptionalPattern::IIb);
    EXPECT_EQ(graph_genus(star(1, 1, 1).graph()), 5);
    EXPECT_EQ(exceptional_pattern(star(1, 1, 2)), ExceptionalPattern::None);
    EXPECT_EQ(exceptional_pattern(star(2, 1, 1)), ExceptionalPattern::IIb);
    EXPECT_EQ(exceptional_pattern(AutoGraph(elliptic_tail(3))), ExceptionalPattern::None);
}
