#include <doctest.h>

#include <map>

#include "ordconflict/transforms.hpp"
#include "oracles.hpp"

using namespace ordconflict;

namespace {
ConflictSpec s(int a, int b, int c, int d, Int p = 0) { return sign_spec(a, b, c, d, p); }
}  // namespace

TEST_CASE("translation invariance is the zero-row-sum test") {
    CHECK(is_translation_invariant(s(1, 0, -1, 0)));
    CHECK_FALSE(is_translation_invariant(s(1, 1, 1, 1)));
    CHECK(is_translation_invariant(nest_spec(1)));
    CHECK_FALSE(is_translation_invariant(ConflictSpec{{{1, 0, -1, 0}, {1, 1, 1, -1}}, 0}));
}

TEST_CASE("swap_edge_roles permutes columns (3,4,1,2)") {
    CHECK(swap_edge_roles(s(1, 0, -1, 0)).matrix[0] == std::array<Int, 4>{-1, 0, 1, 0});
    CHECK(swap_edge_roles(s(0, 1, 0, -1)).matrix[0] == std::array<Int, 4>{0, -1, 0, 1});
    CHECK(swap_edge_roles(s(-1, 0, 0, 1)).matrix[0] == std::array<Int, 4>{0, 1, -1, 0});
}

TEST_CASE("reverse_negate reverses then negates") {
    CHECK(reverse_negate(s(1, 0, -1, 0)).matrix[0] == std::array<Int, 4>{0, 1, 0, -1});
    CHECK(reverse_negate(s(1, -1, 0, 0)).matrix[0] == std::array<Int, 4>{0, 0, 1, -1});
    CHECK(reverse_negate(s(0, 0, 0, 0)).matrix[0] == std::array<Int, 4>{0, 0, 0, 0});
    // involution
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        ConflictSpec m{{{std::uniform_int_distribution<Int>(-5, 5)(rng),
                        std::uniform_int_distribution<Int>(-5, 5)(rng),
                        std::uniform_int_distribution<Int>(-5, 5)(rng),
                        std::uniform_int_distribution<Int>(-5, 5)(rng)}},
                      0};
        CHECK(reverse_negate(reverse_negate(m)) == m);
    }
}

TEST_CASE("complement_spec builds the stated two-row matrix at 1-p") {
    ConflictSpec c1 = complement_spec(s(1, 0, 0, -1, 0));
    CHECK(c1.p == 1);
    CHECK(c1.matrix[0] == std::array<Int, 4>{-1, 0, 0, 1});
    CHECK(c1.matrix[1] == std::array<Int, 4>{0, 1, -1, 0});

    ConflictSpec c2 = complement_spec(s(-1, 1, -1, 1, 2));
    CHECK(c2.p == -1);
    CHECK(c2.matrix[0] == std::array<Int, 4>{1, -1, 1, -1});
    CHECK(c2.matrix[1] == std::array<Int, 4>{1, -1, 1, -1});

    ConflictSpec c3 = complement_spec(s(0, 0, 0, 0, 1));
    CHECK(c3.p == 0);
    CHECK(c3.matrix[0] == std::array<Int, 4>{0, 0, 0, 0});

    CHECK_THROWS_AS(complement_spec(nest_spec(1)), ValidationError);
}

TEST_CASE("nest_shift_pair pairs thresholds p and 1-p") {
    NestShiftPair a = nest_shift_pair(1);
    CHECK(a.nest.p == 1);
    CHECK(a.shift.p == 0);
    CHECK(nest_shift_pair(0).shift.p == 1);
    CHECK(nest_shift_pair(-2).shift.p == 3);
    CHECK(a.nest.matrix == nest_spec(1).matrix);
    CHECK(a.shift.matrix == shift_spec(0).matrix);
}

TEST_CASE("classification of the 19 invariant sign matrices") {
    std::map<int, int> row_sizes;
    for (const ConflictSpec& m : invariant_sign_specs(1)) {
        MatrixClass c = classify_matrix(m);
        ++row_sizes[c.row];
        // applying the recorded trace reproduces the representative
        ConflictSpec applied = m;
        for (Transform t : c.trace)
            applied = t == Transform::ReverseNegate ? reverse_negate(applied)
                                                    : swap_edge_roles(applied);
        CHECK(applied == c.representative);
        // idempotence
        MatrixClass again = classify_matrix(c.representative);
        CHECK(again.trace.empty());
        CHECK(again.representative == c.representative);
        CHECK(again.row == c.row);
    }
    std::map<int, int> expected{{2, 1}, {3, 4}, {4, 2}, {5, 2},  {6, 1},
                                {7, 1}, {8, 2}, {9, 2}, {10, 2}, {11, 2}};
    CHECK(row_sizes == expected);
}

TEST_CASE("classification spot checks") {
    MatrixClass a = classify_matrix(s(0, -1, 0, 1, 1));
    CHECK(a.row == 3);
    CHECK(a.representative.matrix[0] == std::array<Int, 4>{1, 0, -1, 0});
    CHECK(a.trace == std::vector<Transform>{Transform::ReverseNegate, Transform::SwapEdgeRoles});

    MatrixClass b = classify_matrix(s(0, 0, -1, 1, 1));
    CHECK(b.row == 4);
    CHECK(b.representative.matrix[0] == std::array<Int, 4>{-1, 1, 0, 0});
    CHECK(b.trace == std::vector<Transform>{Transform::SwapEdgeRoles});

    MatrixClass c = classify_matrix(ConflictSpec{{{1, 2, -3, 0}}, 1});
    CHECK(c.tag == MatrixClass::Tag::GeneralInvariant);

    CHECK(classify_matrix(shift_spec(2)).row == 12);
    CHECK(classify_matrix(nest_spec(-1)).row == 13);
    CHECK(classify_matrix(swap_edge_roles(nest_spec(0))).row == 13);
    CHECK(classify_matrix(sign_spec(1, 1, 1, 1, 0)).tag == MatrixClass::Tag::NonInvariantPositive);
    CHECK(classify_matrix(sign_spec(-1, -1, 0, -1, 0)).tag ==
          MatrixClass::Tag::NonInvariantNegative);
    CHECK(classify_matrix(ConflictSpec{{{1, 1, 1, 1}, {-1, -1, -1, -1}}, 0}).tag ==
          MatrixClass::Tag::NonInvariantMixed);
    CHECK(classify_matrix(s(0, 0, 0, 0, 5)).row == 2);
}

TEST_CASE("transform guarantees on a random corpus") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
        OrderedGraph g = oracles::random_graph_window(rng, 3, 8, -20, 20);
        OrderedGraph neg = g.negated();
        Int p = std::uniform_int_distribution<Int>(-3, 3)(rng);
        for (const ConflictSpec& m : invariant_sign_specs(p)) {
            ConflictGraph base = build_conflict_graph(g, m);

            // exact equality under swapped edge roles
            CHECK(build_conflict_graph(g, swap_edge_roles(m)).adj == base.adj);

            // edge-isomorphism with the mirrored graph under reverse-negate
            ConflictGraph mir = build_conflict_graph(neg, reverse_negate(m));
            bool mirror_ok = true;
            for (int a = 0; a < g.m() && mirror_ok; ++a) {
                const Edge& ea = g.edges()[static_cast<size_t>(a)];
                int ma = neg.edge_index(Edge{-ea.v, -ea.u});
                for (int b = a + 1; b < g.m(); ++b) {
                    const Edge& eb = g.edges()[static_cast<size_t>(b)];
                    int mb = neg.edge_index(Edge{-eb.v, -eb.u});
                    if (base.adj.has_edge(a, b) != mir.adj.has_edge(ma, mb)) {
                        mirror_ok = false;
                        break;
                    }
                }
            }
            CHECK(mirror_ok);

            // exact complementation via the two-row exchange matrix
            ConflictGraph comp = build_conflict_graph(g, complement_spec(m));
            bool comp_ok = true;
            for (int a = 0; a < g.m() && comp_ok; ++a)
                for (int b = a + 1; b < g.m(); ++b)
                    if (base.adj.has_edge(a, b) == comp.adj.has_edge(a, b)) {
                        comp_ok = false;
                        break;
                    }
            CHECK(comp_ok);
        }

        // nest at p against shift at 1-p are complements
        NestShiftPair pair = nest_shift_pair(p);
        ConflictGraph cn = build_conflict_graph(g, pair.nest);
        ConflictGraph cs = build_conflict_graph(g, pair.shift);
        bool pair_ok = true;
        for (int a = 0; a < g.m() && pair_ok; ++a)
            for (int b = a + 1; b < g.m(); ++b)
                if (cn.adj.has_edge(a, b) == cs.adj.has_edge(a, b)) {
                    pair_ok = false;
                    break;
                }
        CHECK(pair_ok);
    }
}
