#include <gtest/gtest.h>

#include "support.hpp"

using namespace tropvieta;

namespace {

Params P(const char* s) { return Params::parse(s); }
Point3 X(const char* s) { return parse_point(s); }

const Params kTorus = Params::parse("inf,inf,inf,-2");

}  // namespace

TEST(Word, ParseReduceAndPrint) {
    EXPECT_EQ(Word::parse("s3 s2 s1").letters(), (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(Word::parse("[s1,s2,s3]").str(), "s1 s2 s3");
    EXPECT_TRUE(Word::parse("s1 s2 s2 s1").empty());
    EXPECT_EQ(Word::parse("s3 s2 s1").first_applied(), 1);
    EXPECT_EQ(Word::parse("s3 s2 s1").last_applied(), 3);
    EXPECT_EQ(Word::parse("s2 s1").then(3), Word::parse("s3 s2 s1"));
    EXPECT_EQ(Word::parse("s3 s2 s1").inverse(), Word::parse("s1 s2 s3"));
    EXPECT_THROW(Word::parse("s4"), UsageError);
}

TEST(TropVieta, Examples) {
    EXPECT_EQ(trop_vieta(kTorus, 3, X("-2,-3,-5")), X("-2,-3,-1"));
    EXPECT_EQ(trop_vieta(kTorus, 1, X("0,-1,-1")), X("-2,-1,-1"));
}

TEST(ApplyWord, Examples) {
    EXPECT_EQ(apply_word(kTorus, Word(), X("-2,-3,-5")), X("-2,-3,-5"));
    EXPECT_EQ(apply_word(kTorus, Word::parse("s2 s3"), X("-2,-3,-5")), X("-2,-1,-1"));
    EXPECT_EQ(apply_word(kTorus, Word::parse("s1 s2 s3"), X("-2,-3,-5")), X("0,-1,-1"));
    auto orbit = word_orbit(kTorus, Word::parse("s1 s2 s3"), X("-2,-3,-5"));
    ASSERT_EQ(orbit.size(), 4u);
    EXPECT_EQ(orbit[1], X("-2,-3,-1"));
    EXPECT_EQ(orbit[3], X("0,-1,-1"));
}

TEST(TropVieta, InvariantAndInvolutive) {
    tvtest::Gen g(41);
    for (int k = 0; k < 1000; ++k) {
        Params p = g.any_params();
        Point3 x = g.skeleton_point(p);
        for (int i = 1; i <= 3; ++i) {
            Point3 y = trop_vieta(p, i, x);
            ASSERT_EQ(f0(p, y), f0(p, x)) << p.str() << ' ' << to_string(x);
            ASSERT_EQ(trop_vieta(p, i, y), x);
        }
        // Off the skeleton the map is still an involution preserving f0.
        Point3 z = lift_from_plane(p, g.rat(-2, 2, 3), g.plane(4, 4));
        int i = static_cast<int>(g.integer(1, 3));
        EXPECT_EQ(trop_vieta(p, i, trop_vieta(p, i, z)), z);
        EXPECT_EQ(f0(p, trop_vieta(p, i, z)), f0(p, z));
    }
}

TEST(TropVieta, FaithfulOnTablePoints) {
    tvtest::Gen g(42);
    const Point3 x = X("-2/3,-2/3,-2/3");
    ASSERT_EQ(cells_of(kTorus, x), std::vector<CellId>{CellId::Dcell});
    for (int k = 0; k < 100; ++k) {
        Word w = g.word(static_cast<std::size_t>(g.integer(1, 8)));
        EXPECT_NE(apply_word(kTorus, w, x), x) << w.str();
    }
}

TEST(TropVieta, CellAtlas) {
    tvtest::Gen g(43);
    int lin_checked = 0, quad_checked = 0;
    for (int k = 0; k < 3000; ++k) {
        Params p = g.meromorphic();
        Point3 x = g.skeleton_point(p);
        auto cells = cells_of(p, x);
        if (cells.size() != 1) continue;
        CellId c = cells[0];
        if (c == CellId::AX1 || c == CellId::BX2 || c == CellId::CX3) {
            int i = cell_index(c);
            EXPECT_TRUE(in_cell(p, trop_vieta(p, i, x), c));
            ++lin_checked;
        } else if (is_quadratic(c)) {
            int i = cell_index(c);
            Point3 y = trop_vieta(p, i, x);
            for (CellId d : cells_of(p, y)) EXPECT_NE(d, c) << p.str() << to_string(x);
            EXPECT_FALSE(in_cell(p, y, linear_cell(i)));
            ++quad_checked;
        }
    }
    EXPECT_GT(lin_checked, 20);
    EXPECT_GT(quad_checked, 200);
}

TEST(TropVieta, DomainRules) {
    // s_j sends interior points of C(X_i^2), i != j, into C(X_j^2) or C(A_j X_j).
    tvtest::Gen g(44);
    int checked = 0;
    for (int k = 0; k < 3000; ++k) {
        Params p = g.meromorphic();
        Point3 x = g.skeleton_point(p);
        auto cells = cells_of(p, x);
        if (cells.size() != 1 || !is_quadratic(cells[0])) continue;
        int i = cell_index(cells[0]);
        for (int j = 1; j <= 3; ++j) {
            if (j == i) continue;
            Point3 y = trop_vieta(p, j, x);
            EXPECT_TRUE(in_cell(p, y, quadratic_cell(j)) || in_cell(p, y, linear_cell(j)))
                << p.str() << ' ' << to_string(x) << " s" << j;
            ++checked;
        }
    }
    EXPECT_GT(checked, 400);
}

TEST(Norm, Examples) {
    EXPECT_EQ(sk_norm(X("-2,-3,-5")), Rat(10));
    UVec u = u_coords(3, X("-2,-3,-5"));
    EXPECT_EQ(Rat(2 * (u.u1 + u.u2)), Rat(10));
    EXPECT_EQ(sk_norm(X("0,-1,-1")), Rat(2));
}

TEST(Norm, MonotoneAlongQuadraticCells) {
    tvtest::Gen g(45);
    for (int k = 0; k < 2000; ++k) {
        Params p = g.any_params();
        Point3 x = g.skeleton_point(p);
        EXPECT_EQ(sk_norm(x), Rat(-coord_sum(x)));
        for (CellId c : cells_of(p, x)) {
            if (!is_quadratic(c)) continue;
            int i = cell_index(c);
            EXPECT_EQ(sk_norm(x), Rat(2 * (u_coords(i, x).u1 + u_coords(i, x).u2)));
            Point3 y = trop_vieta(p, i, x);
            bool y_quadratic = false;
            for (CellId d : cells_of(p, y)) y_quadratic = y_quadratic || is_quadratic(d);
            if (y_quadratic) EXPECT_LE(sk_norm(y), sk_norm(x));
            for (int j = 1; j <= 3; ++j)
                if (j != i) EXPECT_GE(sk_norm(trop_vieta(p, j, x)), sk_norm(x));
        }
    }
}

TEST(UCoords, Examples) {
    EXPECT_EQ(u_coords(3, X("-2,-3,-5")), (UVec{3, 2}));
    EXPECT_EQ(u_inverse(3, UVec{3, 2}), X("-2,-3,-5"));
    EXPECT_EQ(u_coords(1, X("-1,-1,0")), (UVec{0, 1}));
    EXPECT_THROW(u_coords(1, X("-2,-3,-5")), DomainError);
    tvtest::Gen g(46);
    for (int k = 0; k < 300; ++k) {
        int i = static_cast<int>(g.integer(1, 3));
        UVec u{g.rat(0, 9, 7), g.rat(0, 9, 7)};
        EXPECT_EQ(u_coords(i, u_inverse(i, u)), u);
    }
}

TEST(Euc, Examples) {
    EXPECT_EQ(euc(UVec{1, 0}), (UVec{0, 1}));
    EXPECT_EQ(euc(UVec{0, 1}), (UVec{1, 0}));
    EXPECT_EQ(euc(UVec{3, 2}), (UVec{2, 1}));
    EXPECT_EQ(euc(UVec{1, 1}), (UVec{0, 1}));
    EXPECT_EQ(euc_limit(UVec{6, 4}), Rat(2));
    EXPECT_EQ(euc_limit(UVec{3, 2}), Rat(1));
    EXPECT_EQ(euc_limit(UVec{0, 0}), Rat(0));
}

TEST(Euc, NormAndLimit) {
    tvtest::Gen g(47);
    for (int k = 0; k < 500; ++k) {
        UVec u{g.rat(0, 20, 12), g.rat(0, 20, 12)};
        UVec v = euc(u);
        EXPECT_GE(v.u1, 0);
        EXPECT_GE(v.u2, 0);
        EXPECT_EQ(Rat(v.u1 + v.u2), std::max(u.u1, u.u2));
        EXPECT_EQ(euc_limit(u), thomae_gcd(u.u1, u.u2));
    }
}

TEST(Greedy, Examples) {
    GreedyTrace a = greedy_path(kTorus, X("-2,-3,-5"));
    EXPECT_EQ(a.word, Word::parse("s1 s2 s3"));
    EXPECT_EQ(a.terminal, X("0,-1,-1"));
    EXPECT_EQ(a.kind, TraceKind::BoundaryRay);
    EXPECT_EQ(a.ray, 1);
    EXPECT_EQ(a.indices, (std::vector<int>{3, 2, 1}));

    GreedyTrace b = greedy_path(P("inf,inf,inf,-3"), X("-1,-1,-1"));
    EXPECT_TRUE(b.word.empty());
    EXPECT_EQ(b.kind, TraceKind::SubquadraticCell);
    EXPECT_EQ(b.cell, CellId::Dcell);

    GreedyTrace c = greedy_path(kTorus, X("0,-1,-1"));
    EXPECT_TRUE(c.word.empty());
    EXPECT_EQ(c.kind, TraceKind::BoundaryRay);
    EXPECT_EQ(c.ray, 1);

    EXPECT_THROW(greedy_path(kTorus, X("1,1,1")), DomainError);
    EXPECT_EQ(greedy_path(kTorus, X("-2,-3,-5"), 1).kind, TraceKind::Exhausted);
}

TEST(Greedy, TracesReplayAndSimulateEuc) {
    tvtest::Gen g(48);
    for (int k = 0; k < 1000; ++k) {
        Params p = g.any_params();
        Point3 x;
        if (!g.quadratic_point(p, x, 30, 12)) continue;
        GreedyTrace tr = greedy_path(p, x);
        ASSERT_NE(tr.kind, TraceKind::Exhausted) << p.str() << ' ' << to_string(x);
        EXPECT_EQ(apply_word(p, tr.word, x), tr.terminal);
        EXPECT_EQ(tr.path.size(), tr.steps + 1);
        if (tr.kind == TraceKind::BoundaryRay) EXPECT_TRUE(on_boundary_ray(p, tr.ray, tr.terminal));
        // While the path stays in quadratic cells, u-coordinates follow euc.
        if (tr.steps == 0) continue;
        UVec u = u_coords(tr.indices[0], x);
        for (std::size_t n = 1; n < tr.steps; ++n) {
            u = euc(u);
            EXPECT_EQ(u_coords(tr.indices[n], tr.path[n]), u);
        }
    }
}

TEST(Greedy, HolomorphicPathsEndOnRays) {
    tvtest::Gen g(49);
    for (int k = 0; k < 300; ++k) {
        Params p = g.holomorphic();
        Point3 x;
        if (!g.quadratic_point(p, x, 20, 9)) continue;
        GreedyTrace tr = greedy_path(p, x);
        if (tr.kind == TraceKind::SubquadraticCell) continue;  // the origin may lie in C(D)
        EXPECT_EQ(tr.kind, TraceKind::BoundaryRay);
    }
}

TEST(Transit, Matrices) {
    Mat2 tp = transit_matrix(1), tm = transit_matrix(-1);
    EXPECT_EQ(tp, (Mat2{{{1, 1}, {1, 0}}}));
    EXPECT_EQ(tm, (Mat2{{{0, 1}, {1, 1}}}));
    EXPECT_EQ(mat_det(tp), -1);
    EXPECT_EQ(mat_det(tm), -1);
    EXPECT_EQ(Int(tp[0][0] * 3 + tp[0][1] * 2), 5);
    EXPECT_EQ(Int(tp[1][0] * 3 + tp[1][1] * 2), 3);
    EXPECT_THROW(transit_matrix(0), UsageError);
}

TEST(Transit, ConjugatesReflections) {
    // u^{i+e} o s_{i+e} o (u^i)^{-1} is T_e on C(X_i^2) whenever the image is quadratic.
    tvtest::Gen g(50);
    for (int k = 0; k < 300; ++k) {
        int i = static_cast<int>(g.integer(1, 3));
        UVec u{g.rat(1, 20, 6), g.rat(1, 20, 6)};
        Point3 x = u_inverse(i, u);
        for (int e : {1, -1}) {
            int j = wrap(i + e);
            Point3 y = trop_vieta(Params::parse("inf,inf,inf,inf"), j, x);
            Mat2 T = transit_matrix(e);
            UVec expect{Rat(T[0][0] * u.u1 + T[0][1] * u.u2), Rat(T[1][0] * u.u1 + T[1][1] * u.u2)};
            EXPECT_EQ(u_coords(j, y), expect);
        }
    }
}
