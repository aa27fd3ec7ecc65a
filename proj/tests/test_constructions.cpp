#include "qnposet/constructions.hpp"
#include "qnposet/layout.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace qnposet;

namespace {

Poset chain(int n) {
    std::vector<Pair> rel;
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return Poset::from_relations(n, rel);
}

bool has_cover(const Poset& p, Element lo, Element hi) {
    auto covers = cover_edges(p);
    return std::find(covers.begin(), covers.end(), CoverEdge{lo, hi}) != covers.end();
}

} // namespace

TEST(BuildR, SingleElement) {
    auto rec = build_R(1);
    EXPECT_EQ(rec.poset.size(), 1);
    EXPECT_EQ(rec.realizer->lx.order(), std::vector<Element>{0});
    EXPECT_EQ(rec.realizer->ly.order(), std::vector<Element>{0});
    EXPECT_TRUE(is_consistent(rec));
}

TEST(BuildR, RejectsZero) { EXPECT_THROW(build_R(0), std::invalid_argument); }

TEST(BuildR, SizesFollowClosedForm) {
    EXPECT_EQ(build_R(2).poset.size(), 4);
    EXPECT_EQ(build_R(3).poset.size(), 10);
    EXPECT_EQ(build_R(4).poset.size(), 22);
    for (int u = 1; u <= 8; ++u) {
        EXPECT_EQ(build_R(u).poset.size(), 3 * (1 << u) / 2 - 2);
        EXPECT_EQ(reinforcement_size(u), 3 * (1 << u) / 2 - 2);
    }
}

TEST(BuildR, TwoIsThreeChainPlusFreeElement) {
    auto rec = build_R(2);
    EXPECT_EQ(cover_edges(rec.poset), (CoverGraph{{0, 1}, {1, 2}}));
    Element b = rec.element("b");
    for (int i = 0; i < 3; ++i) EXPECT_FALSE(rec.poset.comparable(b, i));
}

TEST(BuildR, WidthRealizerAndDualMap) {
    for (int u = 1; u <= 8; ++u) {
        auto rec = build_R(u);
        EXPECT_EQ(width(rec.poset).width, u) << "u=" << u;
        EXPECT_TRUE(is_consistent(rec)) << "u=" << u;
    }
}

TEST(BuildR, RealizerMatchesRecursiveDescription) {
    auto rec = build_R(3);
    Element a = rec.element("a"), b = rec.element("b");
    EXPECT_EQ(rec.realizer->lx.at(0), b);
    EXPECT_EQ(rec.realizer->ly.at(rec.poset.size() - 1), b);
    EXPECT_EQ(rec.realizer->lx.position(a), 1 + 4);
    EXPECT_EQ(rec.realizer->ly.position(a), 4);
}

TEST(BuildP, SizesFollowRecursion) {
    EXPECT_EQ(build_P(1).poset.size(), 1);
    EXPECT_EQ(build_P(2).poset.size(), 2);
    EXPECT_EQ(build_P(3).poset.size(), 10);
    EXPECT_EQ(build_P(4).poset.size(), 30);
    for (int w = 3; w <= 7; ++w) {
        EXPECT_EQ(build_P(w).poset.size(),
                  2 * build_P(w - 2).poset.size() + 6 * build_R(w - 2).poset.size() + 2);
        EXPECT_EQ(build_P(w).poset.size(), lifted_size(w));
    }
}

TEST(BuildP, WidthAndConsistency) {
    for (int w = 1; w <= 6; ++w) {
        auto rec = build_P(w);
        EXPECT_EQ(width(rec.poset).width, w) << "w=" << w;
        EXPECT_TRUE(is_consistent(rec)) << "w=" << w;
    }
}

TEST(BuildP, AttachmentEdgesAreCovers) {
    for (int w = 3; w <= 6; ++w) {
        auto rec = build_P(w);
        auto reinf = build_R(w - 2);
        const auto& X = rec.part("X");
        const auto& Y = rec.part("Y");
        const auto& R = rec.part("R");
        const auto& Xd = rec.part("X_dual");
        const auto& Yd = rec.part("Y_dual");
        const auto& Rd = rec.part("R_dual");
        auto covers = cover_edges(rec.poset);
        auto is_cover = [&](Element lo, Element hi) {
            return std::find(covers.begin(), covers.end(), CoverEdge{lo, hi}) != covers.end();
        };
        for (int i = 0; i < static_cast<int>(X.size()); ++i) {
            Element rx = R[reinf.realizer->lx.at(i)];
            Element ry = R[reinf.realizer->ly.at(i)];
            EXPECT_TRUE(is_cover(rx, X[i]));
            EXPECT_TRUE(is_cover(ry, Y[i]));
            EXPECT_TRUE(is_cover(Xd[i], Rd[reinf.realizer->lx.at(i)]));
            EXPECT_TRUE(is_cover(Yd[i], Rd[reinf.realizer->ly.at(i)]));
        }
    }
}

TEST(BuildP, RelationGroups) {
    auto rec = build_P(5);
    const Poset& p = rec.poset;
    Element a = rec.element("a"), b = rec.element("b");
    const auto& X = rec.part("X");
    const auto& Y = rec.part("Y");
    EXPECT_TRUE(has_cover(p, b, X.front()));
    EXPECT_TRUE(has_cover(p, b, Y.front()));
    EXPECT_TRUE(has_cover(p, rec.part("X_dual").front(), b));
    for (Element e : rec.part("P_inner")) {
        EXPECT_TRUE(p.less(e, a));
        for (Element r : rec.part("R")) EXPECT_TRUE(p.less(r, e));
    }
    for (Element e : rec.part("P_inner_dual")) {
        EXPECT_TRUE(p.less(a, e));
        for (Element r : rec.part("R_dual")) EXPECT_TRUE(p.less(e, r));
    }
    for (std::size_t i = 0; i + 1 < X.size(); ++i) {
        EXPECT_TRUE(has_cover(p, X[i], X[i + 1]));
        EXPECT_TRUE(has_cover(p, Y[i], Y[i + 1]));
    }
    EXPECT_FALSE(p.comparable(a, b));
}

TEST(BuildP, BaseWidthMustMatchParity) {
    EXPECT_THROW(build_P(3, Poset(2)), std::invalid_argument);
    EXPECT_THROW(build_P(4, chain(3)), std::invalid_argument);
    EXPECT_THROW(build_P(0), std::invalid_argument);
    auto rec = build_P(3, chain(2));
    EXPECT_EQ(rec.poset.size(), 2 * 2 + 6 + 2);
    EXPECT_EQ(width(rec.poset).width, 3);
    EXPECT_TRUE(is_consistent(rec));
}

TEST(BuildP, WithoutMiddleElement) {
    for (int w = 3; w <= 5; ++w) {
        auto rec = build_P(w, std::nullopt, LiftOptions{false});
        EXPECT_EQ(rec.poset.size(), lifted_size(w) - (w == 5 ? 3 : 1));
        EXPECT_EQ(width(rec.poset).width, w);
        EXPECT_TRUE(is_consistent(rec));
        EXPECT_EQ(rec.parts.count("a"), 0u);
    }
}

TEST(BuildAntichainEs, Realizer) {
    EXPECT_EQ(build_antichain_es(1).poset.size(), 1);
    auto rec = build_antichain_es(4);
    EXPECT_TRUE(is_consistent(rec));
    EXPECT_TRUE(rec.poset.relations().empty());
}

TEST(BuildKww, Shape) {
    auto k1 = build_kww(1).poset;
    EXPECT_TRUE(k1.less(0, 1));
    for (int w = 1; w <= 4; ++w) {
        auto rec = build_kww(w);
        EXPECT_EQ(rec.poset.size(), 2 * w);
        EXPECT_EQ(cover_edges(rec.poset).size(), static_cast<std::size_t>(w * w));
        EXPECT_EQ(width(rec.poset).width, w);
        EXPECT_EQ(height(rec.poset), w > 0 ? 2 : 0);
        EXPECT_TRUE(is_consistent(rec));
    }
}

TEST(BuildPlanarHp, Shape) {
    auto r1 = build_planar_hp(1);
    EXPECT_EQ(r1.poset.size(), 3);
    EXPECT_EQ(cover_edges(r1.poset), (CoverGraph{{0, 1}, {2, 0}}));
    EXPECT_EQ(build_planar_hp(4).poset.size(), 12);
    auto rec = build_planar_hp(3);
    EXPECT_TRUE(is_consistent(rec));
    const auto& X = rec.part("X");
    const auto& Y = rec.part("Y");
    for (int i = 0; i < 3; ++i) {
        EXPECT_TRUE(has_cover(rec.poset, i, X[i]));
        EXPECT_TRUE(has_cover(rec.poset, Y[i], 2 - i));
    }
    EXPECT_EQ(width(rec.poset).width, 3);
    EXPECT_GE(exact_queue_number(rec.poset).qn, 2);
}

TEST(LiftSimple, ShapeAndWidth) {
    auto rec = lift_simple(Poset(1));
    EXPECT_EQ(rec.poset.size(), 5);
    EXPECT_EQ(width(rec.poset).width, 2);
    EXPECT_TRUE(is_consistent(rec));
    EXPECT_THROW(lift_simple(Poset(0)), std::invalid_argument);
    auto k = lift_simple(build_kww(2).poset);
    EXPECT_EQ(k.poset.size(), 11);
    EXPECT_EQ(width(k.poset).width, 3);
}

TEST(LiftSimple, RaisesQueueNumber) {
    EXPECT_GE(exact_queue_number(lift_simple(chain(2)).poset).qn, 2);
    EXPECT_GE(exact_queue_number(lift_simple(build_kww(2).poset).poset).qn, 3);
    for (std::uint64_t s = 0; s < 6; ++s) {
        auto p = qnposet::testing::random_poset(4, 0.4, 800 + s);
        EXPECT_GE(exact_queue_number(lift_simple(p).poset).qn, exact_queue_number(p).qn + 1);
    }
}

TEST(LiftDiagonal, RaisesQueueNumberAndWidthByOne) {
    for (auto p : {chain(2), build_kww(2).poset, Poset(1), Poset(2)}) {
        auto rec = lift_diagonal(p);
        EXPECT_TRUE(is_consistent(rec));
        EXPECT_EQ(width(rec.poset).width, width(p).width + 1);
        EXPECT_GE(exact_queue_number(rec.poset).qn, exact_queue_number(p).qn + 1);
    }
    auto rec = lift_diagonal(chain(2));
    Element c = rec.element("c"), e = rec.element("e"), f = rec.element("f"), d = rec.element("d");
    EXPECT_TRUE(has_cover(rec.poset, c, f));
    EXPECT_TRUE(has_cover(rec.poset, e, d));
}

TEST(BuildFamily, Dispatch) {
    EXPECT_EQ(build_family("ru", 3).poset.size(), 10);
    EXPECT_EQ(build_family("pw", 3).poset.size(), 10);
    EXPECT_EQ(build_family("planar-hp", 4).poset.size(), 12);
    EXPECT_EQ(build_family("lift-simple", 2).poset.size(), 11);
    EXPECT_EQ(build_family("lift-diagonal", 1).poset.size(), 8);
    EXPECT_THROW(build_family("nope", 1), std::invalid_argument);
    EXPECT_THROW(build_family("lift-simple", 0), std::invalid_argument);
}
