#include <gtest/gtest.h>

#include "rb/error.hpp"
#include "rb/surface.hpp"

using namespace rb;

namespace {
std::string legs(const Marking& M) {
    std::string s;
    for (const auto& v : M.vertices) {
        s += "(";
        for (size_t k = 0; k < v.legs.size(); ++k) {
            const Leg& l = v.legs[k];
            if (k) s += " ";
            s += l.cut ? "c" + std::to_string(l.id) + (l.side ? "-" : "+") : "b" + std::to_string(l.id);
        }
        s += ")";
    }
    return s;
}
}  // namespace

TEST(Surface, StandardMarkings) {
    EXPECT_EQ(legs(standard_marking(3, {1, 1, 1})), "(b0 b1 b2)");
    EXPECT_EQ(legs(standard_marking(5, {1, 1, 1, 1, 1})), "(b0 b1 c0+)(c0- b2 c1+)(c1- b3 b4)");
    EXPECT_EQ(legs(standard_marking(0, {})), "()");
    EXPECT_EQ(legs(standard_marking(1, {1}, 1)), "(b0 c0+ c0-)");
    EXPECT_EQ(legs(standard_marking(0, {}, 1)), "(c0+ c0-)");
    Marking g2 = standard_marking(0, {}, 2);
    g2.validate();
    EXPECT_EQ(g2.component_genus(g2.components()[0]), 2);
    auto s = standard_marking(2, {1, -1}, 1).surface();
    ASSERT_EQ(s.components.size(), 1u);
    EXPECT_EQ(s.components[0].genus, 1);
    EXPECT_EQ(s.components[0].boundary.size(), 2u);
}

TEST(Surface, ZOrderAndAssociativityTwice) {
    Marking M = standard_marking(3, {1, 1, -1});
    EXPECT_EQ(legs(apply_word(M, parse_word("Z@v0 Z@v0 Z@v0"))), legs(M));
    EXPECT_EQ(legs(apply_word(M, parse_word("Z@v0 Z^-1@v0"))), legs(M));
    Marking N = apply_move(standard_marking(4, {1, 1, 1, 1}), parse_move("Z@v1"));
    Marking AA = apply_word(N, parse_word("A@c0 A@c0"));
    EXPECT_NE(legs(AA), legs(N));  // the cut comes back reversed
    EXPECT_TRUE(same_marking(AA, N));
    EXPECT_TRUE(same_marking(apply_word(N, parse_word("A@c0 A^-1@c0")), N));
    EXPECT_FALSE(same_marking(apply_word(N, parse_word("A@c0")), N));
}

TEST(Surface, FMoveAndInverse) {
    Marking N = standard_marking(4, {1, 1, 1, 1});
    Marking one = apply_move(merge_at_cut(N, 0, 4), parse_move("Z@v0"));
    EXPECT_EQ(legs(merge_at_cut(N, 0, 4)), "(b0 b1 b2 b3)");
    EXPECT_THROW(apply_move(N, parse_move("F@c0")), Error);
    Move split = parse_move("F^-1@v0:2");
    Marking M = standard_marking(3, {1, 1, 1});
    Marking S = apply_move(M, split);
    EXPECT_EQ(legs(S), "(b0 b1 c0-)(c0+ b2)");
    Move back = inverse_move(M, split);
    EXPECT_EQ(str(back), "F@c0");
    EXPECT_EQ(legs(apply_move(S, back)), legs(M));
    Move f = parse_move("F@c0");
    Marking T = apply_move(S, f);
    EXPECT_EQ(legs(apply_move(T, inverse_move(S, f))), legs(S));
    (void)one;
}

TEST(Surface, PreconditionsAndErrors) {
    Marking M = standard_marking(3, {1, 1, 1});
    EXPECT_THROW(apply_move(M, parse_move("Z@v7")), Error);
    EXPECT_THROW(apply_move(M, parse_move("S@v0")), Error);
    EXPECT_THROW(parse_move("Q@v0"), Error);
    EXPECT_THROW(parse_move("F@v0"), Error);
    EXPECT_THROW(sew_marking(M, 0, 1), Error);
    Marking g = standard_marking(1, {1}, 1);
    EXPECT_NO_THROW(apply_move(g, parse_move("S@v0")));
    try {
        apply_move(M, parse_move("A@c0"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "InvalidLocation");
    }
}

TEST(Surface, Sewing) {
    Marking a = standard_marking(3, {1, 1, 1});
    Marking b = standard_marking(3, {-1, 1, 1});
    Marking u = disjoint_union(a, b);
    EXPECT_EQ(u.surface().components.size(), 2u);
    Marking s = sew_marking(u, 3, 2);
    s.validate();
    EXPECT_EQ(legs(s), "(b0 b1 c0+)(c0- b4 b5)");
    EXPECT_EQ(s.surface().components.size(), 1u);
    EXPECT_EQ(s.surface().components[0].genus, 0);
}

TEST(Surface, Admissibility) {
    Marking M = standard_marking(3, {1, -1, -1});
    EXPECT_FALSE(is_admissible(parse_word("B@v0"), M));
    EXPECT_TRUE(is_admissible(parse_word("Z@v0 B@v0"), M));
    EXPECT_TRUE(is_admissible(parse_word("Z@v0"), M));
}

TEST(Surface, JsonRoundTrip) {
    Marking M = standard_marking(2, {1, -1}, 1);
    Marking back = marking_from_json(to_json(M));
    EXPECT_EQ(legs(back), legs(M));
    EXPECT_EQ(back.boundary, M.boundary);
}

TEST(Surface, RelationWordsCloseUp) {
    for (int r = 1; r <= 13; ++r) {
        auto inst = relation_instances(r);
        EXPECT_FALSE(inst.empty()) << "W" << r;
        for (const auto& I : inst) {
            Marking a = apply_word(I.start, I.lhs), b = apply_word(I.start, I.rhs);
            EXPECT_TRUE(same_marking(a, b)) << I.name << ": " << legs(a) << " vs " << legs(b);
        }
    }
}
