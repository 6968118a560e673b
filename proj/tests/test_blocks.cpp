#include <gtest/gtest.h>

#include "rb/blocks.hpp"
#include "rb/error.hpp"

using namespace rb;

namespace {
std::shared_ptr<const Coend> coend(const std::string& n) {
    static std::map<std::string, std::shared_ptr<const Coend>> cache;
    auto& c = cache[n];
    if (!c) c = build_coend(load_category(std::string(RB_DATA_DIR) + "/" + n + ".json"));
    return c;
}
BlockContext ctx(const std::string& cat, const std::string& F) {
    auto co = coend(cat);
    return BlockContext(co, co->cat->parse_object(F));
}
Marking all_out(int n, int g = 0) { return standard_marking(n, std::vector<int>(n, 1), g); }
}  // namespace

TEST(Blocks, Dimensions) {
    auto t = ctx("toric", "1+e");
    EXPECT_EQ(block_space(t, all_out(3)).dim, 4u);
    EXPECT_EQ(block_space(t, all_out(4)).dim, 8u);
    EXPECT_EQ(block_space(t, all_out(1, 1)).dim, 4u);
    auto v = ctx("vect", "1");
    for (int g = 0; g <= 2; ++g) EXPECT_EQ(block_space(v, all_out(0, g)).dim, 1u);
    EXPECT_EQ(block_space(ctx("toric", "1"), all_out(0, 1)).dim, 4u);
}

TEST(Blocks, MarkingIndependentDimension) {
    auto t = ctx("toric", "1+e");
    Marking M = all_out(4);
    Marking N = apply_word(M, parse_word("Z@v1 A@c0"));
    EXPECT_EQ(block_space(t, M).dim, block_space(t, N).dim);
    Matrix A = word_matrix(t, M, parse_word("Z@v1 A@c0"));
    EXPECT_EQ(A.rank(), A.rows());
}

TEST(Blocks, ZCubedAndInverses) {
    auto t = ctx("toric", "1+e");
    Marking M = standard_marking(3, {1, -1, 1});
    EXPECT_TRUE(word_matrix(t, M, parse_word("Z@v0 Z@v0 Z@v0")).is_identity());
    EXPECT_TRUE(word_matrix(t, M, parse_word("B@v0 B^-1@v0")).is_identity());
    EXPECT_TRUE(word_matrix(t, M, parse_word("F^-1@v0:1 F@c0")).is_identity());
}

TEST(Blocks, RelationsToricUnit) {
    auto t = ctx("toric", "1");
    for (int r = 1; r <= 13; ++r) {
        Report rep = check_relations(t, {r});
        for (const auto& it : rep.items) EXPECT_TRUE(it.pass) << it.name << " " << it.detail;
    }
}

TEST(Blocks, RelationsToricBulk) {
    auto t = ctx("toric", "1+e");
    for (int r = 1; r <= 13; ++r) {
        Report rep = check_relations(t, {r});
        for (const auto& it : rep.items) EXPECT_TRUE(it.pass) << it.name << " " << it.detail;
    }
}

// A simple bulk object keeps the four- and five-leg vertices small enough for
// every relation; the direct sum is exercised on the cheaper ones.
TEST(Blocks, RelationsFibonacciSquared) {
    auto co = coend("fib2");
    const Category& C = *co->cat;
    BlockContext t(co, C.parse_object(C.label_name(3)));
    for (int r = 1; r <= 13; ++r) {
        Report rep = check_relations(t, {r});
        for (const auto& it : rep.items) EXPECT_TRUE(it.pass) << it.name << " " << it.detail;
    }
}

TEST(Blocks, RelationsFibonacciSquaredSum) {
    auto co = coend("fib2");
    const Category& C = *co->cat;
    BlockContext t(co, C.parse_object(C.label_name(0) + "+" + C.label_name(3)));
    Report rep = check_relations(t, {1, 2, 3, 5, 6, 11, 12});
    for (const auto& it : rep.items) EXPECT_TRUE(it.pass) << it.name << " " << it.detail;
}

TEST(Blocks, RawIntegralBreaksOnlyTheTorusRelations) {
    auto t = ctx("toric", "1+e");
    t.set_S(t.coend().S_from(t.coend().Lambda_raw));
    Report rep = check_relations(t, {11});
    ASSERT_FALSE(rep.items.empty());
    for (const auto& it : rep.items) EXPECT_FALSE(it.pass) << it.name;
    EXPECT_TRUE(check_relations(t, {1, 2, 3, 4, 5, 6, 7, 8}).ok());
}

// Gluing two pants along a cut and contracting it is the composite with d~_F.
TEST(Blocks, SewThenContractIsEvaluation) {
    auto t = ctx("toric", "1+e");
    const Category& C = t.cat();
    const Object& F = t.F();
    Marking a = standard_marking(3, {1, 1, 1}), b = standard_marking(3, {-1, 1, 1});
    Marking U = disjoint_union(a, b);
    Matrix glue = sew_map(t, U, 3, 2) * union_map(t, a, b);
    Marking N = sew_marking(U, 3, 2);
    Reference ref = reference_map(t, N);
    const HomSpace& Ha = t.hom(tensor_all({F, F, F}));
    const HomSpace& Hb = t.hom(tensor_all({dual(F), F, F}));
    Morphism mid = C.tensor(C.id(tensor(F, F)), C.ev_right(F), C.id(tensor(F, F)));
    ASSERT_EQ(ref.W, mid.cod);
    for (size_t i = 0; i < Ha.dim(); ++i)
        for (size_t j = 0; j < Hb.dim(); ++j) {
            Matrix e(Ha.dim() * Hb.dim(), 1, C.order());
            e(i * Hb.dim() + j, 0) = Scalar::one(C.order());
            Morphism direct = C.compose(mid, C.tensor(Ha.basis[i], Hb.basis[j]));
            EXPECT_EQ(ref.map * glue * e, Matrix::column(t.coords(t.hom(ref.W), direct)));
        }
}

TEST(Blocks, VectSelfSewIsOne) {
    auto v = ctx("vect", "1");
    Matrix m = sew_map(v, standard_marking(2, {1, -1}), 1, 0);
    ASSERT_EQ(m.rows(), 1u);
    ASSERT_EQ(m.cols(), 1u);
    EXPECT_EQ(m(0, 0), Scalar::one(1));
}

// On the closed torus the block space is Hom(1, K) and S acts by post-composition.
TEST(Blocks, SSquaredIsApoInverseOnTheTorus) {
    auto t = ctx("toric", "1+e");
    Marking M = all_out(0, 1);
    Reference ref = reference_map(t, M);
    EXPECT_EQ(ref.W, t.coend().K);
    Matrix ss = word_matrix(t, M, parse_word("S@v0 S@v0"));
    EXPECT_EQ(ref.map * ss, t.post(t.coend().apo_inv) * ref.map);
    EXPECT_EQ(ref.map * move_matrix(t, M, parse_move("S@v0")), t.post(t.coend().S) * ref.map);
}
