#include <gtest/gtest.h>

#include "rb/correlators.hpp"
#include "rb/error.hpp"

using namespace rb;

namespace {
std::string data(const std::string& n) { return std::string(RB_DATA_DIR) + "/" + n + ".json"; }

std::shared_ptr<const Coend> coend(const std::string& n) {
    static std::map<std::string, std::shared_ptr<const Coend>> cache;
    auto& c = cache[n];
    if (!c) c = build_coend(load_category(data(n)));
    return c;
}
std::unique_ptr<CorrelatorSystem> sys(const std::string& c, const std::string& a) {
    auto K = coend(c);
    return std::make_unique<CorrelatorSystem>(load_algebra(K->cat, data(a)), K);
}

std::string failures(const Report& r, size_t max = 5) {
    std::string s;
    for (const auto& it : r.items)
        if (!it.pass && max) {
            s += it.name + " [" + it.detail + "]\n";
            --max;
        }
    return s;
}
}  // namespace

TEST(Correlators, VectIsConsistent) {
    auto S = sys("vect", "vect_unit");
    Report r = check_consistency(*S);
    EXPECT_TRUE(r.ok()) << failures(r);
}

TEST(Correlators, ToricBosonIsConsistent) {
    auto S = sys("toric", "toric_1e");
    Report r = check_consistency(*S);
    EXPECT_TRUE(r.ok()) << failures(r);
    EXPECT_TRUE(passed(r, "closed formula"));
    EXPECT_TRUE(passed(r, "S-invariance"));
    EXPECT_TRUE(passed(r, "relation"));
}

TEST(Correlators, MagneticIsConsistent) {
    auto S = sys("toric", "toric_1m");
    ConsistencyOptions o;
    o.max_holes = 3;
    Report r = check_consistency(*S, o);
    EXPECT_TRUE(r.ok()) << failures(r);
}

TEST(Correlators, FibonacciSquaredIsConsistent) {
    auto S = sys("fib2", "fib2_canonical");
    ConsistencyOptions o;
    o.max_holes = 2;
    Report r = check_consistency(*S, o);
    EXPECT_TRUE(r.ok()) << failures(r);
}

TEST(Correlators, FermionTwistObstruction) {
    auto S = sys("toric", "toric_1f");
    ConsistencyOptions o;
    o.max_holes = 2;
    Report r = check_consistency(*S, o);
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_EQ(r.first_failure()->name, "algebra commutativity");
    EXPECT_FALSE(passed(r, "algebra trivial twist"));
    EXPECT_FALSE(passed(r, "moves"));
    EXPECT_TRUE(passed(r, "S-invariance"));
}

TEST(Correlators, UnitOnToricFailsOnlySInvariance) {
    auto S = sys("toric", "toric_unit");
    ConsistencyOptions o;
    o.max_holes = 2;
    Report r = check_consistency(*S, o);
    EXPECT_FALSE(passed(r, "S-invariance"));
    for (const auto& it : r.items)
        if (it.name.rfind("S-invariance", 0) != 0) EXPECT_TRUE(it.pass) << it.name;
    // closed torus: the correlator is eta_K and S moves it to Lambda_K
    const BlockContext& ctx = S->blocks();
    const Coend& K = ctx.coend();
    Marking T = standard_marking(0, {}, 1);
    Reference ref = reference_map(ctx, T);
    Matrix u = S->cut_and_sew(T);
    Morphism etaK = K.i(Object::unit());
    EXPECT_EQ(ref.map * u, Matrix::column(ctx.coords(ctx.hom(K.K), etaK)));
    EXPECT_EQ(ref.map * move_matrix(ctx, T, parse_move("S@v0")) * u, Matrix::column(ctx.coords(ctx.hom(K.K), K.Lambda)));
}

TEST(Correlators, RoundTripOnBundledSystems) {
    for (auto [c, a] : std::vector<std::pair<std::string, std::string>>{{"vect", "vect_unit"},
                                                                        {"toric", "toric_unit"},
                                                                        {"toric", "toric_1e"},
                                                                        {"toric", "toric_1m"},
                                                                        {"fib2", "fib2_canonical"}}) {
        Report r = verify_roundtrip(*sys(c, a));
        EXPECT_TRUE(r.ok()) << a << "\n" << failures(r);
    }
}

TEST(Correlators, ClosedFormulaBaseCases) {
    auto S = sys("toric", "toric_1e");
    const Category& C = S->cat();
    const Object& F = S->algebra().F;
    EXPECT_EQ(S->closed(0, 1, 1), C.id(F));
    EXPECT_EQ(S->closed(0, 2, 1), S->algebra().m);
    EXPECT_EQ(S->closed(0, 1, 2), S->algebra().Delta);
    EXPECT_EQ(S->closed(0, 0, 1), S->algebra().eta);
    // the unit algebra: genus g with no boundary is eta_K (x) ... (x) eta_K
    auto U = sys("toric", "toric_unit");
    const Coend& K = U->blocks().coend();
    Morphism etaK = K.i(Object::unit());
    EXPECT_EQ(U->closed(1, 0, 0), etaK);
    EXPECT_EQ(U->closed(2, 0, 0), U->cat().tensor(etaK, etaK));
}

TEST(Correlators, DisjointUnionIsMonoidal) {
    auto S = sys("toric", "toric_1e");
    const BlockContext& ctx = S->blocks();
    Marking a = standard_marking(3, {1, -1, 1}), b = standard_marking(2, {-1, 1}, 1);
    Matrix lhs = union_map(ctx, a, b) * S->cut_and_sew(a).kron(S->cut_and_sew(b));
    EXPECT_EQ(lhs, S->cut_and_sew(disjoint_union(a, b)));
}

TEST(Correlators, SewingOrderDoesNotMatter) {
    auto S = sys("toric", "toric_1e");
    Marking M = standard_marking(3, {1, -1, -1}, 1);
    auto cuts = M.cut_ids();
    ASSERT_GE(cuts.size(), 3u);
    Matrix u = S->cut_and_sew(M);
    std::vector<int> order = {cuts[1], cuts[2], cuts[0]};
    EXPECT_EQ(S->cut_and_sew(M, order), u);
}

TEST(Correlators, FourLegVertexIsRejected) {
    auto S = sys("vect", "vect_unit");
    try {
        S->elementary({1, 1, 1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "InvalidSphereType");
    }
}
