#include <gtest/gtest.h>

#include "json.hpp"
#include "rb/error.hpp"
#include "rb/frobenius.hpp"

using namespace rb;

namespace {
std::string data(const std::string& n) { return std::string(RB_DATA_DIR) + "/" + n + ".json"; }

std::shared_ptr<const Category> cat(const std::string& n) {
    static std::map<std::string, std::shared_ptr<const Category>> cache;
    auto& c = cache[n];
    if (!c) c = load_category(data(n));
    return c;
}
std::shared_ptr<const Coend> coend(const std::string& n) {
    static std::map<std::string, std::shared_ptr<const Coend>> cache;
    auto& c = cache[n];
    if (!c) c = build_coend(cat(n));
    return c;
}
FrobeniusData alg(const std::string& c, const std::string& a) { return load_algebra(coend(c)->cat, data(a)); }

const std::vector<std::pair<std::string, std::string>> kBundled = {
    {"vect", "vect_unit"},   {"toric", "toric_unit"}, {"toric", "toric_1e"},
    {"toric", "toric_1m"},   {"toric", "toric_1f"},   {"fib2", "fib2_canonical"}};
}  // namespace

TEST(Frobenius, VectTrivialAlgebra) {
    auto C = coend("vect")->cat;
    Object one = Object::unit();
    Morphism u = C->id(one);
    Generators g{u, u, u};
    FrobeniusData A = from_generators(C, one, g);
    EXPECT_EQ(A.m, u);
    EXPECT_EQ(A.eta, u);
    EXPECT_EQ(A.Delta, u);
    EXPECT_EQ(A.eps, u);
    EXPECT_TRUE(check_axioms(A).ok());
}

TEST(Frobenius, ToricProductFromGeneratorsIsTheGroupAlgebra) {
    FrobeniusData A = alg("toric", "toric_1e");
    FrobeniusData B = from_generators(A.cat, A.F, to_generators(A));
    // Z/2 = {1, e}: every product of summands lands in the sum of their indices
    auto j = nlohmann::json::parse(morphism_components_json(*A.cat, B.m, 2, 2, 1));
    nlohmann::json want = {{"0,0;0", {"1"}}, {"0,1;1", {"1"}}, {"1,0;1", {"1"}}, {"1,1;0", {"1"}}};
    EXPECT_EQ(j, want);
    auto e = nlohmann::json::parse(morphism_components_json(*A.cat, B.eta, 2, 0, 1));
    EXPECT_EQ(e, (nlohmann::json{{";0", {"1"}}}));
}

TEST(Frobenius, AxiomsOnBundledAlgebras) {
    for (auto [c, a] : kBundled) {
        if (a == "toric_1f") continue;
        Report r = check_axioms(alg(c, a));
        for (const auto& it : r.items) EXPECT_TRUE(it.pass) << a << ": " << it.name << " " << it.detail;
    }
}

TEST(Frobenius, FermionBreaksTrivialTwist) {
    Report r = check_axioms(alg("toric", "toric_1f"));
    std::map<std::string, bool> res;
    for (const auto& it : r.items) res[it.name] = it.pass;
    EXPECT_FALSE(res.at("trivial twist"));
    EXPECT_FALSE(res.at("commutativity"));
    EXPECT_FALSE(res.at("braid invariance of omega"));
    EXPECT_TRUE(res.at("associativity"));
    EXPECT_TRUE(res.at("Frobenius property"));
}

TEST(Frobenius, RoundTripThroughGenerators) {
    for (auto [c, a] : kBundled) {
        FrobeniusData A = alg(c, a);
        FrobeniusData B = from_generators(A.cat, A.F, to_generators(A));
        EXPECT_EQ(B.m, A.m) << a;
        EXPECT_EQ(B.eta, A.eta) << a;
        EXPECT_EQ(B.Delta, A.Delta) << a;
        EXPECT_EQ(B.eps, A.eps) << a;
        Generators g = to_generators(B);
        EXPECT_EQ(g.omega, A.omega) << a;
        EXPECT_EQ(g.Phi, A.Phi) << a;
    }
}

TEST(Frobenius, GeneratorFileFormat) {
    FrobeniusData A = alg("toric", "toric_1m");
    Generators g = to_generators(A);
    const Category& C = *A.cat;
    nlohmann::json j = {{"object", {"1", "m"}},
                        {"format", "generators"},
                        {"tensors",
                         {{"omega", nlohmann::json::parse(morphism_components_json(C, g.omega, 2, 0, 3))},
                          {"eps", nlohmann::json::parse(morphism_components_json(C, g.eps, 2, 1, 0))},
                          {"Phi", nlohmann::json::parse(morphism_components_json(C, g.Phi, 2, 1, 1))}}}};
    FrobeniusData B = parse_algebra(A.cat, j.dump());
    EXPECT_EQ(B.m, A.m);
    EXPECT_EQ(B.Delta, A.Delta);
    EXPECT_EQ(B.eta, A.eta);
}

TEST(Frobenius, DegenerateFormIsRejected) {
    auto C = cat("toric");
    std::string t = R"({"object":["1","e"],"format":"algebra","tensors":{"m":{"0,0;0":"1","0,1;1":"1","1,0;1":"1"},
                        "eta":{";0":"1"},"eps":{"0;":"1"}}})";
    try {
        parse_algebra(C, t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotInvertible");
    }
}

TEST(Frobenius, Modularity) {
    EXPECT_TRUE(check_modular(alg("vect", "vect_unit"), *coend("vect")).modular);
    EXPECT_TRUE(check_modular(alg("toric", "toric_1e"), *coend("toric")).modular);
    EXPECT_TRUE(check_modular(alg("toric", "toric_1m"), *coend("toric")).modular);
    EXPECT_TRUE(check_modular(alg("fib2", "fib2_canonical"), *coend("fib2")).modular);
    ModularCheck f = check_modular(alg("toric", "toric_1f"), *coend("toric"));
    EXPECT_FALSE(f.modular);
    EXPECT_TRUE(f.s_invariant);
}

TEST(Frobenius, ToricUnitIsNotModular) {
    const Coend& K = *coend("toric");
    const Category& C = *K.cat;
    ModularCheck mc = check_modular(alg("toric", "toric_unit"), K);
    EXPECT_FALSE(mc.modular);
    Morphism etaK = K.i(Object::unit());
    EXPECT_EQ(mc.v, etaK);
    EXPECT_EQ(C.compose(K.S, etaK), K.Lambda);
    EXPECT_EQ(mc.residual, C.sub(K.Lambda, etaK));
}

TEST(Frobenius, NonModularCategoryIsRejected) {
    auto K = coend("rep_z2");
    ASSERT_FALSE(K->modular);
    auto A = from_generators(K->cat, Object::unit(),
                             {K->cat->id(Object::unit()), K->cat->id(Object::unit()), K->cat->id(Object::unit())});
    try {
        check_modular(A, *K);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "CategoryNotModular");
    }
}
