#include <gtest/gtest.h>

#include <random>

#include "rb/error.hpp"
#include "rb/matrix.hpp"
#include "rb/scalar.hpp"

using rb::Scalar;

TEST(Scalar, RationalArithmetic) {
    Scalar half(mpq_class(1, 2));
    EXPECT_TRUE((half + half).is_one());
    EXPECT_EQ((Scalar(3) / Scalar(6)).str(), "1/2");
    EXPECT_THROW(Scalar(1) / Scalar(0), rb::Error);
}

TEST(Scalar, CyclotomicReduction) {
    Scalar i = Scalar::zeta(4);
    EXPECT_EQ(i * i, Scalar::parse("-1", 4));
    EXPECT_TRUE(Scalar::zeta(5).pow(5).is_one());
    EXPECT_TRUE(Scalar::zeta(12, 12).is_one());
    EXPECT_EQ(Scalar::zeta(6, 3), Scalar::parse("-1", 6));
}

TEST(Scalar, InverseMatchesExtendedEuclid) {
    // 1 + z + z^4 reduces to -z^2 - z^3 in Q(zeta_5); its inverse from
    // polynomial extended gcd is -1 - z^2 - z^3.
    Scalar a = Scalar::parse("1 + z + z^4", 5);
    EXPECT_EQ(a.str(), "-z^2 - z^3");
    EXPECT_EQ(a.inv(), Scalar::parse("-1 - z^2 - z^3", 5));
    EXPECT_TRUE((a * a.inv()).is_one());
}

TEST(Scalar, ReductionModPhi12) {
    // (2 + z^3)(1 - z)^2 mod z^4 - z^2 + 1, computed by polynomial remainder.
    EXPECT_EQ(Scalar::parse("(2 + z^3)*(1 - z)^2", 12), Scalar::parse("4 - 5z + 2z^3", 12));
}

TEST(Scalar, ParseStrRoundTrip) {
    for (const char* t : {"(1 - z^2)/2", "-z", "3z^2", "0", "1", "-7/3", "(2 + z - 5z^3)/6"}) {
        Scalar s = Scalar::parse(t, 12);
        EXPECT_EQ(Scalar::parse(s.str(), 12), s) << t;
    }
    EXPECT_EQ(Scalar::parse("(1 - z^2)/2", 8).str(), "(1 - z^2)/2");
    EXPECT_THROW(Scalar::parse("1 +", 4), rb::Error);
    EXPECT_THROW(Scalar::parse("1/0", 4), rb::Error);
}

TEST(Scalar, OrderMismatch) {
    EXPECT_THROW(Scalar::zeta(4) + Scalar::zeta(3), rb::Error);
    EXPECT_EQ(Scalar::zeta(4) + Scalar(1), Scalar::parse("1 + z", 4));
    EXPECT_EQ(Scalar::zeta(4).lift(8), Scalar::zeta(8, 2));
}

TEST(Scalar, SquareRoots) {
    EXPECT_EQ(rb::sqrt_in_field(Scalar(4)), Scalar(2));
    EXPECT_EQ(rb::sqrt_in_field(Scalar::parse("-1", 4)), Scalar::zeta(4));
    Scalar r5 = rb::sqrt_in_field(Scalar::parse("5", 5));
    EXPECT_EQ(r5 * r5, Scalar::parse("5", 5));
    EXPECT_THROW(rb::sqrt_in_field(Scalar(2)), rb::Error);
    EXPECT_THROW(rb::sqrt_in_field(Scalar::parse("-1", 3)), rb::Error);
}

TEST(Scalar, FieldAxiomsOnRandomElements) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    auto rnd = [&] {
        std::vector<mpq_class> c(4);
        for (auto& x : c) x = mpq_class(d(rng), 1 + (d(rng) + 4) % 3);
        return Scalar::from_coeffs(12, c);
    };
    for (int t = 0; t < 40; ++t) {
        Scalar a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
    }
}

TEST(Matrix, InverseSolveNullspace) {
    rb::Matrix m(2, 2, 4);
    m(0, 0) = Scalar::one(4);
    m(0, 1) = Scalar::zeta(4);
    m(1, 0) = Scalar::zeta(4);
    m(1, 1) = Scalar::one(4);
    EXPECT_TRUE((m * m.inverse()).is_identity());
    rb::Matrix s(2, 2);
    s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
    EXPECT_EQ(s.rank(), 1u);
    EXPECT_THROW(s.inverse(), rb::Error);
    rb::Matrix k = s.nullspace();
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_TRUE((s * k).is_zero());
    rb::Matrix b(2, 1);
    b(0, 0) = 1; b(1, 0) = 3;
    EXPECT_FALSE(s.solve(b).has_value());
}

TEST(Matrix, Kron) {
    rb::Matrix a = rb::Matrix::identity(2);
    rb::Matrix b(1, 2);
    b(0, 0) = 1; b(0, 1) = 2;
    rb::Matrix k = a.kron(b);
    EXPECT_EQ(k.rows(), 2u);
    EXPECT_EQ(k.cols(), 4u);
    EXPECT_EQ(k(1, 3), Scalar(2));
    EXPECT_TRUE(k(0, 3).is_zero());
}
