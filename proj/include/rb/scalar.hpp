#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <vector>

namespace rb {

// Arithmetic context for Q(zeta_n): the n-th cyclotomic polynomial and the
// reductions of x^k for phi(n) <= k <= 2 phi(n) - 2.
struct Cyclo {
    int order = 1;
    int phi = 1;
    std::vector<mpz_class> poly;                 // Phi_n, low degree first, monic
    std::vector<std::vector<mpq_class>> xpow;    // xpow[k - phi] = x^k mod Phi_n

    static const Cyclo& get(int n);
};

int euler_phi(int n);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^{phi-1}.
class Scalar {
public:
    Scalar();
    Scalar(long v);
    Scalar(const mpq_class& v);

    static Scalar zero(int order);
    static Scalar one(int order);
    static Scalar zeta(int order, long k = 1);
    static Scalar from_coeffs(int order, std::vector<mpq_class> coeffs);
    static Scalar parse(const std::string& text, int order);

    int order() const { return f_->order; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    // Embedding into Q(zeta_n) for order() | n.
    Scalar lift(int n) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar inv() const;
    Scalar pow(long e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Lexicographic order on coefficient vectors (after coercion).
    int compare(const Scalar& o) const;

    // "(1 - z^2)/2" style: integer polynomial over a positive denominator.
    std::string str() const;

private:
    const Cyclo* f_;
    std::vector<mpq_class> c_;

    void unify(Scalar& o);
};

// Square root in the same field, first nonzero coefficient positive.
// Throws NotRepresentable if a is not a square in Q(zeta_n).
Scalar sqrt_in_field(const Scalar& a);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace rb
