#include "rb/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "rb/error.hpp"

namespace rb {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using ZPoly = std::vector<mpz_class>;

// Exact division of integer polynomials with monic divisor.
ZPoly divide_monic(ZPoly num, const ZPoly& den) {
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    ZPoly q(dn - dd + 1);
    for (int k = dn - dd; k >= 0; --k) {
        mpz_class coef = num[k + dd];
        q[k] = coef;
        if (coef != 0)
            for (int j = 0; j <= dd; ++j) num[k + j] -= coef * den[j];
    }
    return q;
}

std::unique_ptr<Cyclo> build_cyclo(int n, const std::map<int, const Cyclo*>& known) {
    auto c = std::make_unique<Cyclo>();
    c->order = n;
    c->phi = euler_phi(n);
    ZPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, known.at(d)->poly);
    c->poly = p;
    int phi = c->phi;
    // x^phi = -sum poly[j] x^j, then shift upwards.
    std::vector<mpq_class> cur(phi);
    for (int j = 0; j < phi; ++j) cur[j] = -mpq_class(p[j]);
    c->xpow.push_back(cur);
    for (int k = phi + 1; k <= 2 * phi - 2; ++k) {
        std::vector<mpq_class> nxt(phi);
        mpq_class top = cur[phi - 1];
        for (int j = phi - 1; j >= 1; --j) nxt[j] = cur[j - 1];
        nxt[0] = 0;
        if (top != 0)
            for (int j = 0; j < phi; ++j) nxt[j] += top * c->xpow[0][j];
        c->xpow.push_back(nxt);
        cur = nxt;
    }
    return c;
}

}  // namespace

const Cyclo& Cyclo::get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Cyclo>> cache;
    if (n < 1) fail("OrderMismatch", "cyclotomic order must be positive, got " + std::to_string(n));
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    std::map<int, const Cyclo*> known;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        auto jt = cache.find(d);
        if (jt == cache.end()) {
            std::map<int, const Cyclo*> sub;
            for (int e = 1; e < d; ++e)
                if (d % e == 0) sub[e] = cache.at(e).get();
            jt = cache.emplace(d, build_cyclo(d, sub)).first;
        }
        known[d] = jt->second.get();
    }
    return *cache.at(n);
}

Scalar::Scalar() : f_(&Cyclo::get(1)), c_(1) {}
Scalar::Scalar(long v) : f_(&Cyclo::get(1)), c_{mpq_class(v)} {}
Scalar::Scalar(const mpq_class& v) : f_(&Cyclo::get(1)), c_{v} {}

Scalar Scalar::zero(int order) {
    Scalar s;
    s.f_ = &Cyclo::get(order);
    s.c_.assign(s.f_->phi, mpq_class(0));
    return s;
}

Scalar Scalar::one(int order) {
    Scalar s = zero(order);
    s.c_[0] = 1;
    return s;
}

Scalar Scalar::zeta(int order, long k) {
    k %= order;
    if (k < 0) k += order;
    const Cyclo& f = Cyclo::get(order);
    Scalar s = zero(order);
    if (k < f.phi) {
        s.c_[k] = 1;
    } else if (k <= 2 * f.phi - 2) {
        s.c_ = f.xpow[k - f.phi];
    } else {
        s = zeta(order, f.phi - 1) * zeta(order, k - f.phi + 1);
    }
    return s;
}

Scalar Scalar::from_coeffs(int order, std::vector<mpq_class> coeffs) {
    const Cyclo& f = Cyclo::get(order);
    Scalar s = zero(order);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        coeffs[k].canonicalize();
        if (coeffs[k] == 0) continue;
        if (static_cast<int>(k) < f.phi) {
            s.c_[k] += coeffs[k];
        } else {
            Scalar t = zeta(order, static_cast<long>(k));
            for (int j = 0; j < f.phi; ++j) s.c_[j] += coeffs[k] * t.c_[j];
        }
    }
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

Scalar Scalar::lift(int n) const {
    if (n == order()) return *this;
    if (n % order() != 0)
        fail("OrderMismatch", "cannot embed Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" +
                                  std::to_string(n) + ")");
    long step = n / order();
    std::vector<mpq_class> raw(static_cast<size_t>(step) * (c_.size() - 1) + 1);
    for (size_t k = 0; k < c_.size(); ++k) raw[k * step] = c_[k];
    return from_coeffs(n, raw);
}

void Scalar::unify(Scalar& o) {
    if (f_ == o.f_) return;
    if (order() == 1) {
        *this = lift(o.order());
    } else if (o.order() == 1) {
        o = o.lift(order());
    } else {
        fail("OrderMismatch", "operands live in Q(zeta_" + std::to_string(order()) + ") and Q(zeta_" +
                                  std::to_string(o.order()) + ")");
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (f_ != o.f_) {
        Scalar b = o;
        unify(b);
        return *this += b;
    }
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (f_ != o.f_) {
        Scalar b = o;
        unify(b);
        return *this -= b;
    }
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (f_ != o.f_) {
        Scalar b = o;
        unify(b);
        return *this *= b;
    }
    int phi = f_->phi;
    if (phi == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<mpq_class> prod(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    for (int k = phi; k <= 2 * phi - 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& red = f_->xpow[k - phi];
        for (int j = 0; j < phi; ++j)
            if (red[j] != 0) prod[j] += prod[k] * red[j];
    }
    prod.resize(phi);
    c_ = std::move(prod);
    return *this;
}

// Solves (multiplication by *this) x = 1 by Gaussian elimination over Q.
Scalar Scalar::inv() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero");
    int phi = f_->phi;
    if (phi == 1) {
        Scalar r = *this;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1));
    for (int j = 0; j < phi; ++j) {
        Scalar col = *this * zeta(order(), j);
        for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
    }
    m[0][phi] = 1;
    for (int col = 0; col < phi; ++col) {
        int piv = col;
        while (m[piv][col] == 0) ++piv;
        std::swap(m[piv], m[col]);
        mpq_class d = m[col][col];
        for (int j = col; j <= phi; ++j) m[col][j] /= d;
        for (int i = 0; i < phi; ++i) {
            if (i == col || m[i][col] == 0) continue;
            mpq_class t = m[i][col];
            for (int j = col; j <= phi; ++j) m[i][j] -= t * m[col][j];
        }
    }
    Scalar r = zero(order());
    for (int i = 0; i < phi; ++i) r.c_[i] = m[i][phi];
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar base = *this, acc = one(order());
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (f_ == o.f_) return c_ == o.c_;
    Scalar a = *this, b = o;
    a.unify(b);
    return a.c_ == b.c_;
}

int Scalar::compare(const Scalar& o) const {
    Scalar a = *this, b = o;
    a.unify(b);
    for (size_t k = 0; k < a.c_.size(); ++k) {
        int s = cmp(a.c_[k], b.c_[k]);
        if (s) return s < 0 ? -1 : 1;
    }
    return 0;
}

std::string Scalar::str() const {
    mpz_class den = 1;
    for (const auto& x : c_) den = lcm(den, mpz_class(x.get_den()));
    std::string poly;
    int terms = 0;
    for (size_t k = 0; k < c_.size(); ++k) {
        mpz_class num = mpz_class(c_[k] * den);
        if (num == 0) continue;
        ++terms;
        bool neg = num < 0;
        mpz_class mag = abs(num);
        if (poly.empty())
            poly += neg ? "-" : "";
        else
            poly += neg ? " - " : " + ";
        if (k == 0 || mag != 1) poly += mag.get_str();
        if (k >= 1) poly += "z";
        if (k >= 2) poly += "^" + std::to_string(k);
    }
    if (terms == 0) return "0";
    if (den == 1) return poly;
    if (terms == 1) return poly + "/" + den.get_str();
    return "(" + poly + ")/" + den.get_str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int order;

    [[noreturn]] void error(const std::string& what) const {
        fail("ParseError", what + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char ch) {
        skip();
        if (pos < s.size() && s[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    bool starts_factor() {
        skip();
        return pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == 'z' || s[pos] == '(');
    }
    Scalar term() {
        Scalar acc = unary();
        for (;;) {
            if (eat('*'))
                acc *= unary();
            else if (eat('/'))
                acc = acc / unary();
            else if (starts_factor())
                acc *= power();
            else
                return acc;
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Scalar power() {
        Scalar base = primary();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) error("exponent expected");
            long e = std::stol(s.substr(start, pos - start));
            base = base.pow(neg ? -e : e);
        }
        return base;
    }
    Scalar primary() {
        skip();
        if (pos >= s.size()) error("unexpected end");
        if (s[pos] == '(') {
            ++pos;
            Scalar v = expr();
            if (!eat(')')) error("')' expected");
            return v;
        }
        if (s[pos] == 'z') {
            ++pos;
            return Scalar::zeta(order, 1);
        }
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) error("number expected");
        return Scalar(mpq_class(mpz_class(s.substr(start, pos - start)))).lift(order);
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text, int order) {
    Parser p{text, 0, order};
    Scalar v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.error("trailing input");
    return v.lift(order);
}

namespace {

using cplx = std::complex<long double>;

bool reconstruct(long double x, mpq_class& out) {
    // Continued-fraction convergents with a denominator cap.
    const long double tol = 1e-11L * std::max<long double>(1.0L, std::fabs(x));
    long double r = x;
    long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    for (int it = 0; it < 64; ++it) {
        long double a = std::floor(r);
        if (std::fabs(a) > 1e15L) return false;
        long long ai = static_cast<long long>(a);
        long long h2 = ai * h0 + h1, k2 = ai * k0 + k1;
        h1 = h0;
        h0 = h2;
        k1 = k0;
        k0 = k2;
        if (k0 > 1000000000LL) return false;
        if (std::fabs(x - static_cast<long double>(h0) / static_cast<long double>(k0)) < tol) {
            out = mpq_class(mpz_class(std::to_string(h0)), mpz_class(std::to_string(k0)));
            out.canonicalize();
            return true;
        }
        long double frac = r - a;
        if (frac < 1e-18L) return false;
        r = 1.0L / frac;
    }
    return false;
}

// Solves V c = rhs for the complex Vandermonde-type matrix V.
std::vector<cplx> complex_solve(std::vector<std::vector<cplx>> a, std::vector<cplx> b) {
    size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t i = col + 1; i < n; ++i) {
            cplx t = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= t * a[col][j];
            b[i] -= t * b[col];
        }
    }
    std::vector<cplx> x(n);
    for (size_t i = n; i-- > 0;) {
        cplx acc = b[i];
        for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

Scalar positive_leading(const Scalar& r) {
    for (const auto& x : r.coeffs()) {
        if (x > 0) return r;
        if (x < 0) return -r;
    }
    return r;
}

}  // namespace

Scalar sqrt_in_field(const Scalar& a) {
    int n = a.order();
    if (a.is_zero()) return a;
    if (n == 1) {
        const mpq_class& q = a.coeffs()[0];
        mpz_class num = q.get_num(), den = q.get_den();
        if (num < 0 || !mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            fail("NotRepresentable", a.str() + " is not a square in Q");
        return Scalar(mpq_class(sqrt(num), sqrt(den)));
    }
    const Cyclo& f = Cyclo::get(n);
    const long double two_pi = 2.0L * std::acos(-1.0L);
    std::vector<int> units;
    for (int k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) units.push_back(k);
    if (n == 2) units = {1};
    std::vector<std::vector<cplx>> vander(f.phi, std::vector<cplx>(f.phi));
    std::vector<cplx> roots(f.phi);
    for (int i = 0; i < f.phi; ++i) {
        cplx val = 0;
        for (int j = 0; j < f.phi; ++j) {
            cplx w = std::polar(1.0L, two_pi * units[i] * j / n);
            vander[i][j] = w;
            val += static_cast<long double>(a.coeffs()[j].get_d()) * w;
        }
        roots[i] = std::sqrt(val);
    }
    // Conjugate embeddings must carry conjugate roots; only the sign of one
    // member of each pair is free.
    std::vector<int> free_idx, partner(f.phi, -1);
    for (int i = 0; i < f.phi; ++i) {
        int conj = n - units[i];
        for (int j = 0; j < f.phi; ++j)
            if (units[j] == conj) partner[i] = j;
        if (partner[i] == -1 || partner[i] >= i) free_idx.push_back(i);
    }
    size_t combos = size_t(1) << free_idx.size();
    for (size_t mask = 0; mask < combos; ++mask) {
        std::vector<cplx> target(f.phi);
        for (size_t b = 0; b < free_idx.size(); ++b) {
            int i = free_idx[b];
            cplx v = (mask >> b & 1) ? -roots[i] : roots[i];
            target[i] = v;
            if (partner[i] >= 0 && partner[i] != i) target[partner[i]] = std::conj(v);
        }
        auto coef = complex_solve(vander, target);
        std::vector<mpq_class> q(f.phi);
        bool ok = true;
        for (int j = 0; j < f.phi && ok; ++j) {
            if (std::fabs(coef[j].imag()) > 1e-9L) ok = false;
            else ok = reconstruct(coef[j].real(), q[j]);
        }
        if (!ok) continue;
        Scalar r = Scalar::from_coeffs(n, q);
        if (r * r == a) return positive_leading(r);
    }
    fail("NotRepresentable", a.str() + " has no square root in Q(zeta_" + std::to_string(n) +
                                 "); declare a larger cyclotomic_order");
}

}  // namespace rb
