#include "rb/coend.hpp"

#include <functional>

#include "rb/error.hpp"
#include "rb/hopf.hpp"
#include "rb/skeletal.hpp"

namespace rb {

namespace {

const HopfCategory& hopf(const Category& c) { return dynamic_cast<const HopfCategory&>(c); }

Object simple(const Category& c, int a) { return c.atom(a); }

// i_X for a single-word Hopf object: (x (x) xi) -> [e_k -> xi(e_k x)].
Morphism hopf_i_word(const HopfCategory& H, const Object& K, const Object& X) {
    Object Xd = rb::dual(X);
    size_t n = H.dim(X, 0);
    Morphism out = H.zero(rb::tensor(X, Xd), K);
    if (n == 0) return out;
    Morphism evX = H.ev(X);
    const Matrix& ev = evX.block(0);  // X^v (x) X -> 1, index s * n + r
    Matrix& m = out.blocks.at(0);
    for (int k = 0; k < H.dim_H(); ++k) {
        Matrix rho = H.action(X, H.basis_elem(k));
        for (size_t r = 0; r < n; ++r)
            for (size_t s = 0; s < n; ++s) {
                Scalar acc = Scalar::zero(H.order());
                for (size_t rp = 0; rp < n; ++rp)
                    if (!rho(rp, r).is_zero()) acc += ev(0, s * n + rp) * rho(rp, r);
                m(k, r * n + s) = acc;
            }
    }
    return out;
}

// Skeletal i_X: decompose X into simples with dual bases of Hom(c, X) and Hom(X, c).
Morphism skeletal_i(const Category& C, const Object& K, const Object& X) {
    Object Xd = rb::dual(X);
    Morphism out = C.zero(rb::tensor(X, Xd), K);
    for (int c = 0; c < C.num_labels(); ++c) {
        Object Xc = simple(C, c);
        auto inc = C.hom_basis(Xc, X);
        if (inc.empty()) continue;
        auto prj = C.hom_basis(X, Xc);
        size_t n = inc.size();
        int sec = c;
        Matrix G(n, n, C.order());
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) G(a, b) = C.compose(prj[a], inc[b]).block(sec)(0, 0);
        Matrix Gi = G.inverse();
        for (size_t a = 0; a < n; ++a) {
            Morphism pi = C.zero(X, Xc);
            for (size_t b = 0; b < n; ++b)
                if (!Gi(a, b).is_zero()) pi = C.add(pi, C.scale(prj[b], Gi(a, b)));
            out = C.add(out, C.compose(C.inclusion(K, c), C.tensor(pi, C.dual(inc[a]))));
        }
    }
    return out;
}

Morphism sum_over_terms(const Category& C, const Object& K, const Object& X,
                        const std::function<Morphism(const Object&)>& word_i) {
    if (X.terms.size() == 1) return word_i(X);
    Object Xd = rb::dual(X);
    Morphism out = C.zero(rb::tensor(X, Xd), K);
    for (size_t t = 0; t < X.terms.size(); ++t) {
        Object w({X.terms[t]});
        Morphism piece = C.tensor(C.projection(X, t), C.dual(C.inclusion(X, t)));
        out = C.add(out, C.compose(word_i(w), piece));
    }
    return out;
}

// ---- Hopf structure maps on K = H*, basis f^j dual to e_j ----

using Elem = HopfCategory::Elem;

Elem prod(const HopfCategory& H, const Elem& a, const Elem& b) { return H.mul(a, b); }

// Coadjoint action: (h . f)(a) = sum f(S(h_2) a h_1).
std::vector<Matrix> coadjoint(const HopfCategory& H) {
    int d = H.dim_H();
    std::vector<Matrix> acts;
    for (int i = 0; i < d; ++i) {
        Matrix m(d, d, H.order());
        Tensor dh = H.comul(H.basis_elem(i));
        for (const auto& [idx, c] : dh) {
            int h1 = static_cast<int>(idx / d), h2 = static_cast<int>(idx % d);
            Elem sh2 = H.antipode(H.basis_elem(h2));
            for (int k = 0; k < d; ++k) {
                Elem v = prod(H, prod(H, sh2, H.basis_elem(k)), H.basis_elem(h1));
                for (int j = 0; j < d; ++j)
                    if (!v[j].is_zero()) m(k, j) += c * v[j];
            }
        }
        acts.push_back(std::move(m));
    }
    return acts;
}

struct HopfK {
    Morphism eps, m, Q, T, apo_inv;
};

HopfK hopf_structure(const HopfCategory& H, const Object& K, const std::vector<Matrix>& rhoK) {
    int d = H.dim_H();
    int ord = H.order();
    Object KK = rb::tensor(K, K);
    HopfK out;
    const auto& R = H.data().R;
    auto basis = [&](int i) { return H.basis_elem(i); };

    out.eps = H.zero(K, Object::unit());
    for (int j = 0; j < d; ++j) out.eps.blocks.at(0)(0, j) = H.pivotal()[j];

    out.T = H.zero(K, K);
    for (int k = 0; k < d; ++k) {
        Elem v = prod(H, basis(k), H.ribbon_inv());
        for (int j = 0; j < d; ++j) out.T.blocks.at(0)(k, j) = v[j];
    }

    // Q = R21 R = sum q1 (x) q2; Q_K(f (x) f') = f(S(q1) -) (x) f'(- q2)
    Tensor Rt;
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            if (!R[p][q].is_zero()) Rt[long(p) * d + q] = R[p][q].lift(ord);
    Tensor R21;
    for (const auto& [idx, c] : Rt) R21[(idx % d) * d + idx / d] = c;
    Tensor Qt = H.tmul(R21, Rt, 2);
    out.Q = H.zero(KK, KK);
    Matrix& Qm = out.Q.blocks.at(0);
    std::vector<Matrix> A(d), B(d);  // A[a](k, i) = [S(e_a) e_k]_i, B[b](l, j) = [e_l e_b]_j
    std::vector<bool> haveA(d), haveB(d);
    auto getA = [&](int a) -> const Matrix& {
        if (!haveA[a]) {
            A[a] = Matrix(d, d, ord);
            Elem sa = H.antipode(basis(a));
            for (int k = 0; k < d; ++k) {
                Elem v = prod(H, sa, basis(k));
                for (int i = 0; i < d; ++i) A[a](k, i) = v[i];
            }
            haveA[a] = true;
        }
        return A[a];
    };
    auto getB = [&](int b) -> const Matrix& {
        if (!haveB[b]) {
            B[b] = Matrix(d, d, ord);
            for (int l = 0; l < d; ++l) {
                Elem v = prod(H, basis(l), basis(b));
                for (int j = 0; j < d; ++j) B[b](l, j) = v[j];
            }
            haveB[b] = true;
        }
        return B[b];
    };
    for (const auto& [idx, c] : Qt) {
        const Matrix& Aa = getA(static_cast<int>(idx / d));
        const Matrix& Bb = getB(static_cast<int>(idx % d));
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i) {
                if (Aa(k, i).is_zero()) continue;
                Scalar ca = c * Aa(k, i);
                for (int l = 0; l < d; ++l)
                    for (int j = 0; j < d; ++j)
                        if (!Bb(l, j).is_zero()) Qm(k * d + l, i * d + j) += ca * Bb(l, j);
            }
    }

    // m_K(f (x) f')(a) = sum_R f(S(R1) a_1) (R2 . f')(a_2)
    out.m = H.zero(KK, K);
    Matrix& mm = out.m.blocks.at(0);
    for (int k = 0; k < d; ++k) {
        Tensor dk = H.comul(basis(k));
        for (const auto& [idx2, c2] : dk) {
            int k1 = static_cast<int>(idx2 / d), k2 = static_cast<int>(idx2 % d);
            for (const auto& [idx, r] : Rt) {
                int p = static_cast<int>(idx / d), q = static_cast<int>(idx % d);
                const Matrix& Ap = getA(p);
                const Matrix& rho = rhoK[q];
                Scalar cr = c2 * r;
                for (int i = 0; i < d; ++i) {
                    if (Ap(k1, i).is_zero()) continue;
                    Scalar ci = cr * Ap(k1, i);
                    for (int j = 0; j < d; ++j)
                        if (!rho(k2, j).is_zero()) mm(k, i * d + j) += ci * rho(k2, j);
                }
            }
        }
    }

    // apo^{-1}(f)(a) = sum r_pq f(S^2(e_p) S(a) g v e_q), using R^{-1} = (S (x) id) R
    out.apo_inv = H.zero(K, K);
    Elem gv = prod(H, H.pivotal(), H.ribbon());
    for (int k = 0; k < d; ++k) {
        Elem sk = H.antipode(basis(k));
        Elem mid = prod(H, sk, gv);
        for (const auto& [idx, r] : Rt) {
            int p = static_cast<int>(idx / d), q = static_cast<int>(idx % d);
            Elem v = prod(H, prod(H, H.antipode(H.antipode(basis(p))), mid), basis(q));
            for (int j = 0; j < d; ++j)
                if (!v[j].is_zero()) out.apo_inv.blocks.at(0)(k, j) += r * v[j];
        }
    }
    return out;
}

// ---- skeletal structure maps on K = sum_a a (x) a^v ----

struct SkelK {
    Morphism eps, m, Q, T, apo_inv;
};

SkelK skeletal_structure(const Coend& co) {
    const Category& C = *co.cat;
    const Object& K = co.K;
    Object KK = rb::tensor(K, K);
    int n = C.num_labels();
    SkelK out;
    out.eps = C.zero(K, Object::unit());
    out.T = C.zero(K, K);
    out.apo_inv = C.zero(K, K);
    out.Q = C.zero(KK, KK);
    out.m = C.zero(KK, K);
    for (int a = 0; a < n; ++a) {
        Object X = simple(C, a), Xd = rb::dual(X);
        Morphism pa = C.projection(K, a), ia = C.inclusion(K, a);
        out.eps = C.add(out.eps, C.compose(C.ev_right(X), pa));
        out.T = C.add(out.T, C.chain(ia, C.tensor(C.twist(X), C.id(Xd)), pa));
        Morphism flip = C.compose(C.tensor(C.id(Xd), C.compose(C.pivot(X), C.twist_inv(X))), C.braiding_inv(Xd, X));
        out.apo_inv = C.add(out.apo_inv, C.chain(co.i(Xd), flip, pa));
        for (int b = 0; b < n; ++b) {
            Object Y = simple(C, b), Yd = rb::dual(Y);
            size_t t = static_cast<size_t>(a * n + b);
            Morphism pab = C.projection(KK, t), iab = C.inclusion(KK, t);
            Morphism mono = C.compose(C.braiding(Y, Xd), C.braiding(Xd, Y));
            out.Q = C.add(out.Q, C.chain(iab, C.tensor(C.id(X), mono, C.id(Yd)), pab));
            Object YYd = rb::tensor(Y, Yd);
            Morphism shuffle = C.tensor(C.id(X), C.braiding(Xd, YYd));
            out.m = C.add(out.m, C.chain(co.i(rb::tensor(X, Y)), shuffle, pab));
        }
    }
    return out;
}

bool positive_leading(const std::vector<Scalar>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) {
            for (const auto& q : x.coeffs()) {
                if (q > 0) return true;
                if (q < 0) return false;
            }
        }
    return true;
}

}  // namespace

Morphism Coend::i(const Object& X) const {
    const Category& C = *cat;
    if (C.backend() == Backend::Hopf) {
        const HopfCategory& H = hopf(C);
        return sum_over_terms(C, K, X, [&](const Object& w) { return hopf_i_word(H, K, w); });
    }
    return skeletal_i(C, K, X);
}

Morphism Coend::S_from(const Morphism& integral) const {
    const Category& C = *cat;
    return C.chain(C.tensor(eps, C.id(K)), Q, C.tensor(C.id(K), integral));
}

Matrix Coend::on_hom(const Morphism& f, const Object& U) const {
    const Category& C = *cat;
    auto basis = C.hom_basis(U, K);
    Matrix out(basis.size(), basis.size(), C.order());
    for (size_t j = 0; j < basis.size(); ++j) {
        auto c = C.coordinates(basis, C.compose(f, basis[j]));
        if (!c) fail("InternalError", "image of a morphism into K left Hom(U, K)");
        for (size_t i = 0; i < basis.size(); ++i) out(i, j) = (*c)[i];
    }
    return out;
}

std::shared_ptr<const Coend> build_coend(std::shared_ptr<const Category> c) {
    auto co = std::make_shared<Coend>();
    if (c->backend() == Backend::Hopf) {
        const HopfCategory& H0 = hopf(*c);
        for (int a = 0; a < H0.num_labels(); ++a)
            if (H0.label_name(a) == "K") fail("ParseError", "module name 'K' is reserved for the coend");
        HopfData::Module km;
        km.name = "K";
        km.dim = static_cast<size_t>(H0.dim_H());
        km.action = coadjoint(H0);
        for (int a = 0; a < H0.num_labels(); ++a) co->generators.push_back(H0.atom(a));
        auto ext = H0.with_module(km);
        co->cat = ext;
        co->K = ext->atom(ext->num_labels() - 1);
        HopfK s = hopf_structure(*ext, co->K, km.action);
        co->eps = s.eps;
        co->m = s.m;
        co->Q = s.Q;
        co->T = s.T;
        co->apo_inv = s.apo_inv;
    } else {
        co->cat = c;
        std::vector<Word> terms;
        for (int a = 0; a < c->num_labels(); ++a) {
            Object X = c->atom(a);
            co->generators.push_back(X);
            terms.push_back(rb::tensor(X, rb::dual(X)).terms.at(0));
        }
        co->K = Object(terms);
        SkelK s = skeletal_structure(*co);
        co->eps = s.eps;
        co->m = s.m;
        co->Q = s.Q;
        co->T = s.T;
        co->apo_inv = s.apo_inv;
    }
    const Category& C = *co->cat;
    const Object& K = co->K;
    co->apo = C.inverse(co->apo_inv);

    // Two-sided integral: m (Lambda (x) id) = Lambda eps = m (id (x) Lambda).
    auto basis = C.hom_basis(Object::unit(), K);
    size_t rows = 2 * C.flat_size(K, K);
    Matrix sys(rows, basis.size(), C.order());
    for (size_t j = 0; j < basis.size(); ++j) {
        Morphism le = C.compose(basis[j], co->eps);
        auto l = C.flatten(C.sub(C.compose(co->m, C.tensor(basis[j], C.id(K))), le));
        auto r = C.flatten(C.sub(C.compose(co->m, C.tensor(C.id(K), basis[j])), le));
        for (size_t i = 0; i < l.size(); ++i) sys(i, j) = l[i];
        for (size_t i = 0; i < r.size(); ++i) sys(l.size() + i, j) = r[i];
    }
    Matrix ns = sys.nullspace();
    if (ns.cols() == 0) fail("NoIntegral", "the integral equations of K in " + c->name() + " have no nonzero solution");
    Morphism lam = C.zero(Object::unit(), K);
    for (size_t j = 0; j < basis.size(); ++j)
        if (!ns(j, 0).is_zero()) lam = C.add(lam, C.scale(basis[j], ns(j, 0)));
    co->Lambda_raw = lam;

    // (lambda S_raw)^2 = apo^{-1} fixes lambda^2.
    Morphism S_raw = co->S_from(lam);
    Morphism S2 = C.compose(S_raw, S_raw);
    co->lambda = Scalar::one(C.order());
    co->Lambda = lam;
    co->modular = true;
    for (const auto& [s, b] : S_raw.blocks)
        if (b.rows() != b.cols() || b.rank() != b.rows()) co->modular = false;
    std::optional<Scalar> mu;
    bool proportional = true;
    for (const auto& [s, b] : S2.blocks) {
        const Matrix& t = co->apo_inv.block(s);
        for (size_t i = 0; i < b.rows() && proportional; ++i)
            for (size_t j = 0; j < b.cols(); ++j) {
                if (t(i, j).is_zero()) {
                    if (!b(i, j).is_zero()) proportional = false;
                    continue;
                }
                Scalar q = b(i, j) / t(i, j);
                if (!mu) mu = q;
                else if (*mu != q) {
                    proportional = false;
                    break;
                }
            }
    }
    if (!proportional || !mu || mu->is_zero()) {
        co->normalization_note = "(S_K)^2 is not a nonzero multiple of apo_K^{-1} for any integral normalization";
    } else {
        Scalar l2 = mu->inv();
        try {
            co->lambda = sqrt_in_field(l2);
        } catch (const Error&) {
            fail("NormalizationNotRepresentable",
                 "the integral normalization needs sqrt(" + l2.str() + "), which is not in Q(zeta_" +
                     std::to_string(C.order()) + "); declare a larger cyclotomic_order");
        }
        Morphism L = C.scale(lam, co->lambda);
        auto coords = C.coordinates(basis, L);
        if (coords && !positive_leading(*coords)) {
            co->lambda = -co->lambda;
            L = C.scale(lam, co->lambda);
        }
        co->Lambda = L;
        co->normalized = true;
    }
    co->S = co->S_from(co->Lambda);
    co->zeta = C.chain(co->eps, co->T, co->Lambda).block(0)(0, 0);
    return co;
}

Report check_coend(const Coend& co) {
    const Category& C = *co.cat;
    const Object& K = co.K;
    Report r;

    // dinaturality on generator morphisms
    {
        std::vector<Object> objs = co.generators;
        if (C.backend() == Backend::Skeletal)
            for (const auto& x : co.generators)
                for (const auto& y : co.generators) objs.push_back(rb::tensor(x, y));
        std::string bad;
        size_t count = 0;
        for (size_t p = 0; p < objs.size() && bad.empty(); ++p)
            for (size_t q = 0; q < objs.size() && bad.empty(); ++q) {
                const Object &X = objs[p], &Y = objs[q];
                for (const auto& g : C.hom_basis(X, Y)) {
                    ++count;
                    Morphism lhs = C.compose(co.i(Y), C.tensor(g, C.id(rb::dual(Y))));
                    Morphism rhs = C.compose(co.i(X), C.tensor(C.id(X), C.dual(g)));
                    if (lhs != rhs) {
                        bad = C.str(X) + " -> " + C.str(Y);
                        break;
                    }
                }
            }
        r.add("dinaturality", bad.empty(), bad.empty() ? std::to_string(count) + " generator morphisms" : "fails on a map " + bad);
    }

    std::string bad_eps, bad_T, bad_apo, bad_Q, bad_m;
    for (const auto& X : co.generators) {
        Object Xd = rb::dual(X);
        Morphism iX = co.i(X);
        if (bad_eps.empty() && C.compose(co.eps, iX) != C.ev_right(X)) bad_eps = C.str(X);
        if (bad_T.empty() && C.compose(co.T, iX) != C.compose(iX, C.tensor(C.twist(X), C.id(Xd)))) bad_T = C.str(X);
        Morphism flip = C.compose(C.tensor(C.id(Xd), C.compose(C.pivot(X), C.twist_inv(X))), C.braiding_inv(Xd, X));
        if (bad_apo.empty() && C.compose(co.apo_inv, iX) != C.compose(co.i(Xd), flip)) bad_apo = C.str(X);
        for (const auto& Y : co.generators) {
            Object Yd = rb::dual(Y);
            Morphism iY = co.i(Y);
            Morphism ii = C.tensor(iX, iY);
            Morphism mono = C.compose(C.braiding(Y, Xd), C.braiding(Xd, Y));
            if (bad_Q.empty() && C.compose(co.Q, ii) != C.compose(ii, C.tensor(C.id(X), mono, C.id(Yd))))
                bad_Q = C.str(X) + ", " + C.str(Y);
            Morphism shuffle = C.tensor(C.id(X), C.braiding(Xd, rb::tensor(Y, Yd)));
            if (bad_m.empty() && C.compose(co.m, ii) != C.compose(co.i(rb::tensor(X, Y)), shuffle))
                bad_m = C.str(X) + ", " + C.str(Y);
        }
    }
    auto item = [&](const std::string& name, const std::string& bad) {
        r.add(name, bad.empty(), bad.empty() ? "" : "fails on " + bad);
    };
    item("counit is the right evaluation", bad_eps);
    item("T_K is dinatural twist", bad_T);
    item("apo_K^{-1} is the pivot-twisted flip", bad_apo);
    item("Q_K is the monodromy", bad_Q);
    item("product of K", bad_m);

    Morphism idK = C.id(K);
    Morphism le = C.compose(co.Lambda, co.eps);
    bool left = C.compose(co.m, C.tensor(co.Lambda, idK)) == le;
    bool right = C.compose(co.m, C.tensor(idK, co.Lambda)) == le;
    r.add("two-sided integral", left && right, left ? (right ? "" : "not a right integral") : "not a left integral");

    r.add("normalization", co.normalized, co.normalized ? "lambda = " + co.lambda.str() : co.normalization_note);
    Morphism S2 = C.compose(co.S, co.S);
    r.add("(S_K)^2 = apo_K^{-1}", S2 == co.apo_inv);
    Morphism ST = C.compose(co.S, co.T);
    Morphism lhs = C.chain(ST, ST, ST);
    r.add("(S_K T_K)^3 = zeta (S_K)^2", lhs == C.scale(S2, co.zeta), "zeta = " + co.zeta.str());
    std::string ranks;
    for (const auto& [s, b] : co.S.blocks) {
        if (!ranks.empty()) ranks += ", ";
        ranks += std::to_string(b.rank()) + "/" + std::to_string(b.rows());
    }
    r.add("modular (operational modularity criterion: S_K invertible)", co.modular, "rank " + ranks);
    return r;
}

}  // namespace rb
