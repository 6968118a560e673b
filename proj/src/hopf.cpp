#include "rb/hopf.hpp"

#include "rb/error.hpp"

namespace rb {

HopfCategory::HopfCategory(std::string name, int order, HopfData data) : d_(std::move(data)) {
    backend_ = Backend::Hopf;
    order_ = order;
    name_ = std::move(name);
    int n = d_.dim;
    S_ = Matrix(n, n, order_);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) S_(j, i) = d_.antipode[i][j].lift(order_);
    Sinv_ = S_.inverse();
    ribbon_ = d_.ribbon;
    for (auto& x : ribbon_) x = x.lift(order_);
    ribbon_inv_ = inv(ribbon_);
    u_ = Elem(n, Scalar::zero(order_));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const Scalar& r = d_.R[j][k];
            if (r.is_zero()) continue;
            Elem t = mul(antipode(basis_elem(k)), basis_elem(j));
            for (int l = 0; l < n; ++l) u_[l] += r * t[l];
        }
    g_ = mul(u_, ribbon_inv_);
}

std::shared_ptr<const HopfCategory> HopfCategory::with_module(HopfData::Module m) const {
    HopfData d = d_;
    d.modules.push_back(std::move(m));
    return std::make_shared<HopfCategory>(name_, order_, std::move(d));
}

HopfCategory::Elem HopfCategory::basis_elem(int i) const {
    Elem e(d_.dim, Scalar::zero(order_));
    e[i] = Scalar::one(order_);
    return e;
}

HopfCategory::Elem HopfCategory::unit() const {
    Elem e = d_.unit;
    for (auto& x : e) x = x.lift(order_);
    return e;
}

HopfCategory::Elem HopfCategory::mul(const Elem& x, const Elem& y) const {
    Elem out(d_.dim, Scalar::zero(order_));
    for (int i = 0; i < d_.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < d_.dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, m] : d_.mult[i][j]) out[k] += c * m;
        }
    }
    return out;
}

HopfCategory::Elem HopfCategory::antipode(const Elem& x) const {
    Elem out(d_.dim, Scalar::zero(order_));
    for (int i = 0; i < d_.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < d_.dim; ++j)
            if (!S_(j, i).is_zero()) out[j] += x[i] * S_(j, i);
    }
    return out;
}

HopfCategory::Elem HopfCategory::antipode_inv(const Elem& x) const {
    Elem out(d_.dim, Scalar::zero(order_));
    for (int i = 0; i < d_.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < d_.dim; ++j)
            if (!Sinv_(j, i).is_zero()) out[j] += x[i] * Sinv_(j, i);
    }
    return out;
}

Scalar HopfCategory::counit(const Elem& x) const {
    Scalar s = Scalar::zero(order_);
    for (int i = 0; i < d_.dim; ++i)
        if (!x[i].is_zero()) s += x[i] * d_.counit[i];
    return s;
}

Tensor HopfCategory::comul(const Elem& x) const {
    Tensor t;
    for (int i = 0; i < d_.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [j, k, c] : d_.comult[i]) {
            Scalar& slot = t.try_emplace(long(j) * d_.dim + k, Scalar::zero(order_)).first->second;
            slot += x[i] * c;
        }
    }
    for (auto it = t.begin(); it != t.end();)
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
    return t;
}

HopfCategory::Elem HopfCategory::inv(const Elem& x) const {
    int n = d_.dim;
    Matrix L(n, n, order_);
    for (int j = 0; j < n; ++j) {
        Elem c = mul(x, basis_elem(j));
        for (int i = 0; i < n; ++i) L(i, j) = c[i];
    }
    Matrix rhs(n, 1, order_);
    Elem one = unit();
    for (int i = 0; i < n; ++i) rhs(i, 0) = one[i];
    auto sol = L.solve(rhs);
    if (!sol) fail("NotInvertible", "element of H is not invertible");
    Elem out(n);
    for (int i = 0; i < n; ++i) out[i] = (*sol)(i, 0);
    if (mul(out, x) != one) fail("NotInvertible", "element of H has no two-sided inverse");
    return out;
}

Tensor HopfCategory::tmul(const Tensor& x, const Tensor& y, int n) const {
    const long d = d_.dim;
    Tensor out;
    std::vector<int> xi(n), yi(n);
    for (const auto& [I, a] : x) {
        long t = I;
        for (int k = n - 1; k >= 0; --k, t /= d) xi[k] = static_cast<int>(t % d);
        for (const auto& [J, b] : y) {
            long u = J;
            for (int k = n - 1; k >= 0; --k, u /= d) yi[k] = static_cast<int>(u % d);
            // expand the factor-wise products
            std::vector<std::pair<long, Scalar>> acc{{0, a * b}};
            for (int k = 0; k < n; ++k) {
                std::vector<std::pair<long, Scalar>> next;
                for (const auto& [idx, c] : acc)
                    for (const auto& [m, cm] : d_.mult[xi[k]][yi[k]]) next.emplace_back(idx * d + m, c * cm);
                acc = std::move(next);
            }
            for (const auto& [idx, c] : acc) {
                Scalar& slot = out.try_emplace(idx, Scalar::zero(order_)).first->second;
                slot += c;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

size_t HopfCategory::word_dim(const Word& w, int sector) const {
    if (sector != 0) return 0;
    size_t n = 1;
    for (const auto& a : w) n *= d_.modules.at(a.label).dim;
    return n;
}

const std::vector<Matrix>& HopfCategory::atom_action(const Atom& a) const {
    std::string k = "atom" + std::to_string(a.label) + "." + std::to_string(a.duals);
    {
        std::shared_lock lk(act_mu_);
        auto it = act_cache_.find(k);
        if (it != act_cache_.end()) return it->second;
    }
    std::vector<Matrix> acts;
    if (a.duals == 0) {
        acts = d_.modules.at(a.label).action;
        for (auto& m : acts) m = m.scaled(Scalar::one(order_));
    } else {
        // rho_{X^v}(h) = rho_X(S h)^T
        const auto& prev = atom_action(Atom{a.label, a.duals - 1});
        for (int i = 0; i < d_.dim; ++i) {
            Matrix m(prev[0].rows(), prev[0].cols(), order_);
            for (int j = 0; j < d_.dim; ++j)
                if (!S_(j, i).is_zero()) m = m + prev[j].scaled(S_(j, i));
            acts.push_back(m.transpose());
        }
    }
    std::unique_lock lk(act_mu_);
    return act_cache_.emplace(k, std::move(acts)).first->second;
}

const std::vector<Matrix>& HopfCategory::word_action(const Word& w) const {
    std::string k = key(w);
    {
        std::shared_lock lk(act_mu_);
        auto it = act_cache_.find(k);
        if (it != act_cache_.end()) return it->second;
    }
    std::vector<Matrix> acts;
    if (w.empty()) {
        for (int i = 0; i < d_.dim; ++i) {
            Matrix m(1, 1, order_);
            m(0, 0) = d_.counit[i].lift(order_);
            acts.push_back(m);
        }
    } else if (w.size() == 1) {
        acts = atom_action(w[0]);
    } else {
        Word pre(w.begin(), w.end() - 1);
        const auto& left = word_action(pre);
        const auto& right = atom_action(w.back());
        for (int i = 0; i < d_.dim; ++i) {
            Matrix m(left[0].rows() * right[0].rows(), left[0].cols() * right[0].cols(), order_);
            for (const auto& [j, kk, c] : d_.comult[i]) m = m + left[j].kron(right[kk]).scaled(c);
            acts.push_back(std::move(m));
        }
    }
    std::unique_lock lk(act_mu_);
    return act_cache_.emplace(k, std::move(acts)).first->second;
}

Matrix HopfCategory::word_action(const Word& w, const Elem& h) const {
    const auto& acts = word_action(w);
    size_t n = word_dim(w, 0);
    Matrix m(n, n, order_);
    for (int i = 0; i < d_.dim; ++i)
        if (!h[i].is_zero()) m = m + acts[i].scaled(h[i]);
    return m;
}

Matrix HopfCategory::action(const Object& x, const Elem& h) const {
    size_t n = dim(x, 0);
    Matrix m(n, n, order_);
    size_t off = 0;
    for (const auto& w : x.terms) {
        Matrix b = word_action(w, h);
        m.set_block(off, off, b);
        off += b.rows();
    }
    return m;
}

namespace {

// Position of kron index (global x, global y) in the term-ordered fiber of X (x) Y.
std::vector<size_t> kron_to_terms(const std::vector<size_t>& xd, const std::vector<size_t>& yd) {
    size_t nx = 0, ny = 0;
    for (size_t d : xd) nx += d;
    for (size_t d : yd) ny += d;
    std::vector<size_t> perm(nx * ny);
    size_t off = 0;
    size_t xo = 0;
    for (size_t p = 0; p < xd.size(); ++p) {
        size_t yo = 0;
        for (size_t q = 0; q < yd.size(); ++q) {
            for (size_t i = 0; i < xd[p]; ++i)
                for (size_t j = 0; j < yd[q]; ++j) perm[(xo + i) * ny + (yo + j)] = off + i * yd[q] + j;
            off += xd[p] * yd[q];
            yo += yd[q];
        }
        xo += xd[p];
    }
    return perm;
}

}  // namespace

Morphism HopfCategory::tensor(const Morphism& f, const Morphism& g) const {
    Object dom = rb::tensor(f.dom, g.dom), cod = rb::tensor(f.cod, g.cod);
    auto dims = [&](const Object& o) {
        std::vector<size_t> v;
        for (const auto& w : o.terms) v.push_back(word_dim(w, 0));
        return v;
    };
    Morphism out = zero(dom, cod);
    if (out.blocks.empty()) return out;
    const Matrix& F = f.block(0);
    const Matrix& G = g.block(0);
    auto pr = kron_to_terms(dims(f.cod), dims(g.cod));
    auto pc = kron_to_terms(dims(f.dom), dims(g.dom));
    Matrix& B = out.blocks.at(0);
    for (size_t i = 0; i < F.rows(); ++i)
        for (size_t j = 0; j < F.cols(); ++j) {
            const Scalar& a = F(i, j);
            if (a.is_zero()) continue;
            for (size_t k = 0; k < G.rows(); ++k)
                for (size_t l = 0; l < G.cols(); ++l) {
                    const Scalar& b = G(k, l);
                    if (!b.is_zero()) B(pr[i * G.rows() + k], pc[j * G.cols() + l]) = a * b;
                }
        }
    return out;
}

Morphism HopfCategory::braiding(const Object& X, const Object& Y) const {
    return cached("c" + key(X) + "|" + key(Y), [&] {
        Morphism out = zero(rb::tensor(X, Y), rb::tensor(Y, X));
        if (out.blocks.empty()) return out;
        Matrix& B = out.blocks.at(0);
        // offsets in X (x) Y (terms (p,q)) and Y (x) X (terms (q,p))
        size_t np = X.terms.size(), nq = Y.terms.size();
        std::vector<std::vector<size_t>> dom_off(np, std::vector<size_t>(nq)), cod_off(nq, std::vector<size_t>(np));
        size_t o = 0;
        for (size_t p = 0; p < np; ++p)
            for (size_t q = 0; q < nq; ++q) {
                dom_off[p][q] = o;
                o += word_dim(X.terms[p], 0) * word_dim(Y.terms[q], 0);
            }
        o = 0;
        for (size_t q = 0; q < nq; ++q)
            for (size_t p = 0; p < np; ++p) {
                cod_off[q][p] = o;
                o += word_dim(Y.terms[q], 0) * word_dim(X.terms[p], 0);
            }
        for (size_t p = 0; p < np; ++p)
            for (size_t q = 0; q < nq; ++q) {
                const auto& ax = word_action(X.terms[p]);
                const auto& ay = word_action(Y.terms[q]);
                size_t nx = word_dim(X.terms[p], 0), ny = word_dim(Y.terms[q], 0);
                Matrix Rm(nx * ny, nx * ny, order_);
                for (int j = 0; j < d_.dim; ++j)
                    for (int k = 0; k < d_.dim; ++k) {
                        const Scalar& r = d_.R[j][k];
                        if (!r.is_zero()) Rm = Rm + ax[j].kron(ay[k]).scaled(r);
                    }
                // flip x (x) y -> y (x) x
                for (size_t a = 0; a < nx; ++a)
                    for (size_t b = 0; b < ny; ++b)
                        for (size_t c = 0; c < nx * ny; ++c)
                            if (!Rm(a * ny + b, c).is_zero()) B(cod_off[q][p] + b * nx + a, dom_off[p][q] + c) = Rm(a * ny + b, c);
            }
        return out;
    });
}

Morphism HopfCategory::twist(const Object& X) const {
    return cached("t" + key(X), [&] {
        Morphism out = zero(X, X);
        if (!out.blocks.empty()) out.blocks.at(0) = action(X, ribbon_inv_);
        return out;
    });
}

Morphism HopfCategory::atom_coev(const Atom& a) const {
    Object y = Object::atom(a.label, a.duals);
    Morphism b = zero(Object::unit(), rb::tensor(y, rb::dual(y)));
    size_t n = d_.modules.at(a.label).dim;
    for (size_t i = 0; i < n; ++i) b.blocks.at(0)(i * n + i, 0) = Scalar::one(order_);
    return b;
}

Morphism HopfCategory::atom_ev(const Atom& a) const {
    Object y = Object::atom(a.label, a.duals);
    Morphism d = zero(rb::tensor(rb::dual(y), y), Object::unit());
    size_t n = d_.modules.at(a.label).dim;
    for (size_t i = 0; i < n; ++i) d.blocks.at(0)(0, i * n + i) = Scalar::one(order_);
    return d;
}

Morphism HopfCategory::atom_pivot(const Atom& a) const {
    Object X = Object::atom(a.label, a.duals);
    Morphism m = zero(X, Object::atom(a.label, a.duals + 2));
    m.blocks.at(0) = word_action(Word{a}, g_);
    return m;
}

std::vector<Morphism> HopfCategory::hom_basis(const Object& A, const Object& B) const {
    size_t na = dim(A, 0), nb = dim(B, 0);
    std::vector<Morphism> basis;
    if (na == 0 || nb == 0) return basis;
    std::vector<Matrix> ra, rb_;
    for (int i = 0; i < d_.dim; ++i) {
        ra.push_back(action(A, basis_elem(i)));
        rb_.push_back(action(B, basis_elem(i)));
    }
    // rho_B(e_i) M - M rho_A(e_i) = 0, unknowns M(r, c) at r * na + c
    Matrix sys(d_.dim * nb * na, nb * na, order_);
    for (int i = 0; i < d_.dim; ++i)
        for (size_t r = 0; r < nb; ++r)
            for (size_t c = 0; c < na; ++c) {
                size_t row = (i * nb + r) * na + c;
                for (size_t rp = 0; rp < nb; ++rp)
                    if (!rb_[i](r, rp).is_zero()) sys(row, rp * na + c) += rb_[i](r, rp);
                for (size_t cp = 0; cp < na; ++cp)
                    if (!ra[i](cp, c).is_zero()) sys(row, r * na + cp) -= ra[i](cp, c);
            }
    Matrix ker = sys.nullspace();
    for (size_t k = 0; k < ker.cols(); ++k) {
        Morphism m = zero(A, B);
        for (size_t r = 0; r < nb; ++r)
            for (size_t c = 0; c < na; ++c) m.blocks.at(0)(r, c) = ker(r * na + c, k);
        basis.push_back(std::move(m));
    }
    return basis;
}

Report HopfCategory::check_hopf() const {
    Report rep;
    const int n = d_.dim;
    const long dd = n;
    auto e = [&](int i) { return basis_elem(i); };
    Elem one = unit();
    std::string bad;
    for (int i = 0; i < n && bad.empty(); ++i) {
        if (mul(one, e(i)) != e(i) || mul(e(i), one) != e(i)) bad = "unit at e" + std::to_string(i);
        for (int j = 0; j < n && bad.empty(); ++j) {
            Elem ij = mul(e(i), e(j));
            for (int k = 0; k < n && bad.empty(); ++k)
                if (mul(ij, e(k)) != mul(e(i), mul(e(j), e(k))))
                    bad = "associativity at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        }
    }
    rep.add("algebra", bad.empty(), bad);

    // coassociativity and counit
    bad.clear();
    auto comul_left = [&](const Tensor& t) {  // (Delta (x) id) on H (x) H
        Tensor out;
        for (const auto& [I, c] : t) {
            int a = static_cast<int>(I / dd), b = static_cast<int>(I % dd);
            for (const auto& [j, k, cc] : d_.comult[a]) {
                Scalar& s = out.try_emplace((long(j) * dd + k) * dd + b, Scalar::zero(order_)).first->second;
                s += c * cc;
            }
        }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    };
    auto comul_right = [&](const Tensor& t) {  // (id (x) Delta) on H (x) H
        Tensor out;
        for (const auto& [I, c] : t) {
            int a = static_cast<int>(I / dd), b = static_cast<int>(I % dd);
            for (const auto& [j, k, cc] : d_.comult[b]) {
                Scalar& s = out.try_emplace((long(a) * dd + j) * dd + k, Scalar::zero(order_)).first->second;
                s += c * cc;
            }
        }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    };
    for (int i = 0; i < n && bad.empty(); ++i) {
        Tensor D = comul(e(i));
        if (comul_left(D) != comul_right(D)) bad = "coassociativity at e" + std::to_string(i);
        Elem l(n, Scalar::zero(order_)), r(n, Scalar::zero(order_));
        for (const auto& [I, c] : D) {
            int a = static_cast<int>(I / dd), b = static_cast<int>(I % dd);
            l[b] += c * d_.counit[a];
            r[a] += c * d_.counit[b];
        }
        if (bad.empty() && (l != e(i) || r != e(i))) bad = "counit at e" + std::to_string(i);
    }
    rep.add("coalgebra", bad.empty(), bad);

    // Delta and epsilon are algebra maps
    bad.clear();
    {
        Tensor one2 = comul(one);
        Tensor expect;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!one[i].is_zero() && !one[j].is_zero()) expect[long(i) * dd + j] = one[i] * one[j];
        if (one2 != expect) bad = "Delta(1) != 1 (x) 1";
        if (bad.empty() && !counit(one).is_one()) bad = "epsilon(1) != 1";
    }
    for (int i = 0; i < n && bad.empty(); ++i)
        for (int j = 0; j < n && bad.empty(); ++j) {
            Elem ij = mul(e(i), e(j));
            if (comul(ij) != tmul(comul(e(i)), comul(e(j)), 2))
                bad = "Delta not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")";
            else if (counit(ij) != counit(e(i)) * counit(e(j)))
                bad = "epsilon not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    rep.add("bialgebra", bad.empty(), bad);

    // antipode
    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i) {
        Tensor D = comul(e(i));
        Elem l(n, Scalar::zero(order_)), r(n, Scalar::zero(order_));
        for (const auto& [I, c] : D) {
            int a = static_cast<int>(I / dd), b = static_cast<int>(I % dd);
            Elem x = mul(antipode(e(a)), e(b));
            Elem y = mul(e(a), antipode(e(b)));
            for (int k = 0; k < n; ++k) {
                l[k] += c * x[k];
                r[k] += c * y[k];
            }
        }
        Elem expect = one;
        for (auto& x : expect) x *= d_.counit[i];
        if (l != expect || r != expect) bad = "antipode axiom at e" + std::to_string(i);
    }
    rep.add("antipode", bad.empty(), bad);

    // quasitriangularity
    bad.clear();
    Tensor R;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (!d_.R[j][k].is_zero()) R[long(j) * dd + k] = d_.R[j][k].lift(order_);
    {
        // R^{-1} = (S (x) id)(R)
        Tensor Rinv;
        for (const auto& [I, c] : R) {
            Elem s = antipode(e(static_cast<int>(I / dd)));
            for (int a = 0; a < n; ++a)
                if (!s[a].is_zero()) {
                    Scalar& slot = Rinv.try_emplace(long(a) * dd + I % dd, Scalar::zero(order_)).first->second;
                    slot += c * s[a];
                }
        }
        for (auto it = Rinv.begin(); it != Rinv.end();) it = it->second.is_zero() ? Rinv.erase(it) : std::next(it);
        Tensor one2 = comul(one);
        if (tmul(R, Rinv, 2) != one2 || tmul(Rinv, R, 2) != one2) bad = "R is not invertible with inverse (S (x) id)R";
    }
    auto flip = [&](const Tensor& t) {
        Tensor out;
        for (const auto& [I, c] : t) out[(I % dd) * dd + I / dd] = c;
        return out;
    };
    for (int i = 0; i < n && bad.empty(); ++i) {
        Tensor D = comul(e(i));
        if (tmul(R, D, 2) != tmul(flip(D), R, 2)) bad = "R Delta != Delta^op R at e" + std::to_string(i);
    }
    if (bad.empty()) {
        // (Delta (x) id) R = R13 R23 and (id (x) Delta) R = R13 R12
        auto embed = [&](const Tensor& t, int p, int q) {
            Tensor out;
            for (int u = 0; u < n; ++u) {
                if (one[u].is_zero()) continue;
                for (const auto& [I, c] : t) {
                    long idx[3] = {u, u, u};
                    idx[p] = I / dd;
                    idx[q] = I % dd;
                    Scalar& slot = out.try_emplace((idx[0] * dd + idx[1]) * dd + idx[2], Scalar::zero(order_)).first->second;
                    slot += c * one[u];
                }
            }
            return out;
        };
        Tensor R13 = embed(R, 0, 2), R23 = embed(R, 1, 2), R12 = embed(R, 0, 1);
        if (comul_left(R) != tmul(R13, R23, 3)) bad = "(Delta (x) id)R != R13 R23";
        else if (comul_right(R) != tmul(R13, R12, 3)) bad = "(id (x) Delta)R != R13 R12";
    }
    rep.add("quasitriangular", bad.empty(), bad);

    // ribbon element
    bad.clear();
    const Elem& v = ribbon_;
    for (int i = 0; i < n && bad.empty(); ++i)
        if (mul(v, e(i)) != mul(e(i), v)) bad = "ribbon element not central";
    if (bad.empty() && antipode(v) != v) bad = "S(v) != v";
    if (bad.empty() && !counit(v).is_one()) bad = "epsilon(v) != 1";
    if (bad.empty() && mul(v, v) != mul(u_, antipode(u_))) bad = "v^2 != u S(u)";
    if (bad.empty()) {
        // (R21 R) Delta(v) = v (x) v
        Tensor vv;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!v[i].is_zero() && !v[j].is_zero()) vv[long(i) * dd + j] = v[i] * v[j];
        if (tmul(tmul(flip(R), R, 2), comul(v), 2) != vv) bad = "Delta(v) != (R21 R)^{-1} (v (x) v)";
    }
    rep.add("ribbon element", bad.empty(), bad);

    // modules
    bad.clear();
    for (const auto& m : d_.modules) {
        for (int i = 0; i < n && bad.empty(); ++i)
            for (int j = 0; j < n && bad.empty(); ++j) {
                Matrix lhs = m.action[i] * m.action[j];
                Matrix rhs(m.dim, m.dim, order_);
                for (const auto& [k, c] : d_.mult[i][j]) rhs = rhs + m.action[k].scaled(c);
                if (lhs != rhs) bad = "module " + m.name + " fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        if (bad.empty()) {
            Matrix u(m.dim, m.dim, order_);
            for (int i = 0; i < n; ++i)
                if (!one[i].is_zero()) u = u + m.action[i].scaled(one[i]);
            if (!u.is_identity()) bad = "module " + m.name + ": unit does not act as identity";
        }
        if (!bad.empty()) break;
    }
    rep.add("modules", bad.empty(), bad);
    return rep;
}

Report HopfCategory::check_axioms() const {
    Report rep = check_hopf();
    if (!rep.ok()) return rep;
    std::vector<Object> gens;
    for (int i = 0; i < num_labels(); ++i) gens.push_back(atom(i));
    rep.merge(check_ribbon_structure(gens));
    return rep;
}

}  // namespace rb
