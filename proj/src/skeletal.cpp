#include "rb/skeletal.hpp"

#include <algorithm>
#include <sstream>

#include "rb/error.hpp"

namespace rb {

namespace {

std::string tuple_str(std::initializer_list<int> xs, const std::vector<std::string>& names) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += names[x];
        first = false;
    }
    return s + ")";
}

}  // namespace

SkeletalCategory::SkeletalCategory(std::string name, int order, SkeletalData data) : d_(std::move(data)) {
    backend_ = Backend::Skeletal;
    order_ = order;
    name_ = std::move(name);
    n_ = static_cast<int>(d_.simples.size());
    for (auto& row : d_.fusion)
        for (auto& cs : row) std::sort(cs.begin(), cs.end());
}

std::vector<int> SkeletalCategory::sectors() const {
    std::vector<int> s(n_);
    for (int i = 0; i < n_; ++i) s[i] = i;
    return s;
}

bool SkeletalCategory::fuses(int a, int b, int c) const {
    const auto& cs = d_.fusion[a][b];
    return std::binary_search(cs.begin(), cs.end(), c);
}

Scalar SkeletalCategory::F(int a, int b, int c, int d, int e, int f) const {
    bool adm = fuses(a, b, e) && fuses(e, c, d) && fuses(b, c, f) && fuses(a, f, d);
    if (!adm) return Scalar::zero(order_);
    auto it = d_.F.find({a, b, c, d, e, f});
    if (it != d_.F.end()) return it->second.lift(order_);
    if (a == 0 || b == 0 || c == 0) return Scalar::one(order_);
    fail("MissingData", "F-symbol " + tuple_str({a, b, c, d, e, f}, d_.simples) + " not given");
}

Scalar SkeletalCategory::R(int a, int b, int c) const {
    if (!fuses(a, b, c)) return Scalar::zero(order_);
    auto it = d_.R.find({a, b, c});
    if (it != d_.R.end()) return it->second.lift(order_);
    if (a == 0 || b == 0) return Scalar::one(order_);
    fail("MissingData", "R-symbol " + tuple_str({a, b, c}, d_.simples) + " not given");
}

const SkeletalCategory::FInv& SkeletalCategory::finv(int a, int b, int c, int d) const {
    std::lock_guard lk(finv_mu_);
    std::array<int, 4> key{a, b, c, d};
    auto it = finv_cache_.find(key);
    if (it != finv_cache_.end()) return it->second;
    FInv fi;
    for (int e = 0; e < n_; ++e)
        if (fuses(a, b, e) && fuses(e, c, d)) fi.es.push_back(e);
    for (int f = 0; f < n_; ++f)
        if (fuses(b, c, f) && fuses(a, f, d)) fi.fs.push_back(f);
    Matrix m(fi.es.size(), fi.fs.size(), order_);
    for (size_t i = 0; i < fi.es.size(); ++i)
        for (size_t j = 0; j < fi.fs.size(); ++j) m(i, j) = F(a, b, c, d, fi.es[i], fi.fs[j]);
    fi.inv = m.inverse();
    return finv_cache_.emplace(key, std::move(fi)).first->second;
}

const SkeletalCategory::TreeTable& SkeletalCategory::tree_table(const Word& w) const {
    std::string k = key(w);
    {
        std::shared_lock lk(tree_mu_);
        auto it = tree_cache_.find(k);
        if (it != tree_cache_.end()) return it->second;
    }
    std::vector<Tree> cur{Tree{}};
    for (const auto& a : w) {
        int s = sector_of(a);
        std::vector<Tree> next;
        for (const auto& t : cur) {
            int top = t.empty() ? 0 : t.back();
            for (int c : d_.fusion[top][s]) {
                Tree u = t;
                u.push_back(c);
                next.push_back(std::move(u));
            }
        }
        cur = std::move(next);
    }
    TreeTable tab;
    for (auto& t : cur) tab.by_sector[t.empty() ? 0 : t.back()].push_back(t);
    for (auto& [s, ts] : tab.by_sector) {
        std::sort(ts.begin(), ts.end());
        for (size_t i = 0; i < ts.size(); ++i) tab.index[s][ts[i]] = i;
    }
    std::unique_lock lk(tree_mu_);
    return tree_cache_.emplace(k, std::move(tab)).first->second;
}

const std::vector<SkeletalCategory::Tree>& SkeletalCategory::trees(const Word& w, int sector) const {
    static const std::vector<Tree> none;
    const auto& tab = tree_table(w);
    auto it = tab.by_sector.find(sector);
    return it == tab.by_sector.end() ? none : it->second;
}

size_t SkeletalCategory::word_dim(const Word& w, int sector) const { return trees(w, sector).size(); }

Matrix SkeletalCategory::word_recoupling(const Word& A, const Word& C, int c) const {
    std::string k = key(A) + "|" + key(C) + "|" + std::to_string(c);
    {
        std::shared_lock lk(rec_mu_);
        auto it = word_rec_cache_.find(k);
        if (it != word_rec_cache_.end()) return it->second;
    }
    Word AC = A;
    AC.insert(AC.end(), C.begin(), C.end());
    const auto& rows = trees(AC, c);
    const auto& row_index = tree_table(AC).index;
    // split column offsets
    std::map<std::pair<int, int>, size_t> off;
    size_t ncols = 0;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (fuses(a, b, c)) {
                off[{a, b}] = ncols;
                ncols += word_dim(A, a) * word_dim(C, b);
            }
    Matrix L(rows.size(), ncols, order_);
    if (C.empty()) {
        L = Matrix::identity(rows.size(), order_);
    } else if (A.empty()) {
        L = Matrix::identity(rows.size(), order_);
    } else {
        Word Cp(C.begin(), C.end() - 1);
        int y = sector_of(C.back());
        for (const auto& [ab, o] : off) {
            auto [a, b] = ab;
            const auto& alphas = trees(A, a);
            const auto& betas = trees(C, b);
            for (size_t ia = 0; ia < alphas.size(); ++ia)
                for (size_t ib = 0; ib < betas.size(); ++ib) {
                    size_t col = o + ia * betas.size() + ib;
                    const Tree& beta = betas[ib];
                    if (beta.size() == 1) {
                        Tree t = alphas[ia];
                        t.push_back(c);
                        L(row_index.at(c).at(t), col) = Scalar::one(order_);
                        continue;
                    }
                    int bp = beta[beta.size() - 2];
                    Tree betap(beta.begin(), beta.end() - 1);
                    const FInv& fi = finv(a, bp, y, c);
                    size_t zi = std::find(fi.fs.begin(), fi.fs.end(), b) - fi.fs.begin();
                    size_t bp_idx = tree_table(Cp).index.at(bp).at(betap);
                    for (size_t xi = 0; xi < fi.es.size(); ++xi) {
                        const Scalar& g = fi.inv(zi, xi);
                        if (g.is_zero()) continue;
                        int x = fi.es[xi];
                        Matrix sub = word_recoupling(A, Cp, x);
                        // column of (a, bp, alpha, betap) in the split basis of A (x) Cp over x
                        size_t so = 0;
                        for (int a2 = 0; a2 < n_; ++a2)
                            for (int b2 = 0; b2 < n_; ++b2)
                                if (fuses(a2, b2, x) && (a2 < a || (a2 == a && b2 < bp)))
                                    so += word_dim(A, a2) * word_dim(Cp, b2);
                        size_t scol = so + ia * word_dim(Cp, bp) + bp_idx;
                        Word ACp = A;
                        ACp.insert(ACp.end(), Cp.begin(), Cp.end());
                        const auto& sub_rows = trees(ACp, x);
                        for (size_t r = 0; r < sub_rows.size(); ++r) {
                            const Scalar& v = sub(r, scol);
                            if (v.is_zero()) continue;
                            Tree t = sub_rows[r];
                            t.push_back(c);
                            L(row_index.at(c).at(t), col) += g * v;
                        }
                    }
                }
        }
    }
    std::unique_lock lk(rec_mu_);
    return word_rec_cache_.emplace(k, std::move(L)).first->second;
}

std::shared_ptr<const SkeletalCategory::Recoupling> SkeletalCategory::recoupling(const Object& X, const Object& Y,
                                                                                  int c) const {
    std::string k = key(X) + "|" + key(Y) + "|" + std::to_string(c);
    {
        std::shared_lock lk(rec_mu_);
        auto it = rec_cache_.find(k);
        if (it != rec_cache_.end()) return it->second;
    }
    Object XY = rb::tensor(X, Y);
    size_t n = dim(XY, c);
    Matrix L(n, n, order_);
    // row offsets of each term pair (p, q)
    std::vector<std::vector<size_t>> roff(X.terms.size(), std::vector<size_t>(Y.terms.size()));
    size_t acc = 0;
    for (size_t p = 0; p < X.terms.size(); ++p)
        for (size_t q = 0; q < Y.terms.size(); ++q) {
            roff[p][q] = acc;
            Word w = X.terms[p];
            w.insert(w.end(), Y.terms[q].begin(), Y.terms[q].end());
            acc += word_dim(w, c);
        }
    // locate global sector index i of V_a(X) as (term, local index)
    auto locate = [&](const Object& O, int a, size_t i) {
        for (size_t p = 0; p < O.terms.size(); ++p) {
            size_t d = word_dim(O.terms[p], a);
            if (i < d) return std::make_pair(p, i);
            i -= d;
        }
        fail("ShapeMismatch", "index out of range");
    };
    size_t col = 0;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!fuses(a, b, c)) continue;
            size_t da = dim(X, a), db = dim(Y, b);
            for (size_t i = 0; i < da; ++i)
                for (size_t j = 0; j < db; ++j, ++col) {
                    auto [p, al] = locate(X, a, i);
                    auto [q, be] = locate(Y, b, j);
                    const Word& A = X.terms[p];
                    const Word& C = Y.terms[q];
                    Matrix W = word_recoupling(A, C, c);
                    size_t so = 0;
                    for (int a2 = 0; a2 < n_; ++a2)
                        for (int b2 = 0; b2 < n_; ++b2)
                            if (fuses(a2, b2, c) && (a2 < a || (a2 == a && b2 < b)))
                                so += word_dim(A, a2) * word_dim(C, b2);
                    size_t wcol = so + al * word_dim(C, b) + be;
                    for (size_t r = 0; r < W.rows(); ++r)
                        if (!W(r, wcol).is_zero()) L(roff[p][q] + r, col) = W(r, wcol);
                }
        }
    auto rec = std::make_shared<Recoupling>();
    rec->Linv = L.inverse();
    rec->L = std::move(L);
    std::unique_lock lk(rec_mu_);
    return rec_cache_.emplace(k, std::move(rec)).first->second;
}

Morphism SkeletalCategory::tensor(const Morphism& f, const Morphism& g) const {
    if (f.dom.is_unit() && f.cod.is_unit()) {
        const Matrix& s = f.block(0);
        return scale(g, s(0, 0));
    }
    if (g.dom.is_unit() && g.cod.is_unit()) {
        const Matrix& s = g.block(0);
        return scale(f, s(0, 0));
    }
    Object dom = rb::tensor(f.dom, g.dom), cod = rb::tensor(f.cod, g.cod);
    Morphism out = zero(dom, cod);
    for (auto& [c, blk] : out.blocks) {
        if (blk.rows() == 0 || blk.cols() == 0) continue;
        // block-diagonal map between the split bases
        Matrix S(blk.rows(), blk.cols(), order_);
        size_t ro = 0, co = 0;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                if (!fuses(a, b, c)) continue;
                size_t ra = dim(f.cod, a), ca = dim(f.dom, a), rb_ = dim(g.cod, b), cb = dim(g.dom, b);
                if (ra && rb_ && ca && cb) S.set_block(ro, co, f.block(a).kron(g.block(b)));
                ro += ra * rb_;
                co += ca * cb;
            }
        auto Lc = recoupling(f.cod, g.cod, c);
        auto Ld = recoupling(f.dom, g.dom, c);
        blk = Lc->L * (S * Ld->Linv);
    }
    return out;
}

Morphism SkeletalCategory::braiding(const Object& X, const Object& Y) const {
    return cached("c" + key(X) + "|" + key(Y), [&] {
        Object dom = rb::tensor(X, Y), cod = rb::tensor(Y, X);
        Morphism out = zero(dom, cod);
        for (auto& [c, blk] : out.blocks) {
            if (blk.rows() == 0) continue;
            Matrix P(blk.rows(), blk.cols(), order_);
            // offsets of the (b, a) blocks in the split basis of Y (x) X
            std::map<std::pair<int, int>, size_t> yoff;
            size_t o = 0;
            for (int b = 0; b < n_; ++b)
                for (int a = 0; a < n_; ++a)
                    if (fuses(b, a, c)) {
                        yoff[{b, a}] = o;
                        o += dim(Y, b) * dim(X, a);
                    }
            size_t col = 0;
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b) {
                    if (!fuses(a, b, c)) continue;
                    size_t da = dim(X, a), db = dim(Y, b);
                    Scalar r = R(a, b, c);
                    for (size_t i = 0; i < da; ++i)
                        for (size_t j = 0; j < db; ++j, ++col) P(yoff.at({b, a}) + j * da + i, col) = r;
                }
            blk = recoupling(Y, X, c)->L * (P * recoupling(X, Y, c)->Linv);
        }
        return out;
    });
}

Morphism SkeletalCategory::twist(const Object& X) const {
    Morphism out = id(X);
    for (auto& [c, blk] : out.blocks) blk = blk.scaled(d_.twist[c].lift(order_));
    return out;
}

Scalar SkeletalCategory::ev_scale(const Atom& x) const {
    {
        std::lock_guard lk(ev_mu_);
        auto it = ev_scale_cache_.find(x);
        if (it != ev_scale_cache_.end()) return it->second;
    }
    Object X = Object::atom(x.label, x.duals);
    Object Xd = rb::dual(X);
    Morphism b = zero(Object::unit(), rb::tensor(X, Xd));
    b.blocks.at(0)(0, 0) = Scalar::one(order_);
    Morphism d = zero(rb::tensor(Xd, X), Object::unit());
    d.blocks.at(0)(0, 0) = Scalar::one(order_);
    Morphism z = compose(tensor(id(X), d), tensor(b, id(X)));
    Scalar s = z.block(sector_of(x))(0, 0).inv();
    std::lock_guard lk(ev_mu_);
    ev_scale_cache_.emplace(x, s);
    return s;
}

Morphism SkeletalCategory::atom_coev(const Atom& a) const {
    Object y = Object::atom(a.label, a.duals);
    Morphism b = zero(Object::unit(), rb::tensor(y, rb::dual(y)));
    b.blocks.at(0)(0, 0) = Scalar::one(order_);
    return b;
}

Morphism SkeletalCategory::atom_ev(const Atom& a) const {
    Object y = Object::atom(a.label, a.duals);
    Morphism d = zero(rb::tensor(rb::dual(y), y), Object::unit());
    d.blocks.at(0)(0, 0) = ev_scale(a);
    return d;
}

Morphism SkeletalCategory::atom_pivot(const Atom& a) const {
    return cached("pa" + std::to_string(a.label) + "." + std::to_string(a.duals), [&] {
        Object X = Object::atom(a.label, a.duals);
        Object Xdd = Object::atom(a.label, a.duals + 2);
        if (a.duals == 0) {
            Morphism m = zero(X, Xdd);
            m.blocks.at(a.label)(0, 0) = d_.pivot[a.label].lift(order_);
            return m;
        }
        Morphism prev = atom_pivot(Atom{a.label, a.duals - 1});
        return inverse(dual(prev));
    });
}

std::vector<Morphism> SkeletalCategory::hom_basis(const Object& A, const Object& B) const {
    std::vector<Morphism> basis;
    Morphism z = zero(A, B);
    for (int s : sectors()) {
        size_t r = dim(B, s), c = dim(A, s);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) {
                Morphism e = z;
                e.blocks.at(s)(i, j) = Scalar::one(order_);
                basis.push_back(std::move(e));
            }
    }
    return basis;
}

Scalar SkeletalCategory::qdim(int a) const {
    Object X = atom(a);
    return compose(ev_right(X), coev(X)).block(0)(0, 0);
}

Report SkeletalCategory::check_axioms() const {
    Report rep;
    const auto& nm = d_.simples;
    // fusion ring
    {
        std::string bad;
        for (int a = 0; a < n_ && bad.empty(); ++a) {
            if (d_.fusion[0][a] != std::vector<int>{a} || d_.fusion[a][0] != std::vector<int>{a})
                bad = "unit fusion for " + nm[a];
            if (!fuses(a, d_.duals[a], 0)) bad = "no unit in " + nm[a] + " (x) dual";
            for (int b = 0; b < n_ && bad.empty(); ++b)
                for (int c = 0; c < n_ && bad.empty(); ++c)
                    for (int d = 0; d < n_ && bad.empty(); ++d) {
                        int l = 0, r = 0;
                        for (int e = 0; e < n_; ++e) l += fuses(a, b, e) && fuses(e, c, d);
                        for (int f = 0; f < n_; ++f) r += fuses(b, c, f) && fuses(a, f, d);
                        if (l != r) bad = "fusion associativity at " + tuple_str({a, b, c, d}, nm);
                    }
        }
        rep.add("fusion", bad.empty(), bad);
    }
    // pentagon
    {
        std::string bad;
        for (int a = 0; a < n_ && bad.empty(); ++a)
            for (int b = 0; b < n_ && bad.empty(); ++b)
                for (int c = 0; c < n_ && bad.empty(); ++c)
                    for (int d = 0; d < n_ && bad.empty(); ++d)
                        for (int e = 0; e < n_ && bad.empty(); ++e)
                            for (int f : d_.fusion[a][b])
                                for (int g : d_.fusion[f][c]) {
                                    if (!fuses(g, d, e)) continue;
                                    for (int l : d_.fusion[c][d])
                                        for (int k : d_.fusion[b][l]) {
                                            if (!fuses(a, k, e)) continue;
                                            Scalar lhs = F(f, c, d, e, g, l) * F(a, b, l, e, f, k);
                                            Scalar rhs = Scalar::zero(order_);
                                            for (int h : d_.fusion[b][c])
                                                rhs += F(a, b, c, g, f, h) * F(a, h, d, e, g, k) * F(b, c, d, k, h, l);
                                            if (lhs != rhs && bad.empty())
                                                bad = "pentagon fails at (a,b,c,d;e;f,g,k,l)=" +
                                                      tuple_str({a, b, c, d, e, f, g, k, l}, nm);
                                        }
                                }
        rep.add("pentagon", bad.empty(), bad);
    }
    // hexagons, on all triples of simples
    {
        std::string bad1, bad2;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c) {
                    Object x = atom(a), y = atom(b), z = atom(c);
                    if (bad1.empty()) {
                        Morphism lhs = braiding(x, rb::tensor(y, z));
                        Morphism rhs = compose(tensor(id(y), braiding(x, z)), tensor(braiding(x, y), id(z)));
                        if (lhs != rhs) bad1 = "hexagon c_{X,YZ} fails at (X,Y,Z)=" + tuple_str({a, b, c}, nm);
                    }
                    if (bad2.empty()) {
                        Morphism lhs = braiding(rb::tensor(x, y), z);
                        Morphism rhs = compose(tensor(braiding(x, z), id(y)), tensor(id(x), braiding(y, z)));
                        if (lhs != rhs) bad2 = "hexagon c_{XY,Z} fails at (X,Y,Z)=" + tuple_str({a, b, c}, nm);
                    }
                }
        rep.add("hexagon I", bad1.empty(), bad1);
        rep.add("hexagon II", bad2.empty(), bad2);
    }
    // balancing: theta_c = theta_a theta_b R^{ba}_c R^{ab}_c
    {
        std::string bad;
        if (!d_.twist[0].is_one()) bad = "twist of the unit is not 1";
        for (int a = 0; a < n_ && bad.empty(); ++a)
            for (int b = 0; b < n_ && bad.empty(); ++b)
                for (int c : d_.fusion[a][b]) {
                    Scalar lhs = d_.twist[c].lift(order_);
                    Scalar rhs = d_.twist[a].lift(order_) * d_.twist[b].lift(order_) * R(b, a, c) * R(a, b, c);
                    if (lhs != rhs && bad.empty()) bad = "balancing fails at (a,b;c)=" + tuple_str({a, b, c}, nm);
                }
        rep.add("twist balancing", bad.empty(), bad);
    }
    std::vector<Object> gens;
    for (int a = 1; a < n_; ++a) gens.push_back(atom(a));
    rep.merge(check_ribbon_structure(gens));
    return rep;
}

}  // namespace rb
