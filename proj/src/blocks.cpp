#include "rb/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "rb/error.hpp"

namespace rb {

using json = nlohmann::json;

// ---- context ----

BlockContext::BlockContext(std::shared_ptr<const Coend> coend, Object F) : coend_(std::move(coend)), F_(std::move(F)) {
    if (coend_->cat->backend() != Backend::Skeletal)
        fail("Unsupported", "block spaces need a skeletal category (labels on cuts are simples)");
    S_ = coend_->S;
    const Category& C = cat();
    for (int a = 0; a < C.num_labels(); ++a)
        if (coend_->K.terms.at(a) != tensor(C.atom(a), C.atom(a, 1)).terms.at(0))
            fail("Unsupported", "coend summands are not in label order");
}

const HomSpace& BlockContext::hom(const Object& W) const {
    const Category& C = cat();
    std::string key = C.str(W);
    {
        std::lock_guard lk(mu_);
        auto it = homs_.find(key);
        if (it != homs_.end()) return *it->second;
    }
    auto H = std::make_unique<HomSpace>();
    H->W = W;
    H->basis = C.hom_basis(Object::unit(), W);
    size_t n = C.dim(W, 0), d = H->basis.size();
    Matrix B(n, d, C.order());
    for (size_t j = 0; j < d; ++j) {
        const Matrix& b = H->basis[j].block(0);
        for (size_t i = 0; i < n; ++i) B(i, j) = b(i, 0);
    }
    B.transpose().rref(&H->rows);
    Matrix sq(d, d, C.order());
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) sq(i, j) = B(H->rows[i], j);
    H->pivot_inv = d ? sq.inverse() : sq;
    std::lock_guard lk(mu_);
    return *homs_.emplace(key, std::move(H)).first->second;
}

std::vector<Scalar> BlockContext::coords(const HomSpace& H, const Morphism& f) const {
    size_t d = H.dim();
    std::vector<Scalar> out(d, Scalar::zero(cat().order()));
    if (!d) return out;
    const Matrix& v = f.block(0);
    Matrix r(d, 1, cat().order());
    for (size_t i = 0; i < d; ++i) r(i, 0) = v(H.rows[i], 0);
    Matrix c = H.pivot_inv * r;
    for (size_t i = 0; i < d; ++i) out[i] = c(i, 0);
    return out;
}

Matrix BlockContext::post(const Morphism& f) const {
    const HomSpace& A = hom(f.dom);
    const HomSpace& B = hom(f.cod);
    Matrix out(B.dim(), A.dim(), cat().order());
    if (!A.dim() || !B.dim()) return out;
    const Matrix& fb = f.block(0);
    Matrix sel(B.dim(), fb.cols(), cat().order());
    for (size_t i = 0; i < B.dim(); ++i)
        for (size_t k = 0; k < fb.cols(); ++k) sel(i, k) = fb(B.rows[i], k);
    Matrix in(fb.cols(), A.dim(), cat().order());
    for (size_t j = 0; j < A.dim(); ++j) {
        const Matrix& b = A.basis[j].block(0);
        for (size_t k = 0; k < b.rows(); ++k) in(k, j) = b(k, 0);
    }
    return B.pivot_inv * (sel * in);
}

Matrix BlockContext::memo(const std::string& key, const std::function<Matrix()>& build) const {
    {
        std::lock_guard lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Matrix m = build();
    std::lock_guard lk(mu_);
    return memo_.emplace(key, std::move(m)).first->second;
}

namespace {

int dual_label(const Category& C, int a) {
    for (int b = 0; b < C.num_labels(); ++b)
        if (!C.hom_basis(C.atom(a, 1), C.atom(b)).empty()) return b;
    fail("InvalidCategory", "simple without a dual");
}

Object vertex_object(const BlockContext& ctx, const Marking& M, const Vertex& v, const std::map<int, int>& label) {
    std::vector<Object> xs;
    for (const auto& l : v.legs) xs.push_back(BlockSpace::leg_object(ctx, M, l, label));
    return tensor_all(xs);
}

// Tensor product of the leg objects in [i, j).
Object legs_object(const BlockContext& ctx, const Marking& M, const Vertex& v, size_t i, size_t j,
                   const std::map<int, int>& label) {
    std::vector<Object> xs;
    for (size_t k = i; k < j; ++k) xs.push_back(BlockSpace::leg_object(ctx, M, v.legs[k], label));
    return tensor_all(xs);
}

// id_A (x) f (x) id_B acting on legs [i, i + n) of a vertex.
Morphism on_legs(const BlockContext& ctx, const Marking& M, const Vertex& v, size_t i, size_t n, const Morphism& f,
                 const std::map<int, int>& label) {
    const Category& C = ctx.cat();
    Object A = legs_object(ctx, M, v, 0, i, label), B = legs_object(ctx, M, v, i + n, v.legs.size(), label);
    return C.tensor(C.id(A), f, C.id(B));
}

std::vector<CutLink> same_cuts(const Marking& M, int except = -1) {
    std::vector<CutLink> out;
    for (int c : M.cut_ids())
        if (c != except) out.push_back({c, c, false});
    return out;
}

}  // namespace

// ---- block spaces ----

Object BlockSpace::leg_object(const BlockContext& ctx, const Marking& M, const Leg& l, const std::map<int, int>& label) {
    if (!l.cut) return M.eps(l.id) == 1 ? ctx.F() : dual(ctx.F());
    return ctx.cat().atom(label.at(l.id), l.side);
}

BlockSpace block_space(const BlockContext& ctx, const Marking& M) {
    M.validate(SIZE_MAX);
    BlockSpace bs;
    bs.marking = M;
    bs.cuts = M.cut_ids();
    int L = ctx.cat().num_labels();
    std::vector<int> lab(bs.cuts.size(), 0);
    while (true) {
        BlockSpace::Sector s;
        for (size_t i = 0; i < bs.cuts.size(); ++i) s.label[bs.cuts[i]] = lab[i];
        s.dim = 1;
        for (const auto& v : M.vertices) {
            s.vertex.push_back(&ctx.hom(vertex_object(ctx, M, v, s.label)));
            s.dim *= s.vertex.back()->dim();
        }
        if (s.dim) {
            s.offset = bs.dim;
            bs.dim += s.dim;
            bs.sectors.push_back(std::move(s));
        }
        int k = static_cast<int>(lab.size()) - 1;
        while (k >= 0 && ++lab[k] == L) lab[k--] = 0;
        if (k < 0) break;
    }
    return bs;
}

Matrix build_map(const BlockContext& ctx, const BlockSpace& in, const BlockSpace& out, const std::vector<CutLink>& links,
                 const std::vector<LocalGroup>& groups) {
    const Category& C = ctx.cat();
    int order = C.order();
    Matrix R(out.dim, in.dim, order);
    std::vector<int> dl(C.num_labels());
    for (int a = 0; a < C.num_labels(); ++a) dl[a] = dual_label(C, a);

    // vertices outside the groups, matched by id
    std::vector<bool> in_used(in.marking.vertices.size()), out_used(out.marking.vertices.size());
    for (const auto& g : groups) {
        for (int v : g.in_v) in_used[v] = true;
        for (int v : g.out_v) out_used[v] = true;
    }
    std::vector<std::pair<int, int>> fixed;  // (in index, out index)
    for (size_t o = 0; o < out_used.size(); ++o) {
        if (out_used[o]) continue;
        int i = in.marking.vertex_index(out.marking.vertices[o].id);
        if (i < 0 || in_used[i]) fail("InternalError", "unmatched vertex in block map");
        fixed.push_back({i, static_cast<int>(o)});
    }

    struct Entry {
        Scalar c;
        size_t r, k;
    };
    for (const auto& si : in.sectors) {
        std::vector<size_t> istride(si.vertex.size(), 1);
        for (int v = static_cast<int>(si.vertex.size()) - 2; v >= 0; --v) istride[v] = istride[v + 1] * si.vertex[v + 1]->dim();
        for (const auto& so : out.sectors) {
            bool ok = true;
            for (const auto& l : links) {
                int a = si.label.at(l.from), b = so.label.at(l.to);
                if (b != (l.dual ? dl[a] : a)) {
                    ok = false;
                    break;
                }
            }
            for (auto [i, o] : fixed)
                if (si.vertex[i] != so.vertex[o]) ok = false;
            if (!ok) continue;
            std::vector<size_t> ostride(so.vertex.size(), 1);
            for (int v = static_cast<int>(so.vertex.size()) - 2; v >= 0; --v)
                ostride[v] = ostride[v + 1] * so.vertex[v + 1]->dim();

            std::vector<Entry> acc{{Scalar::one(order), so.offset, si.offset}};
            for (auto [i, o] : fixed) {
                std::vector<Entry> next;
                for (const auto& e : acc)
                    for (size_t t = 0; t < si.vertex[i]->dim(); ++t)
                        next.push_back({e.c, e.r + t * ostride[o], e.k + t * istride[i]});
                acc.swap(next);
            }
            for (const auto& g : groups) {
                Matrix m = g.local(si, so);
                std::vector<Entry> next;
                for (size_t r = 0; r < m.rows(); ++r)
                    for (size_t k = 0; k < m.cols(); ++k) {
                        if (m(r, k).is_zero()) continue;
                        size_t rp = 0, kp = 0, rr = r, kk = k;
                        for (int t = static_cast<int>(g.out_v.size()) - 1; t >= 0; --t) {
                            size_t d = so.vertex[g.out_v[t]]->dim();
                            rp += (rr % d) * ostride[g.out_v[t]];
                            rr /= d;
                        }
                        for (int t = static_cast<int>(g.in_v.size()) - 1; t >= 0; --t) {
                            size_t d = si.vertex[g.in_v[t]]->dim();
                            kp += (kk % d) * istride[g.in_v[t]];
                            kk /= d;
                        }
                        for (const auto& e : acc) next.push_back({e.c * m(r, k), e.r + rp, e.k + kp});
                    }
                acc.swap(next);
            }
            for (const auto& e : acc) R(e.r, e.k) += e.c;
        }
    }
    return R;
}

// ---- moves ----

namespace {

// Contraction of cut c (any number of legs); source M, target merge_at_cut.
Matrix f_matrix(const BlockContext& ctx, const Marking& M, int c, size_t max_legs) {
    const Category& C = ctx.cat();
    Marking N = merge_at_cut(M, c, max_legs);
    int va, vb;
    f_move_ends(M, c, va, vb);
    const Vertex& A = M.vertices[va];
    const Vertex& B = M.vertices[vb];
    bool a_side1 = A.legs.back().side == 1;
    LocalGroup g;
    g.in_v = {va, vb};
    g.out_v = {N.vertex_index(A.id)};
    g.local = [&ctx, &C, &M, &A, &B, c, a_side1](const BlockSpace::Sector& si, const BlockSpace::Sector& so) {
        (void)so;
        int lam = si.label.at(c);
        Object U = legs_object(ctx, M, A, 0, A.legs.size() - 1, si.label);
        Object V = legs_object(ctx, M, B, 1, B.legs.size(), si.label);
        Object x = C.atom(lam);
        Morphism pair = a_side1 ? C.ev(x) : C.ev_right(x);
        Morphism contract = C.tensor(C.id(U), pair, C.id(V));
        return ctx.memo("F|" + C.str(U) + "|" + C.str(V) + "|" + std::to_string(lam) + (a_side1 ? "-" : "+"), [&] {
            Object Wa = tensor(U, a_side1 ? C.atom(lam, 1) : x);
            Object Wb = tensor(a_side1 ? x : C.atom(lam, 1), V);
            const HomSpace& ha = ctx.hom(Wa);
            const HomSpace& hb = ctx.hom(Wb);
            const HomSpace& ho = ctx.hom(tensor(U, V));
            Matrix m(ho.dim(), ha.dim() * hb.dim(), C.order());
            for (size_t i = 0; i < ha.dim(); ++i)
                for (size_t j = 0; j < hb.dim(); ++j) {
                    auto v = ctx.coords(ho, C.compose(contract, C.tensor(ha.basis[i], hb.basis[j])));
                    for (size_t r = 0; r < v.size(); ++r) m(r, i * hb.dim() + j) = v[r];
                }
            return m;
        });
    };
    return build_map(ctx, block_space(ctx, M), block_space(ctx, N), same_cuts(M, c), {g});
}

// Post-composition with a single-vertex morphism built from the sector labels.
Matrix vertex_map(const BlockContext& ctx, const Marking& M, const Marking& N, int vi, std::vector<CutLink> links,
                  const std::function<Morphism(const std::map<int, int>&, const std::map<int, int>&)>& f) {
    LocalGroup g;
    g.in_v = {vi};
    g.out_v = {vi};
    g.local = [&ctx, &f](const BlockSpace::Sector& si, const BlockSpace::Sector& so) {
        return ctx.post(f(si.label, so.label));
    };
    return build_map(ctx, block_space(ctx, M), block_space(ctx, N), links, {g});
}

Matrix a_matrix(const BlockContext& ctx, const Marking& M, int c) {
    const Category& C = ctx.cat();
    auto [e0, e1] = M.cut_ends(c);
    int va = e0.first, vb = e1.first;
    Marking N = apply_move(M, Move{MoveKind::A, c});
    const Vertex& A = M.vertices[va];
    const Vertex& B = M.vertices[vb];
    int L = C.num_labels();
    LocalGroup g;
    g.in_v = {va, vb};
    g.out_v = {va, vb};
    g.local = [&, va, vb, L, c](const BlockSpace::Sector& si, const BlockSpace::Sector& so) {
        auto obj = [&](const Leg& l) { return BlockSpace::leg_object(ctx, M, l, si.label); };
        Object U = obj(A.legs[0]), U2 = obj(A.legs[1]), V = obj(B.legs[0]), V2 = obj(B.legs[1]);
        std::string key = "A|" + C.str(U) + "|" + C.str(U2) + "|" + C.str(V) + "|" + C.str(V2);
        // offsets of each label block on both sides
        auto sizes = [&](const Object& P, const Object& Q, const Object& R, const Object& S) {
            std::vector<size_t> off{0};
            for (int l = 0; l < L; ++l) {
                size_t d = ctx.hom(tensor_all({P, Q, C.atom(l)})).dim() * ctx.hom(tensor_all({R, S, C.atom(l, 1)})).dim();
                off.push_back(off.back() + d);
            }
            return off;
        };
        std::vector<size_t> oin = sizes(U, U2, V, V2), oout = sizes(U2, V, V2, U);
        Matrix full = ctx.memo(key, [&] {
            // kappa: sum over l of Hom(1, P Q l) (x) Hom(1, R S l^v) -> Hom(1, P Q R S)
            auto kappa = [&](const Object& P, const Object& Q, const Object& R, const Object& S) {
                const HomSpace& ho = ctx.hom(tensor_all({P, Q, R, S}));
                std::vector<Matrix> cols;
                Matrix m(ho.dim(), 0, C.order());
                for (int l = 0; l < L; ++l) {
                    Object x = C.atom(l);
                    const HomSpace& hg = ctx.hom(tensor_all({P, Q, x}));
                    const HomSpace& hf = ctx.hom(tensor_all({R, S, C.atom(l, 1)}));
                    Matrix blk(ho.dim(), hg.dim() * hf.dim(), C.order());
                    Object PQ = tensor(P, Q), RS = tensor(R, S);
                    for (size_t i = 0; i < hg.dim(); ++i)
                        for (size_t j = 0; j < hf.dim(); ++j) {
                            Morphism h = C.chain(C.tensor(C.id(tensor(PQ, RS)), C.ev(x)),
                                                 C.tensor(C.id(PQ), hf.basis[j], C.id(x)), hg.basis[i]);
                            auto v = ctx.coords(ho, h);
                            for (size_t r = 0; r < v.size(); ++r) blk(r, i * hf.dim() + j) = v[r];
                        }
                    m = m.hstack(blk);
                }
                return m;
            };
            Matrix k1 = kappa(U, U2, V, V2);
            Matrix k2 = kappa(U2, V, V2, U);
            Object Y = tensor_all({U2, V, V2});
            Morphism z = C.compose(C.tensor(C.id(Y), C.twist(U)), C.braiding(U, Y));
            return k2.inverse() * ctx.post(z) * k1;
        });
        int l = si.label.at(c), m = so.label.at(c);
        return full.block(oout[m], oin[l], oout[m + 1] - oout[m], oin[l + 1] - oin[l]);
    };
    return build_map(ctx, block_space(ctx, M), block_space(ctx, N), same_cuts(M, c), {g});
}

Matrix forward_matrix(const BlockContext& ctx, const Marking& M, const Move& mv) {
    const Category& C = ctx.cat();
    Marking N = apply_move(M, mv);
    switch (mv.kind) {
        case MoveKind::Z:
        case MoveKind::B: {
            int vi = M.vertex_index(mv.at);
            const Vertex& v = M.vertices[vi];
            bool z = mv.kind == MoveKind::Z;
            return vertex_map(ctx, M, N, vi, same_cuts(M), [&](const std::map<int, int>& l, const std::map<int, int>&) {
                if (z) {
                    Object X = BlockSpace::leg_object(ctx, M, v.legs[0], l);
                    Object Y = legs_object(ctx, M, v, 1, v.legs.size(), l);
                    return C.compose(C.tensor(C.id(Y), C.twist(X)), C.braiding(X, Y));
                }
                Object X = BlockSpace::leg_object(ctx, M, v.legs[0], l);
                Object Y = BlockSpace::leg_object(ctx, M, v.legs[1], l);
                return on_legs(ctx, M, v, 0, 2, C.braiding(X, Y), l);
            });
        }
        case MoveKind::F:
            return f_matrix(ctx, M, mv.at, 3);
        case MoveKind::A:
            return a_matrix(ctx, M, mv.at);
        case MoveKind::S: {
            int vi = M.vertex_index(mv.at);
            const Vertex& v = M.vertices[vi];
            int p = torus_position(M, vi);
            int c = v.legs[p].id;
            const Coend& K = ctx.coend();
            return vertex_map(ctx, M, N, vi, same_cuts(M, c), [&](const std::map<int, int>& l, const std::map<int, int>& m) {
                Morphism f = C.chain(C.projection(K.K, m.at(c)), ctx.S(), C.inclusion(K.K, l.at(c)));
                Object A = legs_object(ctx, M, v, 0, p, l), B = legs_object(ctx, M, v, p + 2, v.legs.size(), l);
                return C.tensor(C.id(A), f, C.id(B));
            });
        }
        case MoveKind::T: {
            auto [e0, e1] = M.cut_ends(mv.at);
            const Vertex& v = M.vertices[e0.first];
            size_t k = e0.second;
            return vertex_map(ctx, M, N, e0.first, same_cuts(M), [&](const std::map<int, int>& l, const std::map<int, int>&) {
                return on_legs(ctx, M, v, k, 1, C.twist(C.atom(l.at(mv.at))), l);
            });
        }
        case MoveKind::C: {
            int vi = M.vertex_index(mv.at);
            int g = 0;
            for (const auto& comp : M.components())
                if (std::find(comp.begin(), comp.end(), vi) != comp.end()) g = M.component_genus(comp);
            return Matrix::identity(block_space(ctx, M).dim, C.order()).scaled(ctx.coend().zeta.pow(g));
        }
    }
    return {};
}

}  // namespace

Matrix move_matrix(const BlockContext& ctx, const Marking& M, const Move& mv) {
    Marking N = apply_move(M, mv);
    if (!mv.inverse) return forward_matrix(ctx, M, mv);
    Move back = inverse_move(M, mv);
    return forward_matrix(ctx, N, back).inverse();
}

Matrix word_matrix(const BlockContext& ctx, const Marking& M, const MoveWord& w) {
    Matrix acc = Matrix::identity(block_space(ctx, M).dim, ctx.cat().order());
    Marking cur = M;
    for (const auto& mv : w) {
        acc = move_matrix(ctx, cur, mv) * acc;
        cur = apply_move(cur, mv);
    }
    return acc;
}

Matrix canonical_map(const BlockContext& ctx, const Marking& M) {
    const Category& C = ctx.cat();
    Normalized n = normalize(M);
    std::vector<CutLink> links;
    for (auto [c, t] : n.cut_to) links.push_back({c, t, n.flipped.at(c)});
    std::vector<LocalGroup> groups;
    for (size_t i = 0; i < n.vertex_from.size(); ++i) {
        int old = n.vertex_from[i];
        LocalGroup g;
        g.in_v = {old};
        g.out_v = {static_cast<int>(i)};
        g.local = [&ctx, &C, &M, &n, old](const BlockSpace::Sector& si, const BlockSpace::Sector& so) {
            std::vector<Morphism> fs;
            for (const auto& l : M.vertices[old].legs) {
                Object x = BlockSpace::leg_object(ctx, M, l, si.label);
                if (!l.cut || !n.flipped.at(l.id)) {
                    fs.push_back(C.id(x));
                    continue;
                }
                int lam = si.label.at(l.id), mu = so.label.at(n.cut_to.at(l.id));
                Morphism phi = C.hom_basis(C.atom(lam, 1), C.atom(mu)).at(0);
                if (l.side == 1) fs.push_back(phi);
                else fs.push_back(C.compose(C.dual(C.inverse(phi)), C.pivot(C.atom(lam))));
            }
            Morphism f = fs.empty() ? C.id(Object::unit()) : fs[0];
            for (size_t k = 1; k < fs.size(); ++k) f = C.tensor(f, fs[k]);
            return ctx.post(f);
        };
        groups.push_back(std::move(g));
    }
    return build_map(ctx, block_space(ctx, M), block_space(ctx, n.marking), links, groups);
}

Matrix sew_map(const BlockContext& ctx, const Marking& M, int alpha, int beta, int cut_id) {
    const Category& C = ctx.cat();
    Marking N = sew_marking(M, alpha, beta, cut_id);
    auto old = M.cut_ids();
    int c = -1;
    for (int x : N.cut_ids())
        if (!std::binary_search(old.begin(), old.end(), x)) c = x;
    auto [va, ka] = M.boundary_leg(alpha);
    auto [vb, kb] = M.boundary_leg(beta);
    const Object& F = ctx.F();
    // dual bases p^k : F -> l, i^k : l -> F with p^k i^j = delta
    auto dual_bases = [&C, &F](int l) {
        Object x = C.atom(l);
        auto ps = C.hom_basis(F, x);
        auto is = C.hom_basis(x, F);
        size_t n = ps.size();
        Matrix G(n, n, C.order());
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) G(a, b) = C.compose(ps[a], is[b]).block(l)(0, 0);
        Matrix Gi = n ? G.inverse() : G;
        std::vector<Morphism> is2;
        for (size_t b = 0; b < n; ++b) {
            Morphism s = C.zero(x, F);
            for (size_t m = 0; m < n; ++m) s = C.add(s, C.scale(is[m], Gi(m, b)));
            is2.push_back(s);
        }
        return std::make_pair(ps, is2);
    };
    LocalGroup g;
    if (va == vb) {
        g.in_v = g.out_v = {va};
        const Vertex& v = M.vertices[va];
        g.local = [&, ka, kb](const BlockSpace::Sector& si, const BlockSpace::Sector& so) {
            int l = so.label.at(c);
            auto [ps, is] = dual_bases(l);
            Matrix acc(so.vertex[va]->dim(), si.vertex[va]->dim(), C.order());
            for (size_t k = 0; k < ps.size(); ++k) {
                std::vector<Morphism> fs;
                for (size_t t = 0; t < v.legs.size(); ++t) {
                    Object x = BlockSpace::leg_object(ctx, M, v.legs[t], si.label);
                    if (static_cast<int>(t) == ka) fs.push_back(C.dual(is[k]));
                    else if (static_cast<int>(t) == kb) fs.push_back(ps[k]);
                    else fs.push_back(C.id(x));
                }
                Morphism f = fs[0];
                for (size_t t = 1; t < fs.size(); ++t) f = C.tensor(f, fs[t]);
                acc = acc + ctx.post(f);
            }
            return acc;
        };
    } else {
        g.in_v = g.out_v = {va, vb};
        g.local = [&, ka, kb](const BlockSpace::Sector& si, const BlockSpace::Sector& so) {
            int l = so.label.at(c);
            auto [ps, is] = dual_bases(l);
            const Vertex& A = M.vertices[va];
            const Vertex& B = M.vertices[vb];
            Matrix acc(so.vertex[va]->dim() * so.vertex[vb]->dim(), si.vertex[va]->dim() * si.vertex[vb]->dim(), C.order());
            for (size_t k = 0; k < ps.size(); ++k) {
                Matrix ma = ctx.post(on_legs(ctx, M, A, ka, 1, C.dual(is[k]), si.label));
                Matrix mb = ctx.post(on_legs(ctx, M, B, kb, 1, ps[k], si.label));
                acc = acc + ma.kron(mb);
            }
            return acc;
        };
    }
    return build_map(ctx, block_space(ctx, M), block_space(ctx, N), same_cuts(M), {g});
}

Matrix union_map(const BlockContext& ctx, const Marking& a, const Marking& b) {
    Marking u = disjoint_union(a, b);
    BlockSpace A = block_space(ctx, a), B = block_space(ctx, b), U = block_space(ctx, u);
    auto ca = a.cut_ids();
    int dc = ca.empty() ? 0 : ca.back() + 1;
    std::map<std::map<int, int>, const BlockSpace::Sector*> idx;
    for (const auto& s : U.sectors) idx[s.label] = &s;
    Matrix R(U.dim, A.dim * B.dim, ctx.cat().order());
    for (const auto& sa : A.sectors)
        for (const auto& sb : B.sectors) {
            std::map<int, int> lab = sa.label;
            for (auto [c, l] : sb.label) lab[c + dc] = l;
            const auto* su = idx.at(lab);
            for (size_t i = 0; i < sa.dim; ++i)
                for (size_t j = 0; j < sb.dim; ++j)
                    R(su->offset + i * sb.dim + j, (sa.offset + i) * B.dim + sb.offset + j) = Scalar::one(ctx.cat().order());
        }
    return R;
}

Reference reference_map(const BlockContext& ctx, const Marking& M, std::vector<int> order) {
    const Category& C = ctx.cat();
    Marking cur = M;
    Matrix acc = Matrix::identity(block_space(ctx, M).dim, C.order());
    auto contractible = [&](int c) {
        int va, vb;
        return f_move_ends(cur, c, va, vb);
    };
    if (order.empty()) {
        while (true) {
            int pick = -1;
            for (int c : cur.cut_ids())
                if (contractible(c)) {
                    pick = c;
                    break;
                }
            if (pick < 0) break;
            acc = f_matrix(ctx, cur, pick, SIZE_MAX) * acc;
            cur = merge_at_cut(cur, pick, SIZE_MAX);
        }
    } else {
        for (int c : order) {
            acc = f_matrix(ctx, cur, c, SIZE_MAX) * acc;
            cur = merge_at_cut(cur, c, SIZE_MAX);
        }
    }
    if (cur.vertices.size() != 1) fail("Unsupported", "reference map needs a marking contractible to one vertex");
    const auto& legs = cur.vertices[0].legs;
    size_t n = cur.boundary.size();
    bool shape = legs.size() >= n && (legs.size() - n) % 2 == 0;
    for (size_t i = 0; shape && i < n; ++i) shape = !legs[i].cut && legs[i].id == cur.boundary[i].id;
    for (size_t i = n; shape && i < legs.size(); i += 2)
        shape = legs[i].cut && legs[i].side == 0 && legs[i + 1].cut && legs[i + 1].id == legs[i].id;
    if (!shape) fail("Unsupported", "contracted vertex is not in reference order");
    std::vector<Object> xs;
    for (const auto& b : cur.boundary) xs.push_back(b.eps == 1 ? ctx.F() : dual(ctx.F()));
    size_t g = (legs.size() - n) / 2;
    for (size_t i = 0; i < g; ++i) xs.push_back(ctx.coend().K);
    Object W = tensor_all(xs);
    const HomSpace& H = ctx.hom(W);
    BlockSpace bs = block_space(ctx, cur);
    Matrix R(H.dim(), bs.dim, C.order());
    for (const auto& s : bs.sectors) {
        Morphism f = C.id(Object::unit());
        for (size_t i = 0; i < n; ++i) f = C.tensor(f, C.id(xs[i]));
        for (size_t i = 0; i < g; ++i) f = C.tensor(f, C.inclusion(ctx.coend().K, s.label.at(legs[n + 2 * i].id)));
        R.set_block(0, s.offset, ctx.post(f));
    }
    return {W, R * acc};
}

Morphism from_coords(const BlockContext& ctx, const Object& W, const std::vector<Scalar>& c) {
    const Category& C = ctx.cat();
    const HomSpace& H = ctx.hom(W);
    Morphism f = C.zero(Object::unit(), W);
    for (size_t j = 0; j < H.dim(); ++j)
        if (!c.at(j).is_zero()) f = C.add(f, C.scale(H.basis[j], c[j]));
    return f;
}

Report check_relations(const BlockContext& ctx, const std::vector<int>& rels) {
    Report rep;
    for (int r : rels)
        for (const auto& I : relation_instances(r)) {
            Marking el = apply_word(I.start, I.lhs), er = apply_word(I.start, I.rhs);
            Matrix L = canonical_map(ctx, el) * word_matrix(ctx, I.start, I.lhs);
            Matrix R = canonical_map(ctx, er) * word_matrix(ctx, I.start, I.rhs);
            auto d = L.first_difference(R);
            std::string detail = "dim " + std::to_string(L.cols());
            if (d)
                detail = "first difference at (" + std::to_string(d->first) + "," + std::to_string(d->second) + "): " +
                         L(d->first, d->second).str() + " vs " + R(d->first, d->second).str();
            rep.add(I.name, !d, detail);
        }
    return rep;
}

std::string matrix_json(const Matrix& m) {
    json j = m.to_strings();
    return j.dump();
}

}  // namespace rb
