#include "rb/correlators.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "rb/error.hpp"

namespace rb {

namespace {

Object power(const Object& x, int n) { return tensor_all(std::vector<Object>(n, x)); }

int genus_of(const Marking& M) {
    int g = 0;
    for (const auto& c : M.surface().components) g += c.genus;
    return g;
}

std::string column_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return "sizes " + std::to_string(a.rows()) + " and " + std::to_string(b.rows());
    auto d = a.first_difference(b);
    if (!d) return "";
    return "entry " + std::to_string(d->first) + ": " + a(d->first, d->second).str() + " != " + b(d->first, d->second).str();
}

void expect_col(Report& r, const std::string& name, const Matrix& a, const Matrix& b) {
    bool ok = a.rows() == b.rows() && a == b;
    r.add(name, ok, ok ? "" : column_diff(a, b));
}

bool same_layout(const Marking& a, const Marking& b) {
    if (!(a.boundary == b.boundary) || a.vertices.size() != b.vertices.size()) return false;
    for (size_t i = 0; i < a.vertices.size(); ++i) {
        const auto& x = a.vertices[i];
        const auto& y = b.vertices[i];
        if (x.id != y.id || x.legs != y.legs) return false;
    }
    return true;
}

// dual(F^n) -> (F^v)^n; factor j of the target is the dual of factor n-1-j.
Morphism dual_power(const Category& C, const Object& F, int n) {
    if (n == 0) return C.id(Object::unit());
    Morphism rest = dual_power(C, F, n - 1);
    return C.compose(C.tensor(rest, C.id(dual(F))), dual_tensor_iso(C, F, power(F, n - 1)));
}

std::vector<Report> run_all(const std::vector<std::pair<std::string, std::function<Report()>>>& tasks, int threads) {
    std::vector<Report> out(tasks.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < tasks.size();) {
            try {
                out[i] = tasks[i].second();
            } catch (const Error& e) {
                out[i].add(tasks[i].first, false, e.what());
            }
        }
    };
    int n = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

std::vector<std::vector<int>> sign_patterns(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> e(n);
        // '+' before '-' at every position: mask bit set means incoming
        for (int i = 0; i < n; ++i) e[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
        out.push_back(e);
    }
    return out;
}

std::vector<Move> candidate_moves(const Marking& M) {
    std::vector<Move> out;
    for (const auto& v : M.vertices) {
        for (auto k : {MoveKind::Z, MoveKind::B, MoveKind::S})
            for (bool inv : {false, true}) out.push_back({k, v.id, inv});
        for (size_t s = 0; s <= v.legs.size(); ++s) {
            Move m{MoveKind::F, v.id, true};
            m.split = static_cast<int>(s);
            out.push_back(m);
        }
    }
    for (int c : M.cut_ids()) {
        out.push_back({MoveKind::F, c, false});
        for (auto k : {MoveKind::A, MoveKind::T})
            for (bool inv : {false, true}) out.push_back({k, c, inv});
    }
    return out;
}

bool has_c(const MoveWord& w) {
    return std::any_of(w.begin(), w.end(), [](const Move& m) { return m.kind == MoveKind::C; });
}

}  // namespace

std::string surface_name(int genus, const std::vector<int>& eps) {
    std::string s = "g" + std::to_string(genus) + " ";
    for (int e : eps) s += e == 1 ? '+' : '-';
    return s;
}

int default_threads() {
    if (const char* v = std::getenv("CORR_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) return static_cast<int>(n);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

bool passed(const Report& r, const std::string& prefix) {
    bool any = false;
    for (const auto& it : r.items)
        if (it.name.compare(0, prefix.size(), prefix) == 0) {
            if (!it.pass) return false;
            any = true;
        }
    return any;
}

CorrelatorSystem::CorrelatorSystem(FrobeniusData A, std::shared_ptr<const Coend> K)
    : A_(std::move(A)), K_(K), ctx_(K, A_.F) {
    const Category& C = cat();
    const Object& F = A_.F;
    Morphism handle = C.compose(C.tensor(A_.Phi_inv, C.pivot_inv(F)), C.coev(dual(F)));  // 1 -> F F
    tau_ = C.chain(C.tensor(A_.m, K_->i(F)), C.tensor(C.id(F), handle, A_.Phi), A_.Delta);
}

Morphism CorrelatorSystem::m_n(int n) const {
    const Category& C = cat();
    if (n == 0) return A_.eta;
    Morphism f = C.id(A_.F);
    for (int k = 2; k <= n; ++k) f = C.compose(A_.m, C.tensor(f, C.id(A_.F)));
    return f;
}

Morphism CorrelatorSystem::Delta_n(int n) const {
    const Category& C = cat();
    if (n == 0) return A_.eps;
    Morphism f = C.id(A_.F);
    for (int k = 2; k <= n; ++k) f = C.compose(C.tensor(f, C.id(A_.F)), A_.Delta);
    return f;
}

Morphism CorrelatorSystem::tau_n(int n) const {
    const Category& C = cat();
    Morphism f = C.id(A_.F);
    for (int k = 1; k <= n; ++k) f = C.compose(C.tensor(f, C.id(K_->K)), tau_);
    return f;
}

Morphism CorrelatorSystem::closed(int g, int p, int q) const {
    const Category& C = cat();
    return C.chain(C.tensor(Delta_n(q), C.id(power(K_->K, g))), tau_n(g), m_n(p));
}

Morphism CorrelatorSystem::elementary(const std::vector<int>& eps) const {
    {
        std::lock_guard lk(mu_);
        auto it = elem_.find(eps);
        if (it != elem_.end()) return it->second;
    }
    const Category& C = cat();
    const Object& F = A_.F;
    Morphism I = C.id(F);
    Morphism w;
    switch (eps.size()) {
        case 3: w = A_.omega; break;
        case 2: w = C.compose(C.tensor(I, A_.eps, I), A_.omega); break;
        case 1: w = C.compose(C.tensor(A_.eps, A_.eps, I), A_.omega); break;
        case 0: w = C.compose(C.tensor(A_.eps, A_.eps, A_.eps), A_.omega); break;
        default: fail("InvalidSphereType", "elementary correlators have at most three boundary circles");
    }
    Morphism leg = C.id(Object::unit());
    for (int e : eps) leg = C.tensor(leg, e == 1 ? I : A_.Phi);
    w = C.compose(leg, w);
    std::lock_guard lk(mu_);
    return elem_.emplace(eps, std::move(w)).first->second;
}

Matrix CorrelatorSystem::cut_and_sew(const Marking& M, std::vector<int> order) const {
    M.validate();
    const Category& C = cat();
    int next = 0;
    for (const auto& b : M.boundary) next = std::max(next, b.id + 1);
    std::map<int, std::pair<int, int>> ends;  // cut -> (outgoing id, incoming id)
    Marking open;
    open.boundary = M.boundary;
    for (int c : M.cut_ids()) {
        ends[c] = {next, next + 1};
        open.boundary.push_back({next, 1});
        open.boundary.push_back({next + 1, -1});
        next += 2;
    }
    Matrix u = Matrix::identity(1, C.order());
    for (const auto& v : M.vertices) {
        Vertex w{v.id, {}};
        std::vector<int> eps;
        for (const auto& l : v.legs) {
            if (!l.cut) {
                w.legs.push_back(l);
                eps.push_back(M.eps(l.id));
            } else {
                int id = l.side == 0 ? ends[l.id].first : ends[l.id].second;
                w.legs.push_back(Leg::boundary(id));
                eps.push_back(l.side == 0 ? 1 : -1);
            }
        }
        open.vertices.push_back(w);
        Morphism e = elementary(eps);
        u = u.kron(Matrix::column(ctx_.coords(ctx_.hom(e.cod), e)));
    }
    if (order.empty()) order = M.cut_ids();
    Marking cur = open;
    for (int c : order) {
        auto [out, in] = ends.at(c);
        u = sew_map(ctx_, cur, in, out, c) * u;
        cur = sew_marking(cur, in, out, c);
    }
    if (!same_layout(cur, M)) fail("Internal", "cut-and-sew did not reassemble the marking");
    return u;
}

Matrix CorrelatorSystem::closed_column(const Marking& M) const {
    const Category& C = cat();
    const Object& F = A_.F;
    Object Fd = dual(F);
    std::vector<int> ins, outs;
    std::map<int, size_t> pos;
    for (size_t i = 0; i < M.boundary.size(); ++i) {
        (M.boundary[i].eps == 1 ? outs : ins).push_back(M.boundary[i].id);
        pos[M.boundary[i].id] = i;
    }
    int p = static_cast<int>(ins.size()), q = static_cast<int>(outs.size()), g = genus_of(M);
    Object X = power(F, p), Kg = power(K_->K, g);
    Morphism u = C.compose(C.tensor(C.id(dual(X)), closed(g, p, q)), C.coev_right(X));
    u = C.compose(C.tensor(dual_power(C, F, p), C.id(tensor(power(F, q), Kg))), u);
    std::vector<int> slot;
    std::vector<Object> obj;
    for (int j = p - 1; j >= 0; --j) {
        slot.push_back(ins[j]);
        obj.push_back(Fd);
    }
    for (int id : outs) {
        slot.push_back(id);
        obj.push_back(F);
    }
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (size_t i = 0; i + 1 < slot.size(); ++i) {
            if (pos[slot[i]] < pos[slot[i + 1]]) continue;
            Object pre = tensor_all({obj.begin(), obj.begin() + i});
            Object post = tensor(tensor_all({obj.begin() + i + 2, obj.end()}), Kg);
            u = C.compose(C.tensor(C.id(pre), C.braiding(obj[i], obj[i + 1]), C.id(post)), u);
            std::swap(slot[i], slot[i + 1]);
            std::swap(obj[i], obj[i + 1]);
            swapped = true;
        }
    }
    return Matrix::column(ctx_.coords(ctx_.hom(u.cod), u));
}

Report check_consistency(const CorrelatorSystem& S, const ConsistencyOptions& opt) {
    const BlockContext& ctx = S.blocks();
    const Category& C = S.cat();
    const FrobeniusData& A = S.algebra();
    Report rep;
    rep.merge(check_axioms(A), "algebra ");

    std::vector<std::pair<std::string, std::function<Report()>>> tasks;
    for (int g = 0; g <= opt.max_genus; ++g)
        for (int n = 0; n <= opt.max_holes; ++n)
            for (const auto& e : sign_patterns(n)) {
                std::string sn = surface_name(g, e);
                tasks.emplace_back(sn, [&S, &ctx, e, g, n, sn] {
                    Report r;
                    Marking M = standard_marking(n, e, g);
                    Matrix u = S.cut_and_sew(M);
                    expect_col(r, "closed formula " + sn, reference_map(ctx, M).map * u, S.closed_column(M));
                    auto cuts = M.cut_ids();
                    if (cuts.size() > 1) {
                        std::reverse(cuts.begin(), cuts.end());
                        expect_col(r, "sewing order " + sn, S.cut_and_sew(M, cuts), u);
                    }
                    for (const Move& mv : candidate_moves(M)) {
                        Marking N;
                        try {
                            N = apply_move(M, mv);
                            N.validate();
                            if (!is_admissible({mv}, M)) continue;
                        } catch (const Error&) {
                            continue;
                        }
                        std::string kind = mv.kind == MoveKind::S ? "S-invariance " : "moves ";
                        expect_col(r, kind + sn + " " + str(mv), move_matrix(ctx, M, mv) * u, S.cut_and_sew(N));
                    }
                    return r;
                });
            }

    if (opt.relations)
        for (int rel = 1; rel <= 13; ++rel)
            for (const auto& ri : relation_instances(rel)) {
                if (static_cast<int>(ri.start.boundary.size()) > opt.max_holes || genus_of(ri.start) > opt.max_genus)
                    continue;
                if (has_c(ri.lhs) || has_c(ri.rhs) || !is_admissible(ri.lhs, ri.start) || !is_admissible(ri.rhs, ri.start))
                    continue;
                tasks.emplace_back("relation " + ri.name, [&S, &ctx, ri] {
                    Report r;
                    Matrix u = S.cut_and_sew(ri.start);
                    for (const auto* w : {&ri.lhs, &ri.rhs}) {
                        Marking end = apply_word(ri.start, *w);
                        Matrix got = canonical_map(ctx, end) * word_matrix(ctx, ri.start, *w) * u;
                        expect_col(r, "relation " + ri.name + (w == &ri.lhs ? " lhs" : " rhs"), got,
                                   S.cut_and_sew(normalize(end).marking));
                    }
                    return r;
                });
            }

    // Sewing the last circle of one sphere to the first circle of another.
    for (int n1 = 1; n1 <= opt.max_holes + 1; ++n1)
        for (int n2 = 1; n1 + n2 - 2 <= opt.max_holes; ++n2)
            for (const auto& e1 : sign_patterns(n1))
                for (const auto& e2 : sign_patterns(n2)) {
                    if (e1.back() != 1 || e2.front() != -1) continue;
                    std::string sn = "sewing " + surface_name(0, e1) + " to " + surface_name(0, e2);
                    tasks.emplace_back(sn, [&S, &ctx, e1, e2, n1, sn] {
                        Report r;
                        Marking a = standard_marking(static_cast<int>(e1.size()), e1);
                        Marking b = standard_marking(static_cast<int>(e2.size()), e2);
                        Marking U = disjoint_union(a, b);
                        Matrix uu = union_map(ctx, a, b) * S.cut_and_sew(a).kron(S.cut_and_sew(b));
                        int beta = n1 - 1, alpha = -1;
                        for (const auto& x : U.boundary)
                            if (x.id >= n1 && alpha < 0) alpha = x.id;
                        Matrix sewn = sew_map(ctx, U, alpha, beta) * uu;
                        Marking N = sew_marking(U, alpha, beta);
                        expect_col(r, sn, reference_map(ctx, N).map * sewn, S.closed_column(N));
                        return r;
                    });
                }
    // Self-sewing two adjacent circles of a sphere into a handle.
    if (opt.max_genus >= 1)
        for (int n = 0; n <= opt.max_holes; ++n)
            for (const auto& e : sign_patterns(n)) {
                std::string sn = "sewing handle " + surface_name(1, e);
                tasks.emplace_back(sn, [&S, &ctx, e, n, sn] {
                    Report r;
                    std::vector<int> e2 = e;
                    e2.push_back(1);
                    e2.push_back(-1);
                    Marking M0 = standard_marking(n + 2, e2);
                    Marking M = standard_marking(n, e, 1);
                    Matrix sewn = sew_map(ctx, M0, n + 1, n) * S.cut_and_sew(M0);
                    expect_col(r, sn, reference_map(ctx, M).map * sewn, S.closed_column(M));
                    return r;
                });
            }

    int threads = opt.threads > 0 ? opt.threads : default_threads();
    for (const auto& r : run_all(tasks, threads)) rep.merge(r);

    // Nondegeneracy: the out-in cylinder is the coevaluation and the in-in
    // cylinder is a nondegenerate pairing.
    {
        Marking cyl = standard_marking(2, {1, -1});
        Matrix got = reference_map(ctx, cyl).map * S.cut_and_sew(cyl);
        Morphism b = C.coev(A.F);
        expect_col(rep, "nondegeneracy cylinder is b_F", got, Matrix::column(ctx.coords(ctx.hom(b.cod), b)));
        Marking in2 = standard_marking(2, {-1, -1});
        Reference ref = reference_map(ctx, in2);
        Morphism c = from_coords(ctx, ref.W, [&] {
            Matrix col = ref.map * S.cut_and_sew(in2);
            std::vector<Scalar> v;
            for (size_t i = 0; i < col.rows(); ++i) v.push_back(col(i, 0));
            return v;
        }());
        Morphism Fd = C.id(dual(A.F));
        Morphism phi = C.compose(C.tensor(Fd, C.ev(A.F)), C.tensor(c, C.id(A.F)));
        bool inv = true;
        for (int s : C.sectors()) {
            size_t r = C.dim(phi.cod, s), k = C.dim(phi.dom, s);
            if (r != k || (r && phi.block(s).rank() != r)) inv = false;
        }
        rep.add("nondegeneracy pairing", inv, inv ? "" : "the incoming cylinder pairing is degenerate");
    }
    return rep;
}

Report verify_roundtrip(const CorrelatorSystem& S) {
    const BlockContext& ctx = S.blocks();
    const Category& C = S.cat();
    const FrobeniusData& A = S.algebra();
    const Object& F = A.F;
    auto corr = [&](const Marking& M) {
        Reference ref = reference_map(ctx, M);
        Matrix col = ref.map * S.cut_and_sew(M);
        std::vector<Scalar> v;
        for (size_t i = 0; i < col.rows(); ++i) v.push_back(col(i, 0));
        return from_coords(ctx, ref.W, v);
    };
    Generators g;
    g.omega = corr(standard_marking(3, {1, 1, 1}));
    g.eps = C.compose(C.ev(F), C.tensor(corr(standard_marking(1, {-1})), C.id(F)));
    g.Phi = C.compose(C.tensor(C.id(dual(F)), C.ev(F)), C.tensor(corr(standard_marking(2, {-1, -1})), C.id(F)));
    Report r;
    Generators want = to_generators(A);
    r.add("roundtrip omega", g.omega == want.omega);
    r.add("roundtrip eps", g.eps == want.eps);
    r.add("roundtrip Phi", g.Phi == want.Phi);
    try {
        FrobeniusData B = from_generators(A.cat, F, g);
        r.add("roundtrip m", B.m == A.m);
        r.add("roundtrip eta", B.eta == A.eta);
        r.add("roundtrip Delta", B.Delta == A.Delta);
    } catch (const Error& e) {
        r.add("roundtrip rebuild", false, e.what());
    }
    return r;
}

}  // namespace rb
