#include "rb/frobenius.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rb/error.hpp"

namespace rb {

using json = nlohmann::json;

namespace {

bool is_iso(const Category& C, const Morphism& f) {
    for (int s : C.sectors()) {
        size_t r = C.dim(f.cod, s), c = C.dim(f.dom, s);
        if (r != c) return false;
        if (r && f.block(s).rank() != r) return false;
    }
    return true;
}

// "sector s (i,j): a != b" for the first entry where f and g differ.
std::string diff(const Morphism& f, const Morphism& g) {
    if (f.dom != g.dom || f.cod != g.cod) return "different hom-spaces";
    for (const auto& [s, b] : f.blocks) {
        auto d = b.first_difference(g.block(s));
        if (d)
            return "sector " + std::to_string(s) + " (" + std::to_string(d->first) + "," + std::to_string(d->second) +
                   "): " + b(d->first, d->second).str() + " != " + g.block(s)(d->first, d->second).str();
    }
    return "";
}

void expect_eq(Report& r, const std::string& name, const Morphism& f, const Morphism& g) {
    bool ok = f == g;
    r.add(name, ok, ok ? "" : diff(f, g));
}

// Summand index tuple of the k-th term of X_1 ... X_n, last factor fastest.
std::vector<size_t> split_index(size_t k, const std::vector<Object>& xs) {
    std::vector<size_t> out(xs.size());
    for (size_t i = xs.size(); i-- > 0;) {
        out[i] = k % xs[i].terms.size();
        k /= xs[i].terms.size();
    }
    return out;
}

size_t join_index(const std::vector<size_t>& t, const std::vector<Object>& xs) {
    if (t.size() != xs.size()) fail("ParseError", "component key has the wrong number of factors");
    size_t k = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (t[i] >= xs[i].terms.size()) fail("ParseError", "summand index out of range");
        k = k * xs[i].terms.size() + t[i];
    }
    return k;
}

std::string tuple_str(const std::vector<size_t>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s;
}

std::vector<size_t> parse_tuple(const std::string& s) {
    std::vector<size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoul(tok));
    return out;
}

Morphism from_components(const Category& C, const std::vector<Object>& in, const std::vector<Object>& out,
                         const json& comps) {
    Object dom = tensor_all(in), cod = tensor_all(out);
    Morphism f = C.zero(dom, cod);
    for (auto& [key, val] : comps.items()) {
        auto semi = key.find(';');
        if (semi == std::string::npos) fail("ParseError", "component key '" + key + "' lacks ';'");
        size_t a = join_index(parse_tuple(key.substr(0, semi)), in);
        size_t b = join_index(parse_tuple(key.substr(semi + 1)), out);
        Object wa({dom.terms[a]}), wb({cod.terms[b]});
        auto basis = C.hom_basis(wa, wb);
        std::vector<std::string> coords;
        if (val.is_array()) coords = val.get<std::vector<std::string>>();
        else coords = {val.get<std::string>()};
        if (coords.size() != basis.size())
            fail("ParseError", "component '" + key + "' needs " + std::to_string(basis.size()) + " coordinates");
        Morphism g = C.zero(wa, wb);
        for (size_t i = 0; i < basis.size(); ++i) g = C.add(g, C.scale(basis[i], Scalar::parse(coords[i], C.order())));
        f = C.add(f, C.chain(C.inclusion(cod, b), g, C.projection(dom, a)));
    }
    return f;
}

}  // namespace

Morphism dual_tensor_iso(const Category& C, const Object& X, const Object& Y) {
    Object src = dual(tensor(X, Y)), dst = tensor(dual(Y), dual(X));
    Morphism f = C.zero(src, dst);
    size_t nx = X.terms.size(), ny = Y.terms.size();
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j) {
            size_t a = i * ny + j, b = j * nx + i;
            if (src.terms[a] != dst.terms[b]) fail("Internal", "dual_tensor_iso: term mismatch");
            f = C.add(f, C.compose(C.inclusion(dst, b), C.projection(src, a)));
        }
    return f;
}

FrobeniusData from_generators(std::shared_ptr<const Category> cat, const Object& F, const Generators& g) {
    const Category& C = *cat;
    Object Fd = dual(F), FF = tensor(F, F);
    if (g.omega.dom != Object::unit() || g.omega.cod != tensor(FF, F))
        fail("ShapeMismatch", "omega must be a morphism 1 -> F F F");
    if (g.eps.dom != F || !g.eps.cod.is_unit()) fail("ShapeMismatch", "eps must be a morphism F -> 1");
    if (g.Phi.dom != F || g.Phi.cod != Fd) fail("ShapeMismatch", "Phi must be a morphism F -> F^v");
    if (!is_iso(C, g.Phi)) fail("NotInvertible", "Phi is not invertible");

    FrobeniusData A;
    A.cat = cat;
    A.F = F;
    A.eps = g.eps;
    A.Phi = g.Phi;
    A.Phi_inv = C.inverse(g.Phi);
    A.omega = g.omega;
    Morphism pair = C.compose(C.ev(F), C.tensor(g.Phi, C.id(F)));  // d_F o (Phi (x) id)
    A.Delta = C.compose(C.tensor(C.id(FF), pair), C.tensor(g.omega, C.id(F)));
    A.eta = C.compose(C.tensor(g.eps, g.eps, C.id(F)), g.omega);
    Morphism PP = C.compose(C.inverse(dual_tensor_iso(C, F, F)), C.tensor(g.Phi, g.Phi));
    Morphism pair2 = C.compose(C.ev(FF), C.tensor(PP, C.id(FF)));
    A.m = C.compose(C.tensor(C.id(F), pair2), C.tensor(g.omega, C.id(FF)));
    A.kappa = C.compose(A.eps, A.m);
    return A;
}

FrobeniusData from_algebra(std::shared_ptr<const Category> cat, const Object& F, Morphism m, Morphism eta,
                           Morphism Delta, Morphism eps) {
    const Category& C = *cat;
    Object FF = tensor(F, F);
    if (m.dom != FF || m.cod != F) fail("ShapeMismatch", "m must be a morphism F F -> F");
    if (!eta.dom.is_unit() || eta.cod != F) fail("ShapeMismatch", "eta must be a morphism 1 -> F");
    if (Delta.dom != F || Delta.cod != FF) fail("ShapeMismatch", "Delta must be a morphism F -> F F");
    if (eps.dom != F || !eps.cod.is_unit()) fail("ShapeMismatch", "eps must be a morphism F -> 1");
    FrobeniusData A;
    A.cat = cat;
    A.F = F;
    A.m = std::move(m);
    A.eta = std::move(eta);
    A.Delta = std::move(Delta);
    A.eps = std::move(eps);
    A.kappa = C.compose(A.eps, A.m);
    A.Phi = C.compose(C.tensor(A.kappa, C.id(dual(F))), C.tensor(C.id(F), C.coev(F)));
    if (!is_iso(C, A.Phi)) fail("NotInvertible", "the form eps o m is degenerate");
    A.Phi_inv = C.inverse(A.Phi);
    A.omega = C.chain(C.tensor(A.Delta, C.id(F)), A.Delta, A.eta);
    return A;
}

FrobeniusData from_algebra(std::shared_ptr<const Category> cat, const Object& F, Morphism m, Morphism eta,
                           Morphism eps) {
    const Category& C = *cat;
    Morphism kappa = C.compose(eps, m);
    Morphism Phi = C.compose(C.tensor(kappa, C.id(dual(F))), C.tensor(C.id(F), C.coev(F)));
    if (!is_iso(C, Phi)) fail("NotInvertible", "the form eps o m is degenerate");
    // Delta(x) = sum_i x e_i (x) e^i for the copairing (id (x) Phi^-1) o b_F
    Morphism copair = C.compose(C.tensor(C.id(F), C.inverse(Phi)), C.coev(F));
    Morphism Delta = C.compose(C.tensor(m, C.id(F)), C.tensor(C.id(F), copair));
    return from_algebra(std::move(cat), F, std::move(m), std::move(eta), std::move(Delta), std::move(eps));
}

Generators to_generators(const FrobeniusData& A) {
    const Category& C = *A.cat;
    Generators g;
    g.omega = C.chain(C.tensor(A.Delta, C.id(A.F)), A.Delta, A.eta);
    g.eps = A.eps;
    Morphism kappa = C.compose(A.eps, A.m);
    g.Phi = C.compose(C.tensor(kappa, C.id(dual(A.F))), C.tensor(C.id(A.F), C.coev(A.F)));
    return g;
}

Report check_axioms(const FrobeniusData& A) {
    const Category& C = *A.cat;
    const Object& F = A.F;
    Object Fd = dual(F), FF = tensor(F, F);
    Morphism I = C.id(F);
    Report r;

    expect_eq(r, "associativity", C.compose(A.m, C.tensor(A.m, I)), C.compose(A.m, C.tensor(I, A.m)));
    expect_eq(r, "coassociativity", C.compose(C.tensor(A.Delta, I), A.Delta), C.compose(C.tensor(I, A.Delta), A.Delta));
    {
        Morphism l = C.compose(A.m, C.tensor(A.eta, I)), rr = C.compose(A.m, C.tensor(I, A.eta));
        bool ok = l == I && rr == I;
        r.add("unit", ok, ok ? "" : (l != I ? "left: " + diff(l, I) : "right: " + diff(rr, I)));
    }
    {
        Morphism l = C.compose(C.tensor(A.eps, I), A.Delta), rr = C.compose(C.tensor(I, A.eps), A.Delta);
        bool ok = l == I && rr == I;
        r.add("counit", ok, ok ? "" : (l != I ? "left: " + diff(l, I) : "right: " + diff(rr, I)));
    }
    {
        Morphism mid = C.compose(A.Delta, A.m);
        Morphism l = C.compose(C.tensor(A.m, I), C.tensor(I, A.Delta));
        Morphism rr = C.compose(C.tensor(I, A.m), C.tensor(A.Delta, I));
        bool ok = l == mid && rr == mid;
        r.add("Frobenius property", ok, ok ? "" : (l != mid ? "left: " + diff(l, mid) : "right: " + diff(rr, mid)));
    }
    bool nondeg = is_iso(C, A.Phi);
    r.add("nondegenerate form", nondeg, nondeg ? "" : "Phi is not invertible");
    Morphism Phi_m = C.compose(C.tensor(A.kappa, C.id(Fd)), C.tensor(I, C.coev(F)));
    expect_eq(r, "Phi from the Frobenius form", Phi_m, A.Phi);
    expect_eq(r, "Frobenius form", A.kappa, C.compose(C.ev(F), C.tensor(A.Phi, I)));
    if (nondeg) {
        Morphism iso = C.inverse(dual_tensor_iso(C, F, F));
        expect_eq(r, "dual product", C.dual(A.m),
                  C.chain(iso, C.tensor(A.Phi, A.Phi), A.Delta, A.Phi_inv));
        expect_eq(r, "dual unit", C.dual(A.eta), C.compose(A.eps, A.Phi_inv));
    }
    Morphism c = C.braiding(F, F);
    expect_eq(r, "commutativity", C.compose(A.m, c), A.m);
    expect_eq(r, "cocommutativity", C.compose(c, A.Delta), A.Delta);
    Morphism Phi2 = C.compose(C.tensor(C.id(Fd), A.kappa), C.tensor(C.coev_right(F), I));
    expect_eq(r, "symmetry", Phi2, A.Phi);
    expect_eq(r, "trivial twist", C.twist(F), I);
    expect_eq(r, "Frobenius-Schur indicator", C.compose(C.dual(A.Phi), C.pivot(F)), A.Phi);
    {
        Morphism s1 = C.compose(C.tensor(c, I), A.omega), s2 = C.compose(C.tensor(I, c), A.omega);
        bool ok = s1 == A.omega && s2 == A.omega;
        r.add("braid invariance of omega", ok,
              ok ? "" : (s1 != A.omega ? "strands 1,2: " + diff(s1, A.omega) : "strands 2,3: " + diff(s2, A.omega)));
    }
    {
        Morphism e1 = C.compose(C.tensor(A.eps, I, I), A.omega);
        Morphism e2 = C.compose(C.tensor(I, A.eps, I), A.omega);
        Morphism e3 = C.compose(C.tensor(I, I, A.eps), A.omega);
        bool ok = e1 == e2 && e2 == e3;
        r.add("omega counit contractions", ok, ok ? "" : (e1 != e2 ? diff(e1, e2) : diff(e2, e3)));
    }
    if (nondeg) {
        Morphism a = C.compose(C.tensor(C.ev(F), A.eps, I), C.tensor(C.id(Fd), A.omega));
        Morphism b = C.compose(C.tensor(I, A.eps, C.ev_right(F)), C.tensor(A.omega, C.id(Fd)));
        bool ok = a == A.Phi_inv && b == A.Phi_inv;
        r.add("Phi inverse formulas", ok, ok ? "" : (a != A.Phi_inv ? diff(a, A.Phi_inv) : diff(b, A.Phi_inv)));
    }
    (void)FF;
    return r;
}

ModularCheck check_modular(const FrobeniusData& A, const Coend& K) {
    if (!K.modular) fail("CategoryNotModular", "S_K is not invertible");
    const Category& C = *K.cat;
    ModularCheck out;
    Report ax = check_axioms(A);
    const CheckItem* bad = ax.first_failure();
    out.report.add("Frobenius axioms", !bad, bad ? bad->name + ": " + bad->detail : "");
    out.v = C.chain(K.i(A.F), C.tensor(C.id(A.F), A.Phi), A.Delta);
    Morphism Sv = C.compose(K.S, out.v);
    out.residual = C.sub(Sv, out.v);
    out.s_invariant = Sv == out.v;
    out.report.add("S_K-invariance", out.s_invariant, out.s_invariant ? "" : diff(Sv, out.v));
    out.modular = out.s_invariant && !bad;
    return out;
}

FrobeniusData parse_algebra(std::shared_ptr<const Category> cat, const std::string& text) {
    const Category& C = *cat;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail("ParseError", std::string("algebra file: ") + e.what());
    }
    if (!j.contains("object") || !j.contains("format") || !j.contains("tensors"))
        fail("ParseError", "algebra file needs object, format and tensors");
    Object F;
    if (j["object"].is_string()) {
        F = C.parse_object(j["object"].get<std::string>());
    } else {
        for (const auto& s : j["object"]) F = direct_sum(F, C.parse_object(s.get<std::string>()));
    }
    if (F.terms.empty()) fail("ParseError", "empty object");
    Object Fd = dual(F);
    const json& t = j["tensors"];
    auto get = [&](const std::string& name, std::vector<Object> in, std::vector<Object> out) {
        if (!t.contains(name)) fail("ParseError", "missing tensor '" + name + "'");
        return from_components(C, in, out, t[name]);
    };
    std::string format = j["format"].get<std::string>();
    if (format == "algebra") {
        Morphism m = get("m", {F, F}, {F});
        Morphism eta = get("eta", {}, {F});
        Morphism eps = get("eps", {F}, {});
        if (t.contains("Delta")) return from_algebra(cat, F, m, eta, get("Delta", {F}, {F, F}), eps);
        return from_algebra(cat, F, m, eta, eps);
    }
    if (format == "generators") {
        Generators g{get("omega", {}, {F, F, F}), get("eps", {F}, {}), get("Phi", {F}, {Fd})};
        return from_generators(cat, F, g);
    }
    fail("ParseError", "unknown algebra format '" + format + "'");
}

FrobeniusData load_algebra(std::shared_ptr<const Category> cat, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileError", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(std::move(cat), ss.str());
}

std::string morphism_components_json(const Category& C, const Morphism& f, size_t nF, size_t p, size_t q) {
    std::vector<Object> in(p, Object(std::vector<Word>(nF))), out(q, Object(std::vector<Word>(nF)));
    json j = json::object();
    for (size_t a = 0; a < f.dom.terms.size(); ++a)
        for (size_t b = 0; b < f.cod.terms.size(); ++b) {
            Object wa({f.dom.terms[a]}), wb({f.cod.terms[b]});
            Morphism g = C.chain(C.projection(f.cod, b), f, C.inclusion(f.dom, a));
            auto basis = C.hom_basis(wa, wb);
            if (basis.empty()) continue;
            auto co = C.coordinates(basis, g);
            if (!co) fail("Internal", "component outside the hom basis span");
            bool zero = true;
            for (const auto& s : *co) zero = zero && s.is_zero();
            if (zero) continue;
            json v = json::array();
            for (const auto& s : *co) v.push_back(s.str());
            j[tuple_str(split_index(a, in)) + ";" + tuple_str(split_index(b, out))] = v;
        }
    return j.dump();
}

}  // namespace rb
