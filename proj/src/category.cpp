#include "rb/category.hpp"

#include <sstream>

#include "rb/error.hpp"

namespace rb {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

int Category::label_index(const std::string& name) const {
    for (int i = 0; i < num_labels(); ++i)
        if (label_name(i) == name) return i;
    fail("UnknownAtom", "no atom named '" + name + "' in " + name_);
}

Object Category::atom(int label, int duals) const {
    if (label < 0 || label >= num_labels()) fail("UnknownAtom", "atom index " + std::to_string(label));
    if (backend_ == Backend::Skeletal && label == 0) return Object::unit();
    return Object::atom(label, duals);
}

Object Category::parse_object(const std::string& text) const {
    Object out;
    std::stringstream terms(text);
    std::string term;
    while (std::getline(terms, term, '+')) {
        term = trim(term);
        if (term.empty()) fail("ParseError", "empty term in object '" + text + "'");
        for (char& ch : term)
            if (ch == '*') ch = ' ';
        std::stringstream atoms(term);
        std::string tok;
        Object acc = Object::unit();
        while (atoms >> tok) {
            int duals = 0;
            while (!tok.empty() && tok.back() == '^') {
                ++duals;
                tok.pop_back();
            }
            if (tok == "1" && (backend_ == Backend::Hopf || label_name(0) != "1")) continue;
            acc = rb::tensor(acc, atom(label_index(tok), duals));
        }
        out = direct_sum(out, acc);
    }
    if (out.terms.empty()) fail("ParseError", "empty object expression");
    return out;
}

std::string Category::str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += label_name(w[i].label) + std::string(w[i].duals, '^');
    }
    return s;
}

std::string Category::str(const Object& x) const {
    if (x.terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < x.terms.size(); ++i) {
        if (i) s += " + ";
        s += str(x.terms[i]);
    }
    return s;
}

std::string Category::key(const Word& w) const {
    std::string s = "[";
    for (const auto& a : w) s += std::to_string(a.label) + "." + std::to_string(a.duals) + ",";
    return s + "]";
}

std::string Category::key(const Object& x) const {
    std::string s;
    for (const auto& w : x.terms) s += key(w);
    return s;
}

size_t Category::dim(const Object& x, int sector) const {
    size_t n = 0;
    for (const auto& w : x.terms) n += word_dim(w, sector);
    return n;
}

Morphism Category::zero(const Object& dom, const Object& cod) const {
    Morphism m{dom, cod, {}};
    for (int s : sectors()) {
        size_t r = dim(cod, s), c = dim(dom, s);
        if (r || c) m.blocks.emplace(s, Matrix(r, c, order_));
    }
    return m;
}

Morphism Category::id(const Object& x) const {
    Morphism m{x, x, {}};
    for (int s : sectors()) {
        size_t n = dim(x, s);
        if (n) m.blocks.emplace(s, Matrix::identity(n, order_));
    }
    return m;
}

Morphism Category::compose(const Morphism& g, const Morphism& f) const {
    if (f.cod != g.dom)
        fail("ShapeMismatch", "compose: cod " + str(f.cod) + " != dom " + str(g.dom));
    Morphism m{f.dom, g.cod, {}};
    for (int s : sectors()) {
        size_t r = dim(g.cod, s), c = dim(f.dom, s);
        if (!r && !c) continue;
        auto fi = f.blocks.find(s);
        auto gi = g.blocks.find(s);
        if (fi == f.blocks.end() || gi == g.blocks.end())
            m.blocks.emplace(s, Matrix(r, c, order_));
        else
            m.blocks.emplace(s, gi->second * fi->second);
    }
    return m;
}

Morphism Category::add(const Morphism& f, const Morphism& g) const {
    if (f.dom != g.dom || f.cod != g.cod) fail("ShapeMismatch", "add: different hom-spaces");
    Morphism m = f;
    for (auto& [s, b] : m.blocks) b = b + g.block(s);
    return m;
}

Morphism Category::sub(const Morphism& f, const Morphism& g) const { return add(f, scale(g, Scalar(-1))); }

Morphism Category::scale(const Morphism& f, const Scalar& c) const {
    Morphism m = f;
    for (auto& [s, b] : m.blocks) b = b.scaled(c);
    return m;
}

Morphism Category::inverse(const Morphism& f) const {
    Morphism m{f.cod, f.dom, {}};
    for (const auto& [s, b] : f.blocks) m.blocks.emplace(s, b.inverse());
    return m;
}

Morphism Category::coev(const Object& X) const {
    return cached("b" + key(X), [&] {
        Object Xd = rb::dual(X);
        Morphism out = zero(Object::unit(), rb::tensor(X, Xd));
        for (size_t i = 0; i < X.terms.size(); ++i) {
            // b_{A y} = (id_A (x) b_y (x) id_{A^v}) o b_A
            Morphism bw = id(Object::unit());
            Word pre;
            for (const auto& a : X.terms[i]) {
                Object A({pre});
                bw = compose(tensor(id(A), atom_coev(a), id(rb::dual(A))), bw);
                pre.push_back(a);
            }
            out = add(out, compose(tensor(inclusion(X, i), inclusion(Xd, i)), bw));
        }
        return out;
    });
}

Morphism Category::ev(const Object& X) const {
    return cached("d" + key(X), [&] {
        Object Xd = rb::dual(X);
        Morphism out = zero(rb::tensor(Xd, X), Object::unit());
        for (size_t i = 0; i < X.terms.size(); ++i) {
            // d_{A y} = d_y o (id_{y^v} (x) d_A (x) id_y)
            Morphism dw = id(Object::unit());
            for (const auto& a : X.terms[i]) {
                Object y = Object::atom(a.label, a.duals);
                dw = compose(atom_ev(a), tensor(id(rb::dual(y)), dw, id(y)));
            }
            out = add(out, compose(dw, tensor(projection(Xd, i), projection(X, i))));
        }
        return out;
    });
}

Morphism Category::pivot(const Object& X) const {
    return cached("p" + key(X), [&] {
        Object Xdd = rb::dual(rb::dual(X));
        Morphism out = zero(X, Xdd);
        for (size_t i = 0; i < X.terms.size(); ++i) {
            Morphism pw = id(Object::unit());
            for (const auto& a : X.terms[i]) pw = tensor(pw, atom_pivot(a));
            out = add(out, chain(inclusion(Xdd, i), pw, projection(X, i)));
        }
        return out;
    });
}

Morphism Category::braiding_inv(const Object& x, const Object& y) const { return inverse(braiding(x, y)); }
Morphism Category::twist_inv(const Object& x) const { return inverse(twist(x)); }
Morphism Category::pivot_inv(const Object& x) const { return inverse(pivot(x)); }

Morphism Category::ev_right(const Object& x) const {
    Object xd = rb::dual(x);
    return cached("evr" + key(x), [&] {
        return compose(ev(xd), tensor(pivot(x), id(xd)));
    });
}

Morphism Category::coev_right(const Object& x) const {
    Object xd = rb::dual(x);
    return cached("coevr" + key(x), [&] {
        return compose(tensor(id(xd), pivot_inv(x)), coev(xd));
    });
}

Morphism Category::dual(const Morphism& f) const {
    const Object& a = f.dom;
    const Object& b = f.cod;
    Object ad = rb::dual(a), bd = rb::dual(b);
    Morphism step1 = tensor(id(bd), coev(a));
    Morphism mid = tensor(tensor(id(bd), f), id(ad));
    Morphism last = tensor(ev(b), id(ad));
    return compose(last, compose(mid, step1));
}

Morphism Category::dual_right(const Morphism& f) const {
    const Object& a = f.dom;
    const Object& b = f.cod;
    Object ad = rb::dual(a), bd = rb::dual(b);
    Morphism first = tensor(coev_right(a), id(bd));
    Morphism mid = tensor(tensor(id(ad), f), id(bd));
    Morphism last = tensor(id(ad), ev_right(b));
    return compose(last, compose(mid, first));
}

Morphism Category::inclusion(const Object& x, size_t term) const {
    Object t({x.terms.at(term)});
    Morphism m = zero(t, x);
    for (auto& [s, b] : m.blocks) {
        size_t off = 0;
        for (size_t i = 0; i < term; ++i) off += word_dim(x.terms[i], s);
        for (size_t k = 0; k < b.cols(); ++k) b(off + k, k) = Scalar::one(order_);
    }
    return m;
}

Morphism Category::projection(const Object& x, size_t term) const {
    Object t({x.terms.at(term)});
    Morphism m = zero(x, t);
    for (auto& [s, b] : m.blocks) {
        size_t off = 0;
        for (size_t i = 0; i < term; ++i) off += word_dim(x.terms[i], s);
        for (size_t k = 0; k < b.rows(); ++k) b(k, off + k) = Scalar::one(order_);
    }
    return m;
}

std::vector<Scalar> Category::flatten(const Morphism& f) const {
    std::vector<Scalar> v;
    for (int s : sectors()) {
        auto it = f.blocks.find(s);
        if (it == f.blocks.end()) continue;
        const Matrix& b = it->second;
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
    }
    return v;
}

size_t Category::flat_size(const Object& dom, const Object& cod) const {
    size_t n = 0;
    for (int s : sectors()) n += dim(dom, s) * dim(cod, s);
    return n;
}

Morphism Category::unflatten(const Object& dom, const Object& cod, const std::vector<Scalar>& v) const {
    Morphism m = zero(dom, cod);
    size_t k = 0;
    for (auto& [s, b] : m.blocks)
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) b(i, j) = v.at(k++);
    if (k != v.size()) fail("ShapeMismatch", "unflatten: wrong vector length");
    return m;
}

std::optional<std::vector<Scalar>> Category::coordinates(const std::vector<Morphism>& basis,
                                                         const Morphism& f) const {
    std::vector<Scalar> target = flatten(f);
    Matrix a(target.size(), basis.size(), order_);
    for (size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].dom != f.dom || basis[j].cod != f.cod) fail("ShapeMismatch", "coordinates: basis mismatch");
        auto col = flatten(basis[j]);
        for (size_t i = 0; i < col.size(); ++i) a(i, j) = col[i];
    }
    auto x = a.solve(Matrix::column(target).rows() ? Matrix::column(target) : Matrix(0, 1, order_));
    if (!x) return std::nullopt;
    std::vector<Scalar> out(basis.size(), Scalar::zero(order_));
    for (size_t j = 0; j < basis.size(); ++j) out[j] = (*x)(j, 0);
    return out;
}

Morphism Category::structural(const std::string& kind, const std::vector<Object>& objs) const {
    auto need = [&](size_t n) {
        if (objs.size() != n)
            fail("ShapeMismatch", kind + " takes " + std::to_string(n) + " objects, got " + std::to_string(objs.size()));
    };
    if (kind == "braiding") { need(2); return braiding(objs[0], objs[1]); }
    if (kind == "twist") { need(1); return twist(objs[0]); }
    if (kind == "eval") { need(1); return ev(objs[0]); }
    if (kind == "coev") { need(1); return coev(objs[0]); }
    if (kind == "eval'") { need(1); return ev_right(objs[0]); }
    if (kind == "coev'") { need(1); return coev_right(objs[0]); }
    if (kind == "pivot") { need(1); return pivot(objs[0]); }
    if (kind == "associator") {
        // Words are kept left-nested, so the associator is the identity of the
        // common normal form; all recoupling happens inside tensor().
        need(3);
        return id(rb::tensor(rb::tensor(objs[0], objs[1]), objs[2]));
    }
    fail("ParseError", "unknown structural morphism '" + kind + "'");
}

}  // namespace rb

namespace rb {

Report Category::check_ribbon_structure(const std::vector<Object>& gens) const {
    Report rep;
    std::vector<Object> all;
    for (const auto& g : gens) {
        all.push_back(g);
        all.push_back(rb::dual(g));
    }
    std::string bad;
    for (const auto& x : all) {
        Object xd = rb::dual(x);
        if (compose(tensor(id(x), ev(x)), tensor(coev(x), id(x))) != id(x)) bad = "left zig-zag on " + str(x);
        else if (compose(tensor(ev(x), id(xd)), tensor(id(xd), coev(x))) != id(xd)) bad = "left zig-zag on " + str(xd);
        else if (compose(tensor(ev_right(x), id(x)), tensor(id(x), coev_right(x))) != id(x)) bad = "right zig-zag on " + str(x);
        else if (compose(tensor(id(xd), ev_right(x)), tensor(coev_right(x), id(xd))) != id(xd))
            bad = "right zig-zag on " + str(xd);
        if (!bad.empty()) break;
    }
    rep.add("zig-zag", bad.empty(), bad);

    bad.clear();
    for (const auto& x : all) {
        Object xd = rb::dual(x);
        if (dual(twist(x)) != twist(xd)) {
            bad = "theta of dual differs from dual of theta on " + str(x);
            break;
        }
    }
    rep.add("twist duality", bad.empty(), bad);

    // (d_X (x) id_{YX}) o (id_{X^v} (x) f (x) pi_X^{-1}) o b_{X^v} = (id_Y (x) theta_X) o c_{X,Y} o f
    bad.clear();
    for (const auto& x : all) {
        for (const auto& y : all) {
            Object xy = rb::tensor(x, y);
            Object xd = rb::dual(x);
            for (const auto& f : hom_basis(Object::unit(), xy)) {
                Morphism lhs = chain(tensor(ev(x), id(rb::tensor(y, x))), tensor(id(xd), f, pivot_inv(x)), coev(xd));
                Morphism rhs = chain(tensor(id(y), twist(x)), braiding(x, y), f);
                if (lhs != rhs) {
                    bad = "pivot and twist incompatible on (" + str(x) + ", " + str(y) + ")";
                    break;
                }
            }
            if (!bad.empty()) break;
        }
        if (!bad.empty()) break;
    }
    rep.add("ribbon/pivot compatibility", bad.empty(), bad);

    // naturality on f : x (x) y -> z
    bad.clear();
    for (const auto& x : gens) {
        for (const auto& y : gens) {
            for (const auto& z : gens) {
                Object xy = rb::tensor(x, y);
                for (const auto& f : hom_basis(xy, z)) {
                    if (compose(twist(z), f) != compose(f, twist(xy))) bad = "twist naturality";
                    else if (compose(pivot(z), f) != compose(dual(dual(f)), pivot(xy))) bad = "pivot naturality";
                    for (const auto& w : gens) {
                        if (!bad.empty()) break;
                        Morphism l1 = compose(braiding(z, w), tensor(f, id(w)));
                        Morphism r1 = compose(tensor(id(w), f), braiding(xy, w));
                        Morphism l2 = compose(braiding(w, z), tensor(id(w), f));
                        Morphism r2 = compose(tensor(f, id(w)), braiding(w, xy));
                        if (l1 != r1 || l2 != r2) bad = "braiding naturality with " + str(w);
                    }
                    if (!bad.empty()) {
                        bad += " on a map " + str(xy) + " -> " + str(z);
                        break;
                    }
                }
                if (!bad.empty()) break;
            }
            if (!bad.empty()) break;
        }
        if (!bad.empty()) break;
    }
    rep.add("naturality", bad.empty(), bad);
    return rep;
}

}  // namespace rb
