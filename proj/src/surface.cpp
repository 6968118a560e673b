#include "rb/surface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "rb/error.hpp"

namespace rb {

using json = nlohmann::json;

namespace {

std::string leg_str(const Leg& l) {
    if (!l.cut) return "b" + std::to_string(l.id);
    return "c" + std::to_string(l.id) + (l.side == 0 ? "+" : "-");
}

Leg parse_leg(const std::string& s) {
    if (s.size() >= 2 && s[0] == 'b') return Leg::boundary(std::stoi(s.substr(1)));
    if (s.size() >= 3 && s[0] == 'c' && (s.back() == '+' || s.back() == '-'))
        return Leg::cut_end(std::stoi(s.substr(1, s.size() - 2)), s.back() == '+' ? 0 : 1);
    fail("ParseError", "bad leg '" + s + "'");
}

int fresh_vertex(const Marking& M) {
    int m = -1;
    for (const auto& v : M.vertices) m = std::max(m, v.id);
    return m + 1;
}

int fresh_cut(const Marking& M) {
    auto c = M.cut_ids();
    return c.empty() ? 0 : c.back() + 1;
}

int vertex_or_fail(const Marking& M, int id) {
    int i = M.vertex_index(id);
    if (i < 0) fail("InvalidLocation", "no vertex v" + std::to_string(id));
    return i;
}

void require_cut(const Marking& M, int id) {
    auto c = M.cut_ids();
    if (!std::binary_search(c.begin(), c.end(), id)) fail("InvalidLocation", "no cut c" + std::to_string(id));
}

const char* kind_char(MoveKind k) {
    switch (k) {
        case MoveKind::Z: return "Z";
        case MoveKind::B: return "B";
        case MoveKind::F: return "F";
        case MoveKind::A: return "A";
        case MoveKind::S: return "S";
        case MoveKind::T: return "T";
        case MoveKind::C: return "C";
    }
    return "?";
}

bool at_is_cut(const Move& m) {
    return m.kind == MoveKind::A || m.kind == MoveKind::T || (m.kind == MoveKind::F && !m.inverse);
}

}  // namespace

// ---- Marking queries ----

std::vector<int> Marking::cut_ids() const {
    std::vector<int> out;
    for (const auto& v : vertices)
        for (const auto& l : v.legs)
            if (l.cut) out.push_back(l.id);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Marking::vertex_index(int id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

int Marking::eps(int boundary_id) const {
    for (const auto& b : boundary)
        if (b.id == boundary_id) return b.eps;
    fail("UnknownBoundary", "no boundary circle b" + std::to_string(boundary_id));
}

std::pair<std::pair<int, int>, std::pair<int, int>> Marking::cut_ends(int cut) const {
    std::pair<int, int> e[2] = {{-1, -1}, {-1, -1}};
    for (size_t v = 0; v < vertices.size(); ++v)
        for (size_t k = 0; k < vertices[v].legs.size(); ++k) {
            const Leg& l = vertices[v].legs[k];
            if (l.cut && l.id == cut) e[l.side] = {static_cast<int>(v), static_cast<int>(k)};
        }
    if (e[0].first < 0 || e[1].first < 0) fail("InvalidLocation", "cut c" + std::to_string(cut) + " has a missing end");
    return {e[0], e[1]};
}

std::pair<int, int> Marking::boundary_leg(int boundary_id) const {
    for (size_t v = 0; v < vertices.size(); ++v)
        for (size_t k = 0; k < vertices[v].legs.size(); ++k) {
            const Leg& l = vertices[v].legs[k];
            if (!l.cut && l.id == boundary_id) return {static_cast<int>(v), static_cast<int>(k)};
        }
    fail("UnknownBoundary", "no leg for boundary circle b" + std::to_string(boundary_id));
}

std::vector<std::vector<int>> Marking::components() const {
    size_t n = vertices.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int c : cut_ids()) {
        auto [a, b] = cut_ends(c);
        int ra = find(a.first), rb = find(b.first);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::map<int, std::vector<int>> groups;
    for (size_t v = 0; v < n; ++v) groups[find(static_cast<int>(v))].push_back(static_cast<int>(v));
    std::vector<std::vector<int>> out;
    for (auto& [r, g] : groups) out.push_back(g);
    return out;
}

int Marking::component_genus(const std::vector<int>& comp) const {
    int ends = 0;
    for (int v : comp)
        for (const auto& l : vertices[v].legs)
            if (l.cut) ++ends;
    return ends / 2 - static_cast<int>(comp.size()) + 1;
}

ExtendedSurface Marking::surface() const {
    std::vector<std::pair<size_t, ExtendedSurface::Component>> keyed;
    for (const auto& comp : components()) {
        ExtendedSurface::Component c;
        c.genus = component_genus(comp);
        size_t first = boundary.size() + static_cast<size_t>(c.genus);
        for (size_t i = 0; i < boundary.size(); ++i) {
            auto [v, k] = boundary_leg(boundary[i].id);
            if (std::find(comp.begin(), comp.end(), v) != comp.end()) {
                c.boundary.push_back(boundary[i]);
                first = std::min(first, i);
            }
        }
        keyed.push_back({first, c});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ExtendedSurface s;
    for (auto& [k, c] : keyed) s.components.push_back(c);
    return s;
}

void Marking::validate(size_t max_legs) const {
    std::map<int, int> bcount;
    std::map<std::pair<int, int>, int> ends;
    std::vector<int> ids;
    for (const auto& v : vertices) {
        ids.push_back(v.id);
        if (v.legs.size() > max_legs)
            fail("InvalidMarking", "vertex v" + std::to_string(v.id) + " has " + std::to_string(v.legs.size()) + " legs");
        for (const auto& l : v.legs) {
            if (l.cut) ++ends[{l.id, l.side}];
            else ++bcount[l.id];
        }
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) fail("InvalidMarking", "repeated vertex id");
    for (const auto& b : boundary) {
        if (b.eps != 1 && b.eps != -1) fail("InvalidMarking", "orientation of b" + std::to_string(b.id) + " is not +-1");
        if (bcount[b.id] != 1) fail("InvalidMarking", "boundary circle b" + std::to_string(b.id) + " is not on exactly one leg");
        bcount.erase(b.id);
    }
    for (const auto& [id, n] : bcount)
        if (n > 0) fail("InvalidMarking", "leg b" + std::to_string(id) + " is not in the boundary list");
    for (const auto& [key, n] : ends) {
        if (n != 1) fail("InvalidMarking", "cut end " + leg_str(Leg::cut_end(key.first, key.second)) + " repeated");
        if (!ends.count({key.first, 1 - key.second}))
            fail("InvalidMarking", "cut c" + std::to_string(key.first) + " has a missing end");
    }
}

// ---- move syntax ----

std::string str(const Move& m) {
    std::string s = kind_char(m.kind);
    if (m.inverse) s += "^-1";
    s += at_is_cut(m) ? "@c" : "@v";
    s += std::to_string(m.at);
    if (m.kind == MoveKind::F && m.inverse) s += ":" + std::to_string(m.split);
    return s;
}

std::string str(const MoveWord& w) {
    std::string s;
    for (const auto& m : w) {
        if (!s.empty()) s += " ";
        s += str(m);
    }
    return s;
}

Move parse_move(const std::string& text) {
    Move m;
    auto at = text.find('@');
    if (at == std::string::npos || at == 0) fail("ParseError", "bad move '" + text + "'");
    std::string head = text.substr(0, at), loc = text.substr(at + 1);
    static const std::string kinds = "ZBFASTC";
    auto k = kinds.find(head[0]);
    if (k == std::string::npos) fail("ParseError", "unknown move kind in '" + text + "'");
    m.kind = static_cast<MoveKind>(k);
    if (head.size() > 1) {
        if (head.substr(1) != "^-1") fail("ParseError", "bad move '" + text + "'");
        m.inverse = true;
    }
    if (loc.size() < 2 || (loc[0] != 'v' && loc[0] != 'c')) fail("ParseError", "bad location in '" + text + "'");
    if ((loc[0] == 'c') != at_is_cut(m)) fail("InvalidLocation", "wrong location kind in '" + text + "'");
    auto colon = loc.find(':');
    try {
        m.at = std::stoi(loc.substr(1, colon == std::string::npos ? std::string::npos : colon - 1));
        if (colon != std::string::npos) {
            if (!(m.kind == MoveKind::F && m.inverse)) fail("ParseError", "split position only for F^-1");
            m.split = std::stoi(loc.substr(colon + 1));
        } else if (m.kind == MoveKind::F && m.inverse) {
            fail("ParseError", "F^-1 needs a split position, e.g. F^-1@v0:2");
        }
    } catch (const std::logic_error&) {
        fail("ParseError", "bad number in '" + text + "'");
    }
    return m;
}

MoveWord parse_word(const std::string& text) {
    std::istringstream is(text);
    MoveWord w;
    std::string tok;
    while (is >> tok) w.push_back(parse_move(tok));
    return w;
}

// ---- constructions ----

Marking standard_marking(int n, const std::vector<int>& eps, int genus) {
    if (n < 0 || genus < 0 || static_cast<int>(eps.size()) != n)
        fail("InvalidArgument", "standard_marking needs n >= 0 and n orientations");
    std::vector<int> e = eps;
    for (int i = 0; i < genus; ++i) {
        e.push_back(1);
        e.push_back(-1);
    }
    int N = static_cast<int>(e.size());
    Marking M;
    for (int i = 0; i < N; ++i) M.boundary.push_back({i, e[i]});
    if (N <= 3) {
        Vertex v{0, {}};
        for (int i = 0; i < N; ++i) v.legs.push_back(Leg::boundary(i));
        M.vertices.push_back(v);
    } else {
        for (int k = 0; k <= N - 3; ++k) {
            Vertex v{k, {}};
            if (k == 0) v.legs = {Leg::boundary(0), Leg::boundary(1)};
            else v.legs = {Leg::cut_end(k - 1, 1), Leg::boundary(k + 1)};
            if (k < N - 3) v.legs.push_back(Leg::cut_end(k, 0));
            else v.legs.push_back(Leg::boundary(N - 1));
            M.vertices.push_back(v);
        }
    }
    for (int i = 0; i < genus; ++i) M = sew_marking(M, n + 2 * i + 1, n + 2 * i);
    return M;
}

Marking disjoint_union(const Marking& a, const Marking& b) {
    Marking out = a;
    int dv = fresh_vertex(a), dc = fresh_cut(a);
    int db = 0;
    for (const auto& x : b.boundary)
        for (const auto& y : a.boundary)
            if (x.id == y.id) db = 1;
    if (db) {
        int m = -1;
        for (const auto& y : a.boundary) m = std::max(m, y.id);
        db = m + 1;
    }
    for (auto x : b.boundary) {
        x.id += db;
        out.boundary.push_back(x);
    }
    for (auto v : b.vertices) {
        v.id += dv;
        for (auto& l : v.legs) l.id += l.cut ? dc : db;
        out.vertices.push_back(v);
    }
    return out;
}

Marking sew_marking(const Marking& M, int alpha, int beta, int cut_id) {
    if (alpha == beta) fail("OrientationMismatch", "cannot sew a circle to itself");
    if (M.eps(alpha) != -1) fail("OrientationMismatch", "b" + std::to_string(alpha) + " is not incoming");
    if (M.eps(beta) != 1) fail("OrientationMismatch", "b" + std::to_string(beta) + " is not outgoing");
    int c = cut_id >= 0 ? cut_id : fresh_cut(M);
    auto cuts = M.cut_ids();
    if (std::binary_search(cuts.begin(), cuts.end(), c)) fail("InvalidLocation", "cut id c" + std::to_string(c) + " in use");
    Marking out = M;
    auto [va, ka] = M.boundary_leg(alpha);
    auto [vb, kb] = M.boundary_leg(beta);
    out.vertices[va].legs[ka] = Leg::cut_end(c, 1);
    out.vertices[vb].legs[kb] = Leg::cut_end(c, 0);
    out.boundary.erase(std::remove_if(out.boundary.begin(), out.boundary.end(),
                                      [&](const BoundaryCircle& b) { return b.id == alpha || b.id == beta; }),
                       out.boundary.end());
    return out;
}

// ---- moves ----

bool f_move_ends(const Marking& M, int c, int& va, int& vb) {
    auto [e0, e1] = M.cut_ends(c);
    if (e0.first == e1.first) return false;
    auto last = [&](std::pair<int, int> e) { return e.second + 1 == static_cast<int>(M.vertices[e.first].legs.size()); };
    if (last(e0) && e1.second == 0) {
        va = e0.first;
        vb = e1.first;
        return true;
    }
    if (last(e1) && e0.second == 0) {
        va = e1.first;
        vb = e0.first;
        return true;
    }
    return false;
}

int torus_position(const Marking& M, int v) {
    const auto& legs = M.vertices[v].legs;
    for (size_t i = 0; i + 1 < legs.size(); ++i)
        if (legs[i].cut && legs[i].side == 0 && legs[i + 1].cut && legs[i + 1].id == legs[i].id) return static_cast<int>(i);
    return -1;
}

Marking merge_at_cut(const Marking& M, int c, size_t max_legs) {
    require_cut(M, c);
    int va, vb;
    if (!f_move_ends(M, c, va, vb))
        fail("PreconditionViolated", "F-move at c" + std::to_string(c) +
                                         ": the cut must be the last leg at one vertex and the distinguished leg at another");
    Marking out = M;
    auto& A = out.vertices[va].legs;
    const auto& Bl = M.vertices[vb].legs;
    A.pop_back();
    A.insert(A.end(), Bl.begin() + 1, Bl.end());
    if (A.size() > max_legs)
        fail("PreconditionViolated", "F-move at c" + std::to_string(c) + " would create a vertex with " +
                                         std::to_string(A.size()) + " legs");
    out.vertices.erase(out.vertices.begin() + vb);
    return out;
}

Marking apply_move(const Marking& M, const Move& mv) {
    Marking out = M;
    switch (mv.kind) {
        case MoveKind::Z: {
            auto& legs = out.vertices[vertex_or_fail(M, mv.at)].legs;
            if (legs.empty()) fail("InvalidLocation", "Z-move on a vertex without legs");
            if (mv.inverse) std::rotate(legs.rbegin(), legs.rbegin() + 1, legs.rend());
            else std::rotate(legs.begin(), legs.begin() + 1, legs.end());
            return out;
        }
        case MoveKind::B: {
            auto& legs = out.vertices[vertex_or_fail(M, mv.at)].legs;
            if (legs.size() < 2) fail("InvalidLocation", "B-move needs two legs");
            std::swap(legs[0], legs[1]);
            return out;
        }
        case MoveKind::F: {
            if (!mv.inverse) return merge_at_cut(M, mv.at, 3);
            int vi = vertex_or_fail(M, mv.at);
            auto legs = M.vertices[vi].legs;
            if (mv.split < 0 || mv.split > static_cast<int>(legs.size()))
                fail("InvalidLocation", "split position out of range");
            int nv = mv.new_vertex >= 0 ? mv.new_vertex : fresh_vertex(M);
            int nc = mv.new_cut >= 0 ? mv.new_cut : fresh_cut(M);
            if (M.vertex_index(nv) >= 0) fail("InvalidLocation", "vertex id v" + std::to_string(nv) + " in use");
            auto cuts = M.cut_ids();
            if (std::binary_search(cuts.begin(), cuts.end(), nc)) fail("InvalidLocation", "cut id c" + std::to_string(nc) + " in use");
            Vertex a{M.vertices[vi].id, {legs.begin(), legs.begin() + mv.split}};
            Vertex b{nv, {Leg::cut_end(nc, 0)}};
            b.legs.insert(b.legs.end(), legs.begin() + mv.split, legs.end());
            a.legs.push_back(Leg::cut_end(nc, 1));
            if (a.legs.size() > 3 || b.legs.size() > 3) fail("PreconditionViolated", "F^-1 would create a vertex with 4 legs");
            out.vertices[vi] = a;
            out.vertices.insert(out.vertices.begin() + vi + 1, b);
            return out;
        }
        case MoveKind::A: {
            require_cut(M, mv.at);
            auto [e0, e1] = M.cut_ends(mv.at);
            auto& A = out.vertices[e0.first].legs;
            auto& Bv = out.vertices[e1.first].legs;
            if (e0.first == e1.first || A.size() != 3 || Bv.size() != 3 || e0.second != 2 || e1.second != 2)
                fail("PreconditionViolated", "A-move at c" + std::to_string(mv.at) +
                                                 ": the cut must be the last leg of two distinct three-leg vertices");
            Leg u = A[0], u2 = A[1], v = Bv[0], v2 = Bv[1];
            if (!mv.inverse) {
                A = {u2, v, A[2]};
                Bv = {v2, u, Bv[2]};
            } else {
                A = {v2, u, A[2]};
                Bv = {u2, v, Bv[2]};
            }
            return out;
        }
        case MoveKind::S: {
            int vi = vertex_or_fail(M, mv.at);
            if (torus_position(M, vi) < 0)
                fail("PreconditionViolated", "S-move at v" + std::to_string(mv.at) +
                                                 " needs a self-cut whose two ends are adjacent, outgoing side first");
            return out;
        }
        case MoveKind::T:
            require_cut(M, mv.at);
            return out;
        case MoveKind::C:
            vertex_or_fail(M, mv.at);
            return out;
    }
    return out;
}

Marking apply_word(const Marking& M, const MoveWord& w) {
    Marking out = M;
    for (const auto& m : w) out = apply_move(out, m);
    return out;
}

Move inverse_move(const Marking& M, const Move& mv) {
    Move inv = mv;
    inv.inverse = !mv.inverse;
    if (mv.kind != MoveKind::F) return inv;
    if (!mv.inverse) {
        int va, vb;
        require_cut(M, mv.at);
        if (!f_move_ends(M, mv.at, va, vb)) fail("PreconditionViolated", "F-move precondition fails");
        inv.at = M.vertices[va].id;
        inv.split = static_cast<int>(M.vertices[va].legs.size()) - 1;
        inv.new_vertex = M.vertices[vb].id;
        inv.new_cut = mv.at;
        return inv;
    }
    inv.at = mv.new_cut >= 0 ? mv.new_cut : fresh_cut(M);
    return inv;
}

// ---- normalization ----

Normalized normalize(const Marking& M) {
    size_t n = M.vertices.size();
    std::map<int, size_t> bpos;
    for (size_t i = 0; i < M.boundary.size(); ++i) bpos[M.boundary[i].id] = i;
    std::vector<std::pair<size_t, int>> anchored;
    std::vector<int> free;
    for (size_t v = 0; v < n; ++v) {
        size_t best = SIZE_MAX;
        for (const auto& l : M.vertices[v].legs)
            if (!l.cut) best = std::min(best, bpos.at(l.id));
        if (best == SIZE_MAX) free.push_back(static_cast<int>(v));
        else anchored.push_back({best, static_cast<int>(v)});
    }
    std::sort(anchored.begin(), anchored.end());

    auto encode = [&](const std::vector<int>& order, std::map<int, int>& cut_to, std::map<int, bool>& flipped) {
        std::vector<long> key;
        cut_to.clear();
        flipped.clear();
        for (int v : order) {
            key.push_back(static_cast<long>(M.vertices[v].legs.size()));
            for (const auto& l : M.vertices[v].legs) {
                if (!l.cut) {
                    key.push_back(0);
                    key.push_back(l.id);
                    continue;
                }
                if (!cut_to.count(l.id)) {
                    int nid = static_cast<int>(cut_to.size());
                    cut_to[l.id] = nid;
                    flipped[l.id] = l.side != 0;
                }
                key.push_back(1);
                key.push_back(cut_to[l.id]);
                key.push_back(l.side ^ (flipped[l.id] ? 1 : 0));
            }
        }
        return key;
    };

    std::sort(free.begin(), free.end());
    std::vector<int> best_order;
    std::vector<long> best_key;
    std::map<int, int> best_cut;
    std::map<int, bool> best_flip;
    do {
        std::vector<int> order;
        for (auto& [p, v] : anchored) order.push_back(v);
        order.insert(order.end(), free.begin(), free.end());
        std::map<int, int> ct;
        std::map<int, bool> fl;
        auto key = encode(order, ct, fl);
        if (best_order.empty() || key < best_key) {
            best_order = order;
            best_key = key;
            best_cut = ct;
            best_flip = fl;
        }
    } while (std::next_permutation(free.begin(), free.end()));

    Normalized out;
    out.marking.boundary = M.boundary;
    out.vertex_from = best_order;
    out.cut_to = best_cut;
    out.flipped = best_flip;
    for (size_t i = 0; i < best_order.size(); ++i) {
        Vertex v{static_cast<int>(i), M.vertices[best_order[i]].legs};
        for (auto& l : v.legs)
            if (l.cut) {
                l.side ^= best_flip[l.id] ? 1 : 0;
                l.id = best_cut[l.id];
            }
        out.marking.vertices.push_back(v);
    }
    return out;
}

bool same_marking(const Marking& a, const Marking& b) {
    Marking x = normalize(a).marking, y = normalize(b).marking;
    if (!(x.boundary == y.boundary) || x.vertices.size() != y.vertices.size()) return false;
    for (size_t i = 0; i < x.vertices.size(); ++i)
        if (!(x.vertices[i].legs == y.vertices[i].legs)) return false;
    return true;
}

bool is_admissible(const MoveWord& w, const Marking& M) {
    Marking cur = M;
    for (const auto& m : w) {
        if (m.kind == MoveKind::B) {
            const auto& legs = cur.vertices[vertex_or_fail(cur, m.at)].legs;
            if (legs.size() >= 2 && !legs[0].cut && !legs[1].cut && cur.eps(legs[0].id) != cur.eps(legs[1].id))
                return false;
        }
        cur = apply_move(cur, m);
    }
    return true;
}

// ---- JSON ----

std::string to_json(const Marking& M) {
    json j;
    json comps = json::array();
    for (const auto& c : M.surface().components) {
        json b = json::array();
        for (const auto& x : c.boundary) b.push_back({{"id", x.id}, {"eps", x.eps}});
        comps.push_back({{"genus", c.genus}, {"boundary", b}});
    }
    j["components"] = comps;
    json bl = json::array();
    for (const auto& x : M.boundary) bl.push_back({{"id", x.id}, {"eps", x.eps}});
    j["boundary"] = bl;
    json vs = json::array(), dist = json::array();
    for (const auto& v : M.vertices) {
        json legs = json::array();
        for (const auto& l : v.legs) legs.push_back(leg_str(l));
        vs.push_back({{"id", v.id}, {"legs", legs}});
        dist.push_back(v.legs.empty() ? json(nullptr) : json(leg_str(v.legs[0])));
    }
    j["vertices"] = vs;
    j["cuts"] = M.cut_ids();
    j["distinguished"] = dist;
    return j.dump(1);
}

Marking marking_from_json(const std::string& text) {
    Marking M;
    try {
        json j = json::parse(text);
        for (const auto& b : j.at("boundary")) M.boundary.push_back({b.at("id").get<int>(), b.at("eps").get<int>()});
        for (const auto& v : j.at("vertices")) {
            Vertex x{v.at("id").get<int>(), {}};
            for (const auto& l : v.at("legs")) x.legs.push_back(parse_leg(l.get<std::string>()));
            M.vertices.push_back(x);
        }
    } catch (const json::exception& e) {
        fail("ParseError", std::string("marking file: ") + e.what());
    }
    M.validate();
    return M;
}

}  // namespace rb
