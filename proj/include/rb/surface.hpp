#pragma once

#include <map>
#include <string>
#include <vector>

namespace rb {

// A boundary circle: eps = +1 outgoing, -1 incoming.
struct BoundaryCircle {
    int id = 0;
    int eps = 1;
    bool operator==(const BoundaryCircle& o) const { return id == o.id && eps == o.eps; }
};

struct ExtendedSurface {
    struct Component {
        int genus = 0;
        std::vector<BoundaryCircle> boundary;
        bool operator==(const Component& o) const { return genus == o.genus && boundary == o.boundary; }
    };
    std::vector<Component> components;
    bool operator==(const ExtendedSurface& o) const { return components == o.components; }
};

// A leg of a pants vertex: a boundary circle or one end of a cut. Side 0 of a
// cut is its outgoing copy and carries the label X, side 1 carries X^v.
struct Leg {
    bool cut = false;
    int id = 0;
    int side = 0;
    bool operator==(const Leg& o) const { return cut == o.cut && id == o.id && (!cut || side == o.side); }
    static Leg boundary(int id) { return {false, id, 0}; }
    static Leg cut_end(int id, int side) { return {true, id, side}; }
};

// legs[0] is the distinguished leg; the vector order is the cyclic order.
struct Vertex {
    int id = 0;
    std::vector<Leg> legs;
};

// Combinatorial fine marking. Vertex and cut ids are stable under moves, so
// move words can name their locations; equality of markings is taken after
// normalize(), which forgets ids and the orientation of cuts.
struct Marking {
    std::vector<BoundaryCircle> boundary;  // the surface's boundary list; block order
    std::vector<Vertex> vertices;

    std::vector<int> cut_ids() const;
    int vertex_index(int id) const;  // -1 if absent
    int eps(int boundary_id) const;
    // (vertex index, leg index) of side 0 and side 1 of a cut
    std::pair<std::pair<int, int>, std::pair<int, int>> cut_ends(int cut) const;
    std::pair<int, int> boundary_leg(int boundary_id) const;
    // Vertex indices per connected component, ordered by smallest index.
    std::vector<std::vector<int>> components() const;
    int component_genus(const std::vector<int>& comp) const;
    ExtendedSurface surface() const;
    // Throws InvalidMarking on dangling cut ends, repeated boundary legs or
    // vertices with more than `max_legs` legs.
    void validate(size_t max_legs = 3) const;
};

enum class MoveKind { Z, B, F, A, S, T, C };

// Location: a vertex id for Z, B, S, C and F^{-1}; a cut id for F, A, T.
// F^{-1} splits vertex `at` after its first `split` legs; the legs from
// `split` on move to a new vertex `new_vertex` joined by the new cut
// `new_cut`, whose side 1 stays on the old vertex. Negative ids mean "fresh".
struct Move {
    MoveKind kind = MoveKind::Z;
    int at = 0;
    bool inverse = false;
    int split = 0;
    int new_vertex = -1;
    int new_cut = -1;
};
using MoveWord = std::vector<Move>;  // applied first to last

std::string str(const Move& m);
std::string str(const MoveWord& w);
// "Z@v0", "B^-1@v2", "F@c1", "F^-1@v0:2", ...; words separated by spaces.
Move parse_move(const std::string& text);
MoveWord parse_word(const std::string& text);

// n <= 3: one vertex with legs b0..b_{n-1}. n > 3: a chain of n - 2 vertices.
// genus > 0 self-sews trailing pairs (b_{n+2i} out, b_{n+2i+1} in) of the
// standard marking with n + 2 genus holes.
Marking standard_marking(int n, const std::vector<int>& eps, int genus = 0);
// Ids of the second marking are shifted past those of the first.
Marking disjoint_union(const Marking& a, const Marking& b);

Marking apply_move(const Marking& M, const Move& mv);
// Vertex indices for an F-move at cut c: c is the last leg of va and the
// first leg of vb. False if neither end arrangement fits.
bool f_move_ends(const Marking& M, int c, int& va, int& vb);
// Position of side 0 of a self-cut of vertex index v whose side 1 follows it
// directly; -1 if there is none.
int torus_position(const Marking& M, int v);
// F-contraction of a cut allowing vertices with up to max_legs legs.
Marking merge_at_cut(const Marking& M, int c, size_t max_legs);
Marking apply_word(const Marking& M, const MoveWord& w);
// The move undoing mv on M (ids included).
Move inverse_move(const Marking& M, const Move& mv);

// alpha incoming, beta outgoing. beta's leg becomes side 0 of the new cut.
Marking sew_marking(const Marking& M, int alpha, int beta, int cut_id = -1);

// Canonical form: vertices reordered and renumbered, cuts renumbered by first
// appearance and oriented so that side 0 appears first.
struct Normalized {
    Marking marking;
    std::vector<int> vertex_from;   // new vertex index -> old vertex index
    std::map<int, int> cut_to;      // old cut id -> new cut id
    std::map<int, bool> flipped;    // old cut id -> orientation reversed
};
Normalized normalize(const Marking& M);
bool same_marking(const Marking& a, const Marking& b);

bool is_admissible(const MoveWord& w, const Marking& M);

struct RelationInstance {
    std::string name;
    Marking start;
    MoveWord lhs, rhs;
};
// rel in 1..13
std::vector<RelationInstance> relation_instances(int rel);

std::string to_json(const Marking& M);
Marking marking_from_json(const std::string& text);

}  // namespace rb
