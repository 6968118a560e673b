#include <algorithm>
#include <sstream>

#include "rb/error.hpp"
#include "rb/surface.hpp"

namespace rb {

namespace {

// "b0 b1 c0+ | c0- b2": vertices separated by '|', ids v0, v1, ...; eps lists
// the orientations of the boundary circles by increasing id.
Marking mk(const std::string& text, const std::vector<int>& eps) {
    Marking M;
    std::istringstream is(text);
    std::string tok;
    M.vertices.push_back({0, {}});
    while (is >> tok) {
        if (tok == "|") {
            M.vertices.push_back({static_cast<int>(M.vertices.size()), {}});
            continue;
        }
        if (tok[0] == 'b') M.vertices.back().legs.push_back(Leg::boundary(std::stoi(tok.substr(1))));
        else M.vertices.back().legs.push_back(Leg::cut_end(std::stoi(tok.substr(1, tok.size() - 2)), tok.back() == '+' ? 0 : 1));
    }
    std::vector<int> ids;
    for (const auto& v : M.vertices)
        for (const auto& l : v.legs)
            if (!l.cut) ids.push_back(l.id);
    std::sort(ids.begin(), ids.end());
    for (size_t i = 0; i < ids.size(); ++i) M.boundary.push_back({ids[i], eps.at(i)});
    M.validate();
    return M;
}

RelationInstance inst(std::string name, Marking start, const std::string& lhs, const std::string& rhs) {
    return {std::move(name), std::move(start), parse_word(lhs), parse_word(rhs)};
}

const std::vector<std::vector<int>> kSigns3 = {{1, 1, 1}, {1, -1, 1}, {-1, -1, 1}, {-1, -1, -1}};

}  // namespace

std::vector<RelationInstance> relation_instances(int rel) {
    std::vector<RelationInstance> out;
    switch (rel) {
        case 1: {
            Marking u = disjoint_union(standard_marking(3, {1, 1, 1}), standard_marking(3, {-1, 1, -1}));
            out.push_back(inst("W1 Z|B", u, "Z@v0 B@v1", "B@v1 Z@v0"));
            out.push_back(inst("W1 B|Z^-1", u, "B@v0 Z^-1@v1", "Z^-1@v1 B@v0"));
            break;
        }
        case 2: {
            // a cylinder glued to the third circle of a pair of pants
            Marking s = mk("b0 b1 c0+ | c0- b3", {1, 1, 1});
            out.push_back(inst("W2 B", s, "B@v0 F@c0", "F@c0 B@v0"));
            out.push_back(inst("W2 B^-1", s, "B^-1@v0 F@c0", "F@c0 B^-1@v0"));
            Marking t = mk("b0 b1 c0+ | c0- b3", {1, -1, -1});
            out.push_back(inst("W2 B mixed", t, "B@v0 F@c0", "F@c0 B@v0"));
            break;
        }
        case 3:
            for (auto e : std::vector<std::vector<int>>{{1, 1}, {1, -1}, {-1, -1}})
                out.push_back(inst("W3 n=2 " + std::to_string(e[0]) + std::to_string(e[1]), standard_marking(2, e), "Z@v0 Z@v0", ""));
            for (const auto& e : kSigns3)
                out.push_back(inst("W3 n=3 " + std::to_string(e[0]) + std::to_string(e[1]) + std::to_string(e[2]),
                                   standard_marking(3, e), "Z@v0 Z@v0 Z@v0", ""));
            break;
        case 4:
            for (const auto& e : kSigns3) {
                out.push_back(inst("W4 n1=2", mk("b0 b1 c0+ | c0- b2", e), "F@c0 Z^-1@v0", "Z@v1 Z^-1@v0 F@c0"));
                out.push_back(inst("W4 n1=1", mk("b0 c0+ | c0- b1 b2", e), "F@c0 Z^-1@v0 Z^-1@v0", "Z@v1 Z^-1@v0 F@c0"));
            }
            break;
        case 5:
            for (auto e : std::vector<std::vector<int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
                out.push_back(inst("W5 " + std::to_string(e[0]) + std::to_string(e[1]), standard_marking(2, e), "B@v0 Z@v0",
                                   "Z@v0 B@v0"));
            break;
        case 6:
            out.push_back(inst("W6", mk("b0 b1 c0+ | c0- c1+ | c1- b2", {1, 1, 1}), "F@c1 F@c0", "F@c0 F@c1"));
            out.push_back(inst("W6 mixed", mk("b0 b1 c0+ | c0- c1+ | c1- b2", {-1, 1, -1}), "F@c1 F@c0", "F@c0 F@c1"));
            break;
        case 7:
            out.push_back(inst("W7", mk("b0 b1 c0+ | b2 b3 c0-", {1, 1, 1, 1}), "A@c0 A@c0", ""));
            out.push_back(inst("W7 mixed", mk("b0 b1 c0+ | b2 b3 c0-", {1, -1, -1, 1}), "A@c0 A@c0", ""));
            out.push_back(inst("W7 inverse", mk("b0 b1 c0+ | b2 b3 c0-", {-1, 1, 1, -1}), "A^-1@c0 A@c0", ""));
            break;
        case 8:
            for (const auto& e : kSigns3)
                out.push_back(inst("W8", mk("b0 b1 c0+ | c1- b2 c0- | c1+", e), "A@c0 Z^-1@v0 F@c1 F@c0 Z@v1",
                                   "F@c1 Z@v2 F@c0"));
            break;
        case 9:
            // rotations put each cut last at both ends before its A-move
            for (auto e : std::vector<std::vector<int>>{{1, 1, 1, 1, 1}, {1, -1, 1, -1, -1}}) {
                Marking m = standard_marking(5, e);
                out.push_back(inst("W9", m, "Z@v1 A@c0 Z@v1 Z@v2 A@c1 Z@v1 A@c0 Z@v1", "Z@v2 A@c1 Z@v2 Z@v2 A@c0"));
                out.push_back(inst("W9 other", m, "Z@v2 A@c1 Z@v2 Z@v2 A@c0 Z@v0 Z@v0 A@c1 Z@v1 Z@v1",
                                   "Z@v1 A@c0 Z@v1 Z@v2 A@c1"));
            }
            break;
        case 10:
            for (auto e : std::vector<std::vector<int>>{{1, 1, 1, 1}, {-1, 1, 1, -1}}) {
                Marking m = standard_marking(4, e);
                out.push_back(inst("W10", m, "B@v0 Z@v1 A@c0 B@v0", "Z@v1 A@c0 Z@v1 B@v1 Z@v1 A@c0"));
                out.push_back(inst("W10 inverse", m, "B^-1@v0 Z@v1 A@c0 B^-1@v0", "Z@v1 A@c0 Z@v1 B^-1@v1 Z@v1 A@c0"));
            }
            break;
        case 13:
            for (auto e : std::vector<std::vector<int>>{{1, 1}, {1, -1}}) {
                Marking m = mk("b0 b1 c1+ | c1- c0+ c0-", e);
                out.push_back(inst("W13", m, "Z@v1 A@c1 Z@v0 Z@v0 Z@v1 A@c0 B@v0",
                                   "S@v1 Z@v1 A@c1 T^-1@c1 T@c0 A@c1 S^-1@v0"));
            }
            break;
        case 11:
            out.push_back(inst("W11", standard_marking(1, {1}, 1), "B@v0 Z@v0", "S@v0 S@v0"));
            out.push_back(inst("W11 in", standard_marking(1, {-1}, 1), "B@v0 Z@v0", "S@v0 S@v0"));
            break;
        case 12:
            out.push_back(inst("W12", standard_marking(1, {1}, 1), "T@c0 S@v0 T@c0 S@v0 T@c0 S@v0", "S@v0 S@v0 C@v0"));
            out.push_back(inst("W12 in", standard_marking(1, {-1}, 1), "T@c0 S@v0 T@c0 S@v0 T@c0 S@v0", "S@v0 S@v0 C@v0"));
            break;
        default:
            if (rel < 1 || rel > 13) fail("InvalidArgument", "relations are numbered 1..13");
    }
    return out;
}

}  // namespace rb
