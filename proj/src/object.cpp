#include "rb/object.hpp"

#include "rb/error.hpp"

namespace rb {

Word dual_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& a : out) ++a.duals;
    return out;
}

Object dual(const Object& x) {
    Object out;
    for (const auto& w : x.terms) out.terms.push_back(dual_word(w));
    return out;
}

Object tensor(const Object& x, const Object& y) {
    Object out;
    for (const auto& a : x.terms)
        for (const auto& b : y.terms) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            out.terms.push_back(std::move(w));
        }
    return out;
}

Object tensor_all(const std::vector<Object>& xs) {
    Object acc = Object::unit();
    for (const auto& x : xs) acc = tensor(acc, x);
    return acc;
}

Object direct_sum(const Object& x, const Object& y) {
    Object out = x;
    out.terms.insert(out.terms.end(), y.terms.begin(), y.terms.end());
    return out;
}

const Matrix& Morphism::block(int sector) const {
    auto it = blocks.find(sector);
    if (it == blocks.end()) fail("ShapeMismatch", "morphism has no block for sector " + std::to_string(sector));
    return it->second;
}

bool Morphism::operator==(const Morphism& o) const {
    if (dom != o.dom || cod != o.cod) return false;
    return blocks == o.blocks;
}

}  // namespace rb
