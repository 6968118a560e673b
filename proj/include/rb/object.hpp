#pragma once

#include <map>
#include <string>
#include <vector>

#include "rb/matrix.hpp"

namespace rb {

// A simple object (skeletal backend) or a declared module (Hopf backend),
// dualized `duals` times. a^vv is a different atom from a.
struct Atom {
    int label = 0;
    int duals = 0;
    bool operator==(const Atom& o) const { return label == o.label && duals == o.duals; }
    bool operator<(const Atom& o) const { return label != o.label ? label < o.label : duals < o.duals; }
};

// Left-nested tensor word; the empty word is the unit.
using Word = std::vector<Atom>;

// Formal direct sum of words, in a fixed order. A single empty word is the unit.
struct Object {
    std::vector<Word> terms;

    Object() = default;
    explicit Object(std::vector<Word> t) : terms(std::move(t)) {}
    static Object unit() { return Object({Word{}}); }
    static Object atom(int label, int duals = 0) { return Object({Word{Atom{label, duals}}}); }

    bool operator==(const Object& o) const { return terms == o.terms; }
    bool operator!=(const Object& o) const { return !(*this == o); }
    bool operator<(const Object& o) const { return terms < o.terms; }
    bool is_unit() const { return terms.size() == 1 && terms[0].empty(); }
};

Word dual_word(const Word& w);
Object dual(const Object& x);
Object tensor(const Object& x, const Object& y);
Object tensor_all(const std::vector<Object>& xs);
Object direct_sum(const Object& x, const Object& y);

// Block-diagonal morphism: one matrix per sector, mapping the dom fiber to the
// cod fiber. Sectors whose fibers are both empty may be absent.
struct Morphism {
    Object dom, cod;
    std::map<int, Matrix> blocks;

    const Matrix& block(int sector) const;
    bool operator==(const Morphism& o) const;
    bool operator!=(const Morphism& o) const { return !(*this == o); }
};

}  // namespace rb
