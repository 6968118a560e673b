#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "rb/object.hpp"
#include "rb/report.hpp"

namespace rb {

enum class Backend { Skeletal, Hopf };

// A finite ribbon category presented by explicit data. Morphisms are stored
// sector-wise (see Morphism); everything structural is derived from the
// primitives below, which each backend supplies.
class Category {
public:
    virtual ~Category() = default;

    Backend backend() const { return backend_; }
    int order() const { return order_; }
    const std::string& name() const { return name_; }

    // Atoms: simple objects (skeletal, label 0 is the unit) or modules (Hopf).
    virtual int num_labels() const = 0;
    virtual const std::string& label_name(int label) const = 0;
    int label_index(const std::string& name) const;
    Object atom(int label, int duals = 0) const;

    // Object syntax: terms separated by '+', atoms in a term separated by
    // '*' or whitespace, each optionally followed by one or more '^'
    // (one dual each). "1" is the unit.
    Object parse_object(const std::string& text) const;
    std::string str(const Object& x) const;
    std::string str(const Word& w) const;

    virtual std::vector<int> sectors() const = 0;
    virtual size_t word_dim(const Word& w, int sector) const = 0;
    size_t dim(const Object& x, int sector) const;

    // --- primitives ---
    virtual Morphism tensor(const Morphism& f, const Morphism& g) const = 0;
    virtual Morphism braiding(const Object& x, const Object& y) const = 0;
    virtual Morphism twist(const Object& x) const = 0;
    virtual Morphism atom_coev(const Atom& a) const = 0;
    virtual Morphism atom_ev(const Atom& a) const = 0;
    virtual Morphism atom_pivot(const Atom& a) const = 0;
    virtual std::vector<Morphism> hom_basis(const Object& a, const Object& b) const = 0;
    virtual Report check_axioms() const = 0;

    // --- generic structure ---
    Morphism zero(const Object& dom, const Object& cod) const;
    Morphism id(const Object& x) const;
    Morphism compose(const Morphism& g, const Morphism& f) const;
    // chain(g, f, e) = g o f o e
    template <class... Ms>
    Morphism chain(const Morphism& g, const Ms&... rest) const {
        if constexpr (sizeof...(rest) == 0) return g;
        else return compose(g, chain(rest...));
    }
    Morphism add(const Morphism& f, const Morphism& g) const;
    Morphism sub(const Morphism& f, const Morphism& g) const;
    Morphism scale(const Morphism& f, const Scalar& s) const;
    Morphism inverse(const Morphism& f) const;
    template <class... Ms>
    Morphism tensor(const Morphism& f, const Morphism& g, const Morphism& h, const Ms&... rest) const {
        return tensor(tensor(f, g), h, rest...);
    }

    // b_X : 1 -> X (x) X^v
    Morphism coev(const Object& x) const;
    // d_X : X^v (x) X -> 1
    Morphism ev(const Object& x) const;
    // pi_X : X -> X^vv, monoidal in X
    Morphism pivot(const Object& x) const;

    Morphism braiding_inv(const Object& x, const Object& y) const;
    Morphism twist_inv(const Object& x) const;
    Morphism pivot_inv(const Object& x) const;
    // d~_X : X (x) X^v -> 1
    Morphism ev_right(const Object& x) const;
    // b~_X : 1 -> X^v (x) X
    Morphism coev_right(const Object& x) const;
    // f^v : B^v -> A^v for f : A -> B
    Morphism dual(const Morphism& f) const;
    // Same, built from the right duality.
    Morphism dual_right(const Morphism& f) const;

    // Inclusion of / projection onto the i-th term of a direct sum.
    Morphism inclusion(const Object& x, size_t term) const;
    Morphism projection(const Object& x, size_t term) const;

    // Coordinates of f in a basis of its hom-space; nullopt if f is not in the span.
    std::optional<std::vector<Scalar>> coordinates(const std::vector<Morphism>& basis,
                                                   const Morphism& f) const;
    // Flattened entries of all blocks, in sector order.
    std::vector<Scalar> flatten(const Morphism& f) const;
    Morphism unflatten(const Object& dom, const Object& cod, const std::vector<Scalar>& v) const;
    size_t flat_size(const Object& dom, const Object& cod) const;

    Morphism structural(const std::string& kind, const std::vector<Object>& objs) const;

    // Backend-independent checks on a list of generating objects: both pairs
    // of zig-zag identities, the pivot form of the Z-identity against
    // (id (x) theta) o c, compatibility of twist with duality, and naturality
    // of braiding, twist and pivot on hom-space bases.
    Report check_ribbon_structure(const std::vector<Object>& gens) const;

protected:
    Backend backend_ = Backend::Skeletal;
    int order_ = 1;
    std::string name_;

    // Memoization helpers shared by the backends; readers take a shared lock.
    mutable std::shared_mutex cache_mu_;
    mutable std::map<std::string, Morphism> morph_cache_;
    template <class F>
    Morphism cached(const std::string& key, F&& build) const {
        {
            std::shared_lock lk(cache_mu_);
            auto it = morph_cache_.find(key);
            if (it != morph_cache_.end()) return it->second;
        }
        Morphism m = build();
        std::unique_lock lk(cache_mu_);
        return morph_cache_.emplace(key, std::move(m)).first->second;
    }
    std::string key(const Object& x) const;
    std::string key(const Word& w) const;
};

std::shared_ptr<const Category> load_category(const std::string& path);
std::shared_ptr<const Category> parse_category(const std::string& json_text, const std::string& name);

}  // namespace rb
