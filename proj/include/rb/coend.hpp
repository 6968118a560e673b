#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rb/category.hpp"

namespace rb {

// The coend K = \int^X X (x) X^v with the structure needed for the S- and
// T-isomorphisms. Skeletal: K is the sum of a (x) a^v over simples a, i_a the
// summand inclusion. Hopf: K is H* with the coadjoint action, registered as an
// extra module "K" of `cat`, and i_X(x (x) xi) = xi((-) . x).
struct Coend {
    std::shared_ptr<const Category> cat;  // the input category, or its extension by K
    Object K;
    std::vector<Object> generators;       // simples or declared modules

    Morphism eps;          // K -> 1
    Morphism m;            // K (x) K -> K
    Morphism Lambda_raw;   // first integral solution, before normalization
    Morphism Lambda;       // normalized two-sided integral
    Morphism Q;            // K (x) K -> K (x) K
    Morphism T;            // K -> K
    Morphism apo_inv;      // K -> K, realizes B o Z on one-holed tori
    Morphism apo;          // inverse of apo_inv
    Morphism S;            // (eps (x) id) Q (id (x) Lambda)
    Scalar zeta;           // eps T Lambda
    Scalar lambda;         // Lambda = lambda Lambda_raw
    bool normalized = false;
    bool modular = false;
    std::string normalization_note;  // why normalization failed, if it did

    // Dinatural component X (x) X^v -> K for any object X.
    Morphism i(const Object& X) const;
    // S-endomorphism built from an arbitrary element 1 -> K in place of Lambda.
    Morphism S_from(const Morphism& integral) const;
    // Matrix of post-composition with f : K -> K on Hom(U, K) in the basis hom_basis(U, K).
    Matrix on_hom(const Morphism& f, const Object& U = Object::unit()) const;
};

// Throws NoIntegral if the integral equations have only the zero solution.
// A non-modular category yields normalized = false; Lambda then equals Lambda_raw.
std::shared_ptr<const Coend> build_coend(std::shared_ptr<const Category> c);

// Structural identities of K: dinaturality of i on generator morphisms, the
// defining relations of eps, m, Q, T and apo_inv against the dinatural family,
// two-sidedness of Lambda, (S_K)^2 = apo^{-1}, (S_K T_K)^3 = zeta (S_K)^2,
// and the operational modularity criterion.
Report check_coend(const Coend& K);

}  // namespace rb
