#pragma once

#include <memory>
#include <string>

#include "rb/coend.hpp"

namespace rb {

// The triple a correlator system is generated by: omega = Corr(sphere, 0 in,
// 3 out), eps = d_F o (Corr(disk, in) (x) id) and Phi : F -> F^v built from
// the incoming-incoming cylinder.
struct Generators {
    Morphism omega;  // 1 -> F F F
    Morphism eps;    // F -> 1
    Morphism Phi;    // F -> F^v
};

// A Frobenius structure on F together with the derived morphisms. Nothing is
// assumed about the axioms; see check_axioms.
struct FrobeniusData {
    std::shared_ptr<const Category> cat;
    Object F;
    Morphism m, eta, Delta, eps;
    Morphism kappa;    // eps o m
    Morphism Phi;      // ((eps o m) (x) id_{F^v}) o (id_F (x) b_F)
    Morphism Phi_inv;
    Morphism omega;    // (Delta (x) id) o Delta o eta
};

// Canonical iso (X (x) Y)^v -> Y^v (x) X^v; only the summand order differs.
Morphism dual_tensor_iso(const Category& C, const Object& X, const Object& Y);

// m, eta, Delta from the triple by contracting omega with Phi. Throws
// NotInvertible if Phi is not.
FrobeniusData from_generators(std::shared_ptr<const Category> cat, const Object& F, const Generators& g);
// Completes (m, eta, Delta, eps) with the derived morphisms. Throws
// NotInvertible if eps o m is degenerate.
FrobeniusData from_algebra(std::shared_ptr<const Category> cat, const Object& F, Morphism m, Morphism eta,
                           Morphism Delta, Morphism eps);
// Same, with Delta determined by m and the Frobenius form.
FrobeniusData from_algebra(std::shared_ptr<const Category> cat, const Object& F, Morphism m, Morphism eta,
                           Morphism eps);
Generators to_generators(const FrobeniusData& A);

// Itemized exact checks of every axiom a consistent system forces on F.
Report check_axioms(const FrobeniusData& A);

struct ModularCheck {
    bool modular = false;      // axioms and S_K-invariance
    bool s_invariant = false;
    Morphism v;         // i_F o (id_F (x) Phi) o Delta : F -> K
    Morphism residual;  // S_K o v - v
    Report report;
};
// Throws CategoryNotModular if S_K is not invertible.
ModularCheck check_modular(const FrobeniusData& A, const Coend& K);

// Algebra files: {"object": [summands], "format": "algebra" | "generators",
// "tensors": {name: {"i,j;k": [coordinates]}}}. Keys list summand indices of
// the domain and codomain tensor factors; the coordinates are taken in
// hom_basis(domain word, codomain word). Missing components are zero. The
// algebra format takes m, eta, eps and optionally Delta.
FrobeniusData load_algebra(std::shared_ptr<const Category> cat, const std::string& path);
FrobeniusData parse_algebra(std::shared_ptr<const Category> cat, const std::string& json_text);

// Components of f : X_1 ... X_p -> Y_1 ... Y_q where every factor is F or F^v
// with nF summands, in the key format above. Zero components are omitted.
std::string morphism_components_json(const Category& C, const Morphism& f, size_t nF, size_t p, size_t q);

}  // namespace rb
