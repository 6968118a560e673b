#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rb/blocks.hpp"
#include "rb/frobenius.hpp"

namespace rb {

// The correlator system generated by a Frobenius structure on F: elementary
// correlators on pants vertices, glued along cuts, and the closed formula
// v^g_{p|q} = (Delta^(q) (x) id_{K^g}) o tau^(g) o m^(p).
class CorrelatorSystem {
public:
    CorrelatorSystem(FrobeniusData A, std::shared_ptr<const Coend> K);

    const FrobeniusData& algebra() const { return A_; }
    const BlockContext& blocks() const { return ctx_; }
    const Category& cat() const { return ctx_.cat(); }
    // tau : F -> F (x) K, the handle operator
    const Morphism& tau() const { return tau_; }

    Morphism m_n(int n) const;      // F^n -> F
    Morphism Delta_n(int n) const;  // F -> F^n
    Morphism tau_n(int n) const;    // F -> F K^n
    // F^p -> F^q K^g
    Morphism closed(int g, int p, int q) const;

    // Correlator of a vertex with legs of the given orientations (at most 3),
    // as a morphism 1 -> F^{e1} ... F^{er}.
    Morphism elementary(const std::vector<int>& eps) const;

    // Correlator of M as a column in its block space: elementary correlators
    // on the vertices of the cut-open surface, sewn back along the cuts in
    // the given order (default increasing ids).
    Matrix cut_and_sew(const Marking& M, std::vector<int> order = {}) const;

    // The closed formula for the surface of M as a column in hom(W)
    // coordinates, W the object of reference_map(M): incoming circles are
    // bent up with b~, then all F-factors are braided into boundary order.
    Matrix closed_column(const Marking& M) const;

private:
    FrobeniusData A_;
    std::shared_ptr<const Coend> K_;
    BlockContext ctx_;
    Morphism tau_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<int>, Morphism> elem_;
};

struct ConsistencyOptions {
    int max_genus = 1;
    int max_holes = 4;  // p + q
    bool relations = true;
    int threads = 0;    // 0: CORR_THREADS, else hardware concurrency
};

// Item names start with the kind of check: "algebra", "closed formula",
// "sewing order", "moves", "S-invariance", "relation", "sewing",
// "nondegeneracy". Surfaces are written g<genus> followed by one '+' (out) or
// '-' (in) per boundary circle.
Report check_consistency(const CorrelatorSystem& S, const ConsistencyOptions& opt = {});

// Reads omega, eps and Phi back from the sphere correlators with three
// outgoing, one incoming and two incoming circles, and rebuilds the algebra.
Report verify_roundtrip(const CorrelatorSystem& S);

// True if every item whose name starts with `prefix` passed (and one exists).
bool passed(const Report& r, const std::string& prefix);

// Worker count from CORR_THREADS, falling back to the hardware concurrency.
int default_threads();

std::string surface_name(int genus, const std::vector<int>& eps);

}  // namespace rb
