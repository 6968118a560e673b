#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rb/category.hpp"

namespace rb {

// Elements of H^{(x)n} as sparse maps from the flattened multi-index.
using Tensor = std::map<long, Scalar>;

struct HopfData {
    int dim = 0;
    // mult[i][j] = e_i e_j, sparse
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> mult;
    std::vector<Scalar> unit;
    // comult[i] = Delta(e_i) as (j, k, c): sum c e_j (x) e_k
    std::vector<std::vector<std::tuple<int, int, Scalar>>> comult;
    std::vector<Scalar> counit;
    // antipode[i] = S(e_i)
    std::vector<std::vector<Scalar>> antipode;
    // R = sum R[j][k] e_j (x) e_k
    std::vector<std::vector<Scalar>> R;
    std::vector<Scalar> ribbon;
    struct Module {
        std::string name;
        size_t dim = 0;
        std::vector<Matrix> action;  // action[i] = rho(e_i)
    };
    std::vector<Module> modules;
};

// Finite-dimensional modules over a ribbon Hopf algebra. One sector (0);
// fibers are the underlying vector spaces, tensor products are Kronecker
// products with H acting through the coproduct.
class HopfCategory : public Category {
public:
    HopfCategory(std::string name, int order, HopfData data);

    const HopfData& data() const { return d_; }
    int dim_H() const { return d_.dim; }
    int num_labels() const override { return static_cast<int>(d_.modules.size()); }
    const std::string& label_name(int label) const override { return d_.modules.at(label).name; }
    std::vector<int> sectors() const override { return {0}; }
    size_t word_dim(const Word& w, int sector) const override;

    Morphism tensor(const Morphism& f, const Morphism& g) const override;
    using Category::tensor;
    Morphism braiding(const Object& x, const Object& y) const override;
    Morphism twist(const Object& x) const override;
    Morphism atom_coev(const Atom& a) const override;
    Morphism atom_ev(const Atom& a) const override;
    Morphism atom_pivot(const Atom& a) const override;
    std::vector<Morphism> hom_basis(const Object& a, const Object& b) const override;
    Report check_axioms() const override;

    // Same Hopf algebra with one more declared module appended.
    std::shared_ptr<const HopfCategory> with_module(HopfData::Module m) const;

    // --- algebra of H, elements as coefficient vectors ---
    using Elem = std::vector<Scalar>;
    Elem basis_elem(int i) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem antipode(const Elem& x) const;
    Elem antipode_inv(const Elem& x) const;
    Scalar counit(const Elem& x) const;
    Tensor comul(const Elem& x) const;
    Elem unit() const;
    Elem inv(const Elem& x) const;
    const Elem& ribbon() const { return ribbon_; }
    const Elem& ribbon_inv() const { return ribbon_inv_; }
    const Elem& drinfeld_u() const { return u_; }
    const Elem& pivotal() const { return g_; }

    Tensor tmul(const Tensor& x, const Tensor& y, int n) const;

    // Action of basis elements / arbitrary elements on a word or object.
    const std::vector<Matrix>& word_action(const Word& w) const;
    Matrix action(const Object& x, const Elem& h) const;
    Matrix word_action(const Word& w, const Elem& h) const;

private:
    HopfData d_;
    Elem ribbon_, ribbon_inv_, u_, g_;
    Matrix S_, Sinv_;
    mutable std::shared_mutex act_mu_;
    mutable std::map<std::string, std::vector<Matrix>> act_cache_;
    const std::vector<Matrix>& atom_action(const Atom& a) const;

    Report check_hopf() const;
};

}  // namespace rb
