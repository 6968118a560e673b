#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rb/category.hpp"

namespace rb {

struct SkeletalData {
    std::vector<std::string> simples;  // index 0 is the unit
    std::vector<int> duals;
    // fusion[a][b] = sorted list of c with N_ab^c = 1
    std::vector<std::vector<std::vector<int>>> fusion;
    // F^{abc}_d[e,f] keyed by (a,b,c,d,e,f): ((ab)_e c)_d = sum_f F[e,f] (a(bc)_f)_d
    std::map<std::array<int, 6>, Scalar> F;
    // R^{ab}_c : the braiding maps the (ab)_c channel to R^{ab}_c times the (ba)_c channel
    std::map<std::array<int, 3>, Scalar> R;
    std::vector<Scalar> twist;
    std::vector<Scalar> pivot;
};

// Fusion-tree backend. The fiber of a word x_1...x_n over a simple c has the
// left-nested tree basis: intermediate channels e_1, ..., e_n = c with
// e_0 = 1 and e_k in e_{k-1} (x) x_k.
class SkeletalCategory : public Category {
public:
    SkeletalCategory(std::string name, int order, SkeletalData data);

    const SkeletalData& data() const { return d_; }
    int num_labels() const override { return static_cast<int>(d_.simples.size()); }
    const std::string& label_name(int label) const override { return d_.simples.at(label); }
    std::vector<int> sectors() const override;
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

    int sector_of(const Atom& a) const { return a.duals % 2 ? d_.duals[a.label] : a.label; }
    bool fuses(int a, int b, int c) const;
    const std::vector<int>& fusion(int a, int b) const { return d_.fusion[a][b]; }
    Scalar F(int a, int b, int c, int d, int e, int f) const;
    Scalar R(int a, int b, int c) const;
    // Quantum dimension of a simple in the standard duality gauge.
    Scalar qdim(int a) const;

    // Trees of a word over each sector, lexicographically ordered.
    using Tree = std::vector<int>;
    const std::vector<Tree>& trees(const Word& w, int sector) const;

private:
    SkeletalData d_;
    int n_ = 0;

    struct TreeTable {
        std::map<int, std::vector<Tree>> by_sector;
        std::map<int, std::map<Tree, size_t>> index;
    };
    mutable std::shared_mutex tree_mu_;
    mutable std::map<std::string, TreeTable> tree_cache_;
    const TreeTable& tree_table(const Word& w) const;

    // Recoupling between the split basis (a, b, alpha in V_a(X), beta in V_b(Y))
    // of X (x) Y over c and its tree basis; columns ordered by a, b, alpha, beta.
    struct Recoupling {
        Matrix L, Linv;
    };
    mutable std::shared_mutex rec_mu_;
    mutable std::map<std::string, std::shared_ptr<const Recoupling>> rec_cache_;
    std::shared_ptr<const Recoupling> recoupling(const Object& x, const Object& y, int c) const;
    Matrix word_recoupling(const Word& a, const Word& c, int sector) const;
    mutable std::map<std::string, Matrix> word_rec_cache_;

    // (F^{abc}_d)^{-1}, rows f, columns e, with the admissible index lists.
    struct FInv {
        std::vector<int> es, fs;
        Matrix inv;
    };
    mutable std::mutex finv_mu_;
    mutable std::map<std::array<int, 4>, FInv> finv_cache_;
    const FInv& finv(int a, int b, int c, int d) const;

    Scalar ev_scale(const Atom& a) const;
    mutable std::map<Atom, Scalar> ev_scale_cache_;
    mutable std::mutex ev_mu_;
};

}  // namespace rb
