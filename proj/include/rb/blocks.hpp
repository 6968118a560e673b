#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rb/coend.hpp"
#include "rb/surface.hpp"

namespace rb {

// Hom(1, W) with its basis and a fast coordinate map.
struct HomSpace {
    Object W;
    std::vector<Morphism> basis;
    std::vector<size_t> rows;  // pivot positions in the flattened morphism
    Matrix pivot_inv;          // inverse of the basis restricted to `rows`
    size_t dim() const { return basis.size(); }
};

// Everything a block computation needs: the coend, the bulk object F and
// memoized hom-spaces. The S-move uses `S`, which defaults to S_K.
class BlockContext {
public:
    BlockContext(std::shared_ptr<const Coend> coend, Object F);

    const Category& cat() const { return *coend_->cat; }
    const Coend& coend() const { return *coend_; }
    const Object& F() const { return F_; }
    const Morphism& S() const { return S_; }
    void set_S(Morphism s) { S_ = std::move(s); }

    const HomSpace& hom(const Object& W) const;
    // Coordinates of f : 1 -> W in hom(W).basis, as a column.
    std::vector<Scalar> coords(const HomSpace& H, const Morphism& f) const;
    // Matrix of f o (-) : Hom(1, dom f) -> Hom(1, cod f).
    Matrix post(const Morphism& f) const;

    // Memo for move-local matrices keyed by a description of their objects.
    Matrix memo(const std::string& key, const std::function<Matrix()>& build) const;

private:
    std::shared_ptr<const Coend> coend_;
    Object F_;
    Morphism S_;
    mutable std::mutex mu_;
    mutable std::map<std::string, std::unique_ptr<HomSpace>> homs_;
    mutable std::map<std::string, Matrix> memo_;
};

// Block space of a marking: the direct sum over labelings of the cuts by
// simples of the tensor product over vertices of Hom(1, W_v). Sectors are in
// lexicographic order of labels over increasing cut ids; inside a sector the
// basis is the product of the vertex bases, last vertex fastest.
struct BlockSpace {
    struct Sector {
        std::map<int, int> label;  // cut id -> simple
        std::vector<const HomSpace*> vertex;
        size_t offset = 0, dim = 0;
    };
    Marking marking;
    std::vector<int> cuts;
    std::vector<Sector> sectors;
    size_t dim = 0;

    // Object on a leg for given cut labels.
    static Object leg_object(const BlockContext& ctx, const Marking& M, const Leg& l, const std::map<int, int>& label);
};

BlockSpace block_space(const BlockContext& ctx, const Marking& M);

// A linear map between block spaces that acts on the vertices `in_v` of the
// source and `out_v` of the target (indices) and is the identity on the
// remaining vertices, which are matched by id. `local` returns the block for a
// pair of sectors, rows over the product of the out_v bases and columns over
// the product of the in_v bases (first vertex slowest).
struct LocalGroup {
    std::vector<int> in_v, out_v;
    std::function<Matrix(const BlockSpace::Sector&, const BlockSpace::Sector&)> local;
};
// Cut correspondence: (source cut, target cut, labels related by duality).
// Target cuts not listed are free; source cuts not listed are summed over.
struct CutLink {
    int from, to;
    bool dual = false;
};
Matrix build_map(const BlockContext& ctx, const BlockSpace& in, const BlockSpace& out, const std::vector<CutLink>& links,
                 const std::vector<LocalGroup>& groups);

Matrix move_matrix(const BlockContext& ctx, const Marking& M, const Move& mv);
// Composite over the word, first move applied first.
Matrix word_matrix(const BlockContext& ctx, const Marking& M, const MoveWord& w);
// Block space of M -> block space of normalize(M).marking.
Matrix canonical_map(const BlockContext& ctx, const Marking& M);
// Block space of M -> block space of sew_marking(M, alpha, beta, cut_id).
Matrix sew_map(const BlockContext& ctx, const Marking& M, int alpha, int beta, int cut_id = -1);
// Block space of a disjoint union from the two factors: the Kronecker product
// of their blocks, up to the reordering of sectors.
Matrix union_map(const BlockContext& ctx, const Marking& a, const Marking& b);

// Identification of the block space with Hom(1, F^{e1} ... F^{en} K^g) by
// contracting the cuts in the given order (all chain cuts, default increasing).
// Requires the contracted vertex to list the boundary legs in boundary order,
// followed by each handle as adjacent (side 0, side 1).
struct Reference {
    Object W;
    Matrix map;  // block space -> hom(W) coordinates
};
Reference reference_map(const BlockContext& ctx, const Marking& M, std::vector<int> order = {});

// Morphism 1 -> W for a coordinate column of hom(W).
Morphism from_coords(const BlockContext& ctx, const Object& W, const std::vector<Scalar>& c);

// Exact comparison of both sides of every instance of the listed relations.
Report check_relations(const BlockContext& ctx, const std::vector<int>& rels);

std::string matrix_json(const Matrix& m);

}  // namespace rb
