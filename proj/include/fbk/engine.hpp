#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fbk/exactfield.hpp"
#include "fbk/lincat.hpp"
#include "fbk/perm.hpp"

namespace fbk {

// Label of a weight-one generator n+1 -> n: the ordered surjection merging
// points i < j, decorated by a basis vector `label` of the binary operations.
struct GeneratorLabel {
    int i = 0, j = 0, label = 0;
};

// Coefficients for plugging a unit into a binary operation: op(x, 1) =
// second[label] x and op(1, x) = first[label] x.
struct UnitRule {
    std::vector<Rational> second;
    std::vector<Rational> first;
};

// A negative quadratic category over kFB whose weight-one generators
// V(n+1,n) = kS_n (x) k{(i<j, label)} are free as left S_n-modules and whose
// weight-two relations are sliced by the underlying ordered surjection.
// A morphism m -> n of weight w = m - n has basis (tau, g_1, ..., g_w) meaning
// tau o g_1 o ... o g_w with g_k a generator n+k -> n+k-1; only chains that
// are not pivots of the relation echelon form are kept.
class QuadraticEngine : public LinearCategory {
public:
    struct Data {
        std::string name;
        int labels = 0;
        // label action of the transposition: z^l.(12) = sum_l' swap(l', l) z^l'
        RationalMatrix swap;
        // Spanning vectors of the weight-two relations at (k+2, k), in the
        // tau = id chain coordinates. They are closed under S_{k+2} here.
        std::function<std::vector<SparseVec>(int k)> relations;
        // Cohomological degree of a weight-w morphism is degree_per_weight * w.
        int degree_per_weight = 0;
    };

    QuadraticEngine(Data data, int bound);

    std::string name() const override { return data_.name; }
    std::size_t dim(int a, int b) const override;
    int degree(int a, int b, std::size_t i) const override;
    SparseVec compose(int a, int b, int c, std::size_t y, std::size_t x) const override;
    SparseVec perm(int n, const Perm& p) const override;
    std::vector<std::size_t> generators(int a, int b) const override;
    using LinearCategory::compose;

    const Data& data() const { return data_; }
    int labels() const { return data_.labels; }
    std::size_t gen_count(int n) const;
    GeneratorLabel gen_label(int n, std::size_t g) const;
    std::size_t gen_index(int n, int i, int j, int label) const;

    // Chains g_1..g_w with target n.
    std::size_t chain_count(int n, int w) const;
    std::vector<std::size_t> chain_decode(int n, int w, std::size_t idx) const;
    std::size_t chain_encode(int n, const std::vector<std::size_t>& gens) const;

    // Pushes the chain (target n) through the injection u: a -> n + w and
    // returns terms coefficient * [v] (x) chain with v: a' -> n injective and
    // chain a -> a'. Without a unit rule, terms involving a unit are dropped.
    struct Pushed {
        Rational coeff;
        Map v;
        std::vector<std::size_t> chain;
    };
    std::vector<Pushed> push(int n, const std::vector<std::size_t>& chain, const Map& u,
                             const UnitRule* unit) const;

    // Relation echelon form and quotient basis on the tau = id slice at (n + w, n).
    const Echelon& ideal(int n, int w) const;
    const std::vector<std::size_t>& free_chains(int n, int w) const;
    std::size_t free_slot(int n, int w, std::size_t chain) const;  // npos when a pivot
    // Reduces a chain-coordinate vector to free-slot coordinates.
    SparseVec reduce(int n, int w, const SparseVec& chains) const;
    // Basis of the closed weight-two relation slice at (k+2, k).
    std::vector<SparseVec> weight2_relations(int k) const;

    // Basis element index for (tau, free slot).
    std::size_t basis_index(int n, int w, const Perm& tau, std::size_t slot) const;
    std::pair<Perm, std::size_t> basis_decode(int n, int w, std::size_t idx) const;
    // A chain (tau, g) expanded in the quotient basis of E(n+w, n).
    SparseVec from_chain(int n, const Perm& tau, const std::vector<std::size_t>& chain) const;

private:
    struct Slice {
        Echelon ideal;
        std::vector<std::size_t> free;
        std::map<std::size_t, std::size_t> slot;
    };
    const Slice& slice(int n, int w) const;
    Slice build_slice(int n, int w) const;
    Echelon closed_weight2(int k) const;

    Data data_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<Slice>> slices_;
    mutable std::map<std::tuple<int, int, int, std::size_t, std::size_t>, SparseVec> compose_memo_;
};

using EnginePtr = std::shared_ptr<const QuadraticEngine>;

}  // namespace fbk
