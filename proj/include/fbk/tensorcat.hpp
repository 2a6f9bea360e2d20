#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "fbk/lincat.hpp"

namespace fbk {

// The category A (x)_FB B built from two categories and an interchange
// B o A -> A (x) B. An element a (x) b with b: s -> x and a: x -> t stands for
// a o b. One side must be free over the symmetric group of the middle arity:
// either B(s,x) as a left S_x-module or A(x,t) as a right S_x-module. The
// basis is (a, orbit representative of b) or (orbit representative of a, b).
class TensorCategory : public LinearCategory {
public:
    enum class FreeSide { LeftOfB, RightOfA };
    struct Term {
        int mid = 0;
        SparseVec a;  // in A(mid, target)
        SparseVec b;  // in B(source, mid)
    };
    // b in B(m,k), a in A(l,m): returns b o a as a sum of a' (x) b'.
    using Interchange = std::function<std::vector<Term>(int l, int m, int k, std::size_t b, std::size_t a)>;
    // Orbit representatives: LeftOfB gives indices in B(s,x), RightOfA indices in A(x,t).
    using Reps = std::function<std::vector<std::size_t>(int src, int tgt)>;
    // For a basis element i returns (rep, sigma) with i proportional to
    // [sigma] o rep (LeftOfB) or rep o [sigma] (RightOfA).
    using Decompose = std::function<std::pair<std::size_t, Perm>(int src, int tgt, std::size_t i)>;
    using Differential = std::function<SparseVec(int s, int t, std::size_t i)>;

    struct Label {
        int mid = 0;
        std::size_t a = 0, b = 0;
    };

    TensorCategory(std::string name, CategoryPtr a, CategoryPtr b, FreeSide side, Reps reps, Decompose decompose,
                   Interchange interchange, int bound);

    std::string name() const override { return name_; }
    std::size_t dim(int s, int t) const override;
    int degree(int s, int t, std::size_t i) const override;
    SparseVec compose(int s, int m, int t, std::size_t y, std::size_t x) const override;
    SparseVec perm(int n, const Perm& p) const override;
    bool has_differential() const override { return static_cast<bool>(diff_); }
    SparseVec differential(int s, int t, std::size_t i) const override;
    std::vector<std::size_t> generators(int s, int t) const override;
    using LinearCategory::compose;
    using LinearCategory::differential;

    void set_differential(Differential d) {
        diff_ = std::move(d);
        diff_memo_.clear();
    }
    void set_interchange(Interchange i) { interchange_ = std::move(i); }
    // Generators: labels whose A-part and B-part are generators or identities.
    void set_generators(std::function<std::vector<std::size_t>(int, int)> g) { gens_ = std::move(g); }

    const CategoryPtr& left() const { return a_; }
    const CategoryPtr& right() const { return b_; }
    FreeSide side() const { return side_; }
    const std::vector<Label>& labels(int s, int t) const;
    std::size_t index_of(int s, int t, const Label& l) const;  // npos if absent
    // Normal form of a (x) b for arbitrary vectors a in A(x,t), b in B(s,x).
    SparseVec element(int s, int x, int t, const SparseVec& a, const SparseVec& b) const;

private:
    struct Table {
        std::vector<Label> labels;
        std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index;
    };
    const Table& table(int s, int t) const;

    std::string name_;
    CategoryPtr a_, b_;
    FreeSide side_;
    Reps reps_;
    Decompose decompose_;
    Interchange interchange_;
    Differential diff_;
    std::function<std::vector<std::size_t>(int, int)> gens_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<Table>> tables_;
    mutable std::map<std::tuple<int, int, int, std::size_t, std::size_t>, SparseVec> memo_;
    struct Dec {
        std::size_t rep;
        Perm sigma;
        Rational coeff;
    };
    const Dec& decomposition(int src, int tgt, std::size_t i) const;
    mutable std::map<std::tuple<int, int, std::size_t>, Dec> dec_memo_;
    // a o [sigma] (LeftOfB) or [sigma] o b (RightOfA) for a decomposition
    const SparseVec& moved(int s, int x, int t, std::size_t i, const Dec& d) const;
    mutable std::map<std::tuple<int, int, int, std::size_t, std::size_t>, SparseVec> move_memo_;
    mutable std::map<std::tuple<int, int, std::size_t>, SparseVec> diff_memo_;
};

}  // namespace fbk
