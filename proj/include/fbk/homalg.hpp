#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fbk/exactfield.hpp"
#include "fbk/lincat.hpp"
#include "fbk/perm.hpp"

namespace fbk {

// A cochain complex of FB-bimodules: a homogeneous basis of every component
// (s,t), the outer actions of S_s (on the right) and S_t (on the left) and a
// differential of cohomological degree one.
class DgBimodule {
public:
    virtual ~DgBimodule() = default;
    virtual std::string name() const = 0;
    virtual int bound() const = 0;
    virtual std::size_t dim(int s, int t) const = 0;
    virtual int degree(int s, int t, std::size_t i) const = 0;
    virtual SparseVec differential(int s, int t, std::size_t i) const = 0;
    // x o [p] for p in S_s.
    virtual SparseVec right_perm(int s, int t, std::size_t i, const Perm& p) const = 0;
    // [p] o x for p in S_t.
    virtual SparseVec left_perm(int s, int t, const Perm& p, std::size_t i) const = 0;

    SparseVec differential(int s, int t, const SparseVec& v) const;
    SparseVec act(int s, int t, const Perm& left, const SparseVec& v, const Perm& right) const;
};
using DgBimodulePtr = std::shared_ptr<const DgBimodule>;

// The morphism spaces of a (DG) linear category viewed as a bimodule complex.
class CategoryBimodule : public DgBimodule {
public:
    explicit CategoryBimodule(CategoryPtr c) : c_(std::move(c)) {}
    std::string name() const override { return c_->name(); }
    int bound() const override { return c_->bound(); }
    std::size_t dim(int s, int t) const override { return c_->dim(s, t); }
    int degree(int s, int t, std::size_t i) const override { return c_->degree(s, t, i); }
    SparseVec differential(int s, int t, std::size_t i) const override {
        return c_->has_differential() ? c_->differential(s, t, i) : SparseVec{};
    }
    SparseVec right_perm(int s, int t, std::size_t i, const Perm& p) const override {
        return c_->right_act(s, t, SparseVec::unit(i), p);
    }
    SparseVec left_perm(int s, int t, const Perm& p, std::size_t i) const override {
        return c_->left_act(s, t, p, SparseVec::unit(i));
    }
    using DgBimodule::differential;
    const CategoryPtr& category() const { return c_; }

private:
    CategoryPtr c_;
};
DgBimodulePtr as_dg_bimodule(CategoryPtr c);

// A copy of a complex whose differential is replaced on one bidegree; used as
// a negative control for the checks below.
DgBimodulePtr corrupt_differential(DgBimodulePtr base, int s, int t, std::size_t i, SparseVec replacement);

// One bidegree of a complex split by cohomological degree. terms[k] lists the
// basis indices of degree lo + k; d[k] maps degree lo + k to lo + k + 1.
struct BidegreeComplex {
    int s = 0, t = 0;
    int lo = 0;
    std::vector<std::vector<std::size_t>> terms;
    std::vector<RationalMatrix> d;

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    std::size_t dim_at(int deg) const;
    // Complex given directly by matrices, d[k]: dims[k] -> dims[k+1].
    static BidegreeComplex from_matrices(int lo, const std::vector<std::size_t>& dims,
                                         const std::vector<RationalMatrix>& d);
};
// With `reversed` each degree lists its basis in reverse order.
BidegreeComplex bidegree_complex(const DgBimodule& c, int s, int t, bool reversed = false);

struct Window {
    int s_lo = 0, s_hi = 0, t_lo = 0, t_hi = 0;
    static Window square(int n) { return {0, n, 0, n}; }
    std::vector<std::pair<int, int>> bidegrees() const;
};

struct Verdict {
    bool ok = true;
    std::string failure;  // first offending bidegree
    std::size_t checked = 0;
};
Verdict check_d_squared(const BidegreeComplex& c);
Verdict check_d_squared(const DgBimodule& c, const Window& w);

// Homology of one bidegree. Characters are traces on pairs of class
// representatives (partitions of s, then of t, in the order of partitions()).
struct HomologyReport {
    int s = 0, t = 0;
    std::map<int, std::size_t> term_dims;
    std::map<int, std::size_t> homology_dims;
    std::map<int, std::vector<Rational>> characters;
    bool euler_ok() const;
    std::size_t total_homology() const;
};
HomologyReport homology(const BidegreeComplex& c);
HomologyReport homology(const DgBimodule& c, int s, int t, bool with_characters = false);

// Bidegree-preserving degree-zero map between complexes, given on basis elements.
struct ChainMap {
    DgBimodulePtr source, target;
    std::function<SparseVec(int s, int t, std::size_t i)> map;
    std::string name;
};
ChainMap identity_map(const DgBimodulePtr& c);
ChainMap zero_map(const DgBimodulePtr& a, const DgBimodulePtr& b);
Verdict check_chain_map(const ChainMap& f, const Window& w);

// Mapping cone at one bidegree: cone^k = A^{k+1} + B^k.
BidegreeComplex mapping_cone(const ChainMap& f, int s, int t);

struct QuasiIsoDetail {
    int s = 0, t = 0;
    bool cone_acyclic = true;
    bool rank_criterion = true;  // dims agree and the induced map is bijective
    std::map<int, std::size_t> source_homology, target_homology;
};
struct QuasiIsoReport {
    bool quasi_iso = true;
    bool criteria_agree = true;
    std::vector<QuasiIsoDetail> detail;
    std::string failure;
};
QuasiIsoReport is_quasi_iso(const ChainMap& f, const Window& w, int workers = 1);
QuasiIsoDetail quasi_iso_at(const ChainMap& f, int s, int t);

// ---------------------------------------------------------------- characters

// Class function on S_n: values on partitions(n), in that order.
using ClassFunction = std::vector<Rational>;

// Irreducible characters by the Murnaghan-Nakayama rule; rows indexed by
// partitions(n) (the irreducible labels), columns by partitions(n) (classes).
const std::vector<std::vector<Integer>>& character_table(int n);
Integer mn_character(const std::vector<int>& lambda, const std::vector<int>& mu);
Integer centralizer_order(const std::vector<int>& mu);
constexpr int kMaxCharacterTable = 8;

// Character of a representation of S_a^op x S_b given by a trace function.
std::vector<Rational> bicharacter_of(int a, int b, const std::function<Rational(const Perm& right, const Perm& left)>& trace);
// Multiplicities of irreducibles lambda (x) mu in a bicharacter: entries keyed by
// the index of lambda in partitions(a) and of mu in partitions(b).
std::map<std::pair<std::size_t, std::size_t>, Integer> decompose_bicharacter(int a, int b, const std::vector<Rational>& chi);
// Bicharacter of the outer product of irreducibles.
std::vector<Rational> irreducible_bicharacter(const std::vector<int>& lambda, const std::vector<int>& mu);
std::string partition_name(const std::vector<int>& lambda);

// ---------------------------------------------------------------- parallel jobs

// Runs jobs[0..n) with the given number of worker threads.
void run_parallel(std::size_t n, int workers, const std::function<void(std::size_t)>& job);

}  // namespace fbk
