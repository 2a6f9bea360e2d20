#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fbk/exactfield.hpp"
#include "fbk/fbcore.hpp"
#include "fbk/perm.hpp"

namespace fbk {

// A graded k-linear category with objects 0..N, a chosen homogeneous basis in
// every morphism space and kFB mapping into it. Morphisms a -> b live in C(a,b).
class LinearCategory : public std::enable_shared_from_this<LinearCategory> {
public:
    explicit LinearCategory(int bound) : bound_(bound) {}
    virtual ~LinearCategory() = default;

    int bound() const { return bound_; }
    virtual std::string name() const = 0;
    virtual std::size_t dim(int a, int b) const = 0;
    virtual int degree(int a, int b, std::size_t i) const {
        (void)a, (void)b, (void)i;
        return 0;
    }
    // y o x for basis elements x: a -> b and y: b -> c.
    virtual SparseVec compose(int a, int b, int c, std::size_t y, std::size_t x) const = 0;
    // Image of the permutation p of n letters.
    virtual SparseVec perm(int n, const Perm& p) const = 0;
    virtual bool has_differential() const { return false; }
    // Differential of a basis element, a vector of degree one higher.
    virtual SparseVec differential(int a, int b, std::size_t i) const {
        (void)a, (void)b, (void)i;
        return {};
    }
    // Generators: basis elements together with kFB generating the category.
    // Defaults to everything.
    virtual std::vector<std::size_t> generators(int a, int b) const;

    // Bilinear extension of compose.
    SparseVec compose(int a, int b, int c, const SparseVec& y, const SparseVec& x) const;
    SparseVec right_act(int a, int b, const SparseVec& x, const Perm& p) const;  // x o [p]
    SparseVec left_act(int a, int b, const Perm& p, const SparseVec& x) const;   // [p] o x
    SparseVec differential(int a, int b, const SparseVec& x) const;
    SparseVec identity(int n) const { return perm(n, identity_perm(n)); }

    // Degree-wise underlying bimodule. Keeps the category alive when it is owned
    // by a shared_ptr; otherwise the category must outlive the result.
    FbBimodule underlying() const;
    GradedFbBimodule underlying_graded() const;
    std::vector<int> degrees(int a, int b) const;

protected:
    int bound_;
};

using CategoryPtr = std::shared_ptr<const LinearCategory>;

// Actions of kFB restricted to the span of some basis elements of C(a,b); the
// span must be stable.
BiComponent restricted_component(const LinearCategory& c, int a, int b, const std::vector<std::size_t>& idx);

enum class Builtin { FB, FI, FIddag, FS, FA, Unit };
Builtin parse_builtin(const std::string& s);
std::string builtin_name(Builtin b);

// Linearized categories of finite sets; the basis of C(a,b) is the set of maps
// a -> b of the relevant kind in lexicographic order.
class FunctionCategory : public LinearCategory {
public:
    FunctionCategory(Builtin kind, int bound);
    std::string name() const override;
    std::size_t dim(int a, int b) const override;
    SparseVec compose(int a, int b, int c, std::size_t y, std::size_t x) const override;
    SparseVec perm(int n, const Perm& p) const override;
    std::vector<std::size_t> generators(int a, int b) const override;
    const MapSet& maps(int a, int b) const;
    MapKind kind() const { return mkind_; }
    Builtin which() const { return kind_; }

private:
    Builtin kind_;
    MapKind mkind_;
};

CategoryPtr build_builtin(Builtin which, int bound);

// Op category: C^op(a,b) = C(b,a), composition reversed.
class OppositeCategory : public LinearCategory {
public:
    explicit OppositeCategory(CategoryPtr base);
    std::string name() const override { return base_->name() + "^op"; }
    std::size_t dim(int a, int b) const override { return base_->dim(b, a); }
    int degree(int a, int b, std::size_t i) const override { return base_->degree(b, a, i); }
    SparseVec compose(int a, int b, int c, std::size_t y, std::size_t x) const override;
    SparseVec perm(int n, const Perm& p) const override { return base_->perm(n, inverse(p)); }
    bool has_differential() const override { return base_->has_differential(); }
    SparseVec differential(int a, int b, std::size_t i) const override { return base_->differential(b, a, i); }
    std::vector<std::size_t> generators(int a, int b) const override { return base_->generators(b, a); }
    const CategoryPtr& base() const { return base_; }
    using LinearCategory::compose;
    using LinearCategory::differential;

private:
    CategoryPtr base_;
};

// Unit/associativity/Leibniz/action checks. Each returns an empty string on
// success and a description of the first failure otherwise.
struct CategoryCheck {
    std::string failure;
    std::size_t checked = 0;
    bool ok() const { return failure.empty(); }
};

CategoryCheck check_unitality(const LinearCategory& c, int max_arity);
// Associativity on triples whose first factor is a generator, plus all triples
// with arities <= exhaustive_arity, plus `samples` random triples.
CategoryCheck check_associativity(const LinearCategory& c, int max_arity, int exhaustive_arity,
                                  std::size_t samples, std::uint64_t seed = 1);
CategoryCheck check_d_squared(const LinearCategory& c, int max_arity);
// Leibniz on pairs whose left or right factor is a generator (which suffices by
// associativity) plus random pairs.
CategoryCheck check_leibniz(const LinearCategory& c, int max_arity, std::size_t samples,
                            std::uint64_t seed = 1);
// The differential commutes with the kFB actions (d of unit is zero).
CategoryCheck check_differential_equivariant(const LinearCategory& c, int max_arity);

// A k-linear functor given on basis elements; verified on composition tables.
struct FunctorCheck {
    std::string failure;
    std::size_t checked = 0;
    bool ok() const { return failure.empty(); }
};
using BasisMap = std::function<SparseVec(int a, int b, std::size_t i)>;
FunctorCheck check_functor(const LinearCategory& src, const LinearCategory& dst, const BasisMap& f,
                           int max_arity, bool exhaustive_pairs);
// Rank of the induced map on C(a,b).
std::size_t functor_rank(const LinearCategory& src, const LinearCategory& dst, const BasisMap& f, int a,
                         int b);

}  // namespace fbk
