#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fbk/engine.hpp"
#include "fbk/lincat.hpp"
#include "fbk/operad.hpp"
#include "fbk/tensorcat.hpp"

namespace fbk {

// ---------------------------------------------------------------- absolute duals

// The engine whose opposite is the left quadratic dual of a negative quadratic
// category C: the same generator labels with the transposed label action, and
// weight-two relations the annihilator of those of C under the pairing that
// makes the chain bases dual. Weight w sits in cohomological degree w.
std::shared_ptr<const QuadraticEngine> dual_engine(const QuadraticEngine& cat);

// (C)^perp as a category: morphisms n -> n + w, the opposite of dual_engine.
class AbsoluteDual : public OppositeCategory {
public:
    explicit AbsoluteDual(std::shared_ptr<const QuadraticEngine> engine);
    const QuadraticEngine& engine() const { return *engine_; }
    const std::shared_ptr<const QuadraticEngine>& engine_ptr() const { return engine_; }

private:
    std::shared_ptr<const QuadraticEngine> engine_;
};
using AbsoluteDualPtr = std::shared_ptr<const AbsoluteDual>;
AbsoluteDualPtr absolute_dual(const QuadraticEngine& cat);

// Weight-two sizes used for the duality check.
struct DualityCount {
    int k = 0;
    std::size_t free_dim = 0;       // chains on the tau = id slice
    std::size_t ideal_dim = 0;      // relation slice of C
    std::size_t annihilator_dim = 0;  // relation slice of the dual
    std::size_t dual_dim = 0;       // morphisms k -> k+2 of the dual
    bool closure_stable = true;   // the annihilator needed no closing
};
DualityCount weight2_duality(const QuadraticEngine& cat, const QuadraticEngine& dual, int k);

// kFI^perp: morphisms b -> a (b >= a) in degree b - a, realised as the
// opposite of kFI-ddag.
class FiDual : public OppositeCategory {
public:
    explicit FiDual(int bound);
    std::string name() const override { return "kFI^perp"; }
    int degree(int a, int b, std::size_t i) const override;
};
std::shared_ptr<const FiDual> fi_dual(int bound);

// Independent computation of the quadratic dual of kFI from its datum: words
// of added points modulo the annihilator of the sign relations, compared with
// kFI-ddag through the bijection word -> sign(word) [injection].
struct FiDualReport {
    std::string failure;
    std::size_t checked = 0;
    bool ok() const { return failure.empty(); }
};
FiDualReport verify_fi_dual(int bound);

// The presentation sequence of kFI in degree two at (a, a+2).
struct PresentationSequence {
    std::size_t tensor_dim = 0;   // kFI<1> (x)_FB kFI<1>
    std::size_t image_dim = 0;    // kFI<2>
    std::size_t kernel_dim = 0;
    std::size_t sign_dim = 0;     // the embedded sign summand
    bool kernel_is_sign = false;
};
PresentationSequence presentation_sequence(int a);

// ---------------------------------------------------------------- orbit data

// Orbit representatives for tensor products over FB: kFI^perp(s,x) as a left
// S_x-module (increasing injections), (Cat P)^perp(x,t) as a right S_x-module
// and Cat P(s,x) as a left S_x-module (both by permutation-free slots).
TensorCategory::Reps fi_dual_reps(std::shared_ptr<const FiDual> fid);
TensorCategory::Decompose fi_dual_decompose(std::shared_ptr<const FiDual> fid);
TensorCategory::Reps dual_slot_reps(AbsoluteDualPtr dual);
TensorCategory::Decompose dual_slot_decompose(AbsoluteDualPtr dual);
TensorCategory::Reps engine_slot_reps(EnginePtr engine);
TensorCategory::Decompose engine_slot_decompose(EnginePtr engine);

// ---------------------------------------------------------------- relative duals

// (gr^G Cat P^u)^perp = Cat P (x)_FB kFI^perp with the Koszul differential of
// the right kFI-action on Cat P.
class RelativeDualG : public TensorCategory {
public:
    RelativeDualG(UnitalCategoryPtr catpu, std::shared_ptr<const FiDual> fid, int bound);
    const UnitalCategoryPtr& unital() const { return catpu_; }

private:
    UnitalCategoryPtr catpu_;
};
std::shared_ptr<const RelativeDualG> relative_dual_grG(const UnitalCategoryPtr& catpu, int bound);

// (gr^F Cat P^u)^perp = (Cat P)^perp (x)_FB kFI with the differential adjoint
// to the left weight-one action of Cat P on kFI.
class RelativeDualF : public TensorCategory {
public:
    RelativeDualF(UnitalCategoryPtr catpu, AbsoluteDualPtr dual, int bound);
    const UnitalCategoryPtr& unital() const { return catpu_; }
    const AbsoluteDualPtr& absolute() const { return dual_; }

private:
    UnitalCategoryPtr catpu_;
    AbsoluteDualPtr dual_;
};
std::shared_ptr<const RelativeDualF> relative_dual_grF(const UnitalCategoryPtr& catpu, int bound);

// ---------------------------------------------------------------- desuspension

// X^{L ddag}: degree lowered by b - a on (a,b), kFB acting through the sign
// twist, the differential multiplied by (-1)^b.
class Desuspension : public LinearCategory {
public:
    explicit Desuspension(CategoryPtr base);
    std::string name() const override { return base_->name() + "^Lddag"; }
    std::size_t dim(int a, int b) const override { return base_->dim(a, b); }
    int degree(int a, int b, std::size_t i) const override { return base_->degree(a, b, i) - (b - a); }
    SparseVec compose(int a, int b, int c, std::size_t y, std::size_t x) const override {
        return base_->compose(a, b, c, y, x);
    }
    SparseVec perm(int n, const Perm& p) const override { return scale(base_->perm(n, p), perm_sign(p)); }
    bool has_differential() const override { return base_->has_differential(); }
    SparseVec differential(int a, int b, std::size_t i) const override;
    std::vector<std::size_t> generators(int a, int b) const override { return base_->generators(a, b); }
    using LinearCategory::compose;
    using LinearCategory::differential;
    const CategoryPtr& base() const { return base_; }

private:
    CategoryPtr base_;
};
CategoryPtr desuspend(const CategoryPtr& dg);

// Support of a graded category in cohomological degrees on (s,t).
struct DegreeWindow {
    bool empty = true;
    int lo = 0, hi = 0;
};
DegreeWindow degree_window(const LinearCategory& c, int s, int t);

// An isomorphism between a dual engine and another engine on the same chain
// indices: tau o g_1 o ... o g_w maps to sign(tau)^t * prod c(g_k) times the
// same chain, with c(n,i,j) = (-1)^(alpha i + beta j + gamma n + delta).
struct SignedChainIso {
    int alpha = 0, beta = 0, gamma = 0, delta = 0;
    bool sign_twist = true;
    bool found = false;
    std::string description() const;
};
// Searches the sign family for a functor Desuspension(src^op) -> dst^op that is
// bijective and multiplicative up to max_arity.
SignedChainIso find_desuspension_iso(const EnginePtr& src, const EnginePtr& dst, int max_arity);
BasisMap signed_chain_map(const EnginePtr& src, const EnginePtr& dst, const SignedChainIso& iso);

}  // namespace fbk
