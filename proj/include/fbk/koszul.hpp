#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fbk/homalg.hpp"
#include "fbk/operad.hpp"
#include "fbk/quadratic.hpp"
#include "fbk/tensorcat.hpp"

namespace fbk {

// ---------------------------------------------------------------- canonical elements

// One summand coeff * left (x) right of a canonical element at arity a, with
// left in L(a, a+1) and right in R(a+1, a).
struct CanonicalTerm {
    Rational coeff;
    SparseVec left;
    SparseVec right;
};

struct CanonicalElement {
    std::string pair;
    int arity = 0;
    CategoryPtr left_cat, right_cat;
    std::vector<CanonicalTerm> terms;
};

// Sum over x in a+1 of sign(x) [i_x] (x) [i_x^op]; L = kFI, R = kFI^perp.
CanonicalElement fi_canonical_element(int a, int bound);
// Sum over generators g: n+1 -> n with identity permutation of g^vee (x) g;
// L = (Cat P)^perp, R = Cat P.
CanonicalElement operad_canonical_element(const OperadCategoryPtr& catp, const AbsoluteDualPtr& dual, int n);

struct CanonicalCheck {
    bool bimodule_map = false;  // [r] e = e [r] for Coxeter generators r
    bool adjoint = false;       // pairing with the dual basis returns the basis
    std::string failure;
    bool ok() const { return bimodule_map && adjoint; }
};
CanonicalCheck check_canonical_element(const CanonicalElement& e);

// ---------------------------------------------------------------- twisted tensor complexes

// A twisted tensor product over FB of two categories, itself a complex of
// bimodules over a left and a right DG category. Only the compositions needed
// for the outer actions (with permutations) are defined on the tensor basis.
class TwistedBimodule : public TensorCategory {
public:
    using TensorCategory::TensorCategory;
    virtual CategoryPtr acting_left() const = 0;
    virtual CategoryPtr acting_right() const = 0;
    // c in acting_left(t, t2), m in this(s, t): returns c . m in this(s, t2).
    virtual SparseVec act_left(int s, int t, int t2, const SparseVec& c, const SparseVec& m) const = 0;
    // r in acting_right(s2, s), m in this(s, t): returns m . r in this(s2, t).
    virtual SparseVec act_right(int s2, int s, int t, const SparseVec& m, const SparseVec& r) const = 0;
    // Provenance: the canonical elements twisting the differential.
    virtual std::vector<std::string> twists() const = 0;
};
using TwistedBimodulePtr = std::shared_ptr<const TwistedBimodule>;

// The composition law restricted to a permutation on one side.
TensorCategory::Interchange permutation_interchange(CategoryPtr a, CategoryPtr b);

// VK(Cat P^u) = Cat P^u (x)_Cat P (gr^G Cat P^u)^perp, underlying Cat P^u (x)_FB kFI^perp,
// differential d(a (x) xi) = (-1)^|a| sum_y sign(y) (a [i_y]) (x) ([i_y^op] xi).
class DualizingVK : public TwistedBimodule {
public:
    DualizingVK(UnitalCategoryPtr catpu, std::shared_ptr<const RelativeDualG> relG, int bound);
    CategoryPtr acting_left() const override { return catpu_; }
    CategoryPtr acting_right() const override { return relG_; }
    SparseVec act_left(int s, int t, int t2, const SparseVec& c, const SparseVec& m) const override;
    SparseVec act_right(int s2, int s, int t, const SparseVec& m, const SparseVec& r) const override;
    std::vector<std::string> twists() const override { return {"fi"}; }
    const UnitalCategoryPtr& unital() const { return catpu_; }

private:
    UnitalCategoryPtr catpu_;
    std::shared_ptr<const RelativeDualG> relG_;
};
std::shared_ptr<const DualizingVK> dualizing_vk(const UnitalCategoryPtr& catpu, int bound);

// K^vee(Cat P^u) = (gr^F Cat P^u)^perp (x)_kFI Cat P^u, underlying (Cat P)^perp (x)_FB Cat P^u,
// differential d(gamma (x) a) = (-1)^|gamma| sum_g (gamma g^vee) (x) (g a).
class DualizingKvee : public TwistedBimodule {
public:
    DualizingKvee(UnitalCategoryPtr catpu, std::shared_ptr<const RelativeDualF> relF, int bound);
    CategoryPtr acting_left() const override { return relF_; }
    CategoryPtr acting_right() const override { return catpu_; }
    SparseVec act_left(int s, int t, int t2, const SparseVec& c, const SparseVec& m) const override;
    SparseVec act_right(int s2, int s, int t, const SparseVec& m, const SparseVec& r) const override;
    std::vector<std::string> twists() const override { return {"operad"}; }

private:
    UnitalCategoryPtr catpu_;
    std::shared_ptr<const RelativeDualF> relF_;
};
std::shared_ptr<const DualizingKvee> dualizing_kvee(const UnitalCategoryPtr& catpu, int bound);

// K^vee (x)_{Cat P^u} VK, underlying (Cat P)^perp (x)_FB Cat P^u (x)_FB kFI^perp, with
// d(gamma (x) a (x) rho) = (-1)^|gamma| (gamma e' a (x) rho + gamma (x) a e'' rho).
class CompositeComplex : public TwistedBimodule {
public:
    CompositeComplex(std::shared_ptr<const DualizingVK> vk, std::shared_ptr<const RelativeDualF> relF, int bound);
    CategoryPtr acting_left() const override { return relF_; }
    CategoryPtr acting_right() const override { return vk_->acting_right(); }
    SparseVec act_left(int s, int t, int t2, const SparseVec& c, const SparseVec& m) const override;
    SparseVec act_right(int s2, int s, int t, const SparseVec& m, const SparseVec& r) const override;
    std::vector<std::string> twists() const override { return {"operad", "fi"}; }
    const std::shared_ptr<const DualizingVK>& inner() const { return vk_; }

private:
    std::shared_ptr<const DualizingVK> vk_;
    std::shared_ptr<const RelativeDualF> relF_;
};
std::shared_ptr<const CompositeComplex> composite_complex(const UnitalCategoryPtr& catpu, int bound);

// Leibniz rule for both module actions on generators, plus d^2 = 0.
CategoryCheck check_twisted_bimodule(const TwistedBimodule& m, int max_arity, std::size_t max_per_component = 0);

// ---------------------------------------------------------------- twisted hom complexes

// Orbits of the left S_x-action on C(t,x); the action must be free and monomial.
struct FreeOrbits {
    std::vector<std::size_t> reps;
    // basis element k = coeff * [sigma] o reps[orbit]
    struct Entry {
        std::size_t orbit = 0;
        Perm sigma;
        Rational coeff;
    };
    std::vector<Entry> entries;
};
FreeOrbits free_left_orbits(const LinearCategory& c, int t, int x);

// hom_FB(X, Y)(s,t) = sum_x hom_{S_x}(X(t,x), Y(s,x)) with differential
// d phi = d_Y phi - (-1)^|phi| phi d_X + sum over twists of
// sign(|phi|) L phi(R -), the twist terms taken from canonical elements with
// L in Y(x, x+1) and R in X(x+1, x). A basis element (x, orbit j, q) is the
// map sending the j-th free generator of X(t,x) to the basis element q of Y(s,x).
class TwistedHom : public DgBimodule {
public:
    using TermSource = std::function<std::vector<CanonicalTerm>(int x)>;
    struct Twist {
        std::string name;
        TermSource terms;
        int parity = 0;  // twist sign (-1)^(parity |phi|)
        int sign = 1;
    };
    TwistedHom(std::string name, CategoryPtr x, CategoryPtr y, std::vector<Twist> twists, int bound);

    std::string name() const override { return name_; }
    int bound() const override { return bound_; }
    std::size_t dim(int s, int t) const override { return labels(s, t).size(); }
    int degree(int s, int t, std::size_t i) const override;
    SparseVec differential(int s, int t, std::size_t i) const override;
    SparseVec right_perm(int s, int t, std::size_t i, const Perm& p) const override;
    SparseVec left_perm(int s, int t, const Perm& p, std::size_t i) const override;
    using DgBimodule::differential;

    struct Label {
        int x = 0;
        std::size_t orbit = 0, value = 0;
    };
    const std::vector<Label>& labels(int s, int t) const;
    std::size_t index_of(int s, int t, const Label& l) const;
    // phi(xi) for the basis element i of H(s,t) and xi in X(t,x).
    SparseVec evaluate(int s, int t, std::size_t i, const SparseVec& xi) const;
    // The element of H(s,t) in component x determined by its values on the free generators.
    SparseVec from_values(int s, int t, int x, const std::vector<SparseVec>& values) const;
    // Precomposition: for rho in X(t, t2), returns phi(- o rho) in H(s, t2).
    SparseVec pull(int s, int t, int t2, const SparseVec& rho, std::size_t i) const;
    const std::vector<Twist>& twist_list() const { return twists_; }
    const CategoryPtr& source_cat() const { return x_; }
    const CategoryPtr& value_cat() const { return y_; }
    const FreeOrbits& orbits(int t, int x) const;

private:
    std::string name_;
    CategoryPtr x_, y_;
    std::vector<Twist> twists_;
    int bound_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<FreeOrbits>> orbits_;
    struct Table {
        std::vector<Label> labels;
        std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index;
    };
    mutable std::map<std::pair<int, int>, std::unique_ptr<Table>> tables_;
    const Table& table(int s, int t) const;
};

// Twist terms of the kFI pair as maps of Y = kFI and X = kFI^perp.
TwistedHom::TermSource fi_twist_terms(int bound);

// hom^{e'}(kFI^perp, kFI) with its unit 1 -> hom.
std::shared_ptr<const TwistedHom> bgg_hom(int bound);
ChainMap bgg_unit(int bound);

// kFI (x)_FB hom(kFI^perp, 1) with the kFI-twist and its counit to 1.
class CounitComplex : public DgBimodule {
public:
    CounitComplex(std::shared_ptr<const TwistedHom> hom, int bound);
    std::string name() const override { return "kFI (x) hom(kFI^perp, 1)"; }
    int bound() const override { return bound_; }
    std::size_t dim(int s, int t) const override { return labels(s, t).size(); }
    int degree(int s, int t, std::size_t i) const override;
    SparseVec differential(int s, int t, std::size_t i) const override;
    SparseVec right_perm(int s, int t, std::size_t i, const Perm& p) const override;
    SparseVec left_perm(int s, int t, const Perm& p, std::size_t i) const override;
    using DgBimodule::differential;
    // Counit b (x) psi -> b psi(1).
    SparseVec counit(int s, int t, std::size_t i) const;

    struct Label {
        int x = 0;
        std::size_t inj = 0;  // increasing injection x -> t
        std::size_t h = 0;    // basis element of hom(s, x)
    };
    const std::vector<Label>& labels(int s, int t) const;

private:
    std::shared_ptr<const TwistedHom> hom_;
    std::shared_ptr<const FunctionCategory> fi_;
    int bound_;
    mutable std::recursive_mutex mu_;
    struct Table {
        std::vector<Label> labels;
        std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index;
    };
    mutable std::map<std::pair<int, int>, std::unique_ptr<Table>> tables_;
    const Table& table(int s, int t) const;
    SparseVec element(int s, int x, int t, std::size_t inj_any, const SparseVec& h) const;
};
ChainMap bgg_counit(int bound);

// hom^{e', e''}((gr^G Cat P^u)^perp, (gr^F Cat P^u)^perp) with its unit. The
// twist signs are solved so that d^2 = 0 on the given window; the chosen
// signs are recorded in the twists.
std::shared_ptr<const TwistedHom> composite_hom(const UnitalCategoryPtr& catpu, int bound, int solve_arity);
// The same complex with explicit twist signs: (-1)^(fi_parity |phi|) on the kFI
// twist and op_sign (-1)^(op_parity |phi|) on the operadic one.
std::shared_ptr<const TwistedHom> composite_hom_with(const UnitalCategoryPtr& catpu, int bound, int fi_parity,
                                                    int op_parity, int op_sign);
ChainMap composite_unit(const UnitalCategoryPtr& catpu, int bound, int solve_arity);
// The unit 1 -> H for a hom complex whose X(s,s) and Y(s,s) are kS_s.
ChainMap hom_unit(const std::shared_ptr<const TwistedHom>& h, const std::string& name);

// ---------------------------------------------------------------- Chevalley-Eilenberg

// (kFI^ddag)^op (x)_FB Cat Lie: at (s,t) the sum over n of Cat Lie(s, t+n)
// coinvariant under the sign twist of S_n on the last n outputs, in cohomological
// degree -n, with the differential induced by bracketing output i < j into
// place i with sign (-1)^(j - t) (1-based j).
class CeComplex : public DgBimodule {
public:
    explicit CeComplex(OperadCategoryPtr catlie);
    std::string name() const override { return "CE(Lie; Cat Lie)"; }
    int bound() const override { return lie_->bound(); }
    std::size_t dim(int s, int t) const override { return labels(s, t).size(); }
    int degree(int s, int t, std::size_t i) const override;
    SparseVec differential(int s, int t, std::size_t i) const override;
    SparseVec right_perm(int s, int t, std::size_t i, const Perm& p) const override;
    SparseVec left_perm(int s, int t, const Perm& p, std::size_t i) const override;
    using DgBimodule::differential;

    struct Label {
        int x = 0;             // number of outputs t + n
        std::size_t lie = 0;   // orbit representative in Cat Lie(s, x)
    };
    const std::vector<Label>& labels(int s, int t) const;
    // Class of an element of Cat Lie(s, x) in CE(s,t).
    SparseVec project(int s, int t, int x, const SparseVec& v) const;
    // The lift d-tilde on Cat Lie(s, x) -> Cat Lie(s, x - 1).
    SparseVec lift_differential(int s, int t, int x, const SparseVec& v) const;
    const OperadCategoryPtr& lie() const { return lie_; }

private:
    OperadCategoryPtr lie_;
    mutable std::recursive_mutex mu_;
    struct Table {
        std::vector<Label> labels;
        std::map<std::pair<int, std::size_t>, std::size_t> index;
        // per x: basis element -> (orbit label index, coefficient)
        std::map<int, std::vector<std::pair<std::size_t, Rational>>> proj;
    };
    mutable std::map<std::pair<int, int>, std::unique_ptr<Table>> tables_;
    const Table& table(int s, int t) const;
};

struct CeComparison {
    bool agree = false;
    bool iso_found = false;
    bool coset_inverse = true;  // relabel by the inverse of the shuffle of u
    bool shuffle_sign = false;  // include the sign of that shuffle
    std::map<int, int> weight_signs;  // solved sign per number n of exterior outputs
    std::vector<std::string> detail;  // per-bidegree verdicts
    std::string failure;
};
CeComparison ce_compare(const UnitalCategoryPtr& catcomu, const OperadCategoryPtr& catlie, int max_arity);

// ---------------------------------------------------------------- H^0

// dim ker(d: degree 0 -> 1) of (gr^G kFA)^perp(s,t) computed directly on
// surjections, without the tensor machinery.
std::size_t brute_force_h0_grG_kfa(int s, int t);

}  // namespace fbk
