#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fbk/engine.hpp"
#include "fbk/fbcore.hpp"
#include "fbk/lincat.hpp"
#include "fbk/tensorcat.hpp"

namespace fbk {

// Version tag of the documented basis of the weight-two arity-three free space:
// chains (outer generator, inner generator) indexed outer * (3 d) + pair * d + inner,
// pairs (0,1), (0,2), (1,2) of the three inputs in lexicographic order.
inline constexpr const char* kBasisDocVersion = "fbk-free3-v1";

// Binary quadratic operad presented by its binary operations P(2) (dimension d,
// with the matrix of the transposition) and its arity-three relations.
struct OperadPresentation {
    std::string name;
    int arity2_dim = 0;
    RationalMatrix s2_action;          // d x d
    std::vector<SparseVec> relations;  // vectors of length 3 d^2
    std::string basis_doc_version = kBasisDocVersion;
    // Plugging the unit into the second input: op^l(x, 1) = unit_second[l] x.
    std::optional<std::vector<Rational>> unit_second;

    std::size_t free3_dim() const { return 3 * static_cast<std::size_t>(arity2_dim * arity2_dim); }
    // Throws FbError describing the first violated condition.
    void validate() const;
    bool s3_stable() const;
};

enum class BuiltinOperad { Com, Lie, Unit };
OperadPresentation builtin_operad(BuiltinOperad which);
// "builtin:com", "builtin:lie", "builtin:unit" or a path to a JSON document.
OperadPresentation load_operad(const std::string& source);
OperadPresentation parse_operad_json(const std::string& text);
std::string operad_to_json(const OperadPresentation& p);
// Deterministic digest of the presentation (used for cache keys).
std::string presentation_hash(const OperadPresentation& p);

// Relations of a binary operad given by evaluating every binary tree of the
// free space in a model algebra: the associative algebra for Lie (brackets as
// commutators) and the commutative algebra for Com.
std::vector<SparseVec> tree_oracle_relations(BuiltinOperad which);

// The weight-graded category Cat P. Morphisms m -> n have weight m - n.
class OperadCategory : public QuadraticEngine {
public:
    OperadCategory(OperadPresentation pres, int bound);
    const OperadPresentation& presentation() const { return pres_; }
    std::optional<UnitRule> unit_rule() const;

private:
    OperadPresentation pres_;
};
using OperadCategoryPtr = std::shared_ptr<const OperadCategory>;

constexpr int kMaxOperadBound = 8;
OperadCategoryPtr cat_from_operad(const OperadPresentation& pres, int bound);

// The surjection m -> n underlying a basis element (tau, chain of merges).
Map basis_surjection(const QuadraticEngine& e, int m, int n, std::size_t i);
// Cat Com -> kFS sending a basis element to its underlying surjection.
BasisMap surjection_functor(EnginePtr catcom, std::shared_ptr<const FunctionCategory> fs);

// Dimension of Cat P(m,n) computed from the arities of P alone: sum over
// surjections of the product of fibre dimensions.
Integer cat_dim_formula(const std::vector<Integer>& arity_dims, int m, int n);

// Cat P^u = kFI (x)_FB Cat P. With `graded` set the interchange drops every
// term that plugs a unit, which is the associated graded for both filtrations.
class UnitalCategory : public TensorCategory {
public:
    UnitalCategory(OperadCategoryPtr catp, UnitRule unit, bool graded, int bound);
    const OperadCategoryPtr& operad_category() const { return catp_; }
    bool graded() const { return graded_; }
    const UnitRule& unit() const { return unit_; }
    // Basis label data: injection middle -> target and the Cat P basis element.
    int kfi_weight(int s, int t, std::size_t i) const;
    int operad_weight(int s, int t, std::size_t i) const;

private:
    OperadCategoryPtr catp_;
    UnitRule unit_;
    bool graded_;
};
using UnitalCategoryPtr = std::shared_ptr<const UnitalCategory>;

UnitalCategoryPtr assemble_cat_pu(const OperadCategoryPtr& catp, int bound, bool graded = false);

enum class Filtration { F, G };
// Sub-bimodule of Cat P^u spanned by basis labels of filtration weight <= n.
FbBimodule filtration(const UnitalCategory& cat, Filtration which, int n);
// Multiplicativity of the filtration on all basis pairs up to the arity bound.
CategoryCheck check_filtration_multiplicative(const UnitalCategory& cat, Filtration which, int max_arity);
// Weight-n part of Cat P.
FbBimodule weight_component(const OperadCategory& cat, int n);

// Augmentation actions induced by Cat P^u: the right kFI-action on Cat P keeps
// the summand without kFI part, the left Cat P-action on kFI keeps the summand
// without Cat P part.
struct Augmentation {
    UnitalCategoryPtr catpu;
    // p in Cat P(b,c), u in kFI(a,b): returns q(p (x) [u]) in Cat P(a,c).
    SparseVec right(int a, int b, int c, std::size_t p, std::size_t u) const;
    // p in Cat P(b,c), u in kFI(a,b): returns p . [u] in kFI(a,c).
    SparseVec left(int a, int b, int c, std::size_t p, std::size_t u) const;
    // Matrix of x -> right(x, u) on Cat P(b,c) for fixed u.
    RationalMatrix right_matrix(int a, int b, int c, std::size_t u) const;
};
Augmentation augmentation_actions(const UnitalCategoryPtr& catpu);

}  // namespace fbk
