#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "fbk/exactfield.hpp"
#include "fbk/perm.hpp"

namespace fbk {

class FbError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A representation of S_n given by the matrices of s_1..s_{n-1}.
struct SymAction {
    int n = 0;
    std::size_t dim = 0;
    std::vector<RationalMatrix> gens;

    static SymAction trivial(int n, std::size_t dim = 1);
    static SymAction sign(int n);
    static SymAction regular(int n);
    // Checks invertibility and the Coxeter relations; throws FbError.
    void validate() const;
    // Matrix of a group element acting on the left (column vectors).
    RationalMatrix left_matrix(const Perm& p) const;
    // Matrix of x -> x.p for a right action.
    RationalMatrix right_matrix(const Perm& p) const;
};

// Component of an FB-bimodule at (a,b): right S_a, left S_b.
struct BiComponent {
    int a = 0, b = 0;
    std::size_t dim = 0;
    std::vector<RationalMatrix> right;  // generators of S_a
    std::vector<RationalMatrix> left;   // generators of S_b

    SymAction right_action() const { return SymAction{a, dim, right}; }
    SymAction left_action() const { return SymAction{b, dim, left}; }
    RationalMatrix right_matrix(const Perm& p) const { return right_action().right_matrix(p); }
    RationalMatrix left_matrix(const Perm& p) const { return left_action().left_matrix(p); }
    // Checks each action and that the two actions commute.
    void validate() const;
    static BiComponent zero(int a, int b);
};

class FbModule {
public:
    explicit FbModule(int bound = 0) : bound_(bound) {}
    int bound() const { return bound_; }
    void set(int n, SymAction act);
    const SymAction& at(int n) const;  // zero action if absent
    std::vector<int> support() const;
    std::size_t dim(int n) const { return at(n).dim; }

    static FbModule triv(int bound);
    static FbModule sgn(int bound);
    static FbModule unit(int bound);  // k at arity 0
    // Single arity n with the given action.
    static FbModule concentrated(int bound, SymAction act);

private:
    int bound_;
    std::map<int, SymAction> comps_;
    mutable std::map<int, SymAction> zeros_;
};

// Lazily evaluated, memoized FB-bimodule truncated at arity bound N.
class FbBimodule {
public:
    using Maker = std::function<BiComponent(int, int)>;
    FbBimodule() = default;
    FbBimodule(int bound, Maker maker);
    static FbBimodule from_components(int bound, std::map<std::pair<int, int>, BiComponent> comps);

    int bound() const { return state_ ? state_->bound : 0; }
    const BiComponent& at(int a, int b) const;
    std::size_t dim(int a, int b) const { return at(a, b).dim; }
    std::vector<std::pair<int, int>> support() const;

private:
    struct State {
        int bound;
        Maker maker;
        std::mutex mu;
        std::map<std::pair<int, int>, std::unique_ptr<BiComponent>> memo;
    };
    std::shared_ptr<State> state_;
};

// Graded bimodule: (a,b,k) -> component, k a cohomological degree.
class GradedFbBimodule {
public:
    explicit GradedFbBimodule(int bound = 0) : bound_(bound) {}
    int bound() const { return bound_; }
    void set(int a, int b, int k, BiComponent c);
    const BiComponent& at(int a, int b, int k) const;
    std::vector<std::tuple<int, int, int>> support() const;
    static GradedFbBimodule concentrated(const FbBimodule& x, int degree = 0);
    FbBimodule degree_part(int k) const;

private:
    int bound_;
    std::map<std::tuple<int, int, int>, BiComponent> comps_;
    mutable std::map<std::tuple<int, int, int>, BiComponent> zeros_;
};

enum class HomSide { Left, Right };
enum class SheerDirection { R, L };
enum class TruncateKind { AtMost, AtLeast };

// (m (.) n)(a,S) = sum over U+V=S of m(a,U) (x) n(V); modules use a = 0.
FbBimodule day_convolution(const FbBimodule& m, const FbModule& n);
FbModule day_convolution(const FbModule& m, const FbModule& n);
// Basis label of the convolution: (subset U, index in m, index in n).
struct DayLabel {
    std::vector<int> subset;
    std::size_t left = 0, right = 0;
};
std::vector<DayLabel> day_labels(const FbBimodule& m, const FbModule& n, int a, int s);

// (x (x)_FB y)(s,t) = sum_a x(a,t) (x)_{S_a} y(s,a).
FbBimodule tensor_over_fb(const FbBimodule& x, const FbBimodule& y);
FbBimodule hom_over_fb(const FbBimodule& x, const FbBimodule& y, HomSide side);
FbBimodule sharp_dual(const FbBimodule& x);
FbBimodule ddag_twist(const FbBimodule& x);
FbBimodule op_reverse(const FbBimodule& x);
FbBimodule z_component(const FbBimodule& x, int n);
FbModule truncate(const FbModule& m, int s, TruncateKind kind);
FbBimodule truncate_source(const FbBimodule& x, int s, TruncateKind kind);
GradedFbBimodule sheer(const GradedFbBimodule& x, SheerDirection dir);

// Bimodule viewed from a module: left module N sits at (0, n).
FbBimodule as_left_bimodule(const FbModule& n);
FbModule column(const FbBimodule& x, int a);  // the left module b -> x(a,b)

// Isomorphism test of components up to a change of basis (characters agree).
bool same_dims(const FbBimodule& x, const FbBimodule& y, int bound);
bool same_structure(const BiComponent& x, const BiComponent& y);
// Character of S_a x S_b on pairs of class representatives (partitions of a,
// then of b, in the order of partitions()).
std::vector<Rational> bicharacter(const BiComponent& x);
// Isomorphism as S_a x S_b representations, decided by characters.
bool isomorphic(const BiComponent& x, const BiComponent& y);
bool isomorphic(const FbBimodule& x, const FbBimodule& y, int bound);
// Permutation whose Coxeter word is w.
Perm perm_from_word(int n, const std::vector<int>& w);

}  // namespace fbk
