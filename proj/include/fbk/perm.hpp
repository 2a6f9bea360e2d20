#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace fbk {

// A map between finite sets {0..m-1} -> {0..n-1}, stored as its value sequence.
using Map = std::vector<int>;
using Perm = Map;

Perm identity_perm(int n);
Perm compose(const Map& f, const Map& g);  // (f o g)(i) = f(g(i))
Perm inverse(const Perm& p);
int perm_sign(const Perm& p);
// Adjacent transposition swapping k and k+1 (0-based) in S_n.
Perm coxeter(int n, int k);
// Word k_1..k_r with p = s_{k_1} o ... o s_{k_r}.
std::vector<int> coxeter_word(const Perm& p);
bool is_injective(const Map& f, int n);
bool is_surjective(const Map& f, int n);
std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

// Lexicographic ranking of permutations of n letters.
std::size_t perm_rank(const Perm& p);
Perm perm_unrank(int n, std::size_t r);

enum class MapKind { All, Injective, Surjective, Bijective };

// Maps m -> n of the given kind, in lexicographic order of value sequences.
class MapSet {
public:
    MapSet(int m, int n, MapKind kind);
    int source() const { return m_; }
    int target() const { return n_; }
    std::size_t size() const { return maps_.size(); }
    const Map& operator[](std::size_t i) const { return maps_[i]; }
    // Index of f, or npos when f is not in the set.
    std::size_t index(const Map& f) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    const std::vector<Map>& all() const { return maps_; }

private:
    int m_, n_;
    std::vector<Map> maps_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::uint64_t code(const Map& f) const;
};

// Shared cached instance.
const MapSet& map_set(int m, int n, MapKind kind);

// Subsets of {0..n-1} of a given size as increasing sequences, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k);
std::vector<std::vector<int>> all_subsets(int n);  // by size, then lexicographic

std::vector<std::vector<int>> partitions(int n);  // weakly decreasing parts, reverse lex
// Permutation of cycle type lambda built from consecutive blocks, as a Coxeter word.
std::vector<int> class_representative_word(const std::vector<int>& lambda);

// Ordered surjection merging positions i<j (0-based) of n+1 points onto n points:
// k<j -> k, j -> i, k>j -> k-1.
Map merge_map(int n_plus_1, int i, int j);
// Order-preserving injection n-1 -> n skipping x.
Map skip_map(int n, int x);

}  // namespace fbk
