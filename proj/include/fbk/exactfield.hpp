#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace fbk {

using Rational = mpq_class;
using Integer = mpz_class;

// Sparse vector: strictly increasing indices, no stored zeros.
struct SparseVec {
    std::vector<std::pair<std::size_t, Rational>> terms;

    bool empty() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    Rational coeff(std::size_t i) const;
    void push(std::size_t i, const Rational& c);  // append, index must exceed last
    static SparseVec unit(std::size_t i, const Rational& c = 1);
};

// Accumulates scaled vectors and emits a canonical sparse vector.
class VecBuilder {
public:
    void add(std::size_t i, const Rational& c);
    void add(const SparseVec& v, const Rational& scale = 1);
    SparseVec take();
    bool empty() const { return acc_.empty(); }

private:
    std::map<std::size_t, Rational> acc_;
};

SparseVec add(const SparseVec& a, const SparseVec& b, const Rational& sb = 1);
SparseVec scale(const SparseVec& a, const Rational& s);
bool equal(const SparseVec& a, const SparseVec& b);

class RationalMatrix {
public:
    static constexpr double kDenseFill = 0.25;

    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static RationalMatrix from_columns(std::size_t rows, const std::vector<SparseVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_dense() const { return dense_; }
    std::size_t nnz() const;

    Rational get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& v);
    void add_to(std::size_t r, std::size_t c, const Rational& v);

    // Row r as a sparse vector over column indices.
    SparseVec row(std::size_t r) const;
    std::vector<SparseVec> all_rows() const;
    std::vector<SparseVec> all_columns() const;
    // (row, col, value) triples in row-major order.
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries() const;

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& s) const;
    SparseVec apply(const SparseVec& v) const;
    bool is_zero() const;
    bool operator==(const RationalMatrix& o) const;
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    // Switches representation according to the fill threshold.
    void normalize_storage();

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    bool dense_ = false;
    std::vector<Rational> dense_data_;
    std::vector<std::map<std::size_t, Rational>> sparse_rows_;

    void to_dense();
    void to_sparse();
};

struct Subspace {
    std::size_t ambient_dim = 0;
    RationalMatrix basis;  // ambient_dim x k, independent columns

    std::size_t dim() const { return basis.cols(); }
    static Subspace from_vectors(std::size_t ambient, const std::vector<SparseVec>& vecs);
    std::vector<SparseVec> vectors() const { return basis.all_columns(); }
};

// Incremental echelon form over sparse rational rows. Each stored row has a
// leading coefficient 1 at its pivot. Pivots are the first nonzero column of a
// row after reduction, so insertion order fixes the basis deterministically.
class Echelon {
public:
    explicit Echelon(std::size_t ncols = 0) : ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    // Returns true if v was independent of the stored rows.
    bool insert(const SparseVec& v);
    // Eliminates every pivot column from v.
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    bool is_pivot(std::size_t c) const { return pivot_row_.count(c) != 0; }
    std::vector<std::size_t> pivots() const;
    std::vector<std::size_t> free_columns() const;
    // Fully reduced rows ordered by pivot.
    std::vector<SparseVec> rref_rows() const;
    const std::vector<SparseVec>& raw_rows() const { return rows_; }

private:
    std::size_t ncols_;
    std::vector<SparseVec> rows_;
    std::map<std::size_t, std::size_t> pivot_row_;
};

// Exact rank by fraction-free elimination: dense Bareiss above the fill
// threshold, sparse integer row elimination otherwise.
std::size_t rank(const RationalMatrix& m);
std::size_t rank_bareiss_dense(const RationalMatrix& m);
std::size_t rank_fraction_free_sparse(const RationalMatrix& m);
// Plain rational Gaussian elimination, kept as a reference implementation.
std::size_t rank_gauss(const RationalMatrix& m);

Subspace kernel_basis(const RationalMatrix& m);
Subspace image_basis(const RationalMatrix& m);

struct Quotient {
    std::size_t quotient_dim = 0;
    RationalMatrix projection;  // quotient_dim x ambient_dim
    std::vector<std::size_t> kept_columns;  // ambient coordinates giving a complement
};
Quotient quotient_and_projection(const Subspace& relations);

// Solves m x = b; returns false if inconsistent.
bool solve(const RationalMatrix& m, const SparseVec& b, SparseVec& x);

}  // namespace fbk
