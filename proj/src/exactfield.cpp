#include "fbk/exactfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace fbk {

Rational SparseVec::coeff(std::size_t i) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
                               [](const auto& t, std::size_t k) { return t.first < k; });
    if (it != terms.end() && it->first == i) return it->second;
    return 0;
}

void SparseVec::push(std::size_t i, const Rational& c) {
    if (c == 0) return;
    if (!terms.empty() && terms.back().first >= i)
        throw std::logic_error("SparseVec::push out of order");
    terms.emplace_back(i, c);
}

SparseVec SparseVec::unit(std::size_t i, const Rational& c) {
    SparseVec v;
    v.push(i, c);
    return v;
}

void VecBuilder::add(std::size_t i, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = acc_.try_emplace(i, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) acc_.erase(it);
    }
}

void VecBuilder::add(const SparseVec& v, const Rational& s) {
    if (s == 0) return;
    for (const auto& [i, c] : v.terms) add(i, c * s);
}

SparseVec VecBuilder::take() {
    SparseVec v;
    v.terms.reserve(acc_.size());
    for (auto& [i, c] : acc_) v.terms.emplace_back(i, std::move(c));
    acc_.clear();
    return v;
}

SparseVec add(const SparseVec& a, const SparseVec& b, const Rational& sb) {
    SparseVec out;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
            Rational c = b.terms[j].second * sb;
            if (c != 0) out.terms.emplace_back(b.terms[j].first, c);
            ++j;
        } else {
            Rational c = a.terms[i].second + b.terms[j].second * sb;
            if (c != 0) out.terms.emplace_back(a.terms[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec scale(const SparseVec& a, const Rational& s) {
    SparseVec out;
    if (s == 0) return out;
    out.terms.reserve(a.terms.size());
    for (const auto& [i, c] : a.terms) out.terms.emplace_back(i, c * s);
    return out;
}

bool equal(const SparseVec& a, const SparseVec& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t k = 0; k < a.terms.size(); ++k)
        if (a.terms[k].first != b.terms[k].first || a.terms[k].second != b.terms[k].second)
            return false;
    return true;
}

// ---------------------------------------------------------------- matrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), sparse_rows_(rows) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    RationalMatrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < nc; ++c)
            if (rows[r][c] != 0) m.set(r, c, Rational(rows[r][c]));
    }
    m.normalize_storage();
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<SparseVec>& cols) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c].terms) {
            if (r >= rows) throw std::out_of_range("column entry beyond row count");
            m.sparse_rows_[r][c] = v;
        }
    m.normalize_storage();
    return m;
}

std::size_t RationalMatrix::nnz() const {
    std::size_t n = 0;
    if (dense_) {
        for (const auto& v : dense_data_)
            if (v != 0) ++n;
    } else {
        for (const auto& r : sparse_rows_) n += r.size();
    }
    return n;
}

Rational RationalMatrix::get(std::size_t r, std::size_t c) const {
    if (dense_) return dense_data_[r * cols_ + c];
    auto it = sparse_rows_[r].find(c);
    return it == sparse_rows_[r].end() ? Rational(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    if (dense_) {
        dense_data_[r * cols_ + c] = v;
        return;
    }
    if (v == 0)
        sparse_rows_[r].erase(c);
    else
        sparse_rows_[r][c] = v;
}

void RationalMatrix::add_to(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    set(r, c, get(r, c) + v);
}

SparseVec RationalMatrix::row(std::size_t r) const {
    SparseVec v;
    if (dense_) {
        for (std::size_t c = 0; c < cols_; ++c) v.push(c, dense_data_[r * cols_ + c]);
    } else {
        for (const auto& [c, x] : sparse_rows_[r]) v.terms.emplace_back(c, x);
    }
    return v;
}

std::vector<SparseVec> RationalMatrix::all_rows() const {
    std::vector<SparseVec> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = row(r);
    return out;
}

std::vector<SparseVec> RationalMatrix::all_columns() const {
    std::vector<SparseVec> out(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, x] : row(r).terms) out[c].terms.emplace_back(r, x);
    return out;
}

std::vector<std::tuple<std::size_t, std::size_t, Rational>> RationalMatrix::entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> out;
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, x] : row(r).terms) out.emplace_back(r, c, x);
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, x] : row(r).terms) t.sparse_rows_[c][r] = x;
    t.normalize_storage();
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix out(rows_, o.cols_);
    std::vector<SparseVec> orows = o.all_rows();
    for (std::size_t r = 0; r < rows_; ++r) {
        VecBuilder acc;
        for (const auto& [k, x] : row(r).terms) acc.add(orows[k], x);
        for (auto& [c, v] : acc.take().terms) out.sparse_rows_[r][c] = v;
    }
    out.normalize_storage();
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape");
    RationalMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : fbk::add(row(r), o.row(r)).terms) out.sparse_rows_[r][c] = v;
    out.normalize_storage();
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    return *this + o.scaled(-1);
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : fbk::scale(row(r), s).terms) out.sparse_rows_[r][c] = v;
    out.normalize_storage();
    return out;
}

SparseVec RationalMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        if (dense_) {
            for (const auto& [c, x] : v.terms) acc += dense_data_[r * cols_ + c] * x;
        } else {
            const auto& row = sparse_rows_[r];
            for (const auto& [c, x] : v.terms) {
                auto it = row.find(c);
                if (it != row.end()) acc += it->second * x;
            }
        }
        out.push(r, acc);
    }
    return out;
}

bool RationalMatrix::is_zero() const { return nnz() == 0; }

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        if (!equal(row(r), o.row(r))) return false;
    return true;
}

void RationalMatrix::normalize_storage() {
    std::size_t cells = rows_ * cols_;
    if (cells == 0) {
        if (dense_) to_sparse();
        return;
    }
    double fill = static_cast<double>(nnz()) / static_cast<double>(cells);
    if (!dense_ && fill > kDenseFill)
        to_dense();
    else if (dense_ && fill <= kDenseFill)
        to_sparse();
}

void RationalMatrix::to_dense() {
    dense_data_.assign(rows_ * cols_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, x] : sparse_rows_[r]) dense_data_[r * cols_ + c] = x;
    sparse_rows_.clear();
    dense_ = true;
}

void RationalMatrix::to_sparse() {
    sparse_rows_.assign(rows_, {});
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (dense_data_[r * cols_ + c] != 0) sparse_rows_[r][c] = dense_data_[r * cols_ + c];
    dense_data_.clear();
    dense_ = false;
}

Subspace Subspace::from_vectors(std::size_t ambient, const std::vector<SparseVec>& vecs) {
    Echelon e(ambient);
    std::vector<SparseVec> kept;
    for (const auto& v : vecs)
        if (e.insert(v)) kept.push_back(v);
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = RationalMatrix::from_columns(ambient, kept);
    return s;
}

// ---------------------------------------------------------------- echelon

SparseVec Echelon::reduce(const SparseVec& v) const {
    if (rows_.empty()) return v;
    std::map<std::size_t, Rational> w;
    for (const auto& [i, c] : v.terms) w.emplace(i, c);
    for (auto it = w.begin(); it != w.end();) {
        auto p = pivot_row_.find(it->first);
        if (p == pivot_row_.end()) {
            ++it;
            continue;
        }
        Rational f = it->second;
        const SparseVec& row = rows_[p->second];
        for (const auto& [j, c] : row.terms) {
            auto [slot, fresh] = w.try_emplace(j, -f * c);
            if (!fresh) slot->second -= f * c;
        }
        // every entry of the row sits at or right of the pivot
        auto next = std::next(it);
        while (next != w.end() && next->second == 0) next = w.erase(next);
        w.erase(it);
        it = next;
    }
    SparseVec out;
    out.terms.reserve(w.size());
    for (auto& [i, c] : w)
        if (c != 0) out.terms.emplace_back(i, std::move(c));
    return out;
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Rational lead = r.terms.front().second;
    if (lead != 1) r = scale(r, 1 / lead);
    pivot_row_[r.terms.front().first] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
}

std::vector<std::size_t> Echelon::pivots() const {
    std::vector<std::size_t> p;
    for (const auto& [c, _] : pivot_row_) p.push_back(c);
    return p;
}

std::vector<std::size_t> Echelon::free_columns() const {
    std::vector<std::size_t> f;
    for (std::size_t c = 0; c < ncols_; ++c)
        if (!is_pivot(c)) f.push_back(c);
    return f;
}

std::vector<SparseVec> Echelon::rref_rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    // reduce each row against the others: subtracting the row itself is avoided
    // by reducing only its non-leading tail
    for (const auto& [c, idx] : pivot_row_) {
        const SparseVec& row = rows_[idx];
        SparseVec tail;
        tail.terms.assign(row.terms.begin() + 1, row.terms.end());
        SparseVec red = reduce(tail);
        SparseVec full;
        full.push(c, 1);
        for (auto& t : red.terms) full.terms.push_back(t);
        out.push_back(std::move(full));
    }
    return out;
}

// ---------------------------------------------------------------- rank

namespace {

std::vector<Integer> integer_row(const RationalMatrix& m, std::size_t r) {
    std::vector<Integer> out(m.cols());
    Integer l = 1;
    SparseVec row = m.row(r);
    for (const auto& [c, x] : row.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& [c, x] : row.terms) out[c] = x.get_num() * (l / x.get_den());
    return out;
}

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

IntRow sparse_integer_row(const SparseVec& row) {
    Integer l = 1;
    for (const auto& [c, x] : row.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntRow out;
    for (const auto& [c, x] : row.terms) out.emplace_back(c, x.get_num() * (l / x.get_den()));
    return out;
}

void remove_content(IntRow& r) {
    Integer g = 0;
    for (const auto& [c, x] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& [c, x] : r) x /= g;
}

}  // namespace

std::size_t rank_bareiss_dense(const RationalMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Integer>> a(nr);
    for (std::size_t r = 0; r < nr; ++r) a[r] = integer_row(m, r);
    Integer prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < nc && rk < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t r = rk; r < nr; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == nr) continue;
        std::swap(a[piv], a[rk]);
        const Integer p = a[rk][c];
        for (std::size_t r = rk + 1; r < nr; ++r) {
            const Integer f = a[r][c];
            for (std::size_t j = c + 1; j < nc; ++j) {
                a[r][j] = a[r][j] * p - f * a[rk][j];
                mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = p;
        ++rk;
    }
    return rk;
}

std::size_t rank_fraction_free_sparse(const RationalMatrix& m) {
    std::map<std::size_t, IntRow> piv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        IntRow row = sparse_integer_row(m.row(r));
        while (!row.empty()) {
            auto it = piv.find(row.front().first);
            if (it == piv.end()) break;
            const IntRow& p = it->second;
            Integer a = p.front().second, b = row.front().second;
            Integer g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            a /= g;
            b /= g;
            // row <- a*row - b*p, which cancels the leading entry
            IntRow out;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < p.size()) {
                if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                    out.emplace_back(row[i].first, a * row[i].second);
                    ++i;
                } else if (i == row.size() || p[j].first < row[i].first) {
                    out.emplace_back(p[j].first, -b * p[j].second);
                    ++j;
                } else {
                    Integer v = a * row[i].second - b * p[j].second;
                    if (v != 0) out.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            remove_content(out);
            row = std::move(out);
        }
        if (!row.empty()) piv.emplace(row.front().first, std::move(row));
    }
    return piv.size();
}

std::size_t rank_gauss(const RationalMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc));
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) a[r][c] = m.get(r, c);
    std::size_t rk = 0;
    for (std::size_t c = 0; c < nc && rk < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t r = rk; r < nr; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == nr) continue;
        std::swap(a[piv], a[rk]);
        for (std::size_t r = rk + 1; r < nr; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[rk][c];
            for (std::size_t j = c; j < nc; ++j) a[r][j] -= f * a[rk][j];
        }
        ++rk;
    }
    return rk;
}

std::size_t rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.is_dense()) return rank_bareiss_dense(m);
    return rank_fraction_free_sparse(m);
}

Subspace kernel_basis(const RationalMatrix& m) {
    Echelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    std::vector<SparseVec> rref = e.rref_rows();
    std::vector<SparseVec> kern;
    for (std::size_t f : e.free_columns()) {
        VecBuilder b;
        b.add(f, 1);
        for (const auto& row : rref) {
            Rational x = row.coeff(f);
            if (x != 0) b.add(row.terms.front().first, -x);
        }
        kern.push_back(b.take());
    }
    Subspace s;
    s.ambient_dim = m.cols();
    s.basis = RationalMatrix::from_columns(m.cols(), kern);
    return s;
}

Subspace image_basis(const RationalMatrix& m) {
    return Subspace::from_vectors(m.rows(), m.all_columns());
}

Quotient quotient_and_projection(const Subspace& relations) {
    std::size_t n = relations.ambient_dim;
    Echelon e(n);
    for (const auto& v : relations.vectors()) e.insert(v);
    Quotient q;
    q.kept_columns = e.free_columns();
    q.quotient_dim = q.kept_columns.size();
    std::vector<std::size_t> slot(n, n);
    for (std::size_t k = 0; k < q.kept_columns.size(); ++k) slot[q.kept_columns[k]] = k;
    std::vector<SparseVec> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        SparseVec red = e.reduce(SparseVec::unit(j));
        for (const auto& [c, x] : red.terms) cols[j].push(slot[c], x);
    }
    q.projection = RationalMatrix::from_columns(q.quotient_dim, cols);
    return q;
}

bool solve(const RationalMatrix& m, const SparseVec& b, SparseVec& x) {
    std::size_t nc = m.cols();
    Echelon e(nc + 1);
    std::vector<SparseVec> rows = m.all_rows();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseVec row = rows[r];
        Rational br = b.coeff(r);
        if (br != 0) row.terms.emplace_back(nc, br);
        e.insert(row);
    }
    if (e.is_pivot(nc)) return false;
    x = SparseVec{};
    for (const auto& row : e.rref_rows()) {
        Rational v = row.coeff(nc);
        x.push(row.terms.front().first, v);
    }
    return true;
}

}  // namespace fbk
