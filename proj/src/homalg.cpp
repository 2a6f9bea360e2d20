#include "fbk/homalg.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace fbk {

SparseVec DgBimodule::differential(int s, int t, const SparseVec& v) const {
    VecBuilder acc;
    for (const auto& [i, c] : v.terms) acc.add(differential(s, t, i), c);
    return acc.take();
}

SparseVec DgBimodule::act(int s, int t, const Perm& left, const SparseVec& v, const Perm& right) const {
    VecBuilder r;
    for (const auto& [i, c] : v.terms) r.add(right_perm(s, t, i, right), c);
    SparseVec mid = r.take();
    VecBuilder l;
    for (const auto& [i, c] : mid.terms) l.add(left_perm(s, t, left, i), c);
    return l.take();
}

DgBimodulePtr as_dg_bimodule(CategoryPtr c) { return std::make_shared<CategoryBimodule>(std::move(c)); }

namespace {

class Corrupted : public DgBimodule {
public:
    Corrupted(DgBimodulePtr base, int s, int t, std::size_t i, SparseVec v)
        : base_(std::move(base)), s_(s), t_(t), i_(i), v_(std::move(v)) {}
    std::string name() const override { return base_->name() + "[corrupted]"; }
    int bound() const override { return base_->bound(); }
    std::size_t dim(int s, int t) const override { return base_->dim(s, t); }
    int degree(int s, int t, std::size_t i) const override { return base_->degree(s, t, i); }
    SparseVec differential(int s, int t, std::size_t i) const override {
        if (s == s_ && t == t_ && i == i_) return v_;
        return base_->differential(s, t, i);
    }
    SparseVec right_perm(int s, int t, std::size_t i, const Perm& p) const override {
        return base_->right_perm(s, t, i, p);
    }
    SparseVec left_perm(int s, int t, const Perm& p, std::size_t i) const override {
        return base_->left_perm(s, t, p, i);
    }
    using DgBimodule::differential;

private:
    DgBimodulePtr base_;
    int s_, t_;
    std::size_t i_;
    SparseVec v_;
};

// Local coordinates of a global vector inside one degree.
SparseVec localize(const std::map<std::size_t, std::size_t>& pos, const SparseVec& v, bool& ok) {
    VecBuilder b;
    for (const auto& [i, c] : v.terms) {
        auto it = pos.find(i);
        if (it == pos.end()) {
            ok = false;
            continue;
        }
        b.add(it->second, c);
    }
    return b.take();
}

std::string bidegree_name(int s, int t) {
    std::ostringstream o;
    o << "(" << s << "," << t << ")";
    return o.str();
}

}  // namespace

DgBimodulePtr corrupt_differential(DgBimodulePtr base, int s, int t, std::size_t i, SparseVec replacement) {
    return std::make_shared<Corrupted>(std::move(base), s, t, i, std::move(replacement));
}

// ---------------------------------------------------------------- bidegree complexes

std::size_t BidegreeComplex::dim_at(int deg) const {
    if (terms.empty() || deg < lo || deg > hi()) return 0;
    return terms[deg - lo].size();
}

BidegreeComplex BidegreeComplex::from_matrices(int lo, const std::vector<std::size_t>& dims,
                                               const std::vector<RationalMatrix>& d) {
    BidegreeComplex c;
    c.lo = lo;
    std::size_t next = 0;
    for (std::size_t n : dims) {
        std::vector<std::size_t> idx(n);
        for (auto& x : idx) x = next++;
        c.terms.push_back(std::move(idx));
    }
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
        if (k < d.size()) {
            if (d[k].rows() != dims[k + 1] || d[k].cols() != dims[k]) throw FbError("complex: differential shape");
            c.d.push_back(d[k]);
        } else {
            c.d.emplace_back(dims[k + 1], dims[k]);
        }
    }
    return c;
}

BidegreeComplex bidegree_complex(const DgBimodule& cx, int s, int t, bool reversed) {
    BidegreeComplex c;
    c.s = s;
    c.t = t;
    std::size_t n = cx.dim(s, t);
    if (n == 0) return c;
    std::map<int, std::vector<std::size_t>> by_deg;
    for (std::size_t i = 0; i < n; ++i) by_deg[cx.degree(s, t, i)].push_back(i);
    c.lo = by_deg.begin()->first;
    int hi = by_deg.rbegin()->first;
    c.terms.resize(hi - c.lo + 1);
    for (auto& [deg, idx] : by_deg) {
        if (reversed) std::reverse(idx.begin(), idx.end());
        c.terms[deg - c.lo] = idx;
    }
    std::vector<std::map<std::size_t, std::size_t>> pos(c.terms.size());
    for (std::size_t k = 0; k < c.terms.size(); ++k)
        for (std::size_t j = 0; j < c.terms[k].size(); ++j) pos[k][c.terms[k][j]] = j;
    for (std::size_t k = 0; k + 1 < c.terms.size(); ++k) {
        std::vector<SparseVec> cols;
        for (std::size_t i : c.terms[k]) {
            bool ok = true;
            cols.push_back(localize(pos[k + 1], cx.differential(s, t, i), ok));
            if (!ok) throw FbError(cx.name() + ": differential is not of degree one at " + bidegree_name(s, t));
        }
        c.d.push_back(RationalMatrix::from_columns(c.terms[k + 1].size(), cols));
    }
    if (!c.terms.empty()) {
        for (std::size_t i : c.terms.back())
            if (!cx.differential(s, t, i).empty())
                throw FbError(cx.name() + ": differential is not of degree one at " + bidegree_name(s, t));
    }
    return c;
}

std::vector<std::pair<int, int>> Window::bidegrees() const {
    std::vector<std::pair<int, int>> out;
    for (int s = s_lo; s <= s_hi; ++s)
        for (int t = t_lo; t <= t_hi; ++t) out.emplace_back(s, t);
    return out;
}

Verdict check_d_squared(const BidegreeComplex& c) {
    Verdict v;
    for (std::size_t k = 0; k + 1 < c.d.size(); ++k) {
        ++v.checked;
        if (!(c.d[k + 1] * c.d[k]).is_zero()) {
            v.ok = false;
            std::ostringstream o;
            o << "d^2 != 0 at " << bidegree_name(c.s, c.t) << " degree " << c.lo + static_cast<int>(k);
            v.failure = o.str();
            return v;
        }
    }
    return v;
}

Verdict check_d_squared(const DgBimodule& cx, const Window& w) {
    Verdict total;
    for (auto [s, t] : w.bidegrees()) {
        Verdict v;
        try {
            v = check_d_squared(bidegree_complex(cx, s, t));
        } catch (const FbError& e) {
            v.ok = false;
            v.failure = e.what();
        }
        total.checked += v.checked;
        if (!v.ok) {
            total.ok = false;
            total.failure = cx.name() + ": " + v.failure;
            return total;
        }
    }
    return total;
}

// ---------------------------------------------------------------- homology

bool HomologyReport::euler_ok() const {
    Integer a = 0, b = 0;
    for (const auto& [k, n] : term_dims) a += (k % 2 ? -1 : 1) * Integer(static_cast<unsigned long>(n));
    for (const auto& [k, n] : homology_dims) b += (k % 2 ? -1 : 1) * Integer(static_cast<unsigned long>(n));
    return a == b;
}

std::size_t HomologyReport::total_homology() const {
    std::size_t n = 0;
    for (const auto& [k, h] : homology_dims) n += h;
    return n;
}

namespace {

struct DegreeHomology {
    std::vector<SparseVec> boundaries;  // basis of the image of the incoming map
    std::vector<SparseVec> reps;        // cycles completing it to a basis of the kernel
};

DegreeHomology degree_homology(const BidegreeComplex& c, std::size_t k) {
    DegreeHomology h;
    std::size_t n = c.terms[k].size();
    if (k > 0) h.boundaries = image_basis(c.d[k - 1]).vectors();
    std::vector<SparseVec> cycles;
    if (k < c.d.size())
        cycles = kernel_basis(c.d[k]).vectors();
    else
        for (std::size_t i = 0; i < n; ++i) cycles.push_back(SparseVec::unit(i));
    Echelon ech(n);
    for (const auto& b : h.boundaries) ech.insert(b);
    for (const auto& z : cycles)
        if (ech.insert(z)) h.reps.push_back(z);
    return h;
}

}  // namespace

HomologyReport homology(const BidegreeComplex& c) {
    HomologyReport r;
    r.s = c.s;
    r.t = c.t;
    for (std::size_t k = 0; k < c.terms.size(); ++k) {
        int deg = c.lo + static_cast<int>(k);
        std::size_t n = c.terms[k].size();
        r.term_dims[deg] = n;
        std::size_t z = n - (k < c.d.size() ? rank(c.d[k]) : 0);
        std::size_t b = k > 0 ? rank(c.d[k - 1]) : 0;
        r.homology_dims[deg] = z - b;
    }
    return r;
}

HomologyReport homology(const DgBimodule& cx, int s, int t, bool with_characters) {
    BidegreeComplex c = bidegree_complex(cx, s, t);
    HomologyReport r = homology(c);
    if (!with_characters) return r;
    std::vector<Perm> rights, lefts;
    for (const auto& lam : partitions(s)) rights.push_back(perm_from_word(s, class_representative_word(lam)));
    for (const auto& lam : partitions(t)) lefts.push_back(perm_from_word(t, class_representative_word(lam)));
    for (std::size_t k = 0; k < c.terms.size(); ++k) {
        int deg = c.lo + static_cast<int>(k);
        DegreeHomology h = degree_homology(c, k);
        std::vector<Rational> chi;
        if (h.reps.empty()) {
            chi.assign(rights.size() * lefts.size(), 0);
            r.characters[deg] = chi;
            continue;
        }
        std::map<std::size_t, std::size_t> pos;
        for (std::size_t j = 0; j < c.terms[k].size(); ++j) pos[c.terms[k][j]] = j;
        std::vector<SparseVec> cols = h.boundaries;
        cols.insert(cols.end(), h.reps.begin(), h.reps.end());
        RationalMatrix m = RationalMatrix::from_columns(c.terms[k].size(), cols);
        for (const auto& p : rights)
            for (const auto& q : lefts) {
                Rational tr = 0;
                for (std::size_t j = 0; j < h.reps.size(); ++j) {
                    VecBuilder g;
                    for (const auto& [li, co] : h.reps[j].terms) g.add(c.terms[k][li], co);
                    bool ok = true;
                    SparseVec w = localize(pos, cx.act(s, t, q, g.take(), p), ok);
                    SparseVec x;
                    if (!ok || !solve(m, w, x)) throw FbError(cx.name() + ": action does not preserve cycles");
                    tr += x.coeff(h.boundaries.size() + j);
                }
                chi.push_back(tr);
            }
        r.characters[deg] = chi;
    }
    return r;
}

// ---------------------------------------------------------------- chain maps

ChainMap identity_map(const DgBimodulePtr& c) {
    return {c, c, [](int, int, std::size_t i) { return SparseVec::unit(i); }, "id"};
}

ChainMap zero_map(const DgBimodulePtr& a, const DgBimodulePtr& b) {
    return {a, b, [](int, int, std::size_t) { return SparseVec{}; }, "0"};
}

Verdict check_chain_map(const ChainMap& f, const Window& w) {
    Verdict v;
    for (auto [s, t] : w.bidegrees()) {
        for (std::size_t i = 0; i < f.source->dim(s, t); ++i) {
            ++v.checked;
            SparseVec fi = f.map(s, t, i);
            for (const auto& [j, c] : fi.terms)
                if (f.target->degree(s, t, j) != f.source->degree(s, t, i)) {
                    v.ok = false;
                    v.failure = f.name + ": map does not preserve degree at " + bidegree_name(s, t);
                    return v;
                }
            SparseVec lhs = f.target->differential(s, t, fi);
            VecBuilder rhs;
            for (const auto& [j, c] : f.source->differential(s, t, i).terms) rhs.add(f.map(s, t, j), c);
            if (!equal(lhs, rhs.take())) {
                v.ok = false;
                v.failure = f.name + ": d f != f d at " + bidegree_name(s, t);
                return v;
            }
        }
    }
    return v;
}

namespace {

// Matrix of f from degree deg of a to degree deg of b, in local coordinates.
RationalMatrix local_map(const ChainMap& f, const BidegreeComplex& a, const BidegreeComplex& b, int deg) {
    std::size_t na = a.dim_at(deg), nb = b.dim_at(deg);
    RationalMatrix m(nb, na);
    if (!na || !nb) return m;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t j = 0; j < nb; ++j) pos[b.terms[deg - b.lo][j]] = j;
    std::vector<SparseVec> cols;
    for (std::size_t i : a.terms[deg - a.lo]) {
        bool ok = true;
        cols.push_back(localize(pos, f.map(a.s, a.t, i), ok));
        if (!ok) throw FbError(f.name + ": map does not preserve degree");
    }
    return RationalMatrix::from_columns(nb, cols);
}

RationalMatrix diff_at(const BidegreeComplex& c, int deg) {
    std::size_t n0 = c.dim_at(deg), n1 = c.dim_at(deg + 1);
    if (n0 && n1) return c.d[deg - c.lo];
    return RationalMatrix(n1, n0);
}

int lo_of(const BidegreeComplex& c, int fallback) { return c.terms.empty() ? fallback : c.lo; }
int hi_of(const BidegreeComplex& c, int fallback) { return c.terms.empty() ? fallback : c.hi(); }

BidegreeComplex cone_of(const ChainMap& f, const BidegreeComplex& a, const BidegreeComplex& b) {
    BidegreeComplex c;
    c.s = a.s;
    c.t = a.t;
    if (a.terms.empty() && b.terms.empty()) return c;
    int lo = std::min(a.terms.empty() ? b.lo : a.lo - 1, b.terms.empty() ? a.lo - 1 : b.lo);
    int hi = std::max(hi_of(a, lo + 1) - 1, hi_of(b, lo));
    c.lo = lo;
    std::size_t next = 0;
    for (int k = lo; k <= hi; ++k) {
        std::size_t n = a.dim_at(k + 1) + b.dim_at(k);
        std::vector<std::size_t> idx(n);
        for (auto& x : idx) x = next++;
        c.terms.push_back(std::move(idx));
    }
    for (int k = lo; k < hi; ++k) {
        std::size_t na0 = a.dim_at(k + 1), nb0 = b.dim_at(k);
        std::size_t na1 = a.dim_at(k + 2), nb1 = b.dim_at(k + 1);
        RationalMatrix m(na1 + nb1, na0 + nb0);
        RationalMatrix da = diff_at(a, k + 1), db = diff_at(b, k), fk = local_map(f, a, b, k + 1);
        for (const auto& [r, col, v] : da.entries()) m.set(r, col, -v);
        for (const auto& [r, col, v] : fk.entries()) m.set(na1 + r, col, v);
        for (const auto& [r, col, v] : db.entries()) m.set(na1 + r, na0 + col, v);
        m.normalize_storage();
        c.d.push_back(std::move(m));
    }
    return c;
}

}  // namespace

BidegreeComplex mapping_cone(const ChainMap& f, int s, int t) {
    BidegreeComplex a = bidegree_complex(*f.source, s, t);
    BidegreeComplex b = bidegree_complex(*f.target, s, t);
    return cone_of(f, a, b);
}

QuasiIsoDetail quasi_iso_at(const ChainMap& f, int s, int t) {
    QuasiIsoDetail d;
    d.s = s;
    d.t = t;
    BidegreeComplex a = bidegree_complex(*f.source, s, t);
    BidegreeComplex b = bidegree_complex(*f.target, s, t);
    BidegreeComplex cone = cone_of(f, a, b);
    d.cone_acyclic = homology(cone).total_homology() == 0;
    HomologyReport ha = homology(a), hb = homology(b);
    d.source_homology = ha.homology_dims;
    d.target_homology = hb.homology_dims;
    // rank criterion: equal homology dims and f injective on homology
    bool ok = true;
    int lo = std::min(lo_of(a, 0), lo_of(b, 0)), hi = std::max(hi_of(a, 0), hi_of(b, 0));
    for (int k = lo; k <= hi && ok; ++k) {
        std::size_t dha = ha.homology_dims.count(k) ? ha.homology_dims[k] : 0;
        std::size_t dhb = hb.homology_dims.count(k) ? hb.homology_dims[k] : 0;
        if (dha != dhb) {
            ok = false;
            break;
        }
        if (!dha) continue;
        DegreeHomology hA = degree_homology(a, k - a.lo);
        RationalMatrix fk = local_map(f, a, b, k);
        std::vector<SparseVec> cols;
        if (k > b.lo && b.dim_at(k - 1)) cols = image_basis(b.d[k - 1 - b.lo]).vectors();
        std::size_t base = cols.size();
        for (const auto& z : hA.reps) cols.push_back(fk.apply(z));
        std::size_t r = rank(RationalMatrix::from_columns(b.dim_at(k), cols));
        if (r - base != dha) ok = false;
    }
    d.rank_criterion = ok;
    return d;
}

QuasiIsoReport is_quasi_iso(const ChainMap& f, const Window& w, int workers) {
    QuasiIsoReport rep;
    auto bds = w.bidegrees();
    std::vector<QuasiIsoDetail> details(bds.size());
    run_parallel(bds.size(), workers, [&](std::size_t k) { details[k] = quasi_iso_at(f, bds[k].first, bds[k].second); });
    for (std::size_t k = 0; k < bds.size(); ++k) {
        auto [s, t] = bds[k];
        QuasiIsoDetail& d = details[k];
        if (d.cone_acyclic != d.rank_criterion) rep.criteria_agree = false;
        if (!d.cone_acyclic && rep.quasi_iso) {
            rep.quasi_iso = false;
            rep.failure = f.name + ": cone not acyclic at " + bidegree_name(s, t);
        }
        rep.detail.push_back(std::move(d));
    }
    return rep;
}

// ---------------------------------------------------------------- characters

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves one
// bead from b to b - r, with sign given by the beads jumped over.
Integer mn_beta(std::vector<int> beta, const std::vector<int>& mu, std::size_t k,
                std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
    if (k == mu.size()) return 1;
    auto key = std::make_pair(beta, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = mu[k];
    Integer total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i], nb = b - r;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int jumped = 0;
        for (int x : beta)
            if (x > nb && x < b) ++jumped;
        std::vector<int> next = beta;
        next[i] = nb;
        std::sort(next.begin(), next.end());
        Integer v = mn_beta(next, mu, k + 1, memo);
        total += jumped % 2 ? -v : v;
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace

Integer mn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
    std::vector<int> beta;
    int len = static_cast<int>(lambda.size());
    for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + (len - 1 - i));
    std::sort(beta.begin(), beta.end());
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
    return mn_beta(beta, mu, 0, memo);
}

Integer centralizer_order(const std::vector<int>& mu) {
    std::map<int, int> mult;
    for (int p : mu) ++mult[p];
    Integer z = 1;
    for (auto [p, m] : mult) {
        for (int i = 0; i < m; ++i) z *= p;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

const std::vector<std::vector<Integer>>& character_table(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<Integer>>> tables;
    if (n < 0 || n > kMaxCharacterTable) throw FbError("character table beyond the precomputed range");
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;
    auto parts = partitions(n);
    std::vector<std::vector<Integer>> tab;
    for (const auto& lam : parts) {
        std::vector<Integer> row;
        for (const auto& m : parts) row.push_back(mn_character(lam, m));
        tab.push_back(std::move(row));
    }
    return tables.emplace(n, std::move(tab)).first->second;
}

std::vector<Rational> bicharacter_of(int a, int b,
                                     const std::function<Rational(const Perm& right, const Perm& left)>& trace) {
    std::vector<Rational> out;
    for (const auto& lam : partitions(a)) {
        Perm p = perm_from_word(a, class_representative_word(lam));
        for (const auto& mu : partitions(b)) out.push_back(trace(p, perm_from_word(b, class_representative_word(mu))));
    }
    return out;
}

std::map<std::pair<std::size_t, std::size_t>, Integer> decompose_bicharacter(int a, int b,
                                                                             const std::vector<Rational>& chi) {
    const auto& ta = character_table(a);
    const auto& tb = character_table(b);
    auto pa = partitions(a), pb = partitions(b);
    if (chi.size() != pa.size() * pb.size()) throw FbError("bicharacter has the wrong length");
    std::map<std::pair<std::size_t, std::size_t>, Integer> out;
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j) {
            Rational m = 0;
            for (std::size_t u = 0; u < pa.size(); ++u)
                for (std::size_t v = 0; v < pb.size(); ++v) {
                    Rational w = Rational(1) / Rational(centralizer_order(pa[u]) * centralizer_order(pb[v]));
                    m += w * chi[u * pb.size() + v] * Rational(ta[i][u] * tb[j][v]);
                }
            if (m.get_den() != 1) throw FbError("bicharacter is not a character");
            if (m != 0) out[{i, j}] = m.get_num();
        }
    return out;
}

std::vector<Rational> irreducible_bicharacter(const std::vector<int>& lambda, const std::vector<int>& mu) {
    int a = 0, b = 0;
    for (int x : lambda) a += x;
    for (int x : mu) b += x;
    std::vector<Rational> out;
    for (const auto& u : partitions(a))
        for (const auto& v : partitions(b)) out.push_back(Rational(mn_character(lambda, u) * mn_character(mu, v)));
    return out;
}

std::string partition_name(const std::vector<int>& lambda) {
    std::ostringstream o;
    o << "[";
    for (std::size_t i = 0; i < lambda.size(); ++i) o << (i ? "," : "") << lambda[i];
    o << "]";
    return o.str();
}

// ---------------------------------------------------------------- parallel jobs

void run_parallel(std::size_t n, int workers, const std::function<void(std::size_t)>& job) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace fbk
