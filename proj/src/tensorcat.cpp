#include "fbk/tensorcat.hpp"

namespace fbk {

TensorCategory::TensorCategory(std::string name, CategoryPtr a, CategoryPtr b, FreeSide side, Reps reps,
                               Decompose decompose, Interchange interchange, int bound)
    : LinearCategory(bound),
      name_(std::move(name)),
      a_(std::move(a)),
      b_(std::move(b)),
      side_(side),
      reps_(std::move(reps)),
      decompose_(std::move(decompose)),
      interchange_(std::move(interchange)) {}

const TensorCategory::Table& TensorCategory::table(int s, int t) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(s, t);
    auto it = tables_.find(key);
    if (it != tables_.end()) return *it->second;
    auto tb = std::make_unique<Table>();
    if (s >= 0 && t >= 0 && s <= bound_ && t <= bound_) {
        for (int x = 0; x <= bound_; ++x) {
            if (side_ == FreeSide::LeftOfB) {
                std::size_t da = a_->dim(x, t);
                if (!da || !b_->dim(s, x)) continue;
                auto reps = reps_(s, x);
                for (std::size_t ia = 0; ia < da; ++ia)
                    for (std::size_t r : reps) tb->labels.push_back({x, ia, r});
            } else {
                std::size_t db = b_->dim(s, x);
                if (!db || !a_->dim(x, t)) continue;
                auto reps = reps_(x, t);
                for (std::size_t r : reps)
                    for (std::size_t ib = 0; ib < db; ++ib) tb->labels.push_back({x, r, ib});
            }
        }
        for (std::size_t i = 0; i < tb->labels.size(); ++i) {
            const auto& l = tb->labels[i];
            tb->index.emplace(std::make_tuple(l.mid, l.a, l.b), i);
        }
    }
    return *tables_.emplace(key, std::move(tb)).first->second;
}

const std::vector<TensorCategory::Label>& TensorCategory::labels(int s, int t) const { return table(s, t).labels; }

std::size_t TensorCategory::index_of(int s, int t, const Label& l) const {
    const auto& tb = table(s, t);
    auto it = tb.index.find(std::make_tuple(l.mid, l.a, l.b));
    return it == tb.index.end() ? MapSet::npos : it->second;
}

std::size_t TensorCategory::dim(int s, int t) const { return table(s, t).labels.size(); }

int TensorCategory::degree(int s, int t, std::size_t i) const {
    const auto& l = table(s, t).labels[i];
    return a_->degree(l.mid, t, l.a) + b_->degree(s, l.mid, l.b);
}

const TensorCategory::Dec& TensorCategory::decomposition(int src, int tgt, std::size_t i) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_tuple(src, tgt, i);
    auto it = dec_memo_.find(key);
    if (it != dec_memo_.end()) return it->second;
    auto [rep, sigma] = decompose_(src, tgt, i);
    SparseVec v;
    if (side_ == FreeSide::LeftOfB)
        v = b_->compose(src, tgt, tgt, b_->perm(tgt, sigma), SparseVec::unit(rep));
    else
        v = a_->compose(src, src, tgt, SparseVec::unit(rep), a_->perm(src, sigma));
    if (v.size() != 1 || v.terms[0].first != i) throw FbError(name_ + ": orbit decomposition is not monomial");
    Dec d{rep, sigma, 1 / v.terms[0].second};
    return dec_memo_.emplace(key, std::move(d)).first->second;
}

const SparseVec& TensorCategory::moved(int s, int x, int t, std::size_t i, const Dec& d) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_tuple(s, x, t, i, perm_rank(d.sigma));
    auto it = move_memo_.find(key);
    if (it != move_memo_.end()) return it->second;
    SparseVec v = side_ == FreeSide::LeftOfB ? a_->compose(x, x, t, SparseVec::unit(i), a_->perm(x, d.sigma))
                                            : b_->compose(s, x, x, b_->perm(x, d.sigma), SparseVec::unit(i));
    return move_memo_.emplace(key, std::move(v)).first->second;
}

SparseVec TensorCategory::element(int s, int x, int t, const SparseVec& a, const SparseVec& b) const {
    VecBuilder acc;
    const auto& tb = table(s, t);
    for (const auto& [ia, ca] : a.terms)
        for (const auto& [ib, cb] : b.terms) {
            if (side_ == FreeSide::LeftOfB) {
                const Dec& d = decomposition(s, x, ib);
                for (const auto& [ja, c] : moved(-1, x, t, ia, d).terms)
                    acc.add(tb.index.at(std::make_tuple(x, ja, d.rep)), ca * cb * d.coeff * c);
            } else {
                const Dec& d = decomposition(x, t, ia);
                for (const auto& [jb, c] : moved(s, x, -1, ib, d).terms)
                    acc.add(tb.index.at(std::make_tuple(x, d.rep, jb)), ca * cb * d.coeff * c);
            }
        }
    return acc.take();
}

SparseVec TensorCategory::compose(int s, int m, int t, std::size_t y, std::size_t x) const {
    auto key = std::make_tuple(s, m, t, y, x);
    {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    // y = a1 (x) b1 : m -> t, x = a2 (x) b2 : s -> m
    Label l1 = table(m, t).labels[y];
    Label l2 = table(s, m).labels[x];
    VecBuilder acc;
    for (const auto& term : interchange_(l2.mid, m, l1.mid, l1.b, l2.a)) {
        SparseVec a = a_->compose(term.mid, l1.mid, t, SparseVec::unit(l1.a), term.a);
        if (a.empty()) continue;
        SparseVec b = b_->compose(s, l2.mid, term.mid, term.b, SparseVec::unit(l2.b));
        if (b.empty()) continue;
        acc.add(element(s, term.mid, t, a, b));
    }
    SparseVec out = acc.take();
    std::lock_guard<std::recursive_mutex> lock(mu_);
    memo_.emplace(key, out);
    return out;
}

SparseVec TensorCategory::perm(int n, const Perm& p) const {
    return element(n, n, n, a_->perm(n, p), b_->identity(n));
}

SparseVec TensorCategory::differential(int s, int t, std::size_t i) const {
    if (!diff_) return {};
    auto key = std::make_tuple(s, t, i);
    {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = diff_memo_.find(key);
        if (it != diff_memo_.end()) return it->second;
    }
    SparseVec v = diff_(s, t, i);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return diff_memo_.emplace(key, std::move(v)).first->second;
}

std::vector<std::size_t> TensorCategory::generators(int s, int t) const {
    if (gens_) return gens_(s, t);
    return LinearCategory::generators(s, t);
}

}  // namespace fbk
