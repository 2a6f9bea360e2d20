#include "fbk/engine.hpp"

#include <algorithm>
#include <deque>

namespace fbk {

QuadraticEngine::QuadraticEngine(Data data, int bound) : LinearCategory(bound), data_(std::move(data)) {
    if (data_.labels > 0 && (data_.swap.rows() != static_cast<std::size_t>(data_.labels) ||
                             data_.swap.cols() != static_cast<std::size_t>(data_.labels)))
        throw FbError("engine: label action has the wrong size");
}

std::size_t QuadraticEngine::gen_count(int n) const {
    if (n < 0) return 0;
    return static_cast<std::size_t>((n + 1) * n / 2) * static_cast<std::size_t>(data_.labels);
}

GeneratorLabel QuadraticEngine::gen_label(int n, std::size_t g) const {
    std::size_t d = static_cast<std::size_t>(data_.labels);
    std::size_t pair = g / d;
    GeneratorLabel out;
    out.label = static_cast<int>(g % d);
    // pairs i < j <= n in lexicographic order; pairs starting at i number n - i
    int i = 0;
    while (pair >= static_cast<std::size_t>(n - i)) {
        pair -= static_cast<std::size_t>(n - i);
        ++i;
    }
    out.i = i;
    out.j = i + 1 + static_cast<int>(pair);
    return out;
}

std::size_t QuadraticEngine::gen_index(int n, int i, int j, int label) const {
    std::size_t pair = 0;
    for (int k = 0; k < i; ++k) pair += static_cast<std::size_t>(n - k);
    pair += static_cast<std::size_t>(j - i - 1);
    return pair * static_cast<std::size_t>(data_.labels) + static_cast<std::size_t>(label);
}

std::size_t QuadraticEngine::chain_count(int n, int w) const {
    std::size_t c = 1;
    for (int k = 0; k < w; ++k) c *= gen_count(n + k);
    return c;
}

std::vector<std::size_t> QuadraticEngine::chain_decode(int n, int w, std::size_t idx) const {
    std::vector<std::size_t> g(w);
    for (int k = w - 1; k >= 0; --k) {
        std::size_t r = gen_count(n + k);
        g[k] = idx % r;
        idx /= r;
    }
    return g;
}

std::size_t QuadraticEngine::chain_encode(int n, const std::vector<std::size_t>& gens) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) idx = idx * gen_count(n + static_cast<int>(k)) + gens[k];
    return idx;
}

namespace {

struct OnePush {
    Rational coeff;
    Map v;
    bool has_gen = false;
    std::size_t gen = 0;
};

}  // namespace

std::vector<QuadraticEngine::Pushed> QuadraticEngine::push(int n, const std::vector<std::size_t>& chain,
                                                           const Map& u, const UnitRule* unit) const {
    std::vector<Pushed> terms{{Rational(1), u, {}}};
    int w = static_cast<int>(chain.size());
    for (int k = w - 1; k >= 0; --k) {
        int tgt = n + k;  // generator tgt+1 -> tgt
        GeneratorLabel lab = gen_label(tgt, chain[k]);
        Map f = merge_map(tgt + 1, lab.i, lab.j);
        std::vector<Pushed> next;
        for (const auto& t : terms) {
            const Map& v = t.v;
            int a = static_cast<int>(v.size());
            int p = -1, q = -1;
            for (int x = 0; x < a; ++x) {
                if (v[x] == lab.i) p = x;
                if (v[x] == lab.j) q = x;
            }
            if (p >= 0 && q >= 0) {
                int lo = std::min(p, q), hi = std::max(p, q);
                Map g = merge_map(a, lo, hi);
                Map nv(a - 1);
                for (int x = 0; x < a; ++x) nv[g[x]] = f[v[x]];
                auto emit = [&](int label, const Rational& c) {
                    Pushed r{t.coeff * c, nv, t.chain};
                    r.chain.insert(r.chain.begin(), gen_index(a - 1, lo, hi, label));
                    next.push_back(std::move(r));
                };
                if (p < q) {
                    emit(lab.label, 1);
                } else {
                    for (int l = 0; l < data_.labels; ++l) {
                        Rational c = data_.swap.get(static_cast<std::size_t>(l), static_cast<std::size_t>(lab.label));
                        if (c != 0) emit(l, c);
                    }
                }
            } else {
                if (!unit) continue;
                Rational c;
                if (p >= 0 || (p < 0 && q < 0))
                    c = unit->second[static_cast<std::size_t>(lab.label)];
                else
                    c = unit->first[static_cast<std::size_t>(lab.label)];
                if (c == 0) continue;
                next.push_back({t.coeff * c, fbk::compose(f, v), t.chain});
            }
        }
        terms = std::move(next);
    }
    return terms;
}

// ---------------------------------------------------------------- relations

Echelon QuadraticEngine::closed_weight2(int k) const {
    std::size_t nc = chain_count(k, 2);
    Echelon e(nc);
    if (nc == 0) return e;
    std::deque<SparseVec> queue;
    if (data_.relations)
        for (auto& v : data_.relations(k))
            if (e.insert(v)) queue.push_back(v);
    while (!queue.empty()) {
        SparseVec v = std::move(queue.front());
        queue.pop_front();
        for (int s = 0; s + 1 < k + 2; ++s) {
            Perm sp = coxeter(k + 2, s);
            std::map<Perm, VecBuilder> parts;
            for (const auto& [ci, c] : v.terms)
                for (const auto& t : push(k, chain_decode(k, 2, ci), sp, nullptr))
                    parts[t.v].add(chain_encode(k, t.chain), c * t.coeff);
            for (auto& [tau, b] : parts) {
                SparseVec x = b.take();
                if (!x.empty() && e.insert(x)) queue.push_back(std::move(x));
            }
        }
    }
    return e;
}

QuadraticEngine::Slice QuadraticEngine::build_slice(int n, int w) const {
    Slice s;
    std::size_t nc = chain_count(n, w);
    s.ideal = Echelon(nc);
    if (w == 2) {
        s.ideal = closed_weight2(n);
    } else if (w > 2) {
        for (int u = 0; u + 2 <= w; ++u) {
            int k = n + u, v = w - 2 - u;
            std::size_t pre = chain_count(n, u), mid = chain_count(k, 2), post = chain_count(k + 2, v);
            const auto& rel = slice(k, 2).ideal.raw_rows();
            for (std::size_t a = 0; a < pre; ++a)
                for (const auto& r : rel)
                    for (std::size_t b = 0; b < post; ++b) {
                        SparseVec x;
                        for (const auto& [ci, c] : r.terms) x.push((a * mid + ci) * post + b, c);
                        s.ideal.insert(x);
                    }
        }
    }
    for (std::size_t c = 0; c < nc; ++c)
        if (!s.ideal.is_pivot(c)) {
            s.slot[c] = s.free.size();
            s.free.push_back(c);
        }
    return s;
}

const QuadraticEngine::Slice& QuadraticEngine::slice(int n, int w) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(n, w);
    auto it = slices_.find(key);
    if (it != slices_.end()) return *it->second;
    auto built = std::make_unique<Slice>(build_slice(n, w));
    return *slices_.emplace(key, std::move(built)).first->second;
}

const Echelon& QuadraticEngine::ideal(int n, int w) const { return slice(n, w).ideal; }
const std::vector<std::size_t>& QuadraticEngine::free_chains(int n, int w) const { return slice(n, w).free; }

std::size_t QuadraticEngine::free_slot(int n, int w, std::size_t chain) const {
    const auto& s = slice(n, w);
    auto it = s.slot.find(chain);
    return it == s.slot.end() ? MapSet::npos : it->second;
}

SparseVec QuadraticEngine::reduce(int n, int w, const SparseVec& chains) const {
    const auto& s = slice(n, w);
    SparseVec r = s.ideal.reduce(chains);
    VecBuilder b;
    for (const auto& [c, x] : r.terms) b.add(s.slot.at(c), x);
    return b.take();
}

std::vector<SparseVec> QuadraticEngine::weight2_relations(int k) const { return slice(k, 2).ideal.rref_rows(); }

// ---------------------------------------------------------------- category structure

std::size_t QuadraticEngine::dim(int a, int b) const {
    if (a < b || b < 0 || a > bound_) return 0;
    if (b == 0) return a == 0 ? 1 : 0;
    return factorial(b) * free_chains(b, a - b).size();
}

int QuadraticEngine::degree(int a, int b, std::size_t) const { return data_.degree_per_weight * (a - b); }

std::size_t QuadraticEngine::basis_index(int n, int w, const Perm& tau, std::size_t slot) const {
    return perm_rank(tau) * free_chains(n, w).size() + slot;
}

std::pair<Perm, std::size_t> QuadraticEngine::basis_decode(int n, int w, std::size_t idx) const {
    std::size_t nf = free_chains(n, w).size();
    return {perm_unrank(n, idx / nf), idx % nf};
}

SparseVec QuadraticEngine::from_chain(int n, const Perm& tau, const std::vector<std::size_t>& chain) const {
    int w = static_cast<int>(chain.size());
    SparseVec r = reduce(n, w, SparseVec::unit(chain_encode(n, chain)));
    VecBuilder b;
    for (const auto& [s, c] : r.terms) b.add(basis_index(n, w, tau, s), c);
    return b.take();
}

SparseVec QuadraticEngine::compose(int a, int b, int c, std::size_t y, std::size_t x) const {
    auto key = std::make_tuple(a, b, c, y, x);
    {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = compose_memo_.find(key);
        if (it != compose_memo_.end()) return it->second;
    }
    int w1 = b - c, w2 = a - b;
    SparseVec out;
    if (c == 0) {
        out = SparseVec::unit(0);  // only (0,0,0)
    } else {
        auto [t1, s1] = basis_decode(c, w1, y);
        auto [t2, s2] = basis_decode(b, w2, x);
        std::vector<std::size_t> q1 = chain_decode(c, w1, free_chains(c, w1)[s1]);
        std::vector<std::size_t> q2 = chain_decode(b, w2, free_chains(b, w2)[s2]);
        std::map<Perm, VecBuilder> parts;
        for (const auto& t : push(c, q1, t2, nullptr)) {
            std::vector<std::size_t> ch = t.chain;
            ch.insert(ch.end(), q2.begin(), q2.end());
            parts[fbk::compose(t1, t.v)].add(chain_encode(c, ch), t.coeff);
        }
        VecBuilder acc;
        for (auto& [tau, bld] : parts) {
            SparseVec r = reduce(c, w1 + w2, bld.take());
            for (const auto& [s, v] : r.terms) acc.add(basis_index(c, w1 + w2, tau, s), v);
        }
        out = acc.take();
    }
    std::lock_guard<std::recursive_mutex> lock(mu_);
    compose_memo_.emplace(key, out);
    return out;
}

SparseVec QuadraticEngine::perm(int n, const Perm& p) const {
    if (n == 0) return SparseVec::unit(0);
    return SparseVec::unit(basis_index(n, 0, p, 0));
}

std::vector<std::size_t> QuadraticEngine::generators(int a, int b) const {
    std::vector<std::size_t> g;
    if (a == b + 1 && b >= 1)
        for (std::size_t s = 0; s < free_chains(b, 1).size(); ++s) g.push_back(s);  // tau = id
    return g;
}

}  // namespace fbk
