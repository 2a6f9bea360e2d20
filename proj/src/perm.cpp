#include "fbk/perm.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace fbk {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Map& f, const Map& g) {
    Map h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

int perm_sign(const Perm& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Perm coxeter(int n, int k) {
    if (k < 0 || k + 1 >= n) throw std::out_of_range("coxeter generator index");
    Perm p = identity_perm(n);
    std::swap(p[k], p[k + 1]);
    return p;
}

std::vector<int> coxeter_word(const Perm& p) {
    // Bubble sort q = p o w^{-1} to the identity, recording right multiplications.
    Perm q = p;
    std::vector<int> rev;
    int n = static_cast<int>(q.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k + 1 < n; ++k)
            if (q[k] > q[k + 1]) {
                std::swap(q[k], q[k + 1]);  // q <- q o s_k
                rev.push_back(k);
                changed = true;
            }
    }
    // p o s_{r1} o ... o s_{rm} = id, so p = s_{rm} o ... o s_{r1}
    std::reverse(rev.begin(), rev.end());
    return rev;
}

bool is_injective(const Map& f, int n) {
    std::vector<bool> hit(n, false);
    for (int v : f) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool is_surjective(const Map& f, int n) {
    std::vector<bool> hit(n, false);
    for (int v : f) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::size_t perm_rank(const Perm& p) {
    int n = static_cast<int>(p.size());
    std::size_t r = 0;
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int v = 0; v < p[i]; ++v)
            if (!used[v]) ++smaller;
        r += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
        used[p[i]] = true;
    }
    return r;
}

Perm perm_unrank(int n, std::size_t r) {
    std::vector<int> pool = identity_perm(n);
    Perm p(n);
    for (int i = 0; i < n; ++i) {
        std::size_t f = factorial(n - 1 - i);
        std::size_t q = r / f;
        r %= f;
        p[i] = pool[q];
        pool.erase(pool.begin() + static_cast<long>(q));
    }
    return p;
}

MapSet::MapSet(int m, int n, MapKind kind) : m_(m), n_(n) {
    Map f(m, 0);
    auto accept = [&](const Map& g) {
        switch (kind) {
            case MapKind::All: return true;
            case MapKind::Injective: return is_injective(g, n);
            case MapKind::Surjective: return is_surjective(g, n);
            case MapKind::Bijective: return m == n && is_injective(g, n);
        }
        return false;
    };
    if (m == 0) {
        if (accept(f)) maps_.push_back(f);
    } else if (n > 0) {
        while (true) {
            if (accept(f)) maps_.push_back(f);
            int i = m - 1;
            while (i >= 0 && f[i] == n - 1) f[i--] = 0;
            if (i < 0) break;
            ++f[i];
        }
    }
    for (std::size_t i = 0; i < maps_.size(); ++i) index_.emplace(code(maps_[i]), i);
}

std::uint64_t MapSet::code(const Map& f) const {
    std::uint64_t c = 0;
    for (int v : f) c = c * static_cast<std::uint64_t>(n_ + 1) + static_cast<std::uint64_t>(v);
    return c;
}

std::size_t MapSet::index(const Map& f) const {
    if (static_cast<int>(f.size()) != m_) return npos;
    auto it = index_.find(code(f));
    return it == index_.end() ? npos : it->second;
}

const MapSet& map_set(int m, int n, MapKind kind) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<MapSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(m, n, static_cast<int>(kind));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<MapSet>(m, n, kind)).first;
    return *it->second;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= n; ++k)
        for (auto& s : subsets(n, k)) out.push_back(std::move(s));
    return out;
}

namespace {
void partitions_rec(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<int> class_representative_word(const std::vector<int>& lambda) {
    std::vector<int> w;
    int start = 0;
    for (int len : lambda) {
        for (int k = start; k + 1 < start + len; ++k) w.push_back(k);
        start += len;
    }
    return w;
}

Map merge_map(int np1, int i, int j) {
    Map f(np1);
    for (int k = 0; k < np1; ++k) f[k] = k < j ? k : (k == j ? i : k - 1);
    return f;
}

Map skip_map(int n, int x) {
    Map f(n - 1);
    for (int k = 0; k < n - 1; ++k) f[k] = k < x ? k : k + 1;
    return f;
}

}  // namespace fbk
