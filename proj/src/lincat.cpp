#include "fbk/lincat.hpp"

#include <algorithm>
#include <sstream>

namespace fbk {

std::vector<std::size_t> LinearCategory::generators(int a, int b) const {
    std::vector<std::size_t> all(dim(a, b));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

SparseVec LinearCategory::compose(int a, int b, int c, const SparseVec& y, const SparseVec& x) const {
    VecBuilder acc;
    for (const auto& [j, cy] : y.terms)
        for (const auto& [i, cx] : x.terms) acc.add(compose(a, b, c, j, i), cy * cx);
    return acc.take();
}

SparseVec LinearCategory::right_act(int a, int b, const SparseVec& x, const Perm& p) const {
    return compose(a, a, b, x, perm(a, p));
}

SparseVec LinearCategory::left_act(int a, int b, const Perm& p, const SparseVec& x) const {
    return compose(a, b, b, perm(b, p), x);
}

SparseVec LinearCategory::differential(int a, int b, const SparseVec& x) const {
    VecBuilder acc;
    for (const auto& [i, c] : x.terms) acc.add(differential(a, b, i), c);
    return acc.take();
}

std::vector<int> LinearCategory::degrees(int a, int b) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < dim(a, b); ++i) {
        int d = degree(a, b, i);
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BiComponent restricted_component(const LinearCategory& c, int a, int b, const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> slot(c.dim(a, b), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < idx.size(); ++k) slot[idx[k]] = k;
    BiComponent comp;
    comp.a = a;
    comp.b = b;
    comp.dim = idx.size();
    auto restrict_to = [&](const SparseVec& v) {
        SparseVec out;
        VecBuilder bld;
        for (const auto& [i, x] : v.terms) {
            if (slot[i] == static_cast<std::size_t>(-1)) throw FbError("action leaves a homogeneous piece");
            bld.add(slot[i], x);
        }
        return bld.take();
    };
    for (int g = 0; g + 1 < a; ++g) {
        std::vector<SparseVec> cols;
        for (std::size_t i : idx) cols.push_back(restrict_to(c.right_act(a, b, SparseVec::unit(i), coxeter(a, g))));
        comp.right.push_back(RationalMatrix::from_columns(idx.size(), cols));
    }
    for (int g = 0; g + 1 < b; ++g) {
        std::vector<SparseVec> cols;
        for (std::size_t i : idx) cols.push_back(restrict_to(c.left_act(a, b, coxeter(b, g), SparseVec::unit(i))));
        comp.left.push_back(RationalMatrix::from_columns(idx.size(), cols));
    }
    return comp;
}

FbBimodule LinearCategory::underlying() const {
    std::shared_ptr<const LinearCategory> keep = weak_from_this().lock();
    return FbBimodule(bound_, [this, keep](int a, int b) {
        std::vector<std::size_t> idx(dim(a, b));
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        return restricted_component(*this, a, b, idx);
    });
}

GradedFbBimodule LinearCategory::underlying_graded() const {
    GradedFbBimodule g(bound_);
    for (int a = 0; a <= bound_; ++a)
        for (int b = 0; b <= bound_; ++b)
            for (int k : degrees(a, b)) {
                std::vector<std::size_t> idx;
                for (std::size_t i = 0; i < dim(a, b); ++i)
                    if (degree(a, b, i) == k) idx.push_back(i);
                g.set(a, b, k, restricted_component(*this, a, b, idx));
            }
    return g;
}

// ---------------------------------------------------------------- builtins

Builtin parse_builtin(const std::string& s) {
    if (s == "kFB" || s == "FB") return Builtin::FB;
    if (s == "kFI" || s == "FI") return Builtin::FI;
    if (s == "kFI-ddag" || s == "FIddag" || s == "kFI‡") return Builtin::FIddag;
    if (s == "kFS" || s == "FS") return Builtin::FS;
    if (s == "kFA" || s == "FA") return Builtin::FA;
    if (s == "unit" || s == "1") return Builtin::Unit;
    throw FbError("unknown builtin category: " + s);
}

std::string builtin_name(Builtin b) {
    switch (b) {
        case Builtin::FB: return "kFB";
        case Builtin::FI: return "kFI";
        case Builtin::FIddag: return "kFI-ddag";
        case Builtin::FS: return "kFS";
        case Builtin::FA: return "kFA";
        case Builtin::Unit: return "unit";
    }
    return "?";
}

FunctionCategory::FunctionCategory(Builtin kind, int bound) : LinearCategory(bound), kind_(kind) {
    switch (kind) {
        case Builtin::FB:
        case Builtin::Unit: mkind_ = MapKind::Bijective; break;
        case Builtin::FI:
        case Builtin::FIddag: mkind_ = MapKind::Injective; break;
        case Builtin::FS: mkind_ = MapKind::Surjective; break;
        case Builtin::FA: mkind_ = MapKind::All; break;
    }
}

std::string FunctionCategory::name() const { return builtin_name(kind_); }

const MapSet& FunctionCategory::maps(int a, int b) const { return map_set(a, b, mkind_); }

std::size_t FunctionCategory::dim(int a, int b) const {
    if (a < 0 || b < 0 || a > bound_ || b > bound_) return 0;
    return maps(a, b).size();
}

SparseVec FunctionCategory::compose(int a, int b, int c, std::size_t y, std::size_t x) const {
    Map h = fbk::compose(maps(b, c)[y], maps(a, b)[x]);
    std::size_t i = maps(a, c).index(h);
    if (i == MapSet::npos) throw FbError("composite leaves the map class");
    return SparseVec::unit(i);
}

SparseVec FunctionCategory::perm(int n, const Perm& p) const {
    std::size_t i = maps(n, n).index(p);
    int s = kind_ == Builtin::FIddag ? perm_sign(p) : 1;
    return SparseVec::unit(i, s);
}

std::vector<std::size_t> FunctionCategory::generators(int a, int b) const {
    bool inj = mkind_ == MapKind::Injective || mkind_ == MapKind::All;
    bool sur = mkind_ == MapKind::Surjective || mkind_ == MapKind::All;
    std::vector<std::size_t> g;
    if ((b == a + 1 && inj) || (b + 1 == a && sur))
        for (std::size_t i = 0; i < dim(a, b); ++i) g.push_back(i);
    return g;
}

CategoryPtr build_builtin(Builtin which, int bound) {
    if (bound < 0) throw FbError("bound must be non-negative");
    return std::make_shared<FunctionCategory>(which, bound);
}

OppositeCategory::OppositeCategory(CategoryPtr base) : LinearCategory(base->bound()), base_(std::move(base)) {}

SparseVec OppositeCategory::compose(int a, int b, int c, std::size_t y, std::size_t x) const {
    // in C: x: b -> a and y: c -> b, so y o_op x = x o y
    return base_->compose(c, b, a, x, y);
}

// ---------------------------------------------------------------- checks

namespace {

std::string where(int a, int b, std::size_t i) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")#" << i;
    return os.str();
}

std::vector<std::size_t> generator_list(const LinearCategory& c, int a, int b) {
    return c.generators(a, b);
}

}  // namespace

CategoryCheck check_unitality(const LinearCategory& c, int max_arity) {
    CategoryCheck r;
    for (int a = 0; a <= max_arity; ++a)
        for (int b = 0; b <= max_arity; ++b)
            for (std::size_t i = 0; i < c.dim(a, b); ++i) {
                SparseVec x = SparseVec::unit(i);
                ++r.checked;
                if (!equal(c.compose(a, b, b, c.identity(b), x), x) ||
                    !equal(c.compose(a, a, b, x, c.identity(a)), x)) {
                    r.failure = "unitality fails at " + where(a, b, i);
                    return r;
                }
            }
    return r;
}

CategoryCheck check_associativity(const LinearCategory& c, int max_arity, int exhaustive_arity,
                                  std::size_t samples, std::uint64_t seed) {
    CategoryCheck r;
    auto test = [&](int a, int b, int cc, int d, std::size_t z, std::size_t y, std::size_t x) {
        // z: cc -> d, y: b -> cc, x: a -> b
        ++r.checked;
        SparseVec zy = c.compose(b, cc, d, z, y);
        SparseVec yx = c.compose(a, b, cc, y, x);
        SparseVec l = c.compose(a, b, d, zy, SparseVec::unit(x));
        SparseVec rr = c.compose(a, cc, d, SparseVec::unit(z), yx);
        if (!equal(l, rr)) {
            std::ostringstream os;
            os << "associativity fails for " << where(cc, d, z) << " o " << where(b, cc, y) << " o "
               << where(a, b, x);
            r.failure = os.str();
            return false;
        }
        return true;
    };
    int n = max_arity;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            for (int cc = 0; cc <= n; ++cc)
                for (int d = 0; d <= n; ++d) {
                    bool small = std::max({a, b, cc, d}) <= exhaustive_arity;
                    std::vector<std::size_t> zs;
                    if (small) {
                        zs.resize(c.dim(cc, d));
                        for (std::size_t i = 0; i < zs.size(); ++i) zs[i] = i;
                    } else {
                        zs = generator_list(c, cc, d);
                    }
                    if (zs.empty() || c.dim(b, cc) == 0 || c.dim(a, b) == 0) continue;
                    // generator-first triples: all y, a bounded set of x
                    std::size_t ylim = small ? c.dim(b, cc) : std::min<std::size_t>(c.dim(b, cc), 24);
                    std::size_t xlim = small ? c.dim(a, b) : std::min<std::size_t>(c.dim(a, b), 24);
                    for (std::size_t z : zs)
                        for (std::size_t y = 0; y < ylim; ++y)
                            for (std::size_t x = 0; x < xlim; ++x)
                                if (!test(a, b, cc, d, z, y, x)) return r;
                }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        int a = static_cast<int>(rng() % (n + 1)), b = static_cast<int>(rng() % (n + 1));
        int cc = static_cast<int>(rng() % (n + 1)), d = static_cast<int>(rng() % (n + 1));
        if (!c.dim(a, b) || !c.dim(b, cc) || !c.dim(cc, d)) continue;
        if (!test(a, b, cc, d, rng() % c.dim(cc, d), rng() % c.dim(b, cc), rng() % c.dim(a, b))) return r;
    }
    return r;
}

CategoryCheck check_d_squared(const LinearCategory& c, int max_arity) {
    CategoryCheck r;
    if (!c.has_differential()) return r;
    for (int a = 0; a <= max_arity; ++a)
        for (int b = 0; b <= max_arity; ++b)
            for (std::size_t i = 0; i < c.dim(a, b); ++i) {
                ++r.checked;
                SparseVec dd = c.differential(a, b, c.differential(a, b, i));
                if (!dd.empty()) {
                    r.failure = "d^2 != 0 at " + where(a, b, i);
                    return r;
                }
            }
    return r;
}

CategoryCheck check_leibniz(const LinearCategory& c, int max_arity, std::size_t samples, std::uint64_t seed) {
    CategoryCheck r;
    auto test = [&](int a, int b, int cc, const SparseVec& y, const SparseVec& x, int ydeg) {
        // y: b -> cc, x: a -> b
        ++r.checked;
        SparseVec lhs = c.differential(a, cc, c.compose(a, b, cc, y, x));
        SparseVec rhs = add(c.compose(a, b, cc, c.differential(b, cc, y), x),
                            c.compose(a, b, cc, y, c.differential(a, b, x)), ydeg % 2 ? -1 : 1);
        return equal(lhs, rhs);
    };
    int n = max_arity;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            for (int cc = 0; cc <= n; ++cc) {
                if (!c.dim(a, b) || !c.dim(b, cc)) continue;
                std::vector<SparseVec> gens;
                std::vector<int> gdeg;
                for (std::size_t g : c.generators(b, cc)) {
                    gens.push_back(SparseVec::unit(g));
                    gdeg.push_back(c.degree(b, cc, g));
                }
                if (b == cc)
                    for (int k = 0; k + 1 < b; ++k) {
                        gens.push_back(c.perm(b, coxeter(b, k)));
                        gdeg.push_back(0);
                    }
                for (std::size_t gi = 0; gi < gens.size(); ++gi)
                    for (std::size_t x = 0; x < c.dim(a, b); ++x)
                        if (!test(a, b, cc, gens[gi], SparseVec::unit(x), gdeg[gi])) {
                            r.failure = "Leibniz fails for generator in (" + std::to_string(b) + "," +
                                        std::to_string(cc) + ") against " + where(a, b, x);
                            return r;
                        }
            }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        int a = static_cast<int>(rng() % (n + 1)), b = static_cast<int>(rng() % (n + 1));
        int cc = static_cast<int>(rng() % (n + 1));
        if (!c.dim(a, b) || !c.dim(b, cc)) continue;
        std::size_t y = rng() % c.dim(b, cc), x = rng() % c.dim(a, b);
        if (!test(a, b, cc, SparseVec::unit(y), SparseVec::unit(x), c.degree(b, cc, y))) {
            r.failure = "Leibniz fails for " + where(b, cc, y) + " o " + where(a, b, x);
            return r;
        }
    }
    return r;
}

CategoryCheck check_differential_equivariant(const LinearCategory& c, int max_arity) {
    CategoryCheck r;
    if (!c.has_differential()) return r;
    for (int n = 0; n <= max_arity; ++n) {
        ++r.checked;
        if (!c.differential(n, n, c.identity(n)).empty()) {
            r.failure = "d(identity) != 0 at arity " + std::to_string(n);
            return r;
        }
    }
    return r;
}

FunctorCheck check_functor(const LinearCategory& src, const LinearCategory& dst, const BasisMap& f,
                           int max_arity, bool exhaustive_pairs) {
    FunctorCheck r;
    auto fv = [&](int a, int b, const SparseVec& v) {
        VecBuilder acc;
        for (const auto& [i, c] : v.terms) acc.add(f(a, b, i), c);
        return acc.take();
    };
    for (int n = 0; n <= max_arity; ++n) {
        for (int k = 0; k + 1 < n; ++k) {
            ++r.checked;
            Perm g = coxeter(n, k);
            if (!equal(fv(n, n, src.perm(n, g)), dst.perm(n, g))) {
                r.failure = "functor does not preserve the permutation s_" + std::to_string(k) + " at arity " +
                            std::to_string(n);
                return r;
            }
        }
        if (!equal(fv(n, n, src.identity(n)), dst.identity(n))) {
            r.failure = "functor does not preserve the identity at arity " + std::to_string(n);
            return r;
        }
    }
    for (int a = 0; a <= max_arity; ++a)
        for (int b = 0; b <= max_arity; ++b)
            for (int c = 0; c <= max_arity; ++c) {
                if (!src.dim(a, b) || !src.dim(b, c)) continue;
                std::vector<std::size_t> ys;
                if (exhaustive_pairs) {
                    for (std::size_t i = 0; i < src.dim(b, c); ++i) ys.push_back(i);
                } else {
                    ys = src.generators(b, c);
                }
                for (std::size_t y : ys)
                    for (std::size_t x = 0; x < src.dim(a, b); ++x) {
                        ++r.checked;
                        SparseVec lhs = fv(a, c, src.compose(a, b, c, y, x));
                        SparseVec rhs = dst.compose(a, b, c, f(b, c, y), f(a, b, x));
                        if (!equal(lhs, rhs)) {
                            r.failure = "functor fails on " + where(b, c, y) + " o " + where(a, b, x);
                            return r;
                        }
                    }
            }
    return r;
}

std::size_t functor_rank(const LinearCategory& src, const LinearCategory& dst, const BasisMap& f, int a,
                         int b) {
    std::vector<SparseVec> cols;
    for (std::size_t i = 0; i < src.dim(a, b); ++i) cols.push_back(f(a, b, i));
    return rank(RationalMatrix::from_columns(dst.dim(a, b), cols));
}

}  // namespace fbk
