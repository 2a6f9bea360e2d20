#include "fbk/quadratic.hpp"

#include <algorithm>
#include <sstream>

namespace fbk {

namespace {

Map chain_surjection(const QuadraticEngine& e, int n, const std::vector<std::size_t>& chain) {
    int w = static_cast<int>(chain.size());
    Map f = identity_perm(n + w);
    for (int k = w - 1; k >= 0; --k) {
        GeneratorLabel l = e.gen_label(n + k, chain[k]);
        f = compose(merge_map(n + k + 1, l.i, l.j), f);
    }
    return f;
}

std::vector<std::size_t> basis_chain(const QuadraticEngine& e, int n, int w, std::size_t slot) {
    return e.chain_decode(n, w, e.free_chains(n, w)[slot]);
}

// Sign of the permutation listing the subset `first` (sorted) and then its
// complement (sorted).
int shuffle_sign(int n, const std::vector<int>& first) {
    std::vector<char> in(n, 0);
    for (int x : first) in[x] = 1;
    long inv = 0;
    int seen_rest = 0;
    for (int x = 0; x < n; ++x) {
        if (in[x])
            inv += seen_rest;
        else
            ++seen_rest;
    }
    return inv % 2 ? -1 : 1;
}

std::size_t increasing_index(const MapSet& ms, const std::vector<int>& image) {
    return ms.index(Map(image.begin(), image.end()));
}

}  // namespace

// ---------------------------------------------------------------- absolute duals

std::shared_ptr<const QuadraticEngine> dual_engine(const QuadraticEngine& cat) {
    QuadraticEngine::Data d;
    d.name = "(" + cat.name() + ")^perp-op";
    d.labels = cat.labels();
    d.swap = cat.data().swap.transpose();
    d.degree_per_weight = 1;
    std::vector<std::vector<SparseVec>> ann;
    for (int k = 0; k + 2 <= cat.bound(); ++k) {
        std::size_t nc = cat.chain_count(k, 2);
        auto rels = cat.weight2_relations(k);
        std::vector<SparseVec> out;
        if (rels.empty()) {
            for (std::size_t c = 0; c < nc; ++c) out.push_back(SparseVec::unit(c));
        } else {
            RationalMatrix m(rels.size(), nc);
            for (std::size_t r = 0; r < rels.size(); ++r)
                for (const auto& [c, v] : rels[r].terms) m.set(r, c, v);
            out = kernel_basis(m).vectors();
        }
        ann.push_back(std::move(out));
    }
    d.relations = [ann](int k) {
        if (k < 0 || k >= static_cast<int>(ann.size())) return std::vector<SparseVec>{};
        return ann[k];
    };
    return std::make_shared<QuadraticEngine>(std::move(d), cat.bound());
}

AbsoluteDual::AbsoluteDual(std::shared_ptr<const QuadraticEngine> engine)
    : OppositeCategory(engine), engine_(std::move(engine)) {}

AbsoluteDualPtr absolute_dual(const QuadraticEngine& cat) { return std::make_shared<AbsoluteDual>(dual_engine(cat)); }

DualityCount weight2_duality(const QuadraticEngine& cat, const QuadraticEngine& dual, int k) {
    DualityCount r;
    r.k = k;
    r.free_dim = cat.chain_count(k, 2);
    if (r.free_dim == 0) return r;
    r.ideal_dim = cat.ideal(k, 2).rank();
    r.annihilator_dim = dual.data().relations(k).size();
    r.closure_stable = dual.ideal(k, 2).rank() == r.annihilator_dim;
    r.dual_dim = dual.dim(k + 2, k);
    return r;
}

FiDual::FiDual(int bound) : OppositeCategory(build_builtin(Builtin::FIddag, bound)) {}

int FiDual::degree(int a, int b, std::size_t i) const {
    (void)i;
    return a - b;
}

std::shared_ptr<const FiDual> fi_dual(int bound) { return std::make_shared<FiDual>(bound); }

namespace {

// A word of added points: the injection `u` and the order of the new points.
struct Word {
    Map u;
    std::vector<int> added;
};

std::vector<Word> words(int a, int w) {
    std::vector<Word> out;
    for (const Map& u : map_set(a, a + w, MapKind::Injective).all()) {
        std::vector<int> rest;
        std::vector<char> hit(a + w, 0);
        for (int x : u) hit[x] = 1;
        for (int x = 0; x < a + w; ++x)
            if (!hit[x]) rest.push_back(x);
        do out.push_back({u, rest});
        while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

int word_sign(const Word& wd) {
    Perm p = wd.u;
    p.insert(p.end(), wd.added.begin(), wd.added.end());
    return perm_sign(p);
}

}  // namespace

FiDualReport verify_fi_dual(int bound) {
    FiDualReport rep;
    auto fid = std::static_pointer_cast<const FunctionCategory>(build_builtin(Builtin::FIddag, bound));
    for (int a = 0; a <= bound; ++a)
        for (int w = 0; a + w <= bound; ++w) {
            auto ws = words(a, w);
            std::map<std::pair<Map, std::vector<int>>, std::size_t> idx;
            for (std::size_t i = 0; i < ws.size(); ++i) idx[{ws[i].u, ws[i].added}] = i;
            // the dual relations in every position: adjacent pair plus its swap
            Echelon ideal(ws.size());
            for (std::size_t i = 0; i < ws.size(); ++i)
                for (int p = 0; p + 1 < w; ++p) {
                    auto sw = ws[i].added;
                    std::swap(sw[p], sw[p + 1]);
                    VecBuilder v;
                    v.add(i, 1);
                    v.add(idx.at({ws[i].u, sw}), 1);
                    ideal.insert(v.take());
                }
            std::size_t quot = ws.size() - ideal.rank();
            std::size_t target = fid->dim(a, a + w);
            ++rep.checked;
            if (quot != target) {
                std::ostringstream os;
                os << "dual of kFI has dimension " << quot << " at (" << a + w << "," << a << "), expected "
                   << target;
                rep.failure = os.str();
                return rep;
            }
            // the bijection word -> sign [u] kills the relations and is onto
            std::vector<SparseVec> cols;
            for (const auto& wd : ws)
                cols.push_back(SparseVec::unit(fid->maps(a, a + w).index(wd.u), word_sign(wd)));
            RationalMatrix m = RationalMatrix::from_columns(target, cols);
            for (const auto& r : ideal.raw_rows())
                if (!m.apply(r).empty()) {
                    rep.failure = "word map does not vanish on the dual relations";
                    return rep;
                }
            if (rank(m) != target) {
                rep.failure = "word map is not onto kFI-ddag";
                return rep;
            }
        }
    // concatenation of words goes to composition in kFI-ddag
    for (int a = 0; a <= bound; ++a)
        for (int b = a; b <= bound; ++b)
            for (int c = b; c <= bound; ++c) {
                auto w1 = words(a, b - a), w2 = words(b, c - b);
                if (w1.size() * w2.size() > 20000) continue;
                for (const auto& x : w1)
                    for (const auto& y : w2) {
                        Word cat{compose(y.u, x.u), {}};
                        for (int p : x.added) cat.added.push_back(y.u[p]);
                        cat.added.insert(cat.added.end(), y.added.begin(), y.added.end());
                        SparseVec lhs = SparseVec::unit(fid->maps(a, c).index(cat.u), word_sign(cat));
                        SparseVec rhs = scale(fid->compose(a, b, c, fid->maps(b, c).index(y.u), fid->maps(a, b).index(x.u)),
                                              word_sign(x) * word_sign(y));
                        ++rep.checked;
                        if (!equal(lhs, rhs)) {
                            rep.failure = "word concatenation is not compatible with composition";
                            return rep;
                        }
                    }
            }
    // permutations are the words without added points
    for (int n = 0; n <= bound; ++n)
        for (const Perm& p : map_set(n, n, MapKind::Bijective).all()) {
            ++rep.checked;
            if (!equal(fid->perm(n, p), SparseVec::unit(fid->maps(n, n).index(p), perm_sign(p)))) {
                rep.failure = "permutation words disagree with kFI-ddag";
                return rep;
            }
        }
    return rep;
}

PresentationSequence presentation_sequence(int a) {
    PresentationSequence r;
    auto fi = build_builtin(Builtin::FI, a + 2);
    auto f = std::static_pointer_cast<const FunctionCategory>(fi);
    FbBimodule one = z_component(fi->underlying(), 1);
    r.tensor_dim = tensor_over_fb(one, one).dim(a, a + 2);
    // explicit basis: [u] (x) [standard inclusion], u: a+1 -> a+2
    const MapSet& us = f->maps(a + 1, a + 2);
    Map iota = identity_perm(a + 1);
    iota.pop_back();
    std::vector<SparseVec> cols;
    for (const Map& u : us.all()) cols.push_back(SparseVec::unit(f->maps(a, a + 2).index(compose(u, iota))));
    RationalMatrix prod = RationalMatrix::from_columns(f->dim(a, a + 2), cols);
    r.image_dim = rank(prod);
    r.kernel_dim = us.size() - r.image_dim;
    Echelon sign(us.size());
    bool inside = true;
    for (std::size_t i = 0; i < us.size(); ++i) {
        Map u2 = us[i];
        int p = u2[a];
        int q = -1;
        std::vector<char> hit(a + 2, 0);
        for (int x : u2) hit[x] = 1;
        for (int x = 0; x < a + 2; ++x)
            if (!hit[x]) q = x;
        u2[a] = q;
        (void)p;
        VecBuilder v;
        v.add(i, 1);
        v.add(us.index(u2), -1);
        SparseVec sv = v.take();
        if (!prod.apply(sv).empty()) inside = false;
        sign.insert(sv);
    }
    r.sign_dim = sign.rank();
    r.kernel_is_sign = inside && r.sign_dim == r.kernel_dim && us.size() == r.tensor_dim;
    return r;
}

// ---------------------------------------------------------------- orbit data

TensorCategory::Reps fi_dual_reps(std::shared_ptr<const FiDual> fid) {
    return [fid](int s, int x) {
        auto base = std::static_pointer_cast<const FunctionCategory>(fid->base());
        std::vector<std::size_t> r;
        if (x > s) return r;
        for (const auto& img : subsets(s, x)) r.push_back(increasing_index(base->maps(x, s), img));
        return r;
    };
}

TensorCategory::Decompose fi_dual_decompose(std::shared_ptr<const FiDual> fid) {
    return [fid](int s, int x, std::size_t i) -> std::pair<std::size_t, Perm> {
        auto base = std::static_pointer_cast<const FunctionCategory>(fid->base());
        const Map& g = base->maps(x, s)[i];
        Map sorted = g;
        std::sort(sorted.begin(), sorted.end());
        Perm rho(x);
        for (int p = 0; p < x; ++p)
            rho[p] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), g[p]) - sorted.begin());
        return {base->maps(x, s).index(sorted), inverse(rho)};
    };
}

TensorCategory::Reps dual_slot_reps(AbsoluteDualPtr dual) {
    return [dual](int x, int t) {
        std::vector<std::size_t> r;
        if (t < x) return r;
        if (x == 0) {
            if (t == 0) r.push_back(0);
            return r;
        }
        const auto& e = dual->engine();
        for (std::size_t k = 0; k < e.free_chains(x, t - x).size(); ++k) r.push_back(k);
        return r;
    };
}

TensorCategory::Decompose dual_slot_decompose(AbsoluteDualPtr dual) {
    return [dual](int x, int t, std::size_t i) -> std::pair<std::size_t, Perm> {
        if (x == 0) return {0, Perm{}};
        auto [tau, slot] = dual->engine().basis_decode(x, t - x, i);
        return {slot, inverse(tau)};
    };
}

TensorCategory::Reps engine_slot_reps(EnginePtr engine) {
    return [engine](int s, int x) {
        std::vector<std::size_t> r;
        if (s < x) return r;
        if (x == 0) {
            if (s == 0) r.push_back(0);
            return r;
        }
        Perm id = identity_perm(x);
        for (std::size_t k = 0; k < engine->free_chains(x, s - x).size(); ++k)
            r.push_back(engine->basis_index(x, s - x, id, k));
        return r;
    };
}

TensorCategory::Decompose engine_slot_decompose(EnginePtr engine) {
    return [engine](int s, int x, std::size_t i) -> std::pair<std::size_t, Perm> {
        if (x == 0) return {0, Perm{}};
        auto [tau, slot] = engine->basis_decode(x, s - x, i);
        return {engine->basis_index(x, s - x, identity_perm(x), slot), tau};
    };
}

// ---------------------------------------------------------------- relative dual for G

RelativeDualG::RelativeDualG(UnitalCategoryPtr catpu, std::shared_ptr<const FiDual> fid, int bound)
    : TensorCategory("(gr^G " + catpu->name() + ")^perp", catpu->operad_category(), fid, FreeSide::LeftOfB,
                     fi_dual_reps(fid), fi_dual_decompose(fid), nullptr, bound),
      catpu_(std::move(catpu)) {}

std::shared_ptr<const RelativeDualG> relative_dual_grG(const UnitalCategoryPtr& catpu, int bound) {
    if (bound > catpu->bound()) throw FbError("relative dual: bound exceeds that of Cat P^u");
    auto fid = fi_dual(bound);
    auto cat = std::make_shared<RelativeDualG>(catpu, fid, bound);
    const OperadCategory* catp = catpu->operad_category().get();
    auto base = std::static_pointer_cast<const FunctionCategory>(fid->base());
    cat->set_interchange([catp, base](int l, int m, int k, std::size_t b, std::size_t a) {
        std::vector<TensorCategory::Term> out;
        if (m == 0) {
            out.push_back({0, SparseVec::unit(0), SparseVec::unit(0)});
            return out;
        }
        const Map& g = base->maps(k, m)[b];
        auto [tau, slot] = catp->basis_decode(m, l - m, a);
        auto chain = basis_chain(*catp, m, l - m, slot);
        Map f = compose(tau, chain_surjection(*catp, m, chain));
        std::vector<int> ginv(m, -1);
        for (int p = 0; p < k; ++p) ginv[g[p]] = p;
        std::vector<int> keep, rest_l, rest_m;
        for (int z = 0; z < l; ++z) (ginv[f[z]] >= 0 ? keep : rest_l).push_back(z);
        for (int y = 0; y < m; ++y)
            if (ginv[y] < 0) rest_m.push_back(y);
        if (rest_l.size() != rest_m.size()) return out;
        // sign of the complement bijection together with both shuffles
        Perm cb(rest_l.size());
        for (std::size_t q = 0; q < rest_l.size(); ++q)
            cb[q] = static_cast<int>(std::lower_bound(rest_m.begin(), rest_m.end(), f[rest_l[q]]) - rest_m.begin());
        std::vector<int> gim(g.begin(), g.end());
        std::sort(gim.begin(), gim.end());
        int sign = perm_sign(cb) * shuffle_sign(l, keep) * shuffle_sign(m, gim);
        int mid = static_cast<int>(keep.size());
        Map h(keep.begin(), keep.end());
        std::size_t hb = base->maps(mid, l).index(h);
        if (k == 0) {
            out.push_back({0, SparseVec::unit(0, sign), SparseVec::unit(hb)});
            return out;
        }
        for (const auto& t : catp->push(m, chain, h, nullptr)) {
            Map tv = compose(tau, t.v);
            if (static_cast<int>(tv.size()) != k) continue;
            Perm pi(k);
            bool ok = true;
            for (int p = 0; p < k; ++p) {
                pi[p] = ginv[tv[p]];
                if (pi[p] < 0) ok = false;
            }
            if (!ok) throw FbError("relative dual: restricted push leaves the image");
            SparseVec av = scale(catp->from_chain(k, pi, t.chain), t.coeff * sign);
            if (!av.empty()) out.push_back({mid, std::move(av), SparseVec::unit(hb)});
        }
        return out;
    });
    std::weak_ptr<const RelativeDualG> weak = cat;
    auto fi = std::static_pointer_cast<const FunctionCategory>(catpu->left());
    Augmentation aug = augmentation_actions(catpu);
    cat->set_differential([weak, base, fi, aug](int s, int t, std::size_t i) {
        auto c = weak.lock();
        if (!c) return SparseVec{};
        const auto& lab = c->labels(s, t)[i];
        int x = lab.mid;
        VecBuilder acc;
        // canonical element sum over the missing point, signed from the last point
        for (int y = 0; y < x; ++y) {
            Map iy = skip_map(x, y);
            SparseVec p = aug.right(x - 1, x, t, lab.a, fi->maps(x - 1, x).index(iy));
            if (p.empty()) continue;
            SparseVec xi = c->right()->compose(s, x, x - 1, SparseVec::unit(base->maps(x - 1, x).index(iy)),
                                               SparseVec::unit(lab.b));
            acc.add(c->element(s, x - 1, t, p, xi), (x - 1 - y) % 2 ? -1 : 1);
        }
        return acc.take();
    });
    cat->set_generators([weak, base, catp](int s, int t) {
        std::vector<std::size_t> g;
        auto c = weak.lock();
        if (!c) return g;
        const auto& ls = c->labels(s, t);
        for (std::size_t i = 0; i < ls.size(); ++i) {
            const auto& l = ls[i];
            bool b_id = l.mid == s && base->maps(s, s)[l.b] == identity_perm(s);
            bool a_id = l.mid == t && l.a == 0;
            if ((b_id && s == t + 1) || (a_id && s == t + 1)) g.push_back(i);
        }
        return g;
    });
    return cat;
}

// ---------------------------------------------------------------- relative dual for F

RelativeDualF::RelativeDualF(UnitalCategoryPtr catpu, AbsoluteDualPtr dual, int bound)
    : TensorCategory("(gr^F " + catpu->name() + ")^perp", dual, build_builtin(Builtin::FI, bound), FreeSide::RightOfA,
                     dual_slot_reps(dual), dual_slot_decompose(dual), nullptr, bound),
      catpu_(std::move(catpu)),
      dual_(std::move(dual)) {}

std::shared_ptr<const RelativeDualF> relative_dual_grF(const UnitalCategoryPtr& catpu, int bound) {
    if (bound > catpu->bound()) throw FbError("relative dual: bound exceeds that of Cat P^u");
    auto dual = absolute_dual(*catpu->operad_category());
    auto cat = std::make_shared<RelativeDualF>(catpu, dual, bound);
    auto fi = std::static_pointer_cast<const FunctionCategory>(cat->right());
    const AbsoluteDual* ad = dual.get();
    cat->set_interchange([ad, fi](int l, int m, int k, std::size_t b, std::size_t a) {
        std::vector<TensorCategory::Term> out;
        const QuadraticEngine& e = ad->engine();
        const Map& beta = fi->maps(m, k)[b];
        int r = k - m;
        // beta = sigma o (standard inclusion m -> k)
        Perm sigma(beta.begin(), beta.end());
        std::vector<char> hit(k, 0);
        for (int y : beta) hit[y] = 1;
        for (int y = 0; y < k; ++y)
            if (!hit[y]) sigma.push_back(y);
        if (m == 0) {
            out.push_back({k, ad->perm(k, sigma), SparseVec::unit(fi->maps(0, k).index(Map{}))});
            return out;
        }
        auto [tau, slot] = e.basis_decode(l, m - l, a);
        auto chain = basis_chain(e, l, m - l, slot);
        std::vector<std::size_t> shifted;
        for (std::size_t q = 0; q < chain.size(); ++q) {
            int lev = l + static_cast<int>(q);
            GeneratorLabel gl = e.gen_label(lev, chain[q]);
            shifted.push_back(e.gen_index(lev + r, gl.i, gl.j, gl.label));
        }
        int mid = l + r;
        SparseVec x2 = mid == 0 ? SparseVec::unit(0) : e.from_chain(mid, identity_perm(mid), shifted);
        SparseVec av = ad->compose(mid, k, k, ad->perm(k, sigma), x2);
        Map alpha = inverse(tau);
        std::size_t bi = fi->maps(l, mid).index(alpha);
        out.push_back({mid, std::move(av), SparseVec::unit(bi)});
        return out;
    });
    std::weak_ptr<const RelativeDualF> weak = cat;
    const OperadCategory* catp = catpu->operad_category().get();
    Augmentation aug = augmentation_actions(catpu);
    cat->set_differential([weak, ad, catp, aug](int s, int t, std::size_t i) {
        auto c = weak.lock();
        if (!c) return SparseVec{};
        const auto& lab = c->labels(s, t)[i];
        int x = lab.mid;
        VecBuilder acc;
        if (x < 2) return acc.take();
        const QuadraticEngine& e = ad->engine();
        int sign = (t - x) % 2 ? -1 : 1;
        Perm id = identity_perm(x - 1);
        for (std::size_t g = 0; g < catp->gen_count(x - 1); ++g) {
            std::size_t gi = catp->basis_index(x - 1, 1, id, catp->free_slot(x - 1, 1, g));
            SparseVec la = aug.left(s, x, x - 1, gi, lab.b);
            if (la.empty()) continue;
            std::size_t gv = e.basis_index(x - 1, 1, id, e.free_slot(x - 1, 1, g));
            SparseVec phi = ad->compose(x - 1, x, t, SparseVec::unit(lab.a), SparseVec::unit(gv));
            if (phi.empty()) continue;
            acc.add(c->element(s, x - 1, t, phi, la), sign);
        }
        return acc.take();
    });
    cat->set_generators([weak, fi](int s, int t) {
        std::vector<std::size_t> g;
        auto c = weak.lock();
        if (!c) return g;
        const auto& ls = c->labels(s, t);
        for (std::size_t i = 0; i < ls.size(); ++i) {
            const auto& l = ls[i];
            bool b_id = l.mid == s && fi->maps(s, s)[l.b] == identity_perm(s);
            bool a_id = l.mid == t && l.a == 0;
            if ((b_id && t == s + 1) || (a_id && t == s + 1)) g.push_back(i);
        }
        return g;
    });
    return cat;
}

// ---------------------------------------------------------------- desuspension

Desuspension::Desuspension(CategoryPtr base) : LinearCategory(base->bound()), base_(std::move(base)) {}

SparseVec Desuspension::differential(int a, int b, std::size_t i) const {
    return scale(base_->differential(a, b, i), b % 2 ? -1 : 1);
}

CategoryPtr desuspend(const CategoryPtr& dg) { return std::make_shared<Desuspension>(dg); }

DegreeWindow degree_window(const LinearCategory& c, int s, int t) {
    DegreeWindow w;
    for (std::size_t i = 0; i < c.dim(s, t); ++i) {
        int d = c.degree(s, t, i);
        if (w.empty) {
            w.lo = w.hi = d;
            w.empty = false;
        } else {
            w.lo = std::min(w.lo, d);
            w.hi = std::max(w.hi, d);
        }
    }
    return w;
}

std::string SignedChainIso::description() const {
    std::ostringstream os;
    os << "generator sign (-1)^(" << alpha << "i+" << beta << "j+" << gamma << "n+" << delta << ")"
       << (sign_twist ? ", permutations sign-twisted" : "");
    return os.str();
}

BasisMap signed_chain_map(const EnginePtr& src, const EnginePtr& dst, const SignedChainIso& iso) {
    return [src, dst, iso](int a, int b, std::size_t i) {
        // (a,b) of the desuspended opposite is src(b,a)
        int w = b - a;
        if (a == 0) return SparseVec::unit(0);
        auto [tau, slot] = src->basis_decode(a, w, i);
        auto chain = basis_chain(*src, a, w, slot);
        int sg = iso.sign_twist ? perm_sign(tau) : 1;
        for (int q = 0; q < w; ++q) {
            GeneratorLabel l = src->gen_label(a + q, chain[q]);
            int e = iso.alpha * l.i + iso.beta * l.j + iso.gamma * (a + q) + iso.delta;
            if (e % 2) sg = -sg;
        }
        return scale(dst->from_chain(a, tau, chain), sg);
    };
}

SignedChainIso find_desuspension_iso(const EnginePtr& src, const EnginePtr& dst, int max_arity) {
    auto from = desuspend(std::make_shared<OppositeCategory>(src));
    OppositeCategory to(dst);
    for (int tw = 1; tw >= 0; --tw)
        for (int bits = 0; bits < 16; ++bits) {
            SignedChainIso iso;
            iso.alpha = bits & 1;
            iso.beta = (bits >> 1) & 1;
            iso.gamma = (bits >> 2) & 1;
            iso.delta = (bits >> 3) & 1;
            iso.sign_twist = tw == 1;
            BasisMap f = signed_chain_map(src, dst, iso);
            bool bij = true;
            for (int a = 0; a <= max_arity && bij; ++a)
                for (int b = a; b <= max_arity && bij; ++b) {
                    if (from->dim(a, b) != to.dim(a, b)) bij = false;
                    else if (from->dim(a, b) && functor_rank(*from, to, f, a, b) != to.dim(a, b)) bij = false;
                }
            if (!bij) continue;
            if (!check_functor(*from, to, f, max_arity, true).ok()) continue;
            iso.found = true;
            return iso;
        }
    return {};
}

}  // namespace fbk
