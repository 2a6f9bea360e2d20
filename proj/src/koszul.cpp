#include "fbk/koszul.hpp"

#include <algorithm>
#include <sstream>

namespace fbk {

namespace {

std::shared_ptr<const FunctionCategory> as_function(const CategoryPtr& c) {
    auto f = std::dynamic_pointer_cast<const FunctionCategory>(c);
    if (!f) throw FbError("expected a category of finite sets");
    return f;
}

int parity_sign(int e) { return e % 2 ? -1 : 1; }

// Index of a basis element of C(n,n) that is a scalar multiple of a permutation.
class PermutationTable {
public:
    explicit PermutationTable(CategoryPtr c) : c_(std::move(c)) {}
    // e_i = coeff [perm], or false when e_i is not of this form.
    bool lookup(int n, std::size_t i, Perm& perm, Rational& coeff) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = tables_.find(n);
        if (it == tables_.end()) {
            std::map<std::size_t, std::pair<Perm, Rational>> tab;
            std::size_t nf = factorial(n);
            for (std::size_t r = 0; r < nf; ++r) {
                Perm q = perm_unrank(n, r);
                SparseVec v = c_->perm(n, q);
                if (v.size() == 1) tab.emplace(v.terms[0].first, std::make_pair(q, 1 / v.terms[0].second));
            }
            it = tables_.emplace(n, std::move(tab)).first;
        }
        auto jt = it->second.find(i);
        if (jt == it->second.end()) return false;
        perm = jt->second.first;
        coeff = jt->second.second;
        return true;
    }

private:
    CategoryPtr c_;
    mutable std::mutex mu_;
    mutable std::map<int, std::map<std::size_t, std::pair<Perm, Rational>>> tables_;
};

SparseVec embed_operad(const UnitalCategory& catpu, int s, int x, const SparseVec& p) {
    return catpu.element(s, x, x, catpu.left()->identity(x), p);
}

SparseVec embed_fi(const UnitalCategory& catpu, int s, int x, const SparseVec& u) {
    return catpu.element(s, s, x, u, catpu.right()->identity(s));
}

}  // namespace

// ---------------------------------------------------------------- canonical elements

CanonicalElement fi_canonical_element(int a, int bound) {
    CanonicalElement e;
    e.pair = "kFI";
    e.arity = a;
    e.left_cat = build_builtin(Builtin::FI, bound);
    e.right_cat = fi_dual(bound);
    auto fi = as_function(e.left_cat);
    auto base = as_function(std::static_pointer_cast<const FiDual>(e.right_cat)->base());
    if (a + 1 > bound) return e;
    for (int y = 0; y <= a; ++y) {
        Map iy = skip_map(a + 1, y);
        e.terms.push_back({Rational(parity_sign(a - y)), SparseVec::unit(fi->maps(a, a + 1).index(iy)),
                           SparseVec::unit(base->maps(a, a + 1).index(iy))});
    }
    return e;
}

CanonicalElement operad_canonical_element(const OperadCategoryPtr& catp, const AbsoluteDualPtr& dual, int n) {
    CanonicalElement e;
    e.pair = catp->name();
    e.arity = n;
    e.left_cat = dual;
    e.right_cat = catp;
    if (n < 1 || n + 1 > catp->bound()) return e;
    const QuadraticEngine& de = dual->engine();
    Perm id = identity_perm(n);
    for (std::size_t g = 0; g < catp->gen_count(n); ++g)
        e.terms.push_back({Rational(1), SparseVec::unit(de.basis_index(n, 1, id, de.free_slot(n, 1, g))),
                           SparseVec::unit(catp->basis_index(n, 1, id, catp->free_slot(n, 1, g)))});
    return e;
}

CanonicalCheck check_canonical_element(const CanonicalElement& e) {
    CanonicalCheck r;
    int a = e.arity;
    const LinearCategory& L = *e.left_cat;
    const LinearCategory& R = *e.right_cat;
    // The tensor L (x)_FB R over the middle arity a, free on the R side.
    TensorCategory::Reps reps;
    TensorCategory::Decompose dec;
    if (auto fid = std::dynamic_pointer_cast<const FiDual>(e.right_cat)) {
        reps = fi_dual_reps(fid);
        dec = fi_dual_decompose(fid);
    } else if (auto eng = std::dynamic_pointer_cast<const QuadraticEngine>(e.right_cat)) {
        reps = engine_slot_reps(eng);
        dec = engine_slot_decompose(eng);
    } else {
        r.failure = "canonical element: unsupported right factor";
        return r;
    }
    TensorCategory T("pair", e.left_cat, e.right_cat, TensorCategory::FreeSide::LeftOfB, reps, dec,
                     permutation_interchange(e.left_cat, e.right_cat), L.bound());
    r.bimodule_map = true;
    for (int k = 0; k + 1 < a + 1; ++k) {
        Perm c = coxeter(a + 1, k);
        VecBuilder lhs, rhs;
        for (const auto& term : e.terms) {
            lhs.add(T.element(a + 1, a, a + 1, L.compose(a, a + 1, a + 1, L.perm(a + 1, c), term.left), term.right),
                    term.coeff);
            rhs.add(T.element(a + 1, a, a + 1, term.left, R.compose(a + 1, a + 1, a, term.right, R.perm(a + 1, c))),
                    term.coeff);
        }
        if (!equal(lhs.take(), rhs.take())) {
            r.bimodule_map = false;
            r.failure = e.pair + ": canonical element does not commute with a Coxeter generator";
            break;
        }
    }
    // Pairing: the right factors are dual to the left factors up to the
    // orientation of the dual basis; contraction must reproduce every basis
    // element of L(a, a+1) exactly once, with the orientation as coefficient.
    std::size_t n = L.dim(a, a + 1);
    std::vector<int> hits(n, 0);
    bool ok = true;
    std::size_t nf = factorial(a);
    for (const auto& term : e.terms) {
        if (term.left.size() != 1 || term.right.size() != 1) ok = false;
        if (!ok) break;
        for (std::size_t rk = 0; rk < nf; ++rk) {
            SparseVec v = L.right_act(a, a + 1, term.left, perm_unrank(a, rk));
            if (v.size() != 1) {
                ok = false;
                break;
            }
            ++hits[v.terms[0].first];
        }
        bool fi_pair = e.pair == "kFI";
        int x = -1;
        if (fi_pair) {
            auto base = as_function(std::static_pointer_cast<const FiDual>(e.right_cat)->base());
            const Map& u = base->maps(a, a + 1)[term.right.terms[0].first];
            std::vector<char> hit(a + 1, 0);
            for (int p : u) hit[p] = 1;
            for (int p = 0; p <= a; ++p)
                if (!hit[p]) x = p;
            if (term.coeff != parity_sign(a - x)) ok = false;
        } else if (term.coeff != 1) {
            ok = false;
        }
        if (term.left.terms[0].first != term.right.terms[0].first) ok = false;
    }
    for (int h : hits)
        if (h != 1) ok = false;
    r.adjoint = ok;
    if (!ok && r.failure.empty()) r.failure = e.pair + ": canonical element is not adjoint to the identity";
    return r;
}

// ---------------------------------------------------------------- permutation interchange

TensorCategory::Interchange permutation_interchange(CategoryPtr a, CategoryPtr b) {
    auto pa = std::make_shared<PermutationTable>(a);
    auto pb = std::make_shared<PermutationTable>(b);
    return [a, b, pa, pb](int l, int m, int k, std::size_t bi, std::size_t ai) {
        std::vector<TensorCategory::Term> out;
        Perm q;
        Rational c;
        if (m == k && pb->lookup(m, bi, q, c)) {
            SparseVec av = scale(a->compose(l, m, m, a->perm(m, q), SparseVec::unit(ai)), c);
            out.push_back({l, std::move(av), b->identity(l)});
            return out;
        }
        if (l == m && pa->lookup(l, ai, q, c)) {
            SparseVec bv = scale(b->compose(l, l, k, SparseVec::unit(bi), b->perm(l, q)), c);
            out.push_back({k, a->identity(k), std::move(bv)});
            return out;
        }
        throw FbError("twisted complex: only compositions with permutations are defined");
    };
}

// ---------------------------------------------------------------- VK

DualizingVK::DualizingVK(UnitalCategoryPtr catpu, std::shared_ptr<const RelativeDualG> relG, int bound)
    : TwistedBimodule("VK(" + catpu->name() + ")", catpu,
                      std::static_pointer_cast<const FiDual>(relG->right()), FreeSide::LeftOfB,
                      fi_dual_reps(std::static_pointer_cast<const FiDual>(relG->right())),
                      fi_dual_decompose(std::static_pointer_cast<const FiDual>(relG->right())),
                      permutation_interchange(catpu, relG->right()), bound),
      catpu_(std::move(catpu)),
      relG_(std::move(relG)) {}

SparseVec DualizingVK::act_left(int s, int t, int t2, const SparseVec& c, const SparseVec& m) const {
    VecBuilder acc;
    for (const auto& [i, co] : m.terms) {
        const auto& lab = labels(s, t)[i];
        SparseVec a = catpu_->compose(lab.mid, t, t2, c, SparseVec::unit(lab.a));
        if (!a.empty()) acc.add(element(s, lab.mid, t2, a, SparseVec::unit(lab.b)), co);
    }
    return acc.take();
}

SparseVec DualizingVK::act_right(int s2, int s, int t, const SparseVec& m, const SparseVec& r) const {
    VecBuilder acc;
    const auto& catp = catpu_->operad_category();
    for (const auto& [i, co] : m.terms) {
        const auto& lab = labels(s, t)[i];
        int x = lab.mid;
        SparseVec w = relG_->element(s, x, x, catp->identity(x), SparseVec::unit(lab.b));
        SparseVec prod = relG_->compose(s2, s, x, w, r);
        for (const auto& [j, cj] : prod.terms) {
            const auto& pl = relG_->labels(s2, x)[j];
            SparseVec a = catpu_->compose(pl.mid, x, t, SparseVec::unit(lab.a),
                                          embed_operad(*catpu_, pl.mid, x, SparseVec::unit(pl.a)));
            if (!a.empty()) acc.add(element(s2, pl.mid, t, a, SparseVec::unit(pl.b)), co * cj);
        }
    }
    return acc.take();
}

std::shared_ptr<const DualizingVK> dualizing_vk(const UnitalCategoryPtr& catpu, int bound) {
    auto relG = relative_dual_grG(catpu, bound);
    auto vk = std::make_shared<DualizingVK>(catpu, relG, bound);
    std::vector<CanonicalElement> es;
    for (int a = 0; a < bound; ++a) es.push_back(fi_canonical_element(a, bound));
    std::weak_ptr<const DualizingVK> weak = vk;
    vk->set_differential([weak, es](int s, int t, std::size_t i) {
        auto c = weak.lock();
        if (!c) return SparseVec{};
        const auto& lab = c->labels(s, t)[i];
        int x = lab.mid;
        VecBuilder acc;
        if (x == 0) return acc.take();
        const UnitalCategory& pu = *c->unital();
        int sa = parity_sign(c->left()->degree(x, t, lab.a));
        for (const auto& term : es[x - 1].terms) {
            SparseVec a = pu.compose(x - 1, x, t, SparseVec::unit(lab.a), embed_fi(pu, x - 1, x, term.left));
            if (a.empty()) continue;
            SparseVec xi = c->right()->compose(s, x, x - 1, term.right, SparseVec::unit(lab.b));
            if (xi.empty()) continue;
            acc.add(c->element(s, x - 1, t, a, xi), term.coeff * sa);
        }
        return acc.take();
    });
    return vk;
}

// ---------------------------------------------------------------- K-vee

DualizingKvee::DualizingKvee(UnitalCategoryPtr catpu, std::shared_ptr<const RelativeDualF> relF, int bound)
    : TwistedBimodule("K^vee(" + catpu->name() + ")", relF->absolute(), catpu, FreeSide::RightOfA,
                      dual_slot_reps(relF->absolute()), dual_slot_decompose(relF->absolute()),
                      permutation_interchange(relF->absolute(), catpu), bound),
      catpu_(std::move(catpu)),
      relF_(std::move(relF)) {}

namespace {

// r . (gamma (x) id) in (gr^F)^perp, split into (gamma', u') with u' in kFI(x, mid).
template <typename F>
void left_dual_action(const RelativeDualF& relF, int x, int t, int t2, const SparseVec& c, std::size_t gamma,
                      const F& emit) {
    SparseVec w = relF.element(x, x, t, SparseVec::unit(gamma), relF.right()->identity(x));
    SparseVec prod = relF.compose(x, t, t2, c, w);
    for (const auto& [j, cj] : prod.terms) {
        const auto& pl = relF.labels(x, t2)[j];
        emit(pl.mid, pl.a, SparseVec::unit(pl.b), cj);
    }
}

}  // namespace

SparseVec DualizingKvee::act_left(int s, int t, int t2, const SparseVec& c, const SparseVec& m) const {
    VecBuilder acc;
    for (const auto& [i, co] : m.terms) {
        const auto& lab = labels(s, t)[i];
        int x = lab.mid;
        left_dual_action(*relF_, x, t, t2, c, lab.a, [&](int mid, std::size_t g2, const SparseVec& u, const Rational& cu) {
            SparseVec a = catpu_->compose(s, x, mid, embed_fi(*catpu_, x, mid, u), SparseVec::unit(lab.b));
            if (!a.empty()) acc.add(element(s, mid, t2, SparseVec::unit(g2), a), co * cu);
        });
    }
    return acc.take();
}

SparseVec DualizingKvee::act_right(int s2, int s, int t, const SparseVec& m, const SparseVec& r) const {
    VecBuilder acc;
    for (const auto& [i, co] : m.terms) {
        const auto& lab = labels(s, t)[i];
        SparseVec a = catpu_->compose(s2, s, lab.mid, SparseVec::unit(lab.b), r);
        if (!a.empty()) acc.add(element(s2, lab.mid, t, SparseVec::unit(lab.a), a), co);
    }
    return acc.take();
}

std::shared_ptr<const DualizingKvee> dualizing_kvee(const UnitalCategoryPtr& catpu, int bound) {
    auto relF = relative_dual_grF(catpu, bound);
    auto kv = std::make_shared<DualizingKvee>(catpu, relF, bound);
    std::vector<CanonicalElement> es;
    for (int n = 0; n < bound; ++n) es.push_back(operad_canonical_element(catpu->operad_category(), relF->absolute(), n));
    std::weak_ptr<const DualizingKvee> weak = kv;
    kv->set_differential([weak, es, catpu](int s, int t, std::size_t i) {
        auto c = weak.lock();
        if (!c) return SparseVec{};
        const auto& lab = c->labels(s, t)[i];
        int x = lab.mid;
        VecBuilder acc;
        if (x == 0) return acc.take();
        int sg = parity_sign(c->left()->degree(x, t, lab.a));
        for (const auto& term : es[x - 1].terms) {
            SparseVec g = c->left()->compose(x - 1, x, t, SparseVec::unit(lab.a), term.left);
            if (g.empty()) continue;
            SparseVec a = catpu->compose(s, x, x - 1, embed_operad(*catpu, x, x - 1, term.right), SparseVec::unit(lab.b));
            if (a.empty()) continue;
            acc.add(c->element(s, x - 1, t, g, a), term.coeff * sg);
        }
        return acc.take();
    });
    return kv;
}

// ---------------------------------------------------------------- composite

CompositeComplex::CompositeComplex(std::shared_ptr<const DualizingVK> vk, std::shared_ptr<const RelativeDualF> relF,
                                   int bound)
    : TwistedBimodule("K^vee (x) VK(" + vk->unital()->name() + ")", relF->absolute(), vk, FreeSide::RightOfA,
                      dual_slot_reps(relF->absolute()), dual_slot_decompose(relF->absolute()),
                      permutation_interchange(relF->absolute(), vk), bound),
      vk_(std::move(vk)),
      relF_(std::move(relF)) {}

SparseVec CompositeComplex::act_left(int s, int t, int t2, const SparseVec& c, const SparseVec& m) const {
    VecBuilder acc;
    const UnitalCategory& pu = *vk_->unital();
    for (const auto& [i, co] : m.terms) {
        const auto& lab = labels(s, t)[i];
        int x = lab.mid;
        left_dual_action(*relF_, x, t, t2, c, lab.a, [&](int mid, std::size_t g2, const SparseVec& u, const Rational& cu) {
            SparseVec v = vk_->act_left(s, x, mid, embed_fi(pu, x, mid, u), SparseVec::unit(lab.b));
            if (!v.empty()) acc.add(element(s, mid, t2, SparseVec::unit(g2), v), co * cu);
        });
    }
    return acc.take();
}

SparseVec CompositeComplex::act_right(int s2, int s, int t, const SparseVec& m, const SparseVec& r) const {
    VecBuilder acc;
    for (const auto& [i, co] : m.terms) {
        const auto& lab = labels(s, t)[i];
        SparseVec v = vk_->act_right(s2, s, lab.mid, SparseVec::unit(lab.b), r);
        if (!v.empty()) acc.add(element(s2, lab.mid, t, SparseVec::unit(lab.a), v), co);
    }
    return acc.take();
}

std::shared_ptr<const CompositeComplex> composite_complex(const UnitalCategoryPtr& catpu, int bound) {
    auto vk = dualizing_vk(catpu, bound);
    auto relF = relative_dual_grF(catpu, bound);
    auto cc = std::make_shared<CompositeComplex>(vk, relF, bound);
    std::vector<CanonicalElement> es;
    for (int n = 0; n < bound; ++n) es.push_back(operad_canonical_element(catpu->operad_category(), relF->absolute(), n));
    std::weak_ptr<const CompositeComplex> weak = cc;
    cc->set_differential([weak, es, catpu](int s, int t, std::size_t i) {
        auto c = weak.lock();
        if (!c) return SparseVec{};
        const auto& lab = c->labels(s, t)[i];
        int x = lab.mid;
        VecBuilder acc;
        int sg = parity_sign(c->left()->degree(x, t, lab.a));
        const auto& vk = *c->inner();
        if (x > 0)
            for (const auto& term : es[x - 1].terms) {
                SparseVec g = c->left()->compose(x - 1, x, t, SparseVec::unit(lab.a), term.left);
                if (g.empty()) continue;
                SparseVec v = vk.act_left(s, x, x - 1, embed_operad(*catpu, x, x - 1, term.right), SparseVec::unit(lab.b));
                if (v.empty()) continue;
                acc.add(c->element(s, x - 1, t, g, v), term.coeff * sg);
            }
        SparseVec dv = vk.differential(s, x, lab.b);
        if (!dv.empty()) acc.add(c->element(s, x, t, SparseVec::unit(lab.a), dv), sg);
        return acc.take();
    });
    return cc;
}

// ---------------------------------------------------------------- bimodule checks

namespace {

// Representatives of the orbits of the right permutation action when it is
// monomial on the basis; all basis elements otherwise. Leibniz on these
// suffices: the differential is equivariant and (c m) r = c (m r).
std::vector<std::size_t> right_orbit_reps(const TwistedBimodule& m, int s, int t) {
    std::size_t n = m.dim(s, t);
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k + 1 < s; ++k) {
            SparseVec v = m.right_act(s, t, SparseVec::unit(i), coxeter(s, k));
            if (v.size() != 1) {
                std::vector<std::size_t> all(n);
                for (std::size_t j = 0; j < n; ++j) all[j] = j;
                return all;
            }
            std::size_t a = find(i), b = find(v.terms[0].first);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i)
        if (find(i) == i) reps.push_back(i);
    return reps;
}

}  // namespace

CategoryCheck check_twisted_bimodule(const TwistedBimodule& m, int max_arity, std::size_t max_per_component) {
    CategoryCheck r = check_d_squared(m, max_arity);
    if (!r.ok()) return r;
    for (int s = 0; s <= max_arity; ++s)
        for (int t = 0; t <= max_arity; ++t)
            for (std::size_t i = 0; i < m.dim(s, t); ++i) {
                SparseVec e = SparseVec::unit(i);
                SparseVec de = m.differential(s, t, i);
                for (int k = 0; k + 1 < t; ++k) {
                    ++r.checked;
                    Perm c = coxeter(t, k);
                    if (!equal(m.differential(s, t, m.left_act(s, t, c, e)), m.left_act(s, t, c, de))) {
                        r.failure = m.name() + ": differential does not commute with the left permutations";
                        return r;
                    }
                }
                for (int k = 0; k + 1 < s; ++k) {
                    ++r.checked;
                    Perm c = coxeter(s, k);
                    if (!equal(m.differential(s, t, m.right_act(s, t, e, c)), m.right_act(s, t, de, c))) {
                        r.failure = m.name() + ": differential does not commute with the right permutations";
                        return r;
                    }
                }
            }
    CategoryPtr L = m.acting_left(), R = m.acting_right();
    auto fail = [&](const std::string& what, int s, int t) {
        std::ostringstream o;
        o << m.name() << ": Leibniz rule fails for the " << what << " action at (" << s << "," << t << ")";
        r.failure = o.str();
    };
    for (int s = 0; s <= max_arity; ++s)
        for (int t = 0; t <= max_arity; ++t) {
            std::vector<std::size_t> reps = right_orbit_reps(m, s, t);
            std::size_t n = reps.size();
            std::size_t step = (max_per_component && n > max_per_component) ? n / max_per_component : 1;
            for (std::size_t ri = 0; ri < n; ri += step) {
                std::size_t i = reps[ri];
                SparseVec e = SparseVec::unit(i);
                SparseVec de = m.differential(s, t, i);
                int dm = m.degree(s, t, i);
                for (int t2 = 0; t2 <= max_arity; ++t2)
                    for (std::size_t g : L->generators(t, t2)) {
                        ++r.checked;
                        SparseVec c = SparseVec::unit(g);
                        SparseVec lhs = m.differential(s, t2, m.act_left(s, t, t2, c, e));
                        VecBuilder rhs;
                        if (L->has_differential()) rhs.add(m.act_left(s, t, t2, L->differential(t, t2, g), e));
                        rhs.add(m.act_left(s, t, t2, c, de), parity_sign(L->degree(t, t2, g)));
                        if (!equal(lhs, rhs.take())) {
                            fail("left", s, t);
                            return r;
                        }
                    }
                for (int s2 = 0; s2 <= max_arity; ++s2)
                    for (std::size_t g : R->generators(s2, s)) {
                        ++r.checked;
                        SparseVec c = SparseVec::unit(g);
                        SparseVec lhs = m.differential(s2, t, m.act_right(s2, s, t, e, c));
                        VecBuilder rhs;
                        rhs.add(m.act_right(s2, s, t, de, c));
                        if (R->has_differential()) rhs.add(m.act_right(s2, s, t, e, R->differential(s2, s, g)), parity_sign(dm));
                        if (!equal(lhs, rhs.take())) {
                            fail("right", s, t);
                            return r;
                        }
                    }
            }
        }
    return r;
}

// ---------------------------------------------------------------- free orbits

FreeOrbits free_left_orbits(const LinearCategory& c, int t, int x) {
    FreeOrbits o;
    std::size_t n = c.dim(t, x);
    o.entries.resize(n);
    std::vector<char> seen(n, 0);
    std::size_t nf = factorial(x);
    std::vector<Perm> perms;
    for (std::size_t r = 0; r < nf; ++r) perms.push_back(perm_unrank(x, r));
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::size_t orbit = o.reps.size();
        o.reps.push_back(i);
        for (const auto& p : perms) {
            SparseVec v = c.left_act(t, x, p, SparseVec::unit(i));
            if (v.size() != 1) throw FbError(c.name() + ": left permutation action is not monomial");
            std::size_t k = v.terms[0].first;
            if (seen[k]) throw FbError(c.name() + ": left permutation action is not free");
            seen[k] = 1;
            o.entries[k] = {orbit, p, 1 / v.terms[0].second};
        }
    }
    return o;
}

// ---------------------------------------------------------------- twisted hom

TwistedHom::TwistedHom(std::string name, CategoryPtr x, CategoryPtr y, std::vector<Twist> twists, int bound)
    : name_(std::move(name)), x_(std::move(x)), y_(std::move(y)), twists_(std::move(twists)), bound_(bound) {}

const FreeOrbits& TwistedHom::orbits(int t, int x) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(t, x);
    auto it = orbits_.find(key);
    if (it != orbits_.end()) return *it->second;
    auto o = std::make_unique<FreeOrbits>(free_left_orbits(*x_, t, x));
    return *orbits_.emplace(key, std::move(o)).first->second;
}

const TwistedHom::Table& TwistedHom::table(int s, int t) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(s, t);
    auto it = tables_.find(key);
    if (it != tables_.end()) return *it->second;
    auto tb = std::make_unique<Table>();
    if (s >= 0 && t >= 0 && s <= bound_ && t <= bound_)
        for (int x = 0; x <= bound_; ++x) {
            std::size_t dy = y_->dim(s, x);
            if (!dy || !x_->dim(t, x)) continue;
            const auto& o = orbits(t, x);
            for (std::size_t j = 0; j < o.reps.size(); ++j)
                for (std::size_t q = 0; q < dy; ++q) {
                    tb->index.emplace(std::make_tuple(x, j, q), tb->labels.size());
                    tb->labels.push_back({x, j, q});
                }
        }
    return *tables_.emplace(key, std::move(tb)).first->second;
}

const std::vector<TwistedHom::Label>& TwistedHom::labels(int s, int t) const { return table(s, t).labels; }

std::size_t TwistedHom::index_of(int s, int t, const Label& l) const {
    const auto& tb = table(s, t);
    auto it = tb.index.find(std::make_tuple(l.x, l.orbit, l.value));
    return it == tb.index.end() ? MapSet::npos : it->second;
}

int TwistedHom::degree(int s, int t, std::size_t i) const {
    const auto& l = labels(s, t)[i];
    return y_->degree(s, l.x, l.value) - x_->degree(t, l.x, orbits(t, l.x).reps[l.orbit]);
}

SparseVec TwistedHom::evaluate(int s, int t, std::size_t i, const SparseVec& xi) const {
    const auto& l = labels(s, t)[i];
    const auto& o = orbits(t, l.x);
    VecBuilder acc;
    for (const auto& [k, c] : xi.terms) {
        const auto& en = o.entries[k];
        if (en.orbit != l.orbit) continue;
        acc.add(y_->left_act(s, l.x, en.sigma, SparseVec::unit(l.value)), c * en.coeff);
    }
    return acc.take();
}

SparseVec TwistedHom::from_values(int s, int t, int x, const std::vector<SparseVec>& values) const {
    VecBuilder acc;
    const auto& tb = table(s, t);
    for (std::size_t j = 0; j < values.size(); ++j)
        for (const auto& [q, c] : values[j].terms) acc.add(tb.index.at(std::make_tuple(x, j, q)), c);
    return acc.take();
}

SparseVec TwistedHom::pull(int s, int t, int t2, const SparseVec& rho, std::size_t i) const {
    const auto& l = labels(s, t)[i];
    if (!x_->dim(t2, l.x) || !y_->dim(s, l.x)) return {};
    const auto& o = orbits(t2, l.x);
    std::vector<SparseVec> vals;
    for (std::size_t r : o.reps) vals.push_back(evaluate(s, t, i, x_->compose(t, t2, l.x, SparseVec::unit(r), rho)));
    return from_values(s, t2, l.x, vals);
}

SparseVec TwistedHom::differential(int s, int t, std::size_t i) const {
    const auto& l = labels(s, t)[i];
    int deg = degree(s, t, i);
    VecBuilder acc;
    if (y_->has_differential()) {
        const auto& tb = table(s, t);
        for (const auto& [q, c] : y_->differential(s, l.x, l.value).terms)
            acc.add(tb.index.at(std::make_tuple(l.x, l.orbit, q)), c);
    }
    if (x_->has_differential()) {
        const auto& o = orbits(t, l.x);
        std::vector<SparseVec> vals;
        for (std::size_t r : o.reps) vals.push_back(evaluate(s, t, i, x_->differential(t, l.x, r)));
        acc.add(from_values(s, t, l.x, vals), -parity_sign(deg));
    }
    int x1 = l.x + 1;
    if (x1 <= bound_ && x_->dim(t, x1) && y_->dim(s, x1)) {
        const auto& o1 = orbits(t, x1);
        for (const auto& tw : twists_) {
            auto terms = tw.terms(l.x);
            if (terms.empty()) continue;
            std::vector<SparseVec> vals;
            for (std::size_t r : o1.reps) {
                VecBuilder v;
                for (const auto& term : terms) {
                    SparseVec xi = x_->compose(t, x1, l.x, term.right, SparseVec::unit(r));
                    if (xi.empty()) continue;
                    SparseVec phi = evaluate(s, t, i, xi);
                    if (phi.empty()) continue;
                    v.add(y_->compose(s, l.x, x1, term.left, phi), term.coeff);
                }
                vals.push_back(v.take());
            }
            acc.add(from_values(s, t, x1, vals), tw.sign * parity_sign(tw.parity * deg));
        }
    }
    return acc.take();
}

SparseVec TwistedHom::right_perm(int s, int t, std::size_t i, const Perm& p) const {
    const auto& l = labels(s, t)[i];
    VecBuilder acc;
    const auto& tb = table(s, t);
    for (const auto& [q, c] : y_->right_act(s, l.x, SparseVec::unit(l.value), p).terms)
        acc.add(tb.index.at(std::make_tuple(l.x, l.orbit, q)), c);
    return acc.take();
}

SparseVec TwistedHom::left_perm(int s, int t, const Perm& p, std::size_t i) const {
    return pull(s, t, t, x_->perm(t, p), i);
}

TwistedHom::TermSource fi_twist_terms(int bound) {
    std::vector<std::vector<CanonicalTerm>> terms;
    for (int a = 0; a <= bound; ++a) terms.push_back(fi_canonical_element(a, bound).terms);
    return [terms](int x) { return x >= 0 && x < static_cast<int>(terms.size()) ? terms[x] : std::vector<CanonicalTerm>{}; };
}

std::shared_ptr<const TwistedHom> bgg_hom(int bound) {
    std::vector<TwistedHom::Twist> tw{{"kFI", fi_twist_terms(bound), 0, 1}};
    return std::make_shared<TwistedHom>("hom(kFI^perp, kFI)", fi_dual(bound), build_builtin(Builtin::FI, bound), tw, bound);
}

ChainMap hom_unit(const std::shared_ptr<const TwistedHom>& h, const std::string& name) {
    auto fb = std::static_pointer_cast<const FunctionCategory>(build_builtin(Builtin::FB, h->bound()));
    ChainMap f;
    f.source = as_dg_bimodule(fb);
    f.target = h;
    f.name = name;
    f.map = [h, fb](int s, int t, std::size_t i) -> SparseVec {
        if (s != t) return {};
        const LinearCategory& X = *h->source_cat();
        const LinearCategory& Y = *h->value_cat();
        SparseVec id = X.identity(s);
        if (id.size() != 1) throw FbError("unit: identity is not a basis element");
        const auto& o = h->orbits(s, s);
        const auto& en = o.entries[id.terms[0].first];
        // id = coeff [sigma] r  =>  phi(r) = coeff^{-1} [sigma^{-1}] [p]
        SparseVec target = Y.perm(s, fb->maps(s, s)[i]);
        std::vector<SparseVec> vals(o.reps.size());
        vals[en.orbit] = scale(Y.left_act(s, s, inverse(en.sigma), target), 1 / (en.coeff * id.terms[0].second));
        return h->from_values(s, s, s, vals);
    };
    return f;
}

ChainMap bgg_unit(int bound) { return hom_unit(bgg_hom(bound), "unit 1 -> hom(kFI^perp, kFI)"); }

// ---------------------------------------------------------------- counit complex

CounitComplex::CounitComplex(std::shared_ptr<const TwistedHom> hom, int bound)
    : hom_(std::move(hom)), fi_(as_function(build_builtin(Builtin::FI, bound))), bound_(bound) {}

const CounitComplex::Table& CounitComplex::table(int s, int t) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(s, t);
    auto it = tables_.find(key);
    if (it != tables_.end()) return *it->second;
    auto tb = std::make_unique<Table>();
    if (s >= 0 && t >= 0 && s <= bound_ && t <= bound_)
        for (int x = 0; x <= t; ++x) {
            std::size_t dh = hom_->dim(s, x);
            if (!dh) continue;
            for (const auto& img : subsets(t, x)) {
                std::size_t inj = fi_->maps(x, t).index(Map(img.begin(), img.end()));
                for (std::size_t h = 0; h < dh; ++h) {
                    tb->index.emplace(std::make_tuple(x, inj, h), tb->labels.size());
                    tb->labels.push_back({x, inj, h});
                }
            }
        }
    return *tables_.emplace(key, std::move(tb)).first->second;
}

const std::vector<CounitComplex::Label>& CounitComplex::labels(int s, int t) const { return table(s, t).labels; }

int CounitComplex::degree(int s, int t, std::size_t i) const {
    const auto& l = labels(s, t)[i];
    return hom_->degree(s, l.x, l.h);
}

SparseVec CounitComplex::element(int s, int x, int t, std::size_t inj_any, const SparseVec& h) const {
    const Map& u = fi_->maps(x, t)[inj_any];
    Map sorted = u;
    std::sort(sorted.begin(), sorted.end());
    Perm sigma(x);
    for (int k = 0; k < x; ++k)
        sigma[k] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), u[k]) - sorted.begin());
    std::size_t rep = fi_->maps(x, t).index(sorted);
    VecBuilder acc;
    const auto& tb = table(s, t);
    for (const auto& [hi, c] : h.terms)
        for (const auto& [hj, cj] : hom_->left_perm(s, x, sigma, hi).terms)
            acc.add(tb.index.at(std::make_tuple(x, rep, hj)), c * cj);
    return acc.take();
}

SparseVec CounitComplex::differential(int s, int t, std::size_t i) const {
    const auto& l = labels(s, t)[i];
    int x = l.x;
    VecBuilder acc;
    auto fid = std::static_pointer_cast<const FiDual>(hom_->source_cat());
    auto base = as_function(fid->base());
    const Map& u = fi_->maps(x, t)[l.inj];
    for (int y = 0; y < x; ++y) {
        Map iy = skip_map(x, y);
        std::size_t inj = fi_->maps(x - 1, t).index(compose(u, iy));
        SparseVec h = hom_->pull(s, x, x - 1, SparseVec::unit(base->maps(x - 1, x).index(iy)), l.h);
        if (h.empty()) continue;
        acc.add(element(s, x - 1, t, inj, h), parity_sign(x - 1 - y));
    }
    SparseVec dh = hom_->differential(s, x, l.h);
    if (!dh.empty()) acc.add(element(s, x, t, l.inj, dh));
    return acc.take();
}

SparseVec CounitComplex::right_perm(int s, int t, std::size_t i, const Perm& p) const {
    const auto& l = labels(s, t)[i];
    return element(s, l.x, t, l.inj, hom_->right_perm(s, l.x, l.h, p));
}

SparseVec CounitComplex::left_perm(int s, int t, const Perm& p, std::size_t i) const {
    const auto& l = labels(s, t)[i];
    std::size_t inj = fi_->maps(l.x, t).index(compose(p, fi_->maps(l.x, t)[l.inj]));
    return element(s, l.x, t, inj, SparseVec::unit(l.h));
}

SparseVec CounitComplex::counit(int s, int t, std::size_t i) const {
    const auto& l = labels(s, t)[i];
    if (s != t || l.x != s) return {};
    const LinearCategory& Y = *hom_->value_cat();
    SparseVec v = hom_->evaluate(s, s, l.h, hom_->source_cat()->identity(s));
    return Y.compose(s, s, s, Y.perm(s, fi_->maps(s, s)[l.inj]), v);
}

ChainMap bgg_counit(int bound) {
    auto fb = build_builtin(Builtin::FB, bound);
    auto hom = std::make_shared<TwistedHom>("hom(kFI^perp, 1)", fi_dual(bound), fb, std::vector<TwistedHom::Twist>{}, bound);
    auto c = std::make_shared<CounitComplex>(hom, bound);
    ChainMap f;
    f.source = c;
    f.target = as_dg_bimodule(fb);
    f.name = "counit kFI (x) hom(kFI^perp, 1) -> 1";
    f.map = [c](int s, int t, std::size_t i) { return c->counit(s, t, i); };
    return f;
}

// ---------------------------------------------------------------- composite hom

std::shared_ptr<const TwistedHom> composite_hom_with(const UnitalCategoryPtr& catpu, int bound, int fi_parity,
                                                    int op_parity, int op_sign) {
    auto relG = relative_dual_grG(catpu, bound);
    auto relF = relative_dual_grF(catpu, bound);
    auto catp = catpu->operad_category();
    auto dual = relF->absolute();
    std::vector<std::vector<CanonicalTerm>> fi_terms, op_terms;
    for (int x = 0; x < bound; ++x) {
        std::vector<CanonicalTerm> ft;
        for (const auto& term : fi_canonical_element(x, bound).terms)
            ft.push_back({term.coeff, relF->element(x, x + 1, x + 1, dual->identity(x + 1), term.left),
                          relG->element(x + 1, x, x, catp->identity(x), term.right)});
        fi_terms.push_back(std::move(ft));
        std::vector<CanonicalTerm> ot;
        for (const auto& term : operad_canonical_element(catp, dual, x).terms)
            ot.push_back({term.coeff, relF->element(x, x, x + 1, term.left, relF->right()->identity(x)),
                          relG->element(x + 1, x + 1, x, term.right, relG->right()->identity(x + 1))});
        op_terms.push_back(std::move(ot));
    }
    auto src = [](std::vector<std::vector<CanonicalTerm>> t) {
        return [t](int x) { return x >= 0 && x < static_cast<int>(t.size()) ? t[x] : std::vector<CanonicalTerm>{}; };
    };
    std::vector<TwistedHom::Twist> tw{{"kFI", src(fi_terms), fi_parity, 1}, {catp->name(), src(op_terms), op_parity, op_sign}};
    return std::make_shared<TwistedHom>("hom(" + relG->name() + ", " + relF->name() + ")", relG, relF, tw, bound);
}

std::shared_ptr<const TwistedHom> composite_hom(const UnitalCategoryPtr& catpu, int bound, int solve_arity) {
    for (int bits = 0; bits < 8; ++bits) {
        auto h = composite_hom_with(catpu, bound, bits & 1, (bits >> 1) & 1, (bits >> 2) & 1 ? -1 : 1);
        if (check_d_squared(*h, Window::square(std::min(solve_arity, bound))).ok) return h;
    }
    throw FbError("composite hom: no sign choice gives d^2 = 0");
}

ChainMap composite_unit(const UnitalCategoryPtr& catpu, int bound, int solve_arity) {
    return hom_unit(composite_hom(catpu, bound, solve_arity), "unit 1 -> hom((gr^G)^perp, (gr^F)^perp)");
}

// ---------------------------------------------------------------- Chevalley-Eilenberg

CeComplex::CeComplex(OperadCategoryPtr catlie) : lie_(std::move(catlie)) {}

const CeComplex::Table& CeComplex::table(int s, int t) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(s, t);
    auto it = tables_.find(key);
    if (it != tables_.end()) return *it->second;
    auto tb = std::make_unique<Table>();
    int N = lie_->bound();
    if (s >= 0 && t >= 0 && s <= N && t <= N)
        for (int x = t; x <= s; ++x) {
            std::size_t n = lie_->dim(s, x);
            if (!n) continue;
            int k = x - t;
            std::vector<std::pair<std::size_t, Rational>> proj(n, {MapSet::npos, Rational(0)});
            std::size_t nf = factorial(k);
            for (std::size_t b = 0; b < n; ++b) {
                if (proj[b].first != MapSet::npos) continue;
                std::size_t lab = tb->labels.size();
                tb->labels.push_back({x, b});
                tb->index.emplace(std::make_pair(x, b), lab);
                for (std::size_t r = 0; r < nf; ++r) {
                    Perm pi = perm_unrank(k, r);
                    Perm sigma = identity_perm(x);
                    for (int q = 0; q < k; ++q) sigma[t + q] = t + pi[q];
                    SparseVec v = lie_->left_act(s, x, sigma, SparseVec::unit(b));
                    if (v.size() != 1) throw FbError("CE complex: output permutation action is not monomial");
                    std::size_t kk = v.terms[0].first;
                    if (proj[kk].first != MapSet::npos) throw FbError("CE complex: output permutation action is not free");
                    proj[kk] = {lab, Rational(perm_sign(pi)) / v.terms[0].second};
                }
            }
            tb->proj.emplace(x, std::move(proj));
        }
    return *tables_.emplace(key, std::move(tb)).first->second;
}

const std::vector<CeComplex::Label>& CeComplex::labels(int s, int t) const { return table(s, t).labels; }

int CeComplex::degree(int s, int t, std::size_t i) const { return -(labels(s, t)[i].x - t); }

SparseVec CeComplex::project(int s, int t, int x, const SparseVec& v) const {
    const auto& tb = table(s, t);
    auto it = tb.proj.find(x);
    VecBuilder acc;
    if (it == tb.proj.end()) {
        if (!v.empty()) throw FbError("CE complex: element outside the complex");
        return acc.take();
    }
    for (const auto& [k, c] : v.terms) acc.add(it->second[k].first, c * it->second[k].second);
    return acc.take();
}

SparseVec CeComplex::lift_differential(int s, int t, int x, const SparseVec& v) const {
    VecBuilder acc;
    Perm id = identity_perm(x - 1);
    for (int j = t; j < x; ++j)
        for (int i = 0; i < j; ++i) {
            std::size_t g = lie_->basis_index(x - 1, 1, id, lie_->free_slot(x - 1, 1, lie_->gen_index(x - 1, i, j, 0)));
            acc.add(lie_->compose(s, x, x - 1, SparseVec::unit(g), v), parity_sign(j + 1 - t));
        }
    return acc.take();
}

SparseVec CeComplex::differential(int s, int t, std::size_t i) const {
    const auto& l = labels(s, t)[i];
    if (l.x == t) return {};
    return project(s, t, l.x - 1, lift_differential(s, t, l.x, SparseVec::unit(l.lie)));
}

SparseVec CeComplex::right_perm(int s, int t, std::size_t i, const Perm& p) const {
    const auto& l = labels(s, t)[i];
    return project(s, t, l.x, lie_->right_act(s, l.x, SparseVec::unit(l.lie), p));
}

SparseVec CeComplex::left_perm(int s, int t, const Perm& p, std::size_t i) const {
    const auto& l = labels(s, t)[i];
    Perm sigma = identity_perm(l.x);
    for (int q = 0; q < t; ++q) sigma[q] = p[q];
    return project(s, t, l.x, lie_->left_act(s, l.x, sigma, SparseVec::unit(l.lie)));
}

CeComparison ce_compare(const UnitalCategoryPtr& catcomu, const OperadCategoryPtr& catlie, int max_arity) {
    CeComparison out;
    if (max_arity > catcomu->bound() || max_arity > catlie->bound())
        throw FbError("CE comparison: range exceeds the built truncations");
    auto relF = relative_dual_grF(catcomu, max_arity);
    auto src = std::make_shared<OppositeCategory>(desuspend(relF));
    auto fi = as_function(relF->right());
    EnginePtr E = relF->absolute()->engine_ptr();
    SignedChainIso iso = find_desuspension_iso(E, catlie, std::min(max_arity, 4));
    if (!iso.found) {
        out.failure = "no degree-zero isomorphism between the desuspended dual and Cat Lie^op";
        return out;
    }
    out.iso_found = true;
    BasisMap chain_map = signed_chain_map(E, catlie, iso);
    CeComplex ce(catlie);
    for (int variant = 0; variant < 4; ++variant) {
        bool inv = (variant & 1) == 0;
        bool shuf = (variant & 2) != 0;
        // canonical identification without the weight signs
        auto phi0 = [&](int s, int t, std::size_t i, int& weight) {
            const auto& lab = relF->labels(t, s)[i];
            int x = lab.mid;
            weight = x - t;
            SparseVec lam = chain_map(x, s, lab.a);
            const Map& u = fi->maps(t, x)[lab.b];
            Perm sigma(u.begin(), u.end());
            std::vector<char> hit(x, 0);
            for (int p : u) hit[p] = 1;
            for (int p = 0; p < x; ++p)
                if (!hit[p]) sigma.push_back(p);
            Perm pi = inv ? inverse(sigma) : sigma;
            SparseVec moved = catlie->left_act(s, x, pi, lam);
            return scale(ce.project(s, t, x, moved), shuf ? perm_sign(sigma) : 1);
        };
        // ratio[n]: phi0(d v) = ratio[n] d phi0(v) for v with n exterior outputs
        std::map<int, int> ratio;
        bool ok = true;
        std::vector<std::string> detail;
        for (int s = 0; s <= max_arity && ok; ++s)
            for (int t = 0; t <= s && ok; ++t) {
                std::size_t n = src->dim(s, t);
                if (n != ce.dim(s, t)) {
                    ok = false;
                    break;
                }
                std::vector<SparseVec> imgs(n);
                std::vector<int> ws(n);
                for (std::size_t i = 0; i < n; ++i) imgs[i] = phi0(s, t, i, ws[i]);
                if (n && rank(RationalMatrix::from_columns(n, imgs)) != n) {
                    ok = false;
                    break;
                }
                for (std::size_t i = 0; i < n && ok; ++i) {
                    VecBuilder lhs;
                    for (const auto& [j, c] : src->differential(s, t, i).terms) lhs.add(imgs[j], c);
                    SparseVec a = lhs.take();
                    SparseVec b = ce.differential(s, t, imgs[i]);
                    if (a.empty() && b.empty()) continue;
                    int rho = 0;
                    if (equal(a, b))
                        rho = 1;
                    else if (equal(a, scale(b, -1)))
                        rho = -1;
                    if (!rho) {
                        ok = false;
                        break;
                    }
                    auto it = ratio.find(ws[i]);
                    if (it == ratio.end())
                        ratio[ws[i]] = rho;
                    else if (it->second != rho) {
                        ok = false;
                    }
                }
                std::ostringstream o;
                o << "(" << s << "," << t << "): " << (ok ? "agree" : "differ");
                detail.push_back(o.str());
            }
        if (!ok) continue;
        out.agree = true;
        out.coset_inverse = inv;
        out.shuffle_sign = shuf;
        out.detail = detail;
        // phi = sign(n) phi0 is a chain map iff sign(n) = sign(n - 1) ratio[n]
        int sg = 1;
        out.weight_signs[0] = 1;
        for (int n = 1; n <= max_arity; ++n) {
            auto it = ratio.find(n);
            if (it != ratio.end()) sg *= it->second;
            out.weight_signs[n] = sg;
        }
        return out;
    }
    out.failure = "differentials differ under every canonical identification";
    return out;
}

// ---------------------------------------------------------------- H^0

std::size_t brute_force_h0_grG_kfa(int s, int t) {
    const MapSet& fs = map_set(s, t, MapKind::Surjective);
    if (!fs.size()) return 0;
    if (s == 0) return fs.size();
    const MapSet& gs = map_set(s - 1, t, MapKind::Surjective);
    RationalMatrix m(static_cast<std::size_t>(s) * gs.size(), fs.size());
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (int y = 0; y < s; ++y) {
            std::size_t g = gs.index(compose(fs[f], skip_map(s, y)));
            if (g == MapSet::npos) continue;
            m.set(static_cast<std::size_t>(y) * gs.size() + g, f, parity_sign(s - 1 - y));
        }
    return fs.size() - rank(m);
}

}  // namespace fbk
