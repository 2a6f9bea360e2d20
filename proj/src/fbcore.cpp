#include "fbk/fbcore.hpp"

#include <algorithm>

namespace fbk {

namespace {

RationalMatrix permutation_matrix(const std::vector<std::size_t>& image, std::size_t n,
                                  const std::vector<int>& signs = {}) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(image[i], i, signs.empty() ? 1 : signs[i]);
    m.normalize_storage();
    return m;
}

bool commute(const RationalMatrix& x, const RationalMatrix& y) { return x * y == y * x; }

// Coordinates of the vectors A v_i in a subspace whose basis has identity rows on
// `free` (the kernel-style basis produced by rref).
RationalMatrix induced_on(const std::vector<SparseVec>& basis, const std::vector<std::size_t>& free,
                          const RationalMatrix& act) {
    std::size_t k = basis.size();
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < free.size(); ++i) slot[free[i]] = i;
    std::vector<SparseVec> cols(k);
    for (std::size_t i = 0; i < k; ++i) {
        SparseVec w = act.apply(basis[i]);
        for (const auto& [c, x] : w.terms) {
            auto it = slot.find(c);
            if (it != slot.end()) cols[i].push(it->second, x);
        }
    }
    return RationalMatrix::from_columns(k, cols);
}

// Kronecker product A (x) B on the index i*dim(B)+j.
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (const auto& [r1, c1, x] : a.entries())
        for (const auto& [r2, c2, y] : b.entries()) m.set(r1 * b.rows() + r2, c1 * b.cols() + c2, x * y);
    m.normalize_storage();
    return m;
}

struct KernelData {
    std::vector<SparseVec> basis;
    std::vector<std::size_t> free;
};

KernelData kernel_of_rows(std::size_t ncols, const std::vector<SparseVec>& rows) {
    Echelon e(ncols);
    for (const auto& r : rows) e.insert(r);
    KernelData kd;
    kd.free = e.free_columns();
    auto rref = e.rref_rows();
    for (std::size_t f : kd.free) {
        VecBuilder b;
        b.add(f, 1);
        for (const auto& row : rref) {
            Rational x = row.coeff(f);
            if (x != 0) b.add(row.terms.front().first, -x);
        }
        kd.basis.push_back(b.take());
    }
    return kd;
}

}  // namespace

// ---------------------------------------------------------------- SymAction

SymAction SymAction::trivial(int n, std::size_t dim) {
    SymAction s{n, dim, {}};
    for (int k = 0; k + 1 < n; ++k) s.gens.push_back(RationalMatrix::identity(dim));
    return s;
}

SymAction SymAction::sign(int n) {
    SymAction s{n, 1, {}};
    for (int k = 0; k + 1 < n; ++k) s.gens.push_back(RationalMatrix::identity(1).scaled(-1));
    return s;
}

SymAction SymAction::regular(int n) {
    std::size_t d = factorial(n);
    SymAction s{n, d, {}};
    for (int k = 0; k + 1 < n; ++k) {
        Perm g = coxeter(n, k);
        std::vector<std::size_t> img(d);
        for (std::size_t i = 0; i < d; ++i) img[i] = perm_rank(compose(g, perm_unrank(n, i)));
        s.gens.push_back(permutation_matrix(img, d));
    }
    return s;
}

void SymAction::validate() const {
    std::size_t expected = n > 1 ? static_cast<std::size_t>(n - 1) : 0;
    if (gens.size() != expected) throw FbError("SymAction: wrong number of generators");
    RationalMatrix id = RationalMatrix::identity(dim);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].rows() != dim || gens[i].cols() != dim) throw FbError("SymAction: generator shape");
        if (gens[i] * gens[i] != id) throw FbError("SymAction: generator is not an involution");
        if (i + 1 < gens.size() && gens[i] * gens[i + 1] * gens[i] != gens[i + 1] * gens[i] * gens[i + 1])
            throw FbError("SymAction: braid relation fails");
        for (std::size_t j = i + 2; j < gens.size(); ++j)
            if (!commute(gens[i], gens[j])) throw FbError("SymAction: distant generators do not commute");
    }
}

RationalMatrix SymAction::left_matrix(const Perm& p) const {
    RationalMatrix m = RationalMatrix::identity(dim);
    for (int k : coxeter_word(p)) m = m * gens[k];
    return m;
}

RationalMatrix SymAction::right_matrix(const Perm& p) const {
    // x.(s_{w0} ... s_{wr}) applies s_{w0} first
    RationalMatrix m = RationalMatrix::identity(dim);
    for (int k : coxeter_word(p)) m = gens[k] * m;
    return m;
}

void BiComponent::validate() const {
    right_action().validate();
    left_action().validate();
    for (const auto& r : right)
        for (const auto& l : left)
            if (!commute(r, l)) throw FbError("FbBimodule: left and right actions do not commute");
}

BiComponent BiComponent::zero(int a, int b) {
    BiComponent c;
    c.a = a;
    c.b = b;
    c.dim = 0;
    for (int k = 0; k + 1 < a; ++k) c.right.emplace_back(0, 0);
    for (int k = 0; k + 1 < b; ++k) c.left.emplace_back(0, 0);
    return c;
}

// ---------------------------------------------------------------- FbModule

void FbModule::set(int n, SymAction act) {
    if (n > bound_) throw FbError("FbModule: arity beyond bound");
    act.validate();
    comps_[n] = std::move(act);
}

const SymAction& FbModule::at(int n) const {
    auto it = comps_.find(n);
    if (it != comps_.end()) return it->second;
    auto z = zeros_.find(n);
    if (z == zeros_.end()) {
        SymAction s{n, 0, {}};
        for (int k = 0; k + 1 < n; ++k) s.gens.emplace_back(0, 0);
        z = zeros_.emplace(n, s).first;
    }
    return z->second;
}

std::vector<int> FbModule::support() const {
    std::vector<int> s;
    for (const auto& [n, a] : comps_)
        if (a.dim > 0) s.push_back(n);
    return s;
}

FbModule FbModule::triv(int bound) {
    FbModule m(bound);
    for (int n = 0; n <= bound; ++n) m.set(n, SymAction::trivial(n));
    return m;
}

FbModule FbModule::sgn(int bound) {
    FbModule m(bound);
    for (int n = 0; n <= bound; ++n) m.set(n, SymAction::sign(n));
    return m;
}

FbModule FbModule::unit(int bound) {
    FbModule m(bound);
    m.set(0, SymAction::trivial(0));
    return m;
}

FbModule FbModule::concentrated(int bound, SymAction act) {
    FbModule m(bound);
    m.set(act.n, std::move(act));
    return m;
}

// ---------------------------------------------------------------- FbBimodule

FbBimodule::FbBimodule(int bound, Maker maker) : state_(std::make_shared<State>()) {
    state_->bound = bound;
    state_->maker = std::move(maker);
}

FbBimodule FbBimodule::from_components(int bound, std::map<std::pair<int, int>, BiComponent> comps) {
    for (auto& [k, c] : comps) c.validate();
    auto shared = std::make_shared<std::map<std::pair<int, int>, BiComponent>>(std::move(comps));
    return FbBimodule(bound, [shared](int a, int b) {
        auto it = shared->find({a, b});
        return it == shared->end() ? BiComponent::zero(a, b) : it->second;
    });
}

const BiComponent& FbBimodule::at(int a, int b) const {
    if (!state_) throw FbError("FbBimodule: uninitialized");
    std::lock_guard<std::mutex> lock(state_->mu);
    auto key = std::make_pair(a, b);
    auto it = state_->memo.find(key);
    if (it != state_->memo.end()) return *it->second;
    BiComponent c = (a < 0 || b < 0 || a > state_->bound || b > state_->bound) ? BiComponent::zero(a, b)
                                                                            : state_->maker(a, b);
    c.a = a;
    c.b = b;
    c.validate();
    return *state_->memo.emplace(key, std::make_unique<BiComponent>(std::move(c))).first->second;
}

std::vector<std::pair<int, int>> FbBimodule::support() const {
    std::vector<std::pair<int, int>> s;
    for (int a = 0; a <= bound(); ++a)
        for (int b = 0; b <= bound(); ++b)
            if (dim(a, b) > 0) s.emplace_back(a, b);
    return s;
}

// ---------------------------------------------------------------- graded

void GradedFbBimodule::set(int a, int b, int k, BiComponent c) {
    c.validate();
    comps_[{a, b, k}] = std::move(c);
}

const BiComponent& GradedFbBimodule::at(int a, int b, int k) const {
    auto it = comps_.find({a, b, k});
    if (it != comps_.end()) return it->second;
    auto z = zeros_.find({a, b, k});
    if (z == zeros_.end()) z = zeros_.emplace(std::make_tuple(a, b, k), BiComponent::zero(a, b)).first;
    return z->second;
}

std::vector<std::tuple<int, int, int>> GradedFbBimodule::support() const {
    std::vector<std::tuple<int, int, int>> s;
    for (const auto& [k, c] : comps_)
        if (c.dim > 0) s.push_back(k);
    return s;
}

GradedFbBimodule GradedFbBimodule::concentrated(const FbBimodule& x, int degree) {
    GradedFbBimodule g(x.bound());
    for (auto [a, b] : x.support()) g.set(a, b, degree, x.at(a, b));
    return g;
}

FbBimodule GradedFbBimodule::degree_part(int k) const {
    std::map<std::pair<int, int>, BiComponent> comps;
    for (const auto& [key, c] : comps_)
        if (std::get<2>(key) == k) comps[{std::get<0>(key), std::get<1>(key)}] = c;
    return FbBimodule::from_components(bound_, std::move(comps));
}

// ---------------------------------------------------------------- Day convolution

std::vector<DayLabel> day_labels(const FbBimodule& m, const FbModule& n, int a, int s) {
    std::vector<DayLabel> labels;
    for (const auto& u : all_subsets(s)) {
        int k = static_cast<int>(u.size());
        std::size_t dm = m.dim(a, k), dn = n.dim(s - k);
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) labels.push_back({u, i, j});
    }
    return labels;
}

FbBimodule day_convolution(const FbBimodule& m, const FbModule& n) {
    if (m.bound() != n.bound()) throw FbError("day_convolution: arity-bound mismatch");
    return FbBimodule(m.bound(), [m, n](int a, int s) {
        std::vector<DayLabel> labels = day_labels(m, n, a, s);
        std::map<std::tuple<std::vector<int>, std::size_t, std::size_t>, std::size_t> index;
        for (std::size_t i = 0; i < labels.size(); ++i)
            index[{labels[i].subset, labels[i].left, labels[i].right}] = i;
        BiComponent c;
        c.a = a;
        c.b = s;
        c.dim = labels.size();
        for (int g = 0; g + 1 < a; ++g) {
            RationalMatrix r(c.dim, c.dim);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                const auto& lb = labels[i];
                int k = static_cast<int>(lb.subset.size());
                SparseVec img = m.at(a, k).right[g].apply(SparseVec::unit(lb.left));
                for (const auto& [l, x] : img.terms) r.set(index.at({lb.subset, l, lb.right}), i, x);
            }
            r.normalize_storage();
            c.right.push_back(std::move(r));
        }
        for (int g = 0; g + 1 < s; ++g) {
            RationalMatrix l(c.dim, c.dim);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                const auto& lb = labels[i];
                int k = static_cast<int>(lb.subset.size());
                auto pos = [&](int v) {
                    auto it = std::find(lb.subset.begin(), lb.subset.end(), v);
                    return it == lb.subset.end() ? -1 : static_cast<int>(it - lb.subset.begin());
                };
                int p0 = pos(g), p1 = pos(g + 1);
                if (p0 >= 0 && p1 >= 0) {
                    SparseVec img = m.at(a, k).left[p0].apply(SparseVec::unit(lb.left));
                    for (const auto& [x, v] : img.terms) l.set(index.at({lb.subset, x, lb.right}), i, v);
                } else if (p0 < 0 && p1 < 0) {
                    // both points in the complement, adjacent there
                    int q = 0;
                    for (int v = 0; v < g; ++v)
                        if (pos(v) < 0) ++q;
                    SparseVec img = n.at(s - k).gens[q].apply(SparseVec::unit(lb.right));
                    for (const auto& [y, v] : img.terms) l.set(index.at({lb.subset, lb.left, y}), i, v);
                } else {
                    std::vector<int> u = lb.subset;
                    for (int& v : u) v = v == g ? g + 1 : (v == g + 1 ? g : v);
                    l.set(index.at({u, lb.left, lb.right}), i, 1);
                }
            }
            l.normalize_storage();
            c.left.push_back(std::move(l));
        }
        return c;
    });
}

FbBimodule as_left_bimodule(const FbModule& n) {
    return FbBimodule(n.bound(), [n](int a, int b) {
        if (a != 0) return BiComponent::zero(a, b);
        const SymAction& s = n.at(b);
        BiComponent c;
        c.a = 0;
        c.b = b;
        c.dim = s.dim;
        c.left = s.gens;
        return c;
    });
}

FbModule column(const FbBimodule& x, int a) {
    FbModule m(x.bound());
    for (int b = 0; b <= x.bound(); ++b) {
        const BiComponent& c = x.at(a, b);
        if (c.dim > 0) m.set(b, c.left_action());
    }
    return m;
}

FbModule day_convolution(const FbModule& m, const FbModule& n) {
    return column(day_convolution(as_left_bimodule(m), n), 0);
}

// ---------------------------------------------------------------- tensor over FB

FbBimodule tensor_over_fb(const FbBimodule& x, const FbBimodule& y) {
    if (x.bound() != y.bound()) throw FbError("tensor_over_fb: arity-bound mismatch");
    int bound = x.bound();
    return FbBimodule(bound, [x, y, bound](int s, int t) {
        std::vector<std::size_t> offset(bound + 2, 0);
        for (int a = 0; a <= bound; ++a) offset[a + 1] = offset[a] + x.dim(a, t) * y.dim(s, a);
        std::size_t ambient = offset[bound + 1];
        std::vector<SparseVec> rels;
        for (int a = 0; a <= bound; ++a) {
            const BiComponent& xa = x.at(a, t);
            const BiComponent& ya = y.at(s, a);
            std::size_t dy = ya.dim;
            if (xa.dim == 0 || dy == 0) continue;
            for (int g = 0; g + 1 < a; ++g) {
                auto xcols = xa.right[g].all_columns();
                auto ycols = ya.left[g].all_columns();
                for (std::size_t i = 0; i < xa.dim; ++i)
                    for (std::size_t j = 0; j < dy; ++j) {
                        VecBuilder b;
                        for (const auto& [i2, c] : xcols[i].terms) b.add(offset[a] + i2 * dy + j, c);
                        for (const auto& [j2, c] : ycols[j].terms) b.add(offset[a] + i * dy + j2, -c);
                        SparseVec v = b.take();
                        if (!v.empty()) rels.push_back(std::move(v));
                    }
            }
        }
        Quotient q = quotient_and_projection(Subspace::from_vectors(ambient, rels));
        auto induced = [&](auto&& ambient_action) {
            std::vector<SparseVec> cols(q.quotient_dim);
            for (std::size_t k = 0; k < q.quotient_dim; ++k)
                cols[k] = q.projection.apply(ambient_action(q.kept_columns[k]));
            return RationalMatrix::from_columns(q.quotient_dim, cols);
        };
        auto locate = [&](std::size_t idx, int& a, std::size_t& i, std::size_t& j) {
            a = 0;
            while (offset[a + 1] <= idx) ++a;
            std::size_t dy = y.dim(s, a);
            i = (idx - offset[a]) / dy;
            j = (idx - offset[a]) % dy;
        };
        BiComponent c;
        c.a = s;
        c.b = t;
        c.dim = q.quotient_dim;
        for (int g = 0; g + 1 < s; ++g)
            c.right.push_back(induced([&](std::size_t idx) {
                int a;
                std::size_t i, j;
                locate(idx, a, i, j);
                std::size_t dy = y.dim(s, a);
                SparseVec out;
                SparseVec img = y.at(s, a).right[g].apply(SparseVec::unit(j));
                for (const auto& [j2, v] : img.terms) out.push(offset[a] + i * dy + j2, v);
                return out;
            }));
        for (int g = 0; g + 1 < t; ++g)
            c.left.push_back(induced([&](std::size_t idx) {
                int a;
                std::size_t i, j;
                locate(idx, a, i, j);
                std::size_t dy = y.dim(s, a);
                VecBuilder b;
                SparseVec img = x.at(a, t).left[g].apply(SparseVec::unit(i));
                for (const auto& [i2, v] : img.terms) b.add(offset[a] + i2 * dy + j, v);
                return b.take();
            }));
        return c;
    });
}

// ---------------------------------------------------------------- hom over FB

FbBimodule hom_over_fb(const FbBimodule& x, const FbBimodule& y, HomSide side) {
    if (x.bound() != y.bound()) throw FbError("hom_over_fb: arity-bound mismatch");
    int bound = x.bound();
    return FbBimodule(bound, [x, y, bound, side](int a, int b) {
        // Left: sum_t Hom_{S_t}(x(b,t), y(a,t)); Right: sum_s Hom_{S_s^op}(x(s,a), y(s,b)).
        std::vector<std::vector<SparseVec>> blocks;
        std::vector<std::vector<std::size_t>> frees;
        std::vector<std::size_t> offs(1, 0);
        struct Piece {
            const BiComponent* src;
            const BiComponent* dst;
        };
        std::vector<Piece> pieces;
        for (int t = 0; t <= bound; ++t) {
            const BiComponent& xs = side == HomSide::Left ? x.at(b, t) : x.at(t, a);
            const BiComponent& yd = side == HomSide::Left ? y.at(a, t) : y.at(t, b);
            pieces.push_back({&xs, &yd});
            std::size_t dx = xs.dim, dyy = yd.dim, n = dx * dyy;
            std::vector<SparseVec> rows;
            if (n > 0) {
                const auto& gx = side == HomSide::Left ? xs.left : xs.right;
                const auto& gy = side == HomSide::Left ? yd.left : yd.right;
                for (std::size_t g = 0; g < gx.size(); ++g) {
                    // vec(f) index r*dx + c; equation  Gy f - f Gx = 0
                    RationalMatrix lhs = kron(gy[g], RationalMatrix::identity(dx)) -
                                         kron(RationalMatrix::identity(dyy), gx[g].transpose());
                    for (auto& r : lhs.all_rows())
                        if (!r.empty()) rows.push_back(std::move(r));
                }
            }
            KernelData kd = kernel_of_rows(n, rows);
            blocks.push_back(kd.basis);
            frees.push_back(kd.free);
            offs.push_back(offs.back() + kd.basis.size());
        }
        BiComponent c;
        c.a = a;
        c.b = b;
        c.dim = offs.back();
        auto assemble = [&](auto&& action_for_piece) {
            RationalMatrix m(c.dim, c.dim);
            for (std::size_t t = 0; t < pieces.size(); ++t) {
                if (blocks[t].empty()) continue;
                RationalMatrix blk = induced_on(blocks[t], frees[t], action_for_piece(pieces[t]));
                for (const auto& [r, cc, v] : blk.entries()) m.set(offs[t] + r, offs[t] + cc, v);
            }
            m.normalize_storage();
            return m;
        };
        for (int g = 0; g + 1 < a; ++g)
            c.right.push_back(assemble([&](const Piece& p) {
                std::size_t dx = p.src->dim, dyy = p.dst->dim;
                if (side == HomSide::Left)  // f -> R_y(g) f
                    return kron(p.dst->right[g], RationalMatrix::identity(dx));
                // f -> f L_x(g)
                return kron(RationalMatrix::identity(dyy), p.src->left[g].transpose());
            }));
        for (int g = 0; g + 1 < b; ++g)
            c.left.push_back(assemble([&](const Piece& p) {
                std::size_t dx = p.src->dim, dyy = p.dst->dim;
                if (side == HomSide::Left)  // f -> f R_x(g)
                    return kron(RationalMatrix::identity(dyy), p.src->right[g].transpose());
                // f -> L_y(g) f
                return kron(p.dst->left[g], RationalMatrix::identity(dx));
            }));
        return c;
    });
}

// ---------------------------------------------------------------- dualities

FbBimodule sharp_dual(const FbBimodule& x) {
    return FbBimodule(x.bound(), [x](int a, int b) {
        const BiComponent& src = x.at(b, a);
        BiComponent c;
        c.a = a;
        c.b = b;
        c.dim = src.dim;
        for (const auto& g : src.left) c.right.push_back(g.transpose());
        for (const auto& g : src.right) c.left.push_back(g.transpose());
        return c;
    });
}

FbBimodule ddag_twist(const FbBimodule& x) {
    return FbBimodule(x.bound(), [x](int a, int b) {
        BiComponent c = x.at(a, b);
        for (auto& g : c.right) g = g.scaled(-1);
        for (auto& g : c.left) g = g.scaled(-1);
        return c;
    });
}

FbBimodule op_reverse(const FbBimodule& x) {
    return FbBimodule(x.bound(), [x](int a, int b) {
        const BiComponent& src = x.at(b, a);
        BiComponent c;
        c.a = a;
        c.b = b;
        c.dim = src.dim;
        c.right = src.left;  // generators are involutions, so inversion is invisible
        c.left = src.right;
        return c;
    });
}

FbBimodule z_component(const FbBimodule& x, int n) {
    return FbBimodule(x.bound(), [x, n](int a, int b) { return b - a == n ? x.at(a, b) : BiComponent::zero(a, b); });
}

FbModule truncate(const FbModule& m, int s, TruncateKind kind) {
    FbModule out(m.bound());
    for (int n : m.support())
        if (kind == TruncateKind::AtMost ? n <= s : n >= s) out.set(n, m.at(n));
    return out;
}

FbBimodule truncate_source(const FbBimodule& x, int s, TruncateKind kind) {
    return FbBimodule(x.bound(), [x, s, kind](int a, int b) {
        bool keep = kind == TruncateKind::AtMost ? a <= s : a >= s;
        return keep ? x.at(a, b) : BiComponent::zero(a, b);
    });
}

GradedFbBimodule sheer(const GradedFbBimodule& x, SheerDirection dir) {
    GradedFbBimodule out(x.bound());
    for (auto [a, b, k] : x.support()) {
        BiComponent c = x.at(a, b, k);
        for (auto& g : c.right) g = g.scaled(-1);
        for (auto& g : c.left) g = g.scaled(-1);
        int shift = dir == SheerDirection::R ? (b - a) : -(b - a);
        out.set(a, b, k + shift, std::move(c));
    }
    return out;
}

bool same_dims(const FbBimodule& x, const FbBimodule& y, int bound) {
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            if (x.dim(a, b) != y.dim(a, b)) return false;
    return true;
}

bool same_structure(const BiComponent& x, const BiComponent& y) {
    if (x.dim != y.dim || x.right.size() != y.right.size() || x.left.size() != y.left.size()) return false;
    for (std::size_t i = 0; i < x.right.size(); ++i)
        if (x.right[i] != y.right[i]) return false;
    for (std::size_t i = 0; i < x.left.size(); ++i)
        if (x.left[i] != y.left[i]) return false;
    return true;
}

Perm perm_from_word(int n, const std::vector<int>& w) {
    Perm p = identity_perm(n);
    for (int k : w) p = compose(p, coxeter(n, k));
    return p;
}

std::vector<Rational> bicharacter(const BiComponent& x) {
    std::vector<Rational> out;
    std::vector<RationalMatrix> rs, ls;
    for (const auto& lam : partitions(x.a)) rs.push_back(x.right_matrix(perm_from_word(x.a, class_representative_word(lam))));
    for (const auto& lam : partitions(x.b)) ls.push_back(x.left_matrix(perm_from_word(x.b, class_representative_word(lam))));
    for (const auto& r : rs)
        for (const auto& l : ls) {
            RationalMatrix m = l * r;
            Rational t = 0;
            for (std::size_t i = 0; i < x.dim; ++i) t += m.get(i, i);
            out.push_back(t);
        }
    return out;
}

bool isomorphic(const BiComponent& x, const BiComponent& y) {
    if (x.a != y.a || x.b != y.b || x.dim != y.dim) return false;
    if (x.dim == 0) return true;
    return bicharacter(x) == bicharacter(y);
}

bool isomorphic(const FbBimodule& x, const FbBimodule& y, int bound) {
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            if (!isomorphic(x.at(a, b), y.at(a, b))) return false;
    return true;
}

}  // namespace fbk
