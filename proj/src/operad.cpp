#include "fbk/operad.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace fbk {

namespace {

QuadraticEngine::Data free_data(const OperadPresentation& p) {
    QuadraticEngine::Data d;
    d.name = "free(" + p.name + ")";
    d.labels = p.arity2_dim;
    d.swap = p.s2_action;
    return d;
}

Rational parse_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        Rational r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw FbError("operad file: coefficients must be integers or strings p/q");
}

nlohmann::ordered_json rational_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return r.get_str();
}

}  // namespace

// ---------------------------------------------------------------- presentation

bool OperadPresentation::s3_stable() const {
    QuadraticEngine free(free_data(*this), 3);
    std::size_t n = free3_dim();
    Echelon span(n);
    for (const auto& r : relations) span.insert(r);
    for (const auto& r : span.raw_rows())
        for (int s = 0; s < 2; ++s) {
            VecBuilder img;
            for (const auto& [ci, c] : r.terms)
                for (const auto& t : free.push(1, free.chain_decode(1, 2, ci), coxeter(3, s), nullptr))
                    img.add(free.chain_encode(1, t.chain), c * t.coeff);
            if (!span.contains(img.take())) return false;
        }
    return true;
}

void OperadPresentation::validate() const {
    if (arity2_dim < 0) throw FbError("operad: negative arity-two dimension");
    std::size_t d = static_cast<std::size_t>(arity2_dim);
    if (s2_action.rows() != d || s2_action.cols() != d) throw FbError("operad: S_2 action matrix has the wrong size");
    if (d > 0 && s2_action * s2_action != RationalMatrix::identity(d))
        throw FbError("operad: S_2 action matrix is not an involution");
    if (basis_doc_version != kBasisDocVersion)
        throw FbError("operad: unsupported basis_doc_version '" + basis_doc_version + "'");
    for (const auto& r : relations)
        if (!r.empty() && r.terms.back().first >= free3_dim())
            throw FbError("operad: relation vector longer than the free arity-three space");
    if (unit_second && unit_second->size() != d) throw FbError("operad: unit coefficients have the wrong size");
    if (!s3_stable()) throw FbError("operad: relation subspace is not S_3-stable");
}

std::vector<SparseVec> tree_oracle_relations(BuiltinOperad which) {
    if (which == BuiltinOperad::Unit) return {};
    // Model algebra on multilinear words in x0, x1, x2.
    using Poly = std::map<std::vector<int>, Rational>;
    auto mul = [&](const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                std::vector<int> ab = wa, ba = wb;
                ab.insert(ab.end(), wb.begin(), wb.end());
                ba.insert(ba.end(), wa.begin(), wa.end());
                if (which == BuiltinOperad::Com) {
                    std::sort(ab.begin(), ab.end());
                    out[ab] += ca * cb;
                } else {
                    out[ab] += ca * cb;
                    out[ba] -= ca * cb;
                }
            }
        return out;
    };
    // Free weight-two trees at (3,1): inner merge of the pair (i,j), then the
    // outer merge of the two remaining points, both with input order by position.
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<Poly> values;
    for (const auto& pr : pairs) {
        std::vector<Poly> pts;
        for (int k = 0; k < 3; ++k) pts.push_back(Poly{{{k}, Rational(1)}});
        Poly merged = mul(pts[pr[0]], pts[pr[1]]);
        std::vector<Poly> next;
        for (int k = 0; k < 3; ++k) {
            if (k == pr[1]) continue;
            next.push_back(k == pr[0] ? merged : pts[k]);
        }
        values.push_back(mul(next[0], next[1]));
    }
    std::map<std::vector<int>, std::size_t> rows;
    for (const auto& v : values)
        for (const auto& [w, c] : v)
            if (c != 0) rows.emplace(w, rows.size());
    RationalMatrix m(rows.size(), 3);
    for (std::size_t col = 0; col < 3; ++col)
        for (const auto& [w, c] : values[col])
            if (c != 0) m.set(rows.at(w), col, c);
    return kernel_basis(m).vectors();
}

OperadPresentation builtin_operad(BuiltinOperad which) {
    OperadPresentation p;
    switch (which) {
        case BuiltinOperad::Com:
            p.name = "Com";
            p.arity2_dim = 1;
            p.s2_action = RationalMatrix::identity(1);
            p.unit_second = std::vector<Rational>{1};
            break;
        case BuiltinOperad::Lie:
            p.name = "Lie";
            p.arity2_dim = 1;
            p.s2_action = RationalMatrix::identity(1).scaled(-1);
            p.unit_second = std::vector<Rational>{0};
            break;
        case BuiltinOperad::Unit:
            p.name = "unit";
            p.arity2_dim = 0;
            p.s2_action = RationalMatrix(0, 0);
            p.unit_second = std::vector<Rational>{};
            break;
    }
    p.relations = tree_oracle_relations(which);
    return p;
}

OperadPresentation parse_operad_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw FbError(std::string("operad file: invalid JSON: ") + e.what());
    }
    for (const char* key : {"arity2_dim", "s2_action_matrix", "relation_vectors", "basis_doc_version"})
        if (!j.contains(key)) throw FbError(std::string("operad file: missing field ") + key);
    OperadPresentation p;
    p.name = j.value("name", std::string("file"));
    p.arity2_dim = j.at("arity2_dim").get<int>();
    p.basis_doc_version = j.at("basis_doc_version").get<std::string>();
    std::size_t d = static_cast<std::size_t>(std::max(p.arity2_dim, 0));
    const auto& m = j.at("s2_action_matrix");
    if (!m.is_array() || m.size() != d) throw FbError("operad file: s2_action_matrix must have arity2_dim rows");
    p.s2_action = RationalMatrix(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        if (!m[r].is_array() || m[r].size() != d) throw FbError("operad file: s2_action_matrix must be square");
        for (std::size_t c = 0; c < d; ++c) p.s2_action.set(r, c, parse_rational(m[r][c]));
    }
    for (const auto& v : j.at("relation_vectors")) {
        if (!v.is_array() || v.size() != 3 * d * d)
            throw FbError("operad file: each relation vector must have 3 * arity2_dim^2 entries");
        SparseVec s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rational x = parse_rational(v[i]);
            if (x != 0) s.push(i, x);
        }
        p.relations.push_back(std::move(s));
    }
    if (j.contains("unit_coefficients")) {
        std::vector<Rational> u;
        for (const auto& x : j.at("unit_coefficients")) u.push_back(parse_rational(x));
        p.unit_second = std::move(u);
    }
    p.validate();
    return p;
}

std::string operad_to_json(const OperadPresentation& p) {
    nlohmann::ordered_json j;
    std::size_t d = static_cast<std::size_t>(p.arity2_dim);
    j["name"] = p.name;
    j["basis_doc_version"] = p.basis_doc_version;
    j["arity2_dim"] = p.arity2_dim;
    nlohmann::ordered_json m = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < d; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < d; ++c) row.push_back(rational_json(p.s2_action.get(r, c)));
        m.push_back(row);
    }
    j["s2_action_matrix"] = m;
    nlohmann::ordered_json rels = nlohmann::ordered_json::array();
    for (const auto& v : p.relations) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < p.free3_dim(); ++i) row.push_back(rational_json(v.coeff(i)));
        rels.push_back(row);
    }
    j["relation_vectors"] = rels;
    if (p.unit_second) {
        nlohmann::ordered_json u = nlohmann::ordered_json::array();
        for (const auto& x : *p.unit_second) u.push_back(rational_json(x));
        j["unit_coefficients"] = u;
    }
    return j.dump(2);
}

OperadPresentation load_operad(const std::string& source) {
    if (source == "builtin:com") return builtin_operad(BuiltinOperad::Com);
    if (source == "builtin:lie") return builtin_operad(BuiltinOperad::Lie);
    if (source == "builtin:unit") return builtin_operad(BuiltinOperad::Unit);
    std::ifstream in(source);
    if (!in) throw FbError("cannot open operad file " + source);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_operad_json(ss.str());
}

std::string presentation_hash(const OperadPresentation& p) {
    // FNV-1a over the canonical JSON with the relation span echelonized.
    OperadPresentation canon = p;
    canon.name.clear();
    Echelon e(p.free3_dim());
    for (const auto& r : p.relations) e.insert(r);
    canon.relations = e.rref_rows();
    std::string s = operad_to_json(canon);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

// ---------------------------------------------------------------- Cat P

namespace {

QuadraticEngine::Data operad_data(const OperadPresentation& p) {
    QuadraticEngine::Data d;
    d.name = "Cat " + p.name;
    d.labels = p.arity2_dim;
    d.swap = p.s2_action;
    int dl = p.arity2_dim;
    std::vector<SparseVec> rel = p.relations;
    d.relations = [rel, dl](int k) {
        // Shared shapes: a relation on the first three points with bystanders,
        // and the commutation of merges on disjoint pairs.
        QuadraticEngine::Data tmp;
        tmp.labels = dl;
        tmp.swap = RationalMatrix::identity(static_cast<std::size_t>(dl));
        QuadraticEngine idx(tmp, k + 2);
        std::vector<SparseVec> out;
        for (const auto& r : rel) {
            VecBuilder b;
            for (const auto& [ci, c] : r.terms) {
                std::size_t outer = ci / (3 * static_cast<std::size_t>(dl));
                std::size_t inner = ci % (3 * static_cast<std::size_t>(dl));
                GeneratorLabel li = idx.gen_label(2, inner);
                std::vector<std::size_t> ch{idx.gen_index(k, 0, 1, static_cast<int>(outer)),
                                            idx.gen_index(k + 1, li.i, li.j, li.label)};
                b.add(idx.chain_encode(k, ch), c);
            }
            out.push_back(b.take());
        }
        if (k >= 2)
            for (int l = 0; l < dl; ++l)
                for (int l2 = 0; l2 < dl; ++l2) {
                    std::vector<std::size_t> a{idx.gen_index(k, 0, 1, l), idx.gen_index(k + 1, 2, 3, l2)};
                    std::vector<std::size_t> b{idx.gen_index(k, 1, 2, l2), idx.gen_index(k + 1, 0, 1, l)};
                    VecBuilder v;
                    v.add(idx.chain_encode(k, a), 1);
                    v.add(idx.chain_encode(k, b), -1);
                    out.push_back(v.take());
                }
        return out;
    };
    return d;
}

}  // namespace

OperadCategory::OperadCategory(OperadPresentation pres, int bound)
    : QuadraticEngine(operad_data(pres), bound), pres_(std::move(pres)) {}

std::optional<UnitRule> OperadCategory::unit_rule() const {
    if (!pres_.unit_second) return std::nullopt;
    UnitRule u;
    u.second = *pres_.unit_second;
    std::size_t d = u.second.size();
    u.first.assign(d, Rational(0));
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t l2 = 0; l2 < d; ++l2) u.first[l] += pres_.s2_action.get(l2, l) * u.second[l2];
    return u;
}

OperadCategoryPtr cat_from_operad(const OperadPresentation& pres, int bound) {
    if (bound < 0 || bound > kMaxOperadBound)
        throw FbError("cat_from_operad: bound must lie in [0, " + std::to_string(kMaxOperadBound) + "]");
    pres.validate();
    return std::make_shared<OperadCategory>(pres, bound);
}

Integer cat_dim_formula(const std::vector<Integer>& arity_dims, int m, int n) {
    Integer total = 0;
    for (const auto& f : map_set(m, n, MapKind::Surjective).all()) {
        std::vector<int> fib(n, 0);
        for (int v : f) ++fib[v];
        Integer p = 1;
        for (int k : fib) p *= static_cast<std::size_t>(k) < arity_dims.size() ? arity_dims[k] : Integer(0);
        total += p;
    }
    return total;
}

FbBimodule weight_component(const OperadCategory& cat, int n) { return z_component(cat.underlying(), -n); }

// ---------------------------------------------------------------- Cat P^u

UnitalCategory::UnitalCategory(OperadCategoryPtr catp, UnitRule unit, bool graded, int bound)
    : TensorCategory(
          std::string(graded ? "gr " : "") + catp->name() + "^u", build_builtin(Builtin::FI, bound), catp,
          FreeSide::LeftOfB,
          [catp](int s, int x) {
              std::vector<std::size_t> r;
              if (x == 0) {
                  if (s == 0) r.push_back(0);
                  return r;
              }
              for (std::size_t k = 0; k < catp->free_chains(x, s - x).size(); ++k) r.push_back(k);
              return r;
          },
          [catp](int s, int x, std::size_t i) -> std::pair<std::size_t, Perm> {
              if (x == 0) return {0, Perm{}};
              auto [tau, slot] = catp->basis_decode(x, s - x, i);
              return {slot, tau};
          },
          nullptr, bound),
      catp_(std::move(catp)),
      unit_(std::move(unit)),
      graded_(graded) {}

namespace {

TensorCategory::Interchange unital_interchange(const OperadCategory* catp, const UnitRule* unit, int bound) {
    auto fi = std::static_pointer_cast<const FunctionCategory>(build_builtin(Builtin::FI, bound));
    return [catp, unit, fi](int l, int m, int k, std::size_t b, std::size_t a) {
        std::vector<TensorCategory::Term> out;
        const Map& u = fi->maps(l, m)[a];
        if (k == 0) {
            out.push_back({0, SparseVec::unit(0), SparseVec::unit(0)});
            return out;
        }
        auto [tau, slot] = catp->basis_decode(k, m - k, b);
        auto chain = catp->chain_decode(k, m - k, catp->free_chains(k, m - k)[slot]);
        for (const auto& t : catp->push(k, chain, u, unit)) {
            int mid = static_cast<int>(t.v.size());
            TensorCategory::Term term;
            term.mid = mid;
            term.a = SparseVec::unit(fi->maps(mid, k).index(compose(tau, t.v)), t.coeff);
            term.b = mid == 0 ? SparseVec::unit(0) : catp->from_chain(mid, identity_perm(mid), t.chain);
            if (!term.b.empty()) out.push_back(std::move(term));
        }
        return out;
    };
}

}  // namespace

int UnitalCategory::kfi_weight(int s, int t, std::size_t i) const {
    (void)s;
    return t - labels(s, t)[i].mid;
}

int UnitalCategory::operad_weight(int s, int t, std::size_t i) const { return s - labels(s, t)[i].mid; }

UnitalCategoryPtr assemble_cat_pu(const OperadCategoryPtr& catp, int bound, bool graded) {
    auto rule = catp->unit_rule();
    if (!rule) throw FbError("assemble_cat_pu: the presentation carries no augmentation (unit coefficients)");
    if (!graded)
        for (std::size_t l = 0; l < rule->second.size(); ++l)
            if (rule->first[l] != rule->second[l])
                throw FbError("assemble_cat_pu: unit coefficients are incompatible with the S_2 action");
    if (bound > catp->bound()) throw FbError("assemble_cat_pu: bound exceeds that of Cat P");
    auto cat = std::make_shared<UnitalCategory>(catp, *rule, graded, bound);
    // The interchange refers to the category's own copy of the unit rule.
    cat->set_interchange(
        unital_interchange(catp.get(), graded ? nullptr : &cat->unit(), bound));
    std::weak_ptr<const UnitalCategory> weak = cat;
    cat->set_generators([weak](int s, int t) {
        std::vector<std::size_t> g;
        auto c = weak.lock();
        if (!c) return g;
        const auto& ls = c->labels(s, t);
        auto fi = std::static_pointer_cast<const FunctionCategory>(c->left());
        for (std::size_t i = 0; i < ls.size(); ++i) {
            const auto& l = ls[i];
            bool a_id = l.mid == t && fi->maps(t, t)[l.a] == identity_perm(t);
            bool b_id = l.mid == s && l.b == 0;
            if ((a_id && s == t + 1) || (b_id && t == s + 1)) g.push_back(i);
        }
        return g;
    });
    return cat;
}

FbBimodule filtration(const UnitalCategory& cat, Filtration which, int n) {
    std::shared_ptr<const LinearCategory> keep = cat.weak_from_this().lock();
    const UnitalCategory* c = &cat;
    return FbBimodule(cat.bound(), [c, keep, which, n](int s, int t) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < c->dim(s, t); ++i) {
            int w = which == Filtration::F ? c->operad_weight(s, t, i) : c->kfi_weight(s, t, i);
            if (w <= n) idx.push_back(i);
        }
        return restricted_component(*c, s, t, idx);
    });
}

CategoryCheck check_filtration_multiplicative(const UnitalCategory& cat, Filtration which, int max_arity) {
    CategoryCheck r;
    auto wt = [&](int s, int t, std::size_t i) {
        return which == Filtration::F ? cat.operad_weight(s, t, i) : cat.kfi_weight(s, t, i);
    };
    for (int a = 0; a <= max_arity; ++a)
        for (int b = 0; b <= max_arity; ++b)
            for (int c = 0; c <= max_arity; ++c)
                for (std::size_t y = 0; y < cat.dim(b, c); ++y)
                    for (std::size_t x = 0; x < cat.dim(a, b); ++x) {
                        ++r.checked;
                        int bound = wt(b, c, y) + wt(a, b, x);
                        for (const auto& [i, v] : cat.compose(a, b, c, y, x).terms)
                            if (wt(a, c, i) > bound) {
                                r.failure = "filtration not multiplicative at (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")";
                                return r;
                            }
                    }
    return r;
}

// ---------------------------------------------------------------- augmentations

Augmentation augmentation_actions(const UnitalCategoryPtr& catpu) { return Augmentation{catpu}; }

SparseVec Augmentation::right(int a, int b, int c, std::size_t p, std::size_t u) const {
    const auto& catp = catpu->operad_category();
    auto fi = std::static_pointer_cast<const FunctionCategory>(catpu->left());
    if (c == 0) return b == 0 && a == 0 ? SparseVec::unit(0) : SparseVec{};
    auto [tau, slot] = catp->basis_decode(c, b - c, p);
    auto chain = catp->chain_decode(c, b - c, catp->free_chains(c, b - c)[slot]);
    VecBuilder acc;
    for (const auto& t : catp->push(c, chain, fi->maps(a, b)[u], &catpu->unit()))
        if (static_cast<int>(t.v.size()) == c) acc.add(catp->from_chain(c, compose(tau, t.v), t.chain), t.coeff);
    return acc.take();
}

SparseVec Augmentation::left(int a, int b, int c, std::size_t p, std::size_t u) const {
    const auto& catp = catpu->operad_category();
    auto fi = std::static_pointer_cast<const FunctionCategory>(catpu->left());
    if (c == 0) return b == 0 && a == 0 ? SparseVec::unit(0) : SparseVec{};
    auto [tau, slot] = catp->basis_decode(c, b - c, p);
    auto chain = catp->chain_decode(c, b - c, catp->free_chains(c, b - c)[slot]);
    VecBuilder acc;
    for (const auto& t : catp->push(c, chain, fi->maps(a, b)[u], &catpu->unit()))
        if (t.chain.empty()) acc.add(fi->maps(a, c).index(compose(tau, t.v)), t.coeff);
    return acc.take();
}

RationalMatrix Augmentation::right_matrix(int a, int b, int c, std::size_t u) const {
    const auto& catp = catpu->operad_category();
    std::vector<SparseVec> cols;
    for (std::size_t p = 0; p < catp->dim(b, c); ++p) cols.push_back(right(a, b, c, p, u));
    return RationalMatrix::from_columns(catp->dim(a, c), cols);
}

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

}  // namespace

Map basis_surjection(const QuadraticEngine& e, int m, int n, std::size_t i) {
    auto [tau, slot] = e.basis_decode(n, m - n, i);
    return compose(tau, chain_surjection(e, n, e.chain_decode(n, m - n, e.free_chains(n, m - n)[slot])));
}

BasisMap surjection_functor(EnginePtr catcom, std::shared_ptr<const FunctionCategory> fs) {
    return [catcom, fs](int a, int b, std::size_t i) {
        if (b == 0) return SparseVec::unit(0);
        return SparseVec::unit(fs->maps(a, b).index(basis_surjection(*catcom, a, b, i)));
    };
}

}  // namespace fbk
