#include "mldeg/ideal.hpp"
#include "mldeg/errors.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

namespace mldeg {

namespace {

// ---------------------------------------------------------------------------
// Internal representation: primitive integer polynomials with terms sorted
// descending under the active order.  All Buchberger-level arithmetic is
// fraction-free; rational results are recovered by tracking the scaling.
// ---------------------------------------------------------------------------

struct IPoly {
    std::vector<Monomial> mons;
    std::vector<Integer> coefs;
    std::uint64_t sugar = 0;

    bool empty() const { return mons.empty(); }
    std::size_t size() const { return mons.size(); }
    const Monomial& lm() const { return mons.front(); }
    const Integer& lc() const { return coefs.front(); }
};

struct Ctx {
    MonomialOrder order;
    ResourceBudget budget;
    std::size_t reductions = 0;

    Ctx(const MonomialOrder& o, const ResourceBudget& b) : order(o), budget(b) {}

    void step(const char* where) {
        ++reductions;
        if ((reductions & 0xfff) == 0) budget.check_deadline(where);
        if (budget.max_reductions && reductions > budget.max_reductions)
            throw ResourceLimitError(std::string("reduction budget exceeded in ") + where);
    }
};

void make_primitive(IPoly& f) {
    if (f.empty()) return;
    Integer g = 0;
    for (const auto& c : f.coefs) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    if (g == 0) return;
    if (sgn(f.coefs.front()) < 0) g = -g;
    if (g != 1)
        for (auto& c : f.coefs) c /= g;
}

void check_coeff_bits(const IPoly& f, const ResourceBudget& budget) {
    if (!budget.max_coeff_bits || f.empty()) return;
    std::size_t bits = mpz_sizeinbase(f.lc().get_mpz_t(), 2);
    if (bits > budget.max_coeff_bits)
        throw ResourceLimitError("coefficient bit budget exceeded (" +
                                 std::to_string(bits) + " bits)");
}

// Integer image f*den sorted under the active order; den_out (when given)
// receives the denominator lcm.  Primitive normalization is the caller's
// choice.
IPoly from_poly_scaled(const Polynomial& f, const Ctx& ctx, Integer* den_out) {
    IPoly r;
    if (den_out) *den_out = 1;
    if (f.is_zero()) return r;
    std::vector<Rational> coefs;
    coefs.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) coefs.push_back(c);
    Integer den = denominator_lcm(coefs);
    if (den_out) *den_out = den;

    std::vector<std::pair<Monomial, Integer>> terms;
    terms.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) {
        Rational scaled = c * den;
        terms.emplace_back(m, Integer(scaled.get_num()));
    }
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return ctx.order.greater(a.first, b.first);
    });
    r.mons.reserve(terms.size());
    r.coefs.reserve(terms.size());
    for (auto& [m, c] : terms) {
        r.mons.push_back(std::move(m));
        r.coefs.push_back(std::move(c));
    }
    r.sugar = 0;
    for (const auto& m : r.mons) r.sugar = std::max<std::uint64_t>(r.sugar, m.degree());
    return r;
}

IPoly from_poly(const Polynomial& f, const Ctx& ctx) {
    IPoly r = from_poly_scaled(f, ctx, nullptr);
    make_primitive(r);
    return r;
}

Polynomial to_poly(const IPoly& f, const VarSetPtr& vars, const Integer& denom = 1) {
    Polynomial r(vars);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Rational c(f.coefs[i], denom);
        c.canonicalize();
        r.add_term(f.mons[i], c);
    }
    return r;
}

// a*f[f_from..] + b*(m * g[g_from..]), merged under the active order.
IPoly linear_combine(const IPoly& f, std::size_t f_from, const Integer& a,
                     const IPoly& g, std::size_t g_from, const Integer& b,
                     const Monomial& m, const Ctx& ctx, std::uint64_t sugar) {
    IPoly r;
    r.sugar = sugar;
    r.mons.reserve((f.size() - f_from) + (g.size() - g_from));
    r.coefs.reserve(r.mons.capacity());
    std::size_t i = f_from, j = g_from;
    Monomial gm;
    bool gm_valid = false;
    while (i < f.size() || j < g.size()) {
        int cmp;
        if (i >= f.size()) {
            cmp = -1;
        } else if (j >= g.size()) {
            cmp = 1;
        } else {
            if (!gm_valid) {
                gm = g.mons[j] * m;
                gm_valid = true;
            }
            cmp = ctx.order.compare(f.mons[i], gm);
        }
        if (cmp > 0) {
            Integer c = a * f.coefs[i];
            if (c != 0) {
                r.mons.push_back(f.mons[i]);
                r.coefs.push_back(std::move(c));
            }
            ++i;
        } else if (cmp < 0) {
            if (!gm_valid) {
                gm = g.mons[j] * m;
            }
            Integer c = b * g.coefs[j];
            if (c != 0) {
                r.mons.push_back(std::move(gm));
                r.coefs.push_back(std::move(c));
            }
            gm_valid = false;
            ++j;
        } else {
            Integer c = a * f.coefs[i] + b * g.coefs[j];
            if (c != 0) {
                r.mons.push_back(f.mons[i]);
                r.coefs.push_back(std::move(c));
            }
            gm_valid = false;
            ++i;
            ++j;
        }
    }
    return r;
}

// Full normal form of f against the divisor list.  `active` (when given)
// masks which list entries may be used.  If sigma is non-null it receives
// the positive integer s with s*f ≡ result modulo the ideal of the list.
IPoly normal_form_ipoly(IPoly f, const std::vector<IPoly>& basis,
                        const std::vector<char>* active, Ctx& ctx,
                        Integer* sigma_out = nullptr) {
    IPoly rem;
    rem.sugar = f.sugar;
    Integer sigma = 1;
    std::size_t pos = 0;
    while (pos < f.size()) {
        ctx.step("normal form");
        const Monomial& t = f.mons[pos];
        std::size_t chosen = basis.size();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (active && !(*active)[k]) continue;
            if (basis[k].empty()) continue;
            if (basis[k].lm().divides(t)) {
                chosen = k;
                break;
            }
        }
        if (chosen == basis.size()) {
            rem.mons.push_back(f.mons[pos]);
            rem.coefs.push_back(f.coefs[pos]);
            ++pos;
            continue;
        }
        const IPoly& g = basis[chosen];
        Monomial shift = t.divide_by(g.lm());
        Integer gc = gcd(f.coefs[pos], g.lc());
        Integer a = g.lc() / gc;  // scales f
        Integer b = f.coefs[pos] / gc;
        if (sgn(a) < 0) {
            a = -a;
            b = -b;
        }
        if (a != 1) {
            for (auto& c : rem.coefs) c *= a;
            sigma *= a;
        }
        std::uint64_t sugar =
            std::max(f.sugar, g.sugar + shift.degree());
        f = linear_combine(f, pos + 1, a, g, 1, -b, shift, ctx, sugar);
        pos = 0;
        check_coeff_bits(f, ctx.budget);
    }
    rem.sugar = std::max(rem.sugar, f.sugar);
    if (sigma_out) {
        *sigma_out = sigma;
    }
    return rem;
}

IPoly s_poly_ipoly(const IPoly& f, const IPoly& g, const Ctx& ctx) {
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    Monomial mf = l.divide_by(f.lm());
    Monomial mg = l.divide_by(g.lm());
    Integer gc = gcd(f.lc(), g.lc());
    Integer a = g.lc() / gc;
    Integer b = f.lc() / gc;
    std::uint64_t sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
    // a*mf*f - b*mg*g with the leads cancelling.
    IPoly fm;
    fm.mons.reserve(f.size());
    fm.coefs = f.coefs;
    for (const auto& m : f.mons) fm.mons.push_back(m * mf);
    fm.sugar = f.sugar + mf.degree();
    return linear_combine(fm, 1, a, g, 1, -b, mg, ctx, sugar);
}

struct PairRec {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const PairRec& a, const PairRec& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

// Pair update with the standard elimination criteria: multiples of other
// new pairs are dropped, equal-lcm duplicates keep one representative
// (none when a coprime representative exists), old pairs covered by the
// chain criterion are removed.
void update_pairs(std::set<PairRec, PairLess>& pairs, std::vector<IPoly>& basis,
                  std::vector<char>& redundant, std::uint32_t t) {
    const IPoly& h = basis[t];
    struct Cand {
        std::uint32_t i;
        Monomial lcm;
        bool coprime;
        bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::uint32_t i = 0; i < t; ++i) {
        if (redundant[i] || basis[i].empty()) continue;
        cands.push_back({i, Monomial::lcm(basis[i].lm(), h.lm()),
                         Monomial::coprime(basis[i].lm(), h.lm())});
    }

    // Chain criterion against old pairs.
    for (auto it = pairs.begin(); it != pairs.end();) {
        if (h.lm().divides(it->lcm) &&
            Monomial::lcm(basis[it->i].lm(), h.lm()) != it->lcm &&
            Monomial::lcm(basis[it->j].lm(), h.lm()) != it->lcm) {
            it = pairs.erase(it);
        } else {
            ++it;
        }
    }

    // Proper-divisor criterion among the new pairs.
    for (auto& a : cands) {
        for (const auto& b : cands) {
            if (&a == &b || !b.keep) continue;
            if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
                a.keep = false;
                break;
            }
        }
    }
    // Equal-lcm classes: drop the whole class if any member is coprime,
    // otherwise keep the member with the smallest index.
    for (auto& a : cands) {
        if (!a.keep) continue;
        bool class_coprime = a.coprime;
        for (const auto& b : cands) {
            if (!b.keep || &a == &b || b.lcm != a.lcm) continue;
            class_coprime = class_coprime || b.coprime;
        }
        if (class_coprime) {
            for (auto& b : cands)
                if (b.keep && b.lcm == a.lcm) b.keep = false;
            continue;
        }
        for (auto& b : cands) {
            if (&a == &b || !b.keep || b.lcm != a.lcm) continue;
            if (b.i > a.i) b.keep = false;
        }
    }

    for (const auto& c : cands) {
        if (!c.keep) continue;
        const IPoly& g = basis[c.i];
        std::uint64_t sugar = std::max(g.sugar + c.lcm.degree() - g.lm().degree(),
                                       h.sugar + c.lcm.degree() - h.lm().degree());
        pairs.insert(PairRec{c.i, t, c.lcm, sugar});
    }

    // Elements whose lead became divisible stop spawning pairs; they stay
    // available as reducers.
    for (std::uint32_t i = 0; i < t; ++i) {
        if (redundant[i] || basis[i].empty()) continue;
        if (h.lm().divides(basis[i].lm())) redundant[i] = true;
    }
}

std::vector<IPoly> buchberger_ipoly(std::vector<IPoly> input, Ctx& ctx) {
    std::vector<IPoly> basis;
    std::vector<char> redundant;
    PairLess less{&ctx.order};
    std::set<PairRec, PairLess> pairs(less);

    // Deterministic input order: ascending leading monomial, then size.
    std::sort(input.begin(), input.end(), [&](const IPoly& a, const IPoly& b) {
        int c = ctx.order.compare(a.lm(), b.lm());
        if (c != 0) return c < 0;
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t k = 0; k < a.size(); ++k) {
            int mc = ctx.order.compare(a.mons[k], b.mons[k]);
            if (mc != 0) return mc < 0;
            if (a.coefs[k] != b.coefs[k]) return a.coefs[k] < b.coefs[k];
        }
        return false;
    });
    input.erase(std::unique(input.begin(), input.end(),
                            [](const IPoly& a, const IPoly& b) {
                                return a.mons == b.mons && a.coefs == b.coefs;
                            }),
                input.end());

    for (auto& f : input) {
        IPoly r = normal_form_ipoly(std::move(f), basis, nullptr, ctx);
        if (r.empty()) continue;
        make_primitive(r);
        basis.push_back(std::move(r));
        redundant.push_back(false);
        update_pairs(pairs, basis, redundant, static_cast<std::uint32_t>(basis.size() - 1));
    }

    while (!pairs.empty()) {
        ctx.budget.check_deadline("buchberger");
        if (ctx.budget.max_basis && basis.size() > ctx.budget.max_basis)
            throw ResourceLimitError("basis size budget exceeded (" +
                                     std::to_string(basis.size()) + ")");
        PairRec p = *pairs.begin();
        pairs.erase(pairs.begin());
        IPoly s = s_poly_ipoly(basis[p.i], basis[p.j], ctx);
        if (s.empty()) continue;
        IPoly r = normal_form_ipoly(std::move(s), basis, nullptr, ctx);
        if (r.empty()) continue;
        make_primitive(r);
        check_coeff_bits(r, ctx.budget);
        basis.push_back(std::move(r));
        redundant.push_back(false);
        update_pairs(pairs, basis, redundant, static_cast<std::uint32_t>(basis.size() - 1));
    }

    // Minimal basis: drop elements whose lead is divisible by another lead.
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (basis[j].lm().divides(basis[i].lm()) &&
                (basis[j].lm() != basis[i].lm() || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<IPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    std::sort(minimal.begin(), minimal.end(), [&](const IPoly& a, const IPoly& b) {
        return ctx.order.less(a.lm(), b.lm());
    });

    // Tail reduction to the unique reduced basis.
    std::vector<char> mask(minimal.size(), 1);
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        mask[i] = 0;
        IPoly r = normal_form_ipoly(minimal[i], minimal, &mask, ctx);
        make_primitive(r);
        minimal[i] = std::move(r);
        mask[i] = 1;
    }
    return minimal;
}

GBPtr make_gb(const VarSetPtr& vars, const MonomialOrder& order,
              std::vector<IPoly> elements) {
    auto gb = std::make_shared<GroebnerBasis>();
    gb->vars = vars;
    gb->order = order;
    gb->reduced = true;
    for (const auto& e : elements) {
        // Monic normalization over the rationals.
        Polynomial p = to_poly(e, vars, e.lc());
        gb->leads.push_back(e.lm());
        gb->elements.push_back(std::move(p));
    }
    return gb;
}

std::vector<IPoly> gb_to_ipolys(const GroebnerBasis& gb, const Ctx& ctx) {
    std::vector<IPoly> out;
    out.reserve(gb.elements.size());
    for (const auto& e : gb.elements) out.push_back(from_poly(e, ctx));
    return out;
}

// Shared helper: extends an ideal by one fresh variable, mapping existing
// generators up and appending extra generators supplied by the caller.
struct ExtendedRing {
    VarSetPtr vars;
    std::size_t aux_index;
    std::vector<std::size_t> index_map; // old index -> new index
};

ExtendedRing extend_with_aux(const VariableSet& vars, const std::string& base) {
    std::vector<std::string> names = vars.names();
    names.push_back(fresh_name(vars, base));
    ExtendedRing ext;
    ext.vars = make_varset(std::move(names));
    ext.aux_index = vars.size();
    ext.index_map.resize(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) ext.index_map[i] = i;
    return ext;
}

Ideal eliminate_aux_and_restrict(const Ideal& extended, std::size_t aux_index,
                                 const VarSetPtr& original,
                                 const ResourceBudget& budget) {
    Ideal elim = eliminate(extended, {aux_index}, budget);
    std::vector<Polynomial> gens;
    std::vector<std::size_t> index_map(extended.vars()->size());
    for (std::size_t i = 0; i < original->size(); ++i) index_map[i] = i;
    for (const auto& g : elim.gens()) {
        assert(g.free_of(aux_index));
        gens.push_back(remap_variables(g, original, index_map));
    }
    return Ideal(original, std::move(gens));
}

} // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

bool GroebnerBasis::is_trivial() const {
    for (const auto& e : elements)
        if (!e.is_zero() && e.is_constant()) return true;
    return false;
}

Ideal::Ideal(VarSetPtr vars, std::vector<Polynomial> gens)
    : vars_(std::move(vars)),
      cache_(std::make_shared<std::map<std::string, GBPtr>>()) {
    for (auto& g : gens) {
        if (!same_varset(g.vars(), vars_))
            throw VariableMismatchError("generator over wrong variable set");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

GBPtr Ideal::groebner(const MonomialOrder& order, const ResourceBudget& budget) const {
    if (!vars_) throw Error("uninitialized ideal");
    std::string key = order.cache_key();
    if (cache_) {
        auto it = cache_->find(key);
        if (it != cache_->end()) return it->second;
    }
    Ctx ctx(order, budget);
    std::vector<IPoly> input;
    input.reserve(gens_.size());
    for (const auto& g : gens_) input.push_back(from_poly(g, ctx));
    GBPtr gb = make_gb(vars_, order, buchberger_ipoly(std::move(input), ctx));
    if (cache_) (*cache_)[key] = gb;
    return gb;
}

struct NormalFormContext::Impl {
    VarSetPtr vars;
    Ctx ctx;
    std::vector<IPoly> basis;

    Impl(const GroebnerBasis& gb, const ResourceBudget& budget)
        : vars(gb.vars), ctx(gb.order, budget), basis(gb_to_ipolys(gb, ctx)) {}
};

NormalFormContext::NormalFormContext(const GroebnerBasis& gb)
    : impl_(std::make_unique<Impl>(gb, ResourceBudget{})) {}

NormalFormContext::~NormalFormContext() = default;
NormalFormContext::NormalFormContext(NormalFormContext&&) noexcept = default;

Polynomial NormalFormContext::reduce(const Polynomial& f) const {
    if (!same_varset(f.vars(), impl_->vars))
        throw VariableMismatchError("normal form: wrong variable set");
    if (f.is_zero()) return f;
    // Reduction is linear, so NF(f) = NF(f*den) / (den*sigma).
    Integer den = 1;
    IPoly fi = from_poly_scaled(f, impl_->ctx, &den);
    Integer sigma = 1;
    IPoly r = normal_form_ipoly(std::move(fi), impl_->basis, nullptr,
                                impl_->ctx, &sigma);
    return to_poly(r, impl_->vars, den * sigma);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    NormalFormContext ctx(gb);
    return ctx.reduce(f);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
    if (!same_varset(f.vars(), g.vars()))
        throw VariableMismatchError("s-polynomial: variable sets differ");
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.vars());
    Ctx ctx(order, ResourceBudget{});
    IPoly s = s_poly_ipoly(from_poly(f, ctx), from_poly(g, ctx), ctx);
    make_primitive(s);
    return to_poly(s, f.vars());
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!same_varset(a.vars(), b.vars()))
        throw VariableMismatchError("ideal sum: variable sets differ");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.vars(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!same_varset(a.vars(), b.vars()))
        throw VariableMismatchError("ideal product: variable sets differ");
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) {
            Polynomial p = f * g;
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
    return Ideal(a.vars(), std::move(gens));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f, const ResourceBudget& budget) {
    if (f.is_zero()) throw Error("saturation by the zero polynomial");
    if (!same_varset(f.vars(), ideal.vars()))
        throw VariableMismatchError("saturate: variable sets differ");
    if (f.is_constant()) return ideal;
    if (!ideal.has_generators()) return ideal;

    ExtendedRing ext = extend_with_aux(*ideal.vars(), "t");
    std::vector<Polynomial> gens;
    gens.reserve(ideal.gens().size() + 1);
    for (const auto& g : ideal.gens())
        gens.push_back(remap_variables(g, ext.vars, ext.index_map));
    Polynomial tf = remap_variables(f, ext.vars, ext.index_map) *
                    Polynomial::variable(ext.vars, ext.aux_index);
    gens.push_back(tf - Polynomial::constant(ext.vars, 1));

    Ideal extended(ext.vars, std::move(gens));
    return eliminate_aux_and_restrict(extended, ext.aux_index, ideal.vars(), budget);
}

Ideal intersect_ideals(const Ideal& a, const Ideal& b, const ResourceBudget& budget) {
    if (!same_varset(a.vars(), b.vars()))
        throw VariableMismatchError("intersect: variable sets differ");
    if (!a.has_generators() || !b.has_generators())
        return Ideal(a.vars(), {}); // intersection with the zero ideal
    ExtendedRing ext = extend_with_aux(*a.vars(), "t");
    Polynomial t = Polynomial::variable(ext.vars, ext.aux_index);
    Polynomial one_minus_t = Polynomial::constant(ext.vars, 1) - t;
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size() + b.gens().size());
    for (const auto& g : a.gens())
        gens.push_back(remap_variables(g, ext.vars, ext.index_map) * t);
    for (const auto& g : b.gens())
        gens.push_back(remap_variables(g, ext.vars, ext.index_map) * one_minus_t);
    Ideal extended(ext.vars, std::move(gens));
    return eliminate_aux_and_restrict(extended, ext.aux_index, a.vars(), budget);
}

Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& j, const ResourceBudget& budget) {
    if (!same_varset(ideal.vars(), j.vars()))
        throw VariableMismatchError("saturate_by_ideal: variable sets differ");
    if (!j.has_generators()) throw Error("saturation by the zero ideal");

    // Any generating set of J gives the same saturation; shrink it first.
    std::vector<Polynomial> gens =
        reduce_generators(j.gens(), MonomialOrder::degrevlex(), budget);
    // A unit generator makes the saturation trivial: (I : R^inf) = I.
    for (const auto& g : gens)
        if (g.is_constant() && !g.is_zero()) return ideal;
    if (gens.empty()) throw Error("saturation by the zero ideal");

    Ideal result = saturate(ideal, gens[0], budget);
    for (std::size_t k = 1; k < gens.size(); ++k) {
        Ideal sk = saturate(ideal, gens[k], budget);
        result = intersect_ideals(result, sk, budget);
    }
    return result;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& front_vars,
                const ResourceBudget& budget) {
    std::vector<bool> front(ideal.vars()->size(), false);
    for (auto v : front_vars) {
        if (v >= front.size()) throw VariableMismatchError("eliminate: bad variable index");
        front[v] = true;
    }
    MonomialOrder order = MonomialOrder::block_elim(front);
    GBPtr gb = ideal.groebner(order, budget);
    std::vector<Polynomial> kept;
    for (const auto& e : gb->elements) {
        bool free = true;
        for (std::size_t v = 0; v < front.size() && free; ++v)
            if (front[v] && !e.free_of(v)) free = false;
        if (free) kept.push_back(e);
    }
    return Ideal(ideal.vars(), std::move(kept));
}

Ideal restrict_to_variables(const Ideal& ideal, const std::vector<std::string>& keep) {
    VarSetPtr target = make_varset(keep);
    std::vector<std::size_t> index_map(ideal.vars()->size(),
                                       std::numeric_limits<std::size_t>::max());
    std::vector<bool> kept(ideal.vars()->size(), false);
    for (std::size_t i = 0; i < ideal.vars()->size(); ++i) {
        auto idx = target->find(ideal.vars()->name(i));
        if (idx) {
            index_map[i] = *idx;
            kept[i] = true;
        }
    }
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.gens()) {
        for (std::size_t v = 0; v < kept.size(); ++v)
            if (!kept[v] && !g.free_of(v))
                throw VariableMismatchError(
                    "restrict_to_variables: generator uses dropped variable " +
                    ideal.vars()->name(v));
        Polynomial h(target);
        for (const auto& [m, c] : g.terms()) {
            Monomial t(target->size());
            for (std::size_t v = 0; v < kept.size(); ++v)
                if (m.exponent(v)) t.set_exponent(index_map[v], m.exponent(v));
            h.add_term(t, c);
        }
        gens.push_back(std::move(h));
    }
    return Ideal(target, std::move(gens));
}

namespace {

// True when no leading monomial is supported entirely inside `chosen`.
bool independent(const std::vector<Monomial>& leads, const std::vector<bool>& chosen) {
    for (const auto& m : leads) {
        bool inside = true;
        for (std::size_t v = 0; v < chosen.size() && inside; ++v)
            if (m.exponent(v) != 0 && !chosen[v]) inside = false;
        if (inside) return false;
    }
    return true;
}

void max_independent(const std::vector<Monomial>& leads, std::vector<bool>& chosen,
                     std::size_t from, std::size_t count, std::size_t& best) {
    best = std::max(best, count);
    std::size_t n = chosen.size();
    if (count + (n - from) <= best) return;
    for (std::size_t v = from; v < n; ++v) {
        chosen[v] = true;
        if (independent(leads, chosen))
            max_independent(leads, chosen, v + 1, count + 1, best);
        chosen[v] = false;
    }
}

} // namespace

int affine_dimension(const Ideal& ideal, const ResourceBudget& budget) {
    if (!ideal.has_generators())
        return static_cast<int>(ideal.vars()->size());
    GBPtr gb = ideal.groebner(MonomialOrder::degrevlex(), budget);
    if (gb->is_trivial()) return -1;
    std::vector<bool> chosen(ideal.vars()->size(), false);
    std::size_t best = 0;
    max_independent(gb->leads, chosen, 0, 0, best);
    return static_cast<int>(best);
}

int projective_codimension(const Ideal& ideal, std::size_t ambient,
                           const ResourceBudget& budget) {
    for (const auto& g : ideal.gens())
        if (!g.homogeneous_degree())
            throw Error("projective codimension requires homogeneous generators");
    int adim = affine_dimension(ideal, budget);
    if (adim <= 0) return static_cast<int>(ambient) + 1; // empty or origin only
    return static_cast<int>(ambient) - (adim - 1);
}

std::vector<Monomial> quotient_basis(const Ideal& ideal, const MonomialOrder& order,
                                     const ResourceBudget& budget) {
    GBPtr gb = ideal.groebner(order, budget);
    std::size_t n = ideal.vars()->size();
    if (gb->is_trivial()) return {};
    const auto& leads = gb->leads;

    // Zero-dimensional iff every variable appears as a pure power among the
    // leading terms.
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = false;
        for (const auto& m : leads) {
            if (m.exponent(v) == 0) continue;
            bool only_v = true;
            for (std::size_t w = 0; w < n && only_v; ++w)
                if (w != v && m.exponent(w) != 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure)
            throw NotZeroDimensionalError("ideal is not zero-dimensional: variable " +
                                          ideal.vars()->name(v) +
                                          " has no pure-power leading term");
    }

    auto standard = [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m)) return false;
        return true;
    };

    // The standard monomials form a divisor-closed set; enumerate each once
    // via its canonical parent (divide by the smallest-index variable).
    std::vector<Monomial> out;
    std::vector<Monomial> frontier{Monomial(n)};
    const std::size_t hard_cap = 2000000;
    while (!frontier.empty()) {
        Monomial m = std::move(frontier.back());
        frontier.pop_back();
        out.push_back(m);
        if (out.size() > hard_cap)
            throw ResourceLimitError("quotient basis exceeds hard cap");
        std::size_t min_nonzero = n;
        for (std::size_t v = 0; v < n; ++v)
            if (m.exponent(v) != 0) {
                min_nonzero = v;
                break;
            }
        for (std::size_t v = 0; v <= std::min(min_nonzero, n - 1); ++v) {
            Monomial child = m;
            child.set_exponent(v, child.exponent(v) + 1);
            if (standard(child)) frontier.push_back(std::move(child));
        }
        budget.check_deadline("quotient basis");
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return order.less(a, b);
    });
    return out;
}

std::size_t degree_zero_dim(const Ideal& ideal, const ResourceBudget& budget) {
    return quotient_basis(ideal, MonomialOrder::degrevlex(), budget).size();
}

bool is_zero_dimensional(const Ideal& ideal, const ResourceBudget& budget) {
    GBPtr gb = ideal.groebner(MonomialOrder::degrevlex(), budget);
    if (gb->is_trivial()) return true; // empty variety
    std::size_t n = ideal.vars()->size();
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = false;
        for (const auto& m : gb->leads) {
            if (m.exponent(v) == 0) continue;
            bool only_v = true;
            for (std::size_t w = 0; w < n && only_v; ++w)
                if (w != v && m.exponent(w) != 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

bool ideal_contains(const Ideal& ideal, const Polynomial& f, const ResourceBudget& budget) {
    if (f.is_zero()) return true;
    if (!ideal.has_generators()) return false;
    GBPtr gb = ideal.groebner(MonomialOrder::degrevlex(), budget);
    return normal_form(f, *gb).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const ResourceBudget& budget) {
    if (!same_varset(a.vars(), b.vars())) return false;
    GBPtr ga = a.groebner(MonomialOrder::degrevlex(), budget);
    GBPtr gb = b.groebner(MonomialOrder::degrevlex(), budget);
    if (ga->elements.size() != gb->elements.size()) return false;
    for (std::size_t i = 0; i < ga->elements.size(); ++i)
        if (ga->elements[i] != gb->elements[i]) return false;
    return true;
}

std::vector<Polynomial> reduce_generators(std::vector<Polynomial> gens,
                                          const MonomialOrder& order,
                                          const ResourceBudget& budget) {
    if (gens.empty()) return gens;
    VarSetPtr vars = gens.front().vars();
    Ctx ctx(order, budget);
    std::vector<IPoly> list;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        list.push_back(from_poly(g, ctx));
    }
    // Deterministic order: ascending lead, then fewer terms first.
    std::sort(list.begin(), list.end(), [&](const IPoly& a, const IPoly& b) {
        int c = ctx.order.compare(a.lm(), b.lm());
        if (c != 0) return c < 0;
        return a.size() < b.size();
    });

    bool changed = true;
    int passes = 0;
    while (changed && passes < 4) {
        changed = false;
        ++passes;
        std::vector<char> mask(list.size(), 1);
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i].empty()) continue;
            mask[i] = 0;
            IPoly r = normal_form_ipoly(list[i], list, &mask, ctx);
            make_primitive(r);
            if (r.mons != list[i].mons || r.coefs != list[i].coefs) changed = true;
            list[i] = std::move(r);
            mask[i] = 1;
        }
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [](const IPoly& f) { return f.empty(); }),
                   list.end());
    }
    std::vector<Polynomial> out;
    out.reserve(list.size());
    for (const auto& f : list) out.push_back(to_poly(f, vars));
    return out;
}

} // namespace mldeg
