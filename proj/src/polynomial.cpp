#include "mldeg/polynomial.hpp"
#include "mldeg/errors.hpp"

#include <algorithm>
#include <cassert>

namespace mldeg {

Polynomial Polynomial::constant(VarSetPtr vars, const Rational& c) {
    Polynomial f(std::move(vars));
    if (c != 0) f.terms_.emplace(Monomial(f.vars_->size()), c);
    return f;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index, std::uint32_t power) {
    Polynomial f(std::move(vars));
    if (index >= f.vars_->size())
        throw VariableMismatchError("variable index out of range");
    Monomial m(f.vars_->size());
    m.set_exponent(index, power);
    f.terms_.emplace(std::move(m), Rational(1));
    return f;
}

Polynomial Polynomial::term(VarSetPtr vars, Monomial m, const Rational& c) {
    Polynomial f(std::move(vars));
    if (m.nvars() != f.vars_->size())
        throw VariableMismatchError("monomial size does not match variable set");
    if (c != 0) f.terms_.emplace(std::move(m), c);
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
    if (terms_.empty()) return Rational(0);
    auto it = terms_.find(Monomial(vars_->size()));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Polynomial::require_same_vars(const Polynomial& g) const {
    if (!same_varset(vars_, g.vars_))
        throw VariableMismatchError("polynomials over different variable sets");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_vars(g);
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    require_same_vars(g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    require_same_vars(g);
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    require_same_vars(g);
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_vars(g);
    Polynomial r(vars_);
    if (terms_.empty() || g.terms_.empty()) return r;
    // Multiply the smaller operand into the larger.
    const Polynomial& a = terms_.size() <= g.terms_.size() ? *this : g;
    const Polynomial& b = terms_.size() <= g.terms_.size() ? g : *this;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = Polynomial::constant(vars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (!same_varset(vars_, g.vars_)) return false;
    return terms_ == g.terms_;
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
    if (var_index >= vars_->size())
        throw VariableMismatchError("derivative variable out of range");
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exponent(var_index);
        if (e == 0) continue;
        Monomial dm = m;
        dm.set_exponent(var_index, e - 1);
        r.add_term(dm, c * e);
    }
    return r;
}

Polynomial Polynomial::substitute(const VarSetPtr& target,
                                  const std::vector<Polynomial>& images) const {
    if (images.size() != vars_->size())
        throw VariableMismatchError("substitution must cover every variable");
    for (const auto& img : images)
        if (!same_varset(img.vars(), target))
            throw VariableMismatchError("substitution image over wrong variable set");

    // Cache powers of each image as needed.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto image_pow = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) {
            cache.push_back(Polynomial::constant(target, 1));
            cache.push_back(images[v]);
        }
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };

    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t v = 0; v < vars_->size(); ++v) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) continue;
            t = t * image_pow(v, e);
        }
        r += t;
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_->size())
        throw VariableMismatchError("evaluation point has wrong length");
    Rational r = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < point.size(); ++v) {
            std::uint32_t e = m.exponent(v);
            if (e) t *= rational_pow(point[v], e);
        }
        r += t;
    }
    return r;
}

std::complex<double> Polynomial::evaluate(const std::vector<std::complex<double>>& point) const {
    if (point.size() != vars_->size())
        throw VariableMismatchError("evaluation point has wrong length");
    std::complex<double> r{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        std::complex<double> t{to_double(c), 0.0};
        for (std::size_t v = 0; v < point.size(); ++v) {
            std::uint32_t e = m.exponent(v);
            if (e) t *= complex_pow(point[v], e);
        }
        r += t;
    }
    return r;
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    std::uint64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, Integer(c.get_num()));
        Integer d = c.get_den();
        Integer g = gcd(den_lcm, d);
        den_lcm = den_lcm / g * d;
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (content < 0) content = -content;
    return content;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    // Sign from the canonical-lex-largest term.
    const Rational& lead = terms_.rbegin()->second;
    if (lead < 0) c = -c;
    Polynomial r(vars_);
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef / c);
    return r;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
    assert(!terms_.empty());
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (order.greater(m, *best)) best = &m;
    return *best;
}

Rational Polynomial::leading_coefficient(const MonomialOrder& order) const {
    return terms_.at(leading_monomial(order));
}

std::vector<std::pair<Monomial, Rational>>
Polynomial::sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        return order.greater(a.first, b.first);
    });
    return ts;
}

bool Polynomial::free_of(std::size_t var_index) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(var_index) != 0) return false;
    return true;
}

Polynomial remap_variables(const Polynomial& f, const VarSetPtr& target,
                           const std::vector<std::size_t>& index_map) {
    Polynomial r(target);
    for (const auto& [m, c] : f.terms()) {
        Monomial t(target->size());
        for (std::size_t v = 0; v < index_map.size(); ++v) {
            if (m.exponent(v) != 0) t.set_exponent(index_map[v], m.exponent(v));
        }
        r.add_term(t, c);
    }
    return r;
}

Polynomial substitute_constant(const Polynomial& f, std::size_t var_index,
                               const Rational& value, const VarSetPtr& reduced) {
    if (reduced->size() + 1 != f.vars()->size())
        throw VariableMismatchError("reduced variable set has wrong size");
    Polynomial r(reduced);
    for (const auto& [m, c] : f.terms()) {
        Rational coef = c;
        std::uint32_t e = m.exponent(var_index);
        if (e) coef *= rational_pow(value, e);
        Monomial t(reduced->size());
        std::size_t j = 0;
        for (std::size_t v = 0; v < f.vars()->size(); ++v) {
            if (v == var_index) continue;
            t.set_exponent(j++, m.exponent(v));
        }
        r.add_term(t, coef);
    }
    return r;
}

} // namespace mldeg
