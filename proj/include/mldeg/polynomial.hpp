#pragma once

#include "mldeg/monomial.hpp"
#include "mldeg/order.hpp"
#include "mldeg/rational.hpp"
#include "mldeg/variables.hpp"

#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace mldeg {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in a canonical map (plain lex on exponent vectors) with no
// zero coefficients, so two polynomials are equal iff their term maps are.
// Orders for leading-term work are applied per operation, not stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLexLess>;

    Polynomial() = default;
    explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Polynomial zero(VarSetPtr vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(VarSetPtr vars, const Rational& c);
    static Polynomial variable(VarSetPtr vars, std::size_t index, std::uint32_t power = 1);
    static Polynomial term(VarSetPtr vars, Monomial m, const Rational& c);

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const;
    // The coefficient of the unit monomial (zero if absent).
    Rational constant_term() const;

    std::uint64_t total_degree() const; // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(std::uint32_t e) const;

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    Polynomial derivative(std::size_t var_index) const;

    // Total substitution: images[i] replaces variable i; every image is a
    // polynomial over `target`.  Ring homomorphism.
    Polynomial substitute(const VarSetPtr& target,
                          const std::vector<Polynomial>& images) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

    // True iff all terms share one total degree; returns that degree.
    // The zero polynomial counts as homogeneous of degree 0.
    std::optional<std::uint64_t> homogeneous_degree() const;

    // gcd of all coefficients as a positive rational (content); zero for 0.
    Rational content() const;
    // this / content, with sign chosen so the canonical-lex-largest term is
    // positive.  Zero stays zero.
    Polynomial primitive_part() const;

    // Leading data under an order (scans the term map).
    const Monomial& leading_monomial(const MonomialOrder& order) const;
    Rational leading_coefficient(const MonomialOrder& order) const;

    // Terms sorted descending under `order`.
    std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const;

    // Mutating primitive used by arithmetic; keeps canonical form.
    void add_term(const Monomial& m, const Rational& c);

    // True if no term uses the given variable.
    bool free_of(std::size_t var_index) const;

private:
    void require_same_vars(const Polynomial& g) const;

    VarSetPtr vars_;
    TermMap terms_;
};

// Helpers used across the library.

// Rebuilds f over `target`; index_map[i] gives the target slot of source
// variable i.
Polynomial remap_variables(const Polynomial& f, const VarSetPtr& target,
                           const std::vector<std::size_t>& index_map);

// Substitutes an exact constant for one variable, returning a polynomial
// over the reduced variable set (the variable is dropped).
Polynomial substitute_constant(const Polynomial& f, std::size_t var_index,
                               const Rational& value, const VarSetPtr& reduced);

} // namespace mldeg
