#pragma once

#include "mldeg/budget.hpp"
#include "mldeg/polynomial.hpp"

#include <map>
#include <memory>
#include <vector>

namespace mldeg {

// A Groebner basis for one ideal under one monomial order.  When `reduced`
// is set the elements are monic, inter-reduced and sorted by leading
// monomial; the reduced basis is unique for (ideal, order).
struct GroebnerBasis {
    VarSetPtr vars;
    MonomialOrder order;
    std::vector<Polynomial> elements;
    std::vector<Monomial> leads; // parallel to elements
    bool reduced = false;

    bool is_trivial() const; // contains a nonzero constant
};

using GBPtr = std::shared_ptr<const GroebnerBasis>;

// Generator list over one variable set, with per-order cached bases.
class Ideal {
public:
    Ideal() = default;
    Ideal(VarSetPtr vars, std::vector<Polynomial> gens);

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    // Reduced Groebner basis, computed on demand and cached per order.
    GBPtr groebner(const MonomialOrder& order, const ResourceBudget& budget) const;

private:
    VarSetPtr vars_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<std::map<std::string, GBPtr>> cache_;
};

// Multivariate division: remainder of f none of whose terms is divisible by
// a leading term of the basis; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Batch reducer: converts the basis to the internal form once.
class NormalFormContext {
public:
    explicit NormalFormContext(const GroebnerBasis& gb);
    ~NormalFormContext();
    NormalFormContext(NormalFormContext&&) noexcept;
    Polynomial reduce(const Polynomial& f) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

// (I : f^inf) via an auxiliary variable t with t*f - 1 and elimination of t.
Ideal saturate(const Ideal& ideal, const Polynomial& f, const ResourceBudget& budget);

// (I : J^inf) as the intersection of the single-generator saturations.
Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& j, const ResourceBudget& budget);

// I ∩ K via elimination of t from t*I + (1-t)*K.
Ideal intersect_ideals(const Ideal& a, const Ideal& b, const ResourceBudget& budget);

// I ∩ k[vars outside front]; generators of the result contain no front
// variable.  The result stays over the same variable set.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& front_vars,
                const ResourceBudget& budget);

// Rebuilds an ideal over only the named variables; every generator must be
// free of the dropped ones.
Ideal restrict_to_variables(const Ideal& ideal, const std::vector<std::string>& keep);

// Krull dimension of the affine variety (degrevlex initial ideal,
// maximal independent variable sets).  -1 for the unit ideal.
int affine_dimension(const Ideal& ideal, const ResourceBudget& budget);

// Codimension in P^ambient for a homogeneous ideal.
int projective_codimension(const Ideal& ideal, std::size_t ambient,
                           const ResourceBudget& budget);

bool is_zero_dimensional(const Ideal& ideal, const ResourceBudget& budget);

// Monomials outside the leading-term ideal; throws NotZeroDimensionalError
// when the staircase is infinite.
std::vector<Monomial> quotient_basis(const Ideal& ideal, const MonomialOrder& order,
                                     const ResourceBudget& budget);

// Vector-space dimension of the quotient ring = number of standard monomials.
std::size_t degree_zero_dim(const Ideal& ideal, const ResourceBudget& budget);

bool ideal_contains(const Ideal& ideal, const Polynomial& f, const ResourceBudget& budget);
bool ideal_equal(const Ideal& a, const Ideal& b, const ResourceBudget& budget);

// Inter-reduces a generator list (ideal unchanged): drops zeros and
// generators reducible to zero by the others, reduces tails.
std::vector<Polynomial> reduce_generators(std::vector<Polynomial> gens,
                                          const MonomialOrder& order,
                                          const ResourceBudget& budget);

} // namespace mldeg
