#pragma once

#include <cstdint>
#include <vector>

namespace mldeg {

// Exponent vector over a fixed variable set, with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    std::uint64_t degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    void set_exponent(std::size_t i, std::uint32_t e);

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    // Requires divides(other) on (this | other) as documented per call site.
    Monomial divide_by(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    // Plain lexicographic comparison on exponent vectors; the canonical
    // container order for term maps, independent of any monomial order.
    bool lex_less(const Monomial& other) const { return exps_ < other.exps_; }

    const std::vector<std::uint32_t>& exponents() const { return exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

struct MonomialLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.lex_less(b); }
};

} // namespace mldeg
