#pragma once

#include "mldeg/monomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mldeg {

// Total orders on monomials compatible with multiplication.  block_elim
// compares the front block first (graded reverse lexicographic within each
// block), so a leading term free of front variables certifies the whole
// polynomial is.
class MonomialOrder {
public:
    enum class Kind { lex, degrevlex, block_elim };

    static MonomialOrder lex();
    static MonomialOrder degrevlex();
    // front[i] == true marks variable i as eliminated (compared first).
    static MonomialOrder block_elim(std::vector<bool> front);

    Kind kind() const { return kind_; }
    const std::vector<bool>& front_mask() const { return front_; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // Stable identity for caching.
    std::string cache_key() const;

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && front_ == o.front_;
    }

private:
    Kind kind_ = Kind::degrevlex;
    std::vector<bool> front_;
};

} // namespace mldeg
