#include "mldeg/order.hpp"

#include <cassert>

namespace mldeg {

MonomialOrder MonomialOrder::lex() {
    MonomialOrder o;
    o.kind_ = Kind::lex;
    return o;
}

MonomialOrder MonomialOrder::degrevlex() {
    MonomialOrder o;
    o.kind_ = Kind::degrevlex;
    return o;
}

MonomialOrder MonomialOrder::block_elim(std::vector<bool> front) {
    MonomialOrder o;
    o.kind_ = Kind::block_elim;
    o.front_ = std::move(front);
    return o;
}

static int compare_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? -1 : 1;
    }
    return 0;
}

static int compare_degrevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    // Equal degree: the monomial with the smaller trailing exponent
    // difference wins; scan from the last variable.
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
}

// degrevlex restricted to the variables selected by mask (value = sel).
static int compare_degrevlex_masked(const Monomial& a, const Monomial& b,
                                    const std::vector<bool>& mask, bool sel) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (mask[i] == sel) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (mask[i] == sel && a.exponent(i) != b.exponent(i))
            return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    assert(a.nvars() == b.nvars());
    switch (kind_) {
    case Kind::lex:
        return compare_lex(a, b);
    case Kind::degrevlex:
        return compare_degrevlex(a, b);
    case Kind::block_elim: {
        assert(front_.size() == a.nvars());
        int c = compare_degrevlex_masked(a, b, front_, true);
        if (c != 0) return c;
        return compare_degrevlex_masked(a, b, front_, false);
    }
    }
    return 0;
}

std::string MonomialOrder::cache_key() const {
    switch (kind_) {
    case Kind::lex:
        return "lex";
    case Kind::degrevlex:
        return "degrevlex";
    case Kind::block_elim: {
        std::string k = "block:";
        for (bool f : front_) k += f ? '1' : '0';
        return k;
    }
    }
    return "?";
}

} // namespace mldeg
