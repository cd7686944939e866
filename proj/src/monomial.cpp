#include "mldeg/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace mldeg {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
}

void Monomial::set_exponent(std::size_t i, std::uint32_t e) {
    degree_ -= exps_[i];
    exps_[i] = e;
    degree_ += e;
}

Monomial Monomial::operator*(const Monomial& other) const {
    assert(exps_.size() == other.exps_.size());
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = exps_[i] + other.exps_[i];
    r.degree_ = degree_ + other.degree_;
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& other) const {
    assert(other.divides(*this));
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = exps_[i] - other.exps_[i];
    r.degree_ = degree_ - other.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    assert(a.exps_.size() == b.exps_.size());
    Monomial r;
    r.exps_.resize(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
}

} // namespace mldeg
