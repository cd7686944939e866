#include "mldeg/budget.hpp"
#include "mldeg/errors.hpp"

#include <cstdlib>
#include <string>

namespace mldeg {

ResourceBudget ResourceBudget::started() const {
    ResourceBudget b = *this;
    if (b.wall_seconds > 0.0) {
        b.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(b.wall_seconds));
    }
    return b;
}

void ResourceBudget::check_deadline(const char* where) const {
    if (deadline.time_since_epoch().count() != 0 &&
        std::chrono::steady_clock::now() > deadline) {
        throw ResourceLimitError(std::string("wall-clock budget exceeded in ") + where);
    }
}

static std::size_t env_size(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return static_cast<std::size_t>(std::stoull(v));
}

ResourceBudget ResourceBudget::from_env() {
    ResourceBudget b;
    b.max_basis = env_size("MLDEG_MAX_BASIS", b.max_basis);
    b.max_reductions = env_size("MLDEG_MAX_REDUCTIONS", b.max_reductions);
    b.max_coeff_bits = env_size("MLDEG_MAX_COEFF_BITS", b.max_coeff_bits);
    if (const char* v = std::getenv("MLDEG_WALL_SECONDS"); v && *v)
        b.wall_seconds = std::stod(v);
    return b;
}

} // namespace mldeg
