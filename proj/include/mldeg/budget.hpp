#pragma once

#include <chrono>
#include <cstddef>

namespace mldeg {

// Caps for Groebner-type computations.  A zero value disables the cap.
// Exceeding any cap raises ResourceLimitError.
struct ResourceBudget {
    std::size_t max_basis = 200000;          // basis elements per GB run
    std::size_t max_reductions = 50000000;   // reduction steps per GB run
    std::size_t max_coeff_bits = 1u << 22;   // bit length of any coefficient
    double wall_seconds = 0.0;               // per-pipeline wall clock

    std::chrono::steady_clock::time_point deadline{}; // derived, epoch = none

    // Returns a copy with the deadline armed from wall_seconds.
    ResourceBudget started() const;

    void check_deadline(const char* where) const;

    // Reads MLDEG_MAX_BASIS, MLDEG_MAX_REDUCTIONS, MLDEG_MAX_COEFF_BITS,
    // MLDEG_WALL_SECONDS from the environment on top of the defaults.
    static ResourceBudget from_env();
};

} // namespace mldeg
