#pragma once

#include <cstddef>

namespace mk {

// Search and construction limits. Defaults keep every bundled check fast.
struct Caps {
    std::size_t max_exhaustive = 16;        // exhaustive sub-enumeration, MAGMA_MAX_EXHAUSTIVE overrides
    std::size_t product_max = 4096;         // direct products
    std::size_t symmetric_max = 6;          // symmetric_group / alternating degree
    std::size_t transformation_max = 4;     // full_transformation degree
    std::size_t g_loop_max = 10;            // is_g_loop isomorphism search
    std::size_t closed_sets_max = 250000;   // distinct closed subsets kept during enumeration
    std::size_t combinations_max = 2000000; // cartesian sub-N-structure combinations
    std::size_t generated_depth = 3;        // generator count used by the automatic mode
};

const Caps& caps();
void set_caps(const Caps& c);

// RAII override used by tests
class ScopedCaps {
public:
    explicit ScopedCaps(const Caps& c);
    ~ScopedCaps();
    ScopedCaps(const ScopedCaps&) = delete;
    ScopedCaps& operator=(const ScopedCaps&) = delete;

private:
    Caps saved_;
};

}  // namespace mk
