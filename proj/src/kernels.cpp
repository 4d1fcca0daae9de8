#include "magmakit/kernels.hpp"

#include <atomic>

namespace mk::kernels {

namespace {

// -1 means autodetect
std::atomic<int> pinned{-1};

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

Isa active_isa() {
    int p = pinned.load(std::memory_order_relaxed);
    if (p >= 0) return static_cast<Isa>(p);
    return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

void override_isa(std::optional<Isa> isa) {
    if (isa && *isa == Isa::avx2 && !avx2_supported()) isa = Isa::scalar;
    pinned.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

std::optional<Triple> first_nonassociative(const std::uint32_t* table, std::size_t n) {
    Triple t{};
    bool hit = active_isa() == Isa::avx2 ? avx2::first_nonassociative(table, n, &t)
                                         : scalar::first_nonassociative(table, n, &t);
    if (hit) return t;
    return std::nullopt;
}

std::optional<Pair> first_noncommuting(const std::uint32_t* table, std::size_t n) {
    Pair p{};
    bool hit = active_isa() == Isa::avx2 ? avx2::first_noncommuting(table, n, &p)
                                         : scalar::first_noncommuting(table, n, &p);
    if (hit) return p;
    return std::nullopt;
}

}  // namespace mk::kernels
