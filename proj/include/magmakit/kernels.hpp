#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

// Table scans shared by classify and the identity checks. Every entry point has a
// scalar reference and, on x86-64, an AVX2 variant chosen once at runtime.
namespace mk::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

bool avx2_supported();
Isa active_isa();
// tests pin a variant; nullopt restores autodetection
void override_isa(std::optional<Isa> isa);

struct Triple {
    std::uint32_t x, y, z;
};
struct Pair {
    std::uint32_t x, y;
};

// lexicographically first (x,y,z) with (xy)z != x(yz)
std::optional<Triple> first_nonassociative(const std::uint32_t* table, std::size_t n);
// lexicographically first x<y with xy != yx
std::optional<Pair> first_noncommuting(const std::uint32_t* table, std::size_t n);

namespace scalar {
bool first_nonassociative(const std::uint32_t* table, std::size_t n, Triple* out);
bool first_noncommuting(const std::uint32_t* table, std::size_t n, Pair* out);
}  // namespace scalar

namespace avx2 {
bool first_nonassociative(const std::uint32_t* table, std::size_t n, Triple* out);
bool first_noncommuting(const std::uint32_t* table, std::size_t n, Pair* out);
}  // namespace avx2

}  // namespace mk::kernels
