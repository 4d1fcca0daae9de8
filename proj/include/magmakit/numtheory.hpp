#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mk {

// trial division; inputs here never exceed a few thousand
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
// p^k for p prime, k >= 1
bool is_prime_power(std::uint64_t n, std::uint64_t* p = nullptr);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace mk
