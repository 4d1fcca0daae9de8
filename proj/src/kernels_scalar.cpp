#include "magmakit/kernels.hpp"

namespace mk::kernels::scalar {

bool first_nonassociative(const std::uint32_t* t, std::size_t n, Triple* out) {
    for (std::size_t x = 0; x < n; ++x) {
        const std::uint32_t* rx = t + x * n;
        for (std::size_t y = 0; y < n; ++y) {
            const std::uint32_t* rxy = t + static_cast<std::size_t>(rx[y]) * n;
            const std::uint32_t* ry = t + y * n;
            for (std::size_t z = 0; z < n; ++z) {
                if (rxy[z] != rx[ry[z]]) {
                    *out = {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y),
                            static_cast<std::uint32_t>(z)};
                    return true;
                }
            }
        }
    }
    return false;
}

bool first_noncommuting(const std::uint32_t* t, std::size_t n, Pair* out) {
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (t[x * n + y] != t[y * n + x]) {
                *out = {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
                return true;
            }
    return false;
}

}  // namespace mk::kernels::scalar
