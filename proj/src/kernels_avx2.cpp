#include "magmakit/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define MK_AVX2 __attribute__((target("avx2")))
#define MK_HAVE_AVX2 1
#endif

namespace mk::kernels::avx2 {

#ifdef MK_HAVE_AVX2

// (xy)z is a contiguous run of row xy; x(yz) gathers row x at the indices of row y.
MK_AVX2 bool first_nonassociative(const std::uint32_t* t, std::size_t n, Triple* out) {
    for (std::size_t x = 0; x < n; ++x) {
        const std::uint32_t* rx = t + x * n;
        const int* rxi = reinterpret_cast<const int*>(rx);
        for (std::size_t y = 0; y < n; ++y) {
            const std::uint32_t* rxy = t + static_cast<std::size_t>(rx[y]) * n;
            const std::uint32_t* ry = t + y * n;
            std::size_t z = 0;
            for (; z + 8 <= n; z += 8) {
                __m256i lhs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rxy + z));
                __m256i yz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ry + z));
                __m256i rhs = _mm256_i32gather_epi32(rxi, yz, 4);
                __m256i eq = _mm256_cmpeq_epi32(lhs, rhs);
                unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
                if (mask != 0xFFu) {
                    unsigned bit = static_cast<unsigned>(__builtin_ctz(~mask & 0xFFu));
                    *out = {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y),
                            static_cast<std::uint32_t>(z + bit)};
                    return true;
                }
            }
            for (; z < n; ++z) {
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

// row x against column x, the column read with a strided gather
MK_AVX2 bool first_noncommuting(const std::uint32_t* t, std::size_t n, Pair* out) {
    const int* ti = reinterpret_cast<const int*>(t);
    const __m256i lanes = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i stride = _mm256_set1_epi32(static_cast<int>(n));
    for (std::size_t x = 0; x < n; ++x) {
        const std::uint32_t* rx = t + x * n;
        std::size_t y = x + 1;
        for (; y + 8 <= n; y += 8) {
            __m256i row = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rx + y));
            __m256i ys = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(y)), lanes);
            __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(ys, stride), _mm256_set1_epi32(static_cast<int>(x)));
            __m256i col = _mm256_i32gather_epi32(ti, idx, 4);
            __m256i eq = _mm256_cmpeq_epi32(row, col);
            unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
            if (mask != 0xFFu) {
                unsigned bit = static_cast<unsigned>(__builtin_ctz(~mask & 0xFFu));
                *out = {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y + bit)};
                return true;
            }
        }
        for (; y < n; ++y)
            if (rx[y] != t[y * n + x]) {
                *out = {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
                return true;
            }
    }
    return false;
}

#else

bool first_nonassociative(const std::uint32_t* t, std::size_t n, Triple* out) {
    return scalar::first_nonassociative(t, n, out);
}
bool first_noncommuting(const std::uint32_t* t, std::size_t n, Pair* out) {
    return scalar::first_noncommuting(t, n, out);
}

#endif

}  // namespace mk::kernels::avx2
