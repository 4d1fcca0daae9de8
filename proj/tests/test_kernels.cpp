#include <doctest.h>

#include <random>

#include "magmakit/catalog.hpp"
#include "magmakit/kernels.hpp"
#include "magmakit/magma.hpp"

using namespace mk;
namespace kn = mk::kernels;

namespace {

// mostly-associative tables: Z_n addition with one planted defect
std::vector<std::uint32_t> planted(std::size_t n, std::mt19937& rng) {
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
    if (rng() % 4) {
        auto i = rng() % (n * n);
        t[i] = static_cast<std::uint32_t>(rng() % n);
    }
    return t;
}

}  // namespace

TEST_CASE("scalar and avx2 kernels agree") {
    if (!kn::avx2_supported()) {
        MESSAGE("no AVX2 on this host, only the scalar path is exercised");
        return;
    }
    std::mt19937 rng(2024);
    for (std::size_t n = 1; n <= 40; ++n)
        for (int rep = 0; rep < 12; ++rep) {
            auto t = rep % 2 ? planted(n, rng) : std::vector<std::uint32_t>(n * n);
            if (rep % 2 == 0)
                for (auto& v : t) v = static_cast<std::uint32_t>(rng() % n);
            kn::Triple s3{}, v3{};
            kn::Pair s2{}, v2{};
            bool sa = kn::scalar::first_nonassociative(t.data(), n, &s3);
            bool va = kn::avx2::first_nonassociative(t.data(), n, &v3);
            REQUIRE(sa == va);
            if (sa) {
                CHECK(s3.x == v3.x);
                CHECK(s3.y == v3.y);
                CHECK(s3.z == v3.z);
            }
            bool sc = kn::scalar::first_noncommuting(t.data(), n, &s2);
            bool vc = kn::avx2::first_noncommuting(t.data(), n, &v2);
            REQUIRE(sc == vc);
            if (sc) {
                CHECK(s2.x == v2.x);
                CHECK(s2.y == v2.y);
            }
        }
}

TEST_CASE("dispatch override changes nothing observable") {
    std::vector<Magma> ms;
    for (unsigned n : {5u, 7u, 9u, 13u})
        for (auto& [m, l] : ln_class(n)) ms.push_back(l);
    ms.push_back(standard({Family::symmetric_group, 4, ""}));
    ms.push_back(standard({Family::full_transformation, 3, ""}));
    std::vector<AlgebraKind> base;
    kn::override_isa(kn::Isa::scalar);
    CHECK(kn::active_isa() == kn::Isa::scalar);
    for (auto& m : ms) base.push_back(classify(m));
    if (kn::avx2_supported()) {
        kn::override_isa(kn::Isa::avx2);
        CHECK(kn::active_isa() == kn::Isa::avx2);
        for (std::size_t i = 0; i < ms.size(); ++i) {
            auto k = classify(ms[i]);
            CHECK(k.associative == base[i].associative);
            CHECK(k.commutative == base[i].commutative);
            CHECK(k.label == base[i].label);
        }
    }
    kn::override_isa(std::nullopt);
}

TEST_CASE("first non-associative triple is lexicographically first") {
    auto z = zn_groupoid({5, 2, 3, ZnClass::z});
    std::vector<std::uint32_t> t(z.table().begin(), z.table().end());
    auto r = kn::first_nonassociative(t.data(), 5);
    REQUIRE(r);
    for (std::uint32_t x = 0; x < 5; ++x)
        for (std::uint32_t y = 0; y < 5; ++y)
            for (std::uint32_t zz = 0; zz < 5; ++zz) {
                bool fails = t[t[x * 5 + y] * 5 + zz] != t[x * 5 + t[y * 5 + zz]];
                if (fails) {
                    CHECK(x == r->x);
                    CHECK(y == r->y);
                    CHECK(zz == r->z);
                    return;
                }
            }
}
