#include <doctest.h>

#include "fixtures.hpp"
#include "magmakit/catalog.hpp"
#include "magmakit/error.hpp"
#include "magmakit/identities.hpp"
#include "magmakit/numtheory.hpp"
#include "oracle.hpp"

using namespace mk;

namespace {

bool valid_m(unsigned n, unsigned m) { return m >= 2 && m < n && std::gcd(m, n) == 1 && std::gcd(m - 1, n) == 1; }

// count of admissible m straight from the definition
std::uint64_t count_m(unsigned n) {
    std::uint64_t c = 0;
    for (unsigned m = 1; m < n; ++m) c += valid_m(n, m);
    return c;
}

}  // namespace

TEST_CASE("ln_loop satisfies the loop axioms and squares to e") {
    for (unsigned n = 5; n <= 25; n += 2)
        for (auto& [m, l] : ln_class(n)) {
            auto t = oracle::raw(l);
            CHECK(oracle::loop(t));
            auto e = l.id("e");
            for (ElementId i = 0; i < l.size(); ++i)
                if (i != e) CHECK(l.op(i, i) == e);
        }
}

TEST_CASE("ln_loop entries follow the defining formula") {
    for (unsigned n : {5u, 7u, 9u})
        for (auto& [m, l] : ln_class(n))
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    long v = ((long)m * j - (long)(m - 1) * i) % (long)n;
                    if (v <= 0) v += n;
                    CHECK(l.name(l.op(l.id(std::to_string(i)), l.id(std::to_string(j)))) == std::to_string(v));
                }
}

TEST_CASE("|L_n| matches the product formula and a direct count") {
    for (unsigned n = 5; n <= 25; n += 2) {
        std::uint64_t formula = 1;
        for (auto [p, a] : factorize(n)) {
            formula *= p - 2;
            for (unsigned k = 1; k < a; ++k) formula *= p;
        }
        CHECK(ln_class(n).size() == formula);
        CHECK(count_m(n) == formula);
        CHECK(ln_counts(n).total == formula);
    }
    CHECK(ln_class(5).size() == 3);
}

TEST_CASE("ln_loop is commutative exactly when m = (n+1)/2") {
    for (unsigned n = 5; n <= 25; n += 2)
        for (auto& [m, l] : ln_class(n)) CHECK(oracle::commutative(oracle::raw(l)) == (m == (n + 1) / 2));
}

TEST_CASE("invalid ln parameters") {
    CHECK(ln_param_error(6, 5));
    CHECK(ln_param_error(3, 2));
    CHECK(ln_param_error(9, 3));
    CHECK(ln_param_error(9, 4));
    CHECK_FALSE(ln_param_error(9, 5));
    CHECK_THROWS_AS(ln_loop({9, 3}), Error);
}

TEST_CASE("Z_n(t,u) associative iff t and u are idempotent mod n") {
    for (unsigned n = 3; n <= 12; ++n)
        for (auto& e : zn_class_enumerate(n, ZnClass::zstar)) {
            bool expect = (e.t * e.t) % n == e.t % n && (e.u * e.u) % n == e.u % n;
            CHECK(oracle::associative(oracle::raw(e.table)) == expect);
            CHECK(classify(e.table).associative == expect);
        }
}

TEST_CASE("Z_n(t,u) idempotent everywhere iff t+u = 1 mod n") {
    for (unsigned n = 3; n <= 12; ++n)
        for (auto& e : zn_class_enumerate(n, ZnClass::zstarstar)) {
            bool expect = (e.t + e.u) % n == 1;
            bool brute = true;
            for (ElementId x = 0; x < n; ++x) brute = brute && e.table.op(x, x) == x;
            CHECK(brute == expect);
            CHECK(check_identity(e.table, Identity::idempotent_everywhere).holds == expect);
        }
}

TEST_CASE("|Z*(n)| = (n-1)(n-2)") {
    for (unsigned n = 3; n <= 10; ++n) {
        std::size_t brute = 0;
        for (unsigned t = 1; t < n; ++t)
            for (unsigned u = 1; u < n; ++u) brute += t != u;
        CHECK(zn_class_enumerate(n, ZnClass::zstar).size() == (n - 1) * (n - 2));
        CHECK(brute == (n - 1) * (n - 2));
    }
}

TEST_CASE("Z_n class constraints") {
    CHECK(zn_param_error({6, 2, 4, ZnClass::zstar}) == std::nullopt);
    CHECK(zn_param_error({6, 2, 4, ZnClass::z}));
    CHECK(zn_param_error({6, 2, 2, ZnClass::zstar}));
    CHECK(zn_param_error({6, 0, 2, ZnClass::zstarstar}));
    CHECK(zn_param_error({6, 0, 0, ZnClass::zzero}) == std::nullopt);
    CHECK(zn_param_error({2, 1, 1, ZnClass::zzero}));
    CHECK(zn_tightest_class(6, 1, 5) == ZnClass::z);
    CHECK(zn_tightest_class(6, 2, 4) == ZnClass::zstar);
    auto z = zn_groupoid({6, 2, 4, ZnClass::zstar});
    for (ElementId b = 0; b < 6; ++b) CHECK(z.op(0, b) == (4 * b) % 6);
}

TEST_CASE("regular representation is an isomorphic permutation group") {
    for (const auto& f : fixtures("g_")) {
        auto g = read_cayley(f);
        auto rr = regular_representation(g);
        auto img = oracle::raw(rr.image);
        CHECK(oracle::group(img));
        CHECK(oracle::transports(oracle::raw(g), img, rr.embedding));
        // image of a is the left translation x -> a∘x, written in one-line form
        for (ElementId a = 0; a < g.size(); ++a) {
            const auto& perm = rr.image.name(rr.embedding[a]);
            REQUIRE(perm.size() == g.size());
            for (ElementId x = 0; x < g.size(); ++x) CHECK(perm[x] - '1' == static_cast<int>(g.op(a, x)));
        }
    }
}

TEST_CASE("standard families have the expected orders") {
    CHECK(standard({Family::cyclic, 1, ""}).size() == 1);
    CHECK(standard({Family::dihedral, 5, ""}).size() == 10);
    CHECK(standard({Family::symmetric_group, 4, ""}).size() == 24);
    CHECK(standard({Family::alternating, 4, ""}).size() == 12);
    CHECK(standard({Family::zn_units, 15, ""}).size() == 8);
    CHECK(standard({Family::full_transformation, 3, ""}).size() == 27);
    CHECK(classify(standard({Family::full_transformation, 3, ""})).label == Label::monoid);
    CHECK(classify(standard({Family::zn_mul, 10, ""})).label == Label::monoid);
    auto d = standard({Family::dihedral, 4, "D."});
    CHECK(d.names().front() == "D.1");
    CHECK(oracle::group(oracle::raw(d)));
    CHECK_THROWS_AS(standard({Family::symmetric_group, 9, ""}), Error);
}
