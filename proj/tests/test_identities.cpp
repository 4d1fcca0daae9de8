#include <doctest.h>

#include "fixtures.hpp"
#include "magmakit/catalog.hpp"
#include "magmakit/error.hpp"
#include "magmakit/identities.hpp"
#include "oracle.hpp"

using namespace mk;

TEST_CASE("alternative is left and right alternative together") {
    std::vector<Magma> ms;
    for (auto& f : fixtures("")) ms.push_back(read_cayley(f));
    for (unsigned n : {5u, 6u, 7u})
        for (auto& e : zn_class_enumerate(n, ZnClass::zzero)) ms.push_back(e.table);
    for (const auto& m : ms) {
        bool l = check_identity(m, Identity::left_alternative).holds;
        bool r = check_identity(m, Identity::right_alternative).holds;
        CHECK(check_identity(m, Identity::alternative).holds == (l && r));
        CHECK(l == oracle::left_alternative(oracle::raw(m)));
        CHECK(r == oracle::right_alternative(oracle::raw(m)));
    }
}

TEST_CASE("groups satisfy every bracketing identity") {
    for (auto& f : fixtures("g_")) {
        auto g = read_cayley(f);
        for (auto id : all_identities()) {
            if (id == Identity::idempotent_everywhere) continue;
            INFO(f << " " << to_string(id));
            auto r = check_identity(g, id);
            // the Bruck inverse rule (xy)^-1 = x^-1 y^-1 only survives in abelian groups
            if (id == Identity::bruck && !classify(g).commutative) continue;
            CHECK(r.holds);
        }
    }
}

TEST_CASE("WIP in L_n(m) iff m^2 - m + 1 = 0 mod n") {
    for (unsigned n = 5; n <= 25; n += 2)
        for (auto& [m, l] : ln_class(n)) {
            bool expect = (m * m - m + 1) % n == 0;
            CHECK(check_identity(l, Identity::wip).holds == expect);
            CHECK(oracle::wip(oracle::raw(l)) == expect);
        }
    CHECK(check_identity(ln_loop({7, 3}), Identity::wip).holds);
}

TEST_CASE("alternative laws in L_n(m)") {
    for (unsigned n = 5; n <= 11; n += 2) {
        unsigned right = 0, left = 0, both = 0;
        for (auto& [m, l] : ln_class(n)) {
            bool r = check_identity(l, Identity::right_alternative).holds;
            bool le = check_identity(l, Identity::left_alternative).holds;
            if (r) {
                ++right;
                CHECK(m == 2);
            }
            if (le) {
                ++left;
                CHECK(m == n - 1);
            }
            both += check_identity(l, Identity::alternative).holds;
        }
        CHECK(right == 1);
        CHECK(left == 1);
        CHECK(both == 0);
    }
}

TEST_CASE("no Moufang, Bol or Bruck loop among L_n(m)") {
    for (unsigned n = 5; n <= 11; n += 2)
        for (auto& [m, l] : ln_class(n)) {
            auto t = oracle::raw(l);
            CHECK_FALSE(check_identity(l, Identity::moufang).holds);
            CHECK_FALSE(check_identity(l, Identity::bol).holds);
            CHECK_FALSE(check_identity(l, Identity::bruck).holds);
            CHECK_FALSE(oracle::moufang(t));
            CHECK_FALSE(oracle::right_bol(t));
        }
}

TEST_CASE("counterexamples really fail") {
    auto l = ln_loop({5, 2});
    auto r = check_identity(l, Identity::left_alternative);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.counterexample);
    auto [x, y, z] = *r.counterexample;
    (void)z;
    CHECK(l.op(l.op(x, x), y) != l.op(x, l.op(x, y)));
}

TEST_CASE("identities needing structure throw PreconditionUnmet") {
    auto z = zn_groupoid({6, 1, 3, ZnClass::zstar});
    try {
        check_identity(z, Identity::wip);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::precondition_unmet);
    }
}

TEST_CASE("principal isotopes of loops are loops") {
    std::vector<Magma> loops;
    for (auto& f : fixtures("")) {
        auto m = read_cayley(f);
        if (m.size() <= 8 && m.latin() && find_identity(m)) loops.push_back(m);
    }
    REQUIRE(loops.size() >= 10);
    for (const auto& l : loops)
        for (ElementId a = 0; a < l.size(); ++a)
            for (ElementId b = 0; b < l.size(); ++b) CHECK(oracle::loop(oracle::raw(principal_isotope(l, a, b))));
}

TEST_CASE("associator subloop of L_5 and L_7 is the whole loop") {
    for (unsigned n : {5u, 7u})
        for (auto& [m, l] : ln_class(n)) {
            auto d = derived_subloop(l, DerivedFlavor::associator);
            CHECK(d.set.is_full());
        }
}

TEST_CASE("groups are G-loops") {
    CHECK(is_g_loop(standard({Family::symmetric_group, 3, ""})).holds);
    CHECK(is_g_loop(standard({Family::cyclic, 5, ""})).holds);
}
