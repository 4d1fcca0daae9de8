// Acceptance run: one PASS/FAIL line per criterion, exit 0 only when all pass.
// usage: magmakit_acceptance <unit-test binary> <cmake> <cli binary> <contract script> <work dir>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "magmakit/catalog.hpp"
#include "magmakit/identities.hpp"
#include "magmakit/nstructure.hpp"
#include "magmakit/numtheory.hpp"
#include "magmakit/substructure.hpp"
#include "magmakit/verify.hpp"
#include "oracle.hpp"

using namespace mk;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n" << std::flush;
}

std::uint64_t ln_formula(unsigned n, bool minus3) {
    std::uint64_t f = 1;
    for (auto [p, a] : factorize(n)) {
        f *= p - (minus3 ? 3 : 2);
        for (unsigned k = 1; k < a; ++k) f *= p;
    }
    return f;
}

bool valid_m(unsigned n, unsigned m) { return m >= 2 && m < n && std::gcd(m, n) == 1 && std::gcd(m - 1, n) == 1; }

std::string run_capture(const std::string& cmd, int* rc) {
    std::string out;
    if (FILE* p = popen(cmd.c_str(), "r")) {
        char buf[4096];
        while (auto k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
        int st = pclose(p);
        *rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    } else {
        *rc = -1;
    }
    return out;
}

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

int main(int argc, char** argv) {
    if (argc != 6) {
        std::cerr << "usage: magmakit_acceptance <unit-tests> <cmake> <cli> <contract-script> <work-dir>\n";
        return 2;
    }
    const std::string unit = argv[1], cmake = argv[2], cli = argv[3], script = argv[4], work = argv[5];

    criterion(1, "printed L_n(m) tables reproduced cell for cell", [] {
        std::set<std::pair<unsigned, unsigned>> want{{5, 2}, {5, 3}, {5, 4}, {7, 3}, {7, 4}}, seen;
        for (const auto& ref : ln_reference_tables()) {
            auto printed = parse_cayley(ref.text);
            auto gen = parse_cayley(emit_cayley(ln_loop({ref.n, ref.m})));
            if (printed.names() != gen.names()) return Outcome{false, "header differs"};
            for (ElementId i = 0; i < gen.size(); ++i)
                for (ElementId j = 0; j < gen.size(); ++j)
                    if (printed.name(printed.op(i, j)) != gen.name(gen.op(i, j)))
                        return Outcome{false, "cell differs in L_" + std::to_string(ref.n) + "(" + std::to_string(ref.m) + ")"};
            seen.insert({ref.n, ref.m});
        }
        return Outcome{seen == want, "5 tables"};
    });

    criterion(2, "|L_n| equals the product formula for odd n in [5,25]", [] {
        for (unsigned n = 5; n <= 25; n += 2) {
            unsigned direct = 0;
            for (unsigned m = 0; m < n; ++m) direct += valid_m(n, m);
            auto built = ln_class(n);
            for (auto& [m, l] : built)
                if (!oracle::loop(oracle::raw(l))) return Outcome{false, "not a loop"};
            if (built.size() != ln_formula(n, false) || direct != built.size())
                return Outcome{false, "n=" + std::to_string(n)};
        }
        return Outcome{ln_class(5).size() == 3, "|L_5| = 3"};
    });

    criterion(3, "commutative iff m=(n+1)/2; strictly non-commutative count F_n", [] {
        for (unsigned n = 5; n <= 25; n += 2) {
            unsigned comm = 0, strict = 0;
            for (auto& [m, l] : ln_class(n)) {
                auto t = oracle::raw(l);
                if (oracle::commutative(t)) {
                    ++comm;
                    if (m != (n + 1) / 2) return Outcome{false, "wrong m"};
                }
                auto e = *oracle::identity(t);
                bool s = true;
                for (std::uint32_t x = 0; x < l.size() && s; ++x)
                    for (std::uint32_t y = 0; y < l.size() && s; ++y)
                        if (x != y && x != e && y != e && oracle::at(t, x, y) == oracle::at(t, y, x)) s = false;
                strict += s;
            }
            if (comm != 1) return Outcome{false, "n=" + std::to_string(n) + " commutative count"};
            if (strict != ln_formula(n, true)) return Outcome{false, "n=" + std::to_string(n) + " F_n"};
            if (n % 3 == 0 && strict != 0) return Outcome{false, "3 | n"};
        }
        return Outcome{true, "n = 5..25"};
    });

    criterion(4, "right alternative iff m=2, left iff m=n-1, never alternative", [] {
        for (unsigned n = 5; n <= 11; n += 2)
            for (auto& [m, l] : ln_class(n)) {
                auto t = oracle::raw(l);
                bool r = oracle::right_alternative(t), le = oracle::left_alternative(t);
                if (r != (m == 2) || le != (m == n - 1) || (r && le)) return Outcome{false, "n=" + std::to_string(n)};
                if (check_identity(l, Identity::right_alternative).holds != r ||
                    check_identity(l, Identity::left_alternative).holds != le ||
                    check_identity(l, Identity::alternative).holds)
                    return Outcome{false, "library disagrees at n=" + std::to_string(n)};
            }
        return Outcome{true, "n = 5..11"};
    });

    criterion(5, "WIP iff m^2-m+1 = 0 mod n; L_7(3) is WIP", [] {
        for (unsigned n = 5; n <= 25; n += 2)
            for (auto& [m, l] : ln_class(n)) {
                bool expect = (m * m - m + 1) % n == 0;
                if (oracle::wip(oracle::raw(l)) != expect || check_identity(l, Identity::wip).holds != expect)
                    return Outcome{false, "n=" + std::to_string(n) + " m=" + std::to_string(m)};
            }
        return Outcome{check_identity(ln_loop({7, 3}), Identity::wip).holds, "n = 5..25"};
    });

    criterion(6, "no Moufang/Bol/Bruck loop in L_n; A(L) = L for n in {5,7}", [] {
        for (unsigned n = 5; n <= 11; n += 2)
            for (auto& [m, l] : ln_class(n)) {
                auto t = oracle::raw(l);
                if (oracle::moufang(t) || oracle::right_bol(t)) return Outcome{false, "oracle found one"};
                for (auto id : {Identity::moufang, Identity::bol, Identity::bruck})
                    if (check_identity(l, id).holds) return Outcome{false, "library found one"};
            }
        for (unsigned n : {5u, 7u})
            for (auto& [m, l] : ln_class(n)) {
                // the associator subloop from scratch: close {a : (xy)z = (x(yz))a} under the operation
                std::vector<std::uint32_t> gen;
                auto t = oracle::raw(l);
                for (std::uint32_t x = 0; x < l.size(); ++x)
                    for (std::uint32_t y = 0; y < l.size(); ++y)
                        for (std::uint32_t z = 0; z < l.size(); ++z)
                            for (std::uint32_t a = 0; a < l.size(); ++a)
                                if (oracle::at(t, oracle::at(t, x, oracle::at(t, y, z)), a) ==
                                    oracle::at(t, oracle::at(t, x, y), z))
                                    gen.push_back(a);
                std::set<std::uint32_t> s(gen.begin(), gen.end());
                for (bool grew = true; grew;) {
                    grew = false;
                    for (auto a : std::vector<std::uint32_t>(s.begin(), s.end()))
                        for (auto b : std::vector<std::uint32_t>(s.begin(), s.end())) grew |= s.insert(oracle::at(t, a, b)).second;
                }
                if (s.size() != l.size() || !derived_subloop(l, DerivedFlavor::associator).set.is_full())
                    return Outcome{false, "A(L) proper"};
            }
        return Outcome{true, ""};
    });

    criterion(7, "Z_n(t,u) theorems for n in [3,12]", [] {
        for (unsigned n = 3; n <= 12; ++n) {
            std::size_t star = 0;
            for (unsigned t = 0; t < n; ++t)
                for (unsigned u = 0; u < n; ++u) {
                    oracle::Table tab(n * n), swapped(n * n);
                    for (unsigned a = 0; a < n; ++a)
                        for (unsigned b = 0; b < n; ++b) {
                            tab[a * n + b] = (t * a + u * b) % n;
                            swapped[a * n + b] = (u * a + t * b) % n;
                        }
                    bool in_star = t && u && t != u;
                    star += in_star;
                    if (!in_star) continue;
                    bool assoc = (t * t) % n == t && (u * u) % n == u;
                    if (oracle::associative(tab) != assoc) return Outcome{false, "associativity"};
                    bool idem = (t + u) % n == 1, brute = true;
                    for (unsigned x = 0; x < n; ++x) brute = brute && tab[x * n + x] == x;
                    if (idem != brute) return Outcome{false, "idempotence"};
                    // {0} as a two-sided ideal needs u*r = 0 and t*r = 0 for every r
                    bool zero_ideal = true;
                    for (unsigned r = 0; r < n; ++r) zero_ideal = zero_ideal && tab[r] == 0 && tab[r * n] == 0;
                    if (zero_ideal) return Outcome{false, "{0} ideal"};
                    auto lib = zn_groupoid({n, t, u, ZnClass::zstar});
                    if (oracle::raw(lib) != tab || classify(lib).associative != assoc) return Outcome{false, "library table"};
                    if (std::gcd(t, u) == 1) {
                        // left ideals here are right ideals of the swapped groupoid
                        std::set<std::vector<ElementId>> l, r;
                        for (auto& s : ideals(lib, Side::left)) l.insert(s.set.elements());
                        for (auto& s : ideals(zn_groupoid({n, u, t, ZnClass::zstar}), Side::right)) r.insert(s.set.elements());
                        if (l != r) return Outcome{false, "ideal duality"};
                    }
                }
            if (star != (n - 1) * (n - 2) || zn_class_enumerate(n, ZnClass::zstar).size() != star)
                return Outcome{false, "|Z*(n)|"};
        }
        return Outcome{true, "n = 3..12"};
    });

    criterion(8, "S-groupoid Z_6(1,3) and S-simple Z_p", [] {
        auto z = zn_groupoid({6, 1, 3, ZnClass::zstar});
        auto t = oracle::raw(z);
        for (std::vector<std::uint32_t> w : {std::vector<std::uint32_t>{0, 3}, {1, 4}, {2, 5}})
            if (!oracle::closed(t, w) || !oracle::associative(oracle::restrict(t, w))) return Outcome{false, "oracle witness"};
        auto a = s_analysis(z, {EnumMode::exhaustive, 0});
        std::set<std::vector<ElementId>> w;
        for (auto& s : a.get("s_groupoid").witnesses) w.insert(s.elements());
        if (!a.get("s_groupoid").strict || !w.count({0, 3}) || !w.count({1, 4}) || !w.count({2, 5}))
            return Outcome{false, "library witnesses"};
        for (std::size_t p : {3u, 5u, 7u}) {
            auto m = standard({Family::zn_mul, p, ""});
            auto s = s_analysis(m, {EnumMode::exhaustive, 0});
            // units form the largest proper subgroup; the only proper set strictly above it would be everything
            if (!s.get("s_semigroup").strict || !s.get("s_simple").strict) return Outcome{false, "Z_" + std::to_string(p)};
            if (s.largest_subgroups.size() != 1 || s.largest_subgroups[0].count() != p - 1)
                return Outcome{false, "largest subgroup"};
        }
        return Outcome{true, ""};
    });

    criterion(9, "N-group orders 34 and 150 and a (2,3,7,3)-Sylow sub", [] {
        auto g34 = worked_structure("group34");
        auto h = parse_sub(g34, "S3:{S3.123};Z11:{Z11.0};A4:{A4.1234,A4.2143};C5:{C5.1,C5.g,C5.g^2,C5.g^3,C5.g^4}");
        auto c = check_sub(g34, h, default_requirement(g34));
        if (g34.order() != 34 || !c.valid || c.n_order != 9 || 34 % 9 == 0) return Outcome{false, "order 34"};
        auto g150 = worked_structure("group150");
        if (g150.order() != 150) return Outcome{false, "order 150"};
        // A3 in S3, V4 in A4, A5 in S5, C4 in C12 are all normal: 3 + 4 + 60 + 4
        auto n71 = parse_sub(g150, "A4:{A4.1234,A4.2143,A4.3412,A4.4321};S3:{S3.123,S3.231,S3.312};"
                                   "S5:-;C12:{C12.1,C12.g^3,C12.g^6,C12.g^9}");
        auto& s5 = g150.component(2).magma;
        ElemSet a5(s5.size());
        for (ElementId x = 0; x < s5.size(); ++x) {
            // even permutations by inversion count on the one-line name
            const auto& p = s5.name(x).substr(3);
            int inv = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
            if (inv % 2 == 0) a5.insert(x);
        }
        n71.slots[2] = a5;
        if (n71.n_order() != 71) return Outcome{false, "N-order"};
        for (std::size_t i = 0; i < g150.size(); ++i)
            if (!is_normal_subgroup(g150.component(i).magma, *n71.slots[i])) return Outcome{false, "not normal"};
        auto ts = tuple_sylow(worked_structure("group_tuple"), {2, 3, 7, 3});
        if (!ts || ts->slot_orders != std::vector<std::size_t>{2, 3, 7, 9}) return Outcome{false, "tuple Sylow"};
        return Outcome{true, "34, 9; 150, 71; (2,3,7,9)"};
    });

    criterion(10, "weakly Lagrange order 54, orders 12/17 of order 36, Cauchy verdicts", [] {
        auto gs = worked_structure("gs54");
        auto l = lagrange_analysis(gs, achievable_orders(gs, default_requirement(gs)));
        std::map<std::size_t, bool> o;
        for (auto& [w, d] : l.subs) {
            if (!check_sub(gs, w.witness, default_requirement(gs)).valid) return Outcome{false, "invalid witness"};
            o[w.order] = d;
        }
        if (gs.order() != 54 || l.cls != LagrangeClass::weakly_lagrange) return Outcome{false, "class"};
        if (!o.count(18) || !o[18] || !o.count(9) || !o[9] || !o.count(11) || o[11]) return Outcome{false, "18/9/11"};
        auto g36 = worked_structure("glsg36");
        std::set<std::size_t> orders;
        for (auto& w : achievable_orders(g36, default_requirement(g36)).orders) orders.insert(w.order);
        if (g36.order() != 36 || !orders.count(12) || !orders.count(17)) return Outcome{false, "12/17"};
        auto g50 = worked_structure("gs50");
        auto c = cauchy_analysis(g50);
        bool two = false, three = false;
        for (auto& e : c.eligible) {
            if (e.t == 2 && e.cauchy) two = true;
            if (e.t == 3) three = true;
            if (e.t == 3 && e.cauchy) return Outcome{false, "order 3 Cauchy"};
        }
        return Outcome{two && three && g50.order() == 50, "18|54, 9|54, 11 not; 12|36, 17 not"};
    });

    criterion(11, "regular representation round trip for groups of order <= 8", [] {
        std::size_t n = 0;
        for (const auto& f : fixtures("g_")) {
            auto g = read_cayley(f);
            if (g.size() > 8) continue;
            auto rr = regular_representation(g);
            if (!oracle::group(oracle::raw(rr.image)) || !oracle::transports(oracle::raw(g), oracle::raw(rr.image), rr.embedding))
                return Outcome{false, f};
            ++n;
        }
        return Outcome{n >= 12, std::to_string(n) + " groups"};
    });

    criterion(12, "known errata reported as expected mismatches", [] {
        auto r = run_suite("worked-examples");
        std::map<std::string, Fields> by;
        for (auto& f : r.report.facts()) by[*field(f, "theorem")] = f;
        auto mismatch = [&](const char* id) { return by.count(id) && field(by[id], "result") == "expected_mismatch"; };
        // 6 + 12 + 12 + 12 + 8 recomputed here
        std::size_t sum = 0;
        for (auto& c : worked_structure("group50").components()) sum += c.magma.size();
        bool ok = r.ok() && mismatch("errata_group_order") && mismatch("errata_component_size") && sum == 50 &&
                  field(by["errata_group_order"], "computed") == "50";
        return Outcome{ok, "48 vs 50; component sizes"};
    });

    criterion(13, "invariant suite, round trip and exit-code contract", [&] {
        // one named test per invariant bullet
        static const char* invariants[] = {
            "latin tables solve both divisions",
            "classify ignores element names",
            "group element orders divide the group order",
            "groups pass the loop axioms",
            "generated tables round trip byte for byte",
            "ln_loop satisfies the loop axioms and squares to e",
            "|L_n| matches the product formula and a direct count",
            "ln_loop is commutative exactly when m = (n+1)/2",
            "Z_n(t,u) associative iff t and u are idempotent mod n",
            "Z_n(t,u) idempotent everywhere iff t+u = 1 mod n",
            "|Z*(n)| = (n-1)(n-2)",
            "regular representation is an isomorphic permutation group",
            "alternative is left and right alternative together",
            "groups satisfy every bracketing identity",
            "WIP in L_n(m) iff m^2 - m + 1 = 0 mod n",
            "alternative laws in L_n(m)",
            "no Moufang, Bol or Bruck loop among L_n(m)",
            "principal isotopes of loops are loops",
            "enumerated subs re-verify from scratch",
            "Z_n(t,u) with t+u = n and t | n has a subgroupoid of order n/t",
            "left ideals of Z_n(t,u) are the right ideals of Z_n(u,t)",
            "S-normal subgroupoids are semi-normal",
            "hyper and s_simple are exclusive on S-semigroups",
            "order counts distinct names",
            "found sub-N-structures re-verify slot by slot",
            "subgroup and subloop slots always pseudo divide",
            "N-order against distinct count",
            "Cauchy verdicts ignore component order",
            "quotient order and slot kinds",
            "S-N-loop witnesses are N-groups",
            "scalar and avx2 kernels agree",
        };
        int rc = 0;
        auto listing = run_capture(q(unit) + " --list-test-cases --no-version 2>&1", &rc);
        for (auto* name : invariants)
            if (listing.find(name) == std::string::npos) return Outcome{false, std::string("missing test: ") + name};
        run_capture(q(unit) + " --no-version > /dev/null 2>&1", &rc);
        if (rc != 0) return Outcome{false, "unit tests failed"};
        run_capture(q(cmake) + " -DCLI=" + q(cli) + " -DDATA=" + q(MK_TEST_DATA) + " -DWORK=" + q(work) + " -P " + q(script) +
                        " > /dev/null 2>&1",
                    &rc);
        if (rc != 0) return Outcome{false, "cli contract failed"};
        return Outcome{true, std::to_string(std::size(invariants)) + " invariant tests, cli contract"};
    });

    std::cout << (failures ? "acceptance: FAIL " : "acceptance: PASS ") << (13 - failures) << "/13\n";
    return failures ? 1 : 0;
}
