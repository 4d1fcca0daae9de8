#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "magmakit/catalog.hpp"
#include "magmakit/error.hpp"
#include "magmakit/nstructure.hpp"
#include "magmakit/verify.hpp"
#include "oracle.hpp"

using namespace mk;

namespace {

NStructure make(std::vector<std::pair<std::string, std::string>> parts, bool prefixed = true) {
    std::vector<std::pair<std::string, Magma>> comps;
    for (auto& [label, spec] : parts) comps.emplace_back(label, generate(spec, prefixed ? label + "." : ""));
    return assemble(std::move(comps));
}

// slotwise criterion checked on raw tables
bool slot_ok(const Magma& m, const ElemSet& s, Req r) {
    auto t = oracle::raw(m);
    auto el = s.elements();
    std::vector<std::uint32_t> ids(el.begin(), el.end());
    if (!oracle::closed(t, ids)) return false;
    auto sub = oracle::restrict(t, ids);
    switch (r) {
        case Req::group: return oracle::group(sub);
        case Req::loop: return oracle::loop(sub);
        case Req::semigroup: return oracle::associative(sub);
        default: return true;
    }
}

std::size_t union_size(const NStructure& ns, const SubNStructure& h) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < ns.size(); ++i)
        if (h.slots[i])
            for (auto x : h.slots[i]->elements()) names.insert(ns.component(i).magma.name(x));
    return names.size();
}

}  // namespace

TEST_CASE("order counts distinct names") {
    auto ns = make({{"S3", "symmetric_group:3"}, {"Z11", "zn_add:11"}, {"A4", "alternating:4"}, {"C5", "cyclic:5"}});
    CHECK(ns.disjoint());
    CHECK(ns.order() == 6 + 11 + 12 + 5);
    // unprefixed Z4 and U5 share 1, 2, 3
    auto shared = make({{"Z4", "zn_add:4"}, {"U5", "zn_units:5"}}, false);
    CHECK_FALSE(shared.disjoint());
    CHECK(shared.order() == 5);
    std::set<std::string> names;
    for (auto& c : shared.components())
        for (auto& s : c.magma.names()) names.insert(s);
    CHECK(shared.order() == names.size());
}

TEST_CASE("kind mixes") {
    using C = Category;
    CHECK(classify_n({C::group, C::group}) == NKind::n_group);
    CHECK(classify_n({C::semigroup, C::semigroup}) == NKind::n_semigroup);
    CHECK(classify_n({C::loop, C::group}) == NKind::n_loop);
    CHECK(classify_n({C::groupoid, C::semigroup}) == NKind::n_groupoid);
    CHECK(classify_n({C::group, C::semigroup}) == NKind::n_group_semigroup);
    CHECK(classify_n({C::loop, C::groupoid}) == NKind::n_loop_groupoid);
    CHECK(classify_n({C::loop, C::semigroup}) == NKind::n_gls);
    CHECK(classify_n({C::group, C::semigroup, C::groupoid}) == NKind::n_gsg);
    CHECK(classify_n({C::loop, C::semigroup, C::groupoid}) == NKind::n_lsg);
    CHECK(classify_n({C::group, C::loop, C::semigroup, C::groupoid}) == NKind::n_glsg);
}

TEST_CASE("assembly errors") {
    auto err = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::parse_error;
    };
    CHECK(err([] { make({{"C2", "cyclic:2"}, {"C4", "cyclic:4"}}, false); }) == Errc::improper_components);
    CHECK(err([] { make({{"C2", "cyclic:2"}}); }) == Errc::invalid_params);
    CHECK(err([] {
              std::vector<std::pair<std::string, Magma>> c{{"A", generate("cyclic:2", "A.")},
                                                           {"B", generate("cyclic:3", "B.")}};
              assemble(c, NKind::n_loop);
          }) == Errc::insufficient_mix);
}

TEST_CASE("found sub-N-structures re-verify slot by slot") {
    for (const char* name : {"group34", "glsg36", "gs29"}) {
        auto ns = worked_structure(name);
        auto req = default_requirement(ns);
        auto ss = slot_subs(ns, req);
        for (std::size_t i = 0; i < ns.size(); ++i)
            for (auto& s : ss.subs[i]) CHECK(slot_ok(ns.component(i).magma, s.set, req[i]));
        auto a = achievable_orders(ns, ss);
        for (auto& w : a.orders) {
            INFO(name << " " << format_sub(ns, w.witness));
            CHECK(w.witness.n_order() == w.order);
            CHECK(w.witness.nontrivial());
            CHECK(is_proper(ns, w.witness));
            CHECK(check_sub(ns, w.witness, req).valid);
            for (std::size_t i = 0; i < ns.size(); ++i)
                if (w.witness.slots[i]) CHECK(slot_ok(ns.component(i).magma, *w.witness.slots[i], req[i]));
        }
    }
}

TEST_CASE("subgroup and subloop slots always pseudo divide") {
    auto l52 = read_cayley(data_path("l52.cay"));
    auto l73 = read_cayley(data_path("l73.cay"));
    std::vector<std::pair<std::string, Magma>> parts{{"L52", with_prefix(l52, "L52.")},
                                                     {"L73", with_prefix(l73, "L73.")},
                                                     {"S3", generate("symmetric_group:3", "S3.")}};
    auto ns = assemble(std::move(parts));
    auto req = parse_requirement("l,l,g", 3);
    auto subs = find_sub_nstructures(ns, req, {EnumMode::exhaustive, 0});
    REQUIRE(!subs.empty());
    for (auto& h : subs) {
        bool brute = true;
        for (std::size_t i = 0; i < ns.size(); ++i)
            brute = brute && ns.component(i).magma.size() % h.slots[i]->count() == 0;
        CHECK(pseudo_divides(ns, h) == brute);
        CHECK(pseudo_divides(ns, h));
    }
}

TEST_CASE("pseudo division fails for semigroup slots") {
    auto ns = worked_structure("gs54");
    auto h = parse_sub(ns, "A4:{A4.1234};Z10:{Z10.0};T3:{T3.111,T3.112};C5:-");
    CHECK_FALSE(pseudo_divides(ns, h));
}

TEST_CASE("N-order against distinct count") {
    auto shared = make({{"Z4", "zn_add:4"}, {"U5", "zn_units:5"}, {"U9", "zn_units:9"}}, false);
    auto subs = find_sub_nstructures(shared, {Req::group, Req::group, Req::group}, {EnumMode::exhaustive, 0});
    REQUIRE(subs.size() > 4);
    bool saw_strict = false;
    for (auto& h : subs) {
        auto d = distinct_order(shared, h);
        CHECK(d == union_size(shared, h));
        CHECK(h.n_order() >= d);
        bool pairwise_disjoint = true;
        std::set<std::string> seen;
        for (std::size_t i = 0; i < shared.size(); ++i)
            for (auto x : h.slots[i]->elements())
                if (!seen.insert(shared.component(i).magma.name(x)).second) pairwise_disjoint = false;
        CHECK((h.n_order() == d) == pairwise_disjoint);
        saw_strict = saw_strict || h.n_order() > d;
    }
    CHECK(saw_strict);
}

TEST_CASE("Cauchy verdicts ignore component order") {
    for (const char* name : {"gs54", "gs50", "gs53", "glsg36"}) {
        auto ns = worked_structure(name);
        std::vector<std::pair<std::string, Magma>> parts;
        for (auto it = ns.components().rbegin(); it != ns.components().rend(); ++it)
            parts.emplace_back(it->label, it->magma);
        auto rev = assemble(std::move(parts));
        auto a = cauchy_analysis(ns), b = cauchy_analysis(rev);
        CHECK(a.cls == b.cls);
        CHECK(a.eligible.size() == b.eligible.size());
        CHECK(a.ineligible == b.ineligible);
        std::multiset<std::pair<std::size_t, bool>> ta, tb;
        for (auto& e : a.eligible) ta.insert({e.t, e.cauchy});
        for (auto& e : b.eligible) tb.insert({e.t, e.cauchy});
        CHECK(ta == tb);
    }
}

TEST_CASE("Cauchy elements against a direct power walk") {
    auto ns = worked_structure("gs50");
    auto c = cauchy_analysis(ns);
    for (auto& e : c.eligible) {
        const auto& m = ns.component(e.slot).magma;
        auto id = *oracle::identity(oracle::raw(m));
        ElementId x = e.element, p = x;
        std::size_t t = 1;
        while (p != id && t <= m.size()) p = m.op(p, x), ++t;
        CHECK(t == e.t);
        CHECK(e.cauchy == (ns.order() % t == 0));
        CHECK(e.s_cauchy == (m.size() % t == 0));
    }
}

TEST_CASE("quotient order and slot kinds") {
    auto ns = make({{"S3", "symmetric_group:3"}, {"C6", "cyclic:6"}, {"A4", "alternating:4"}});
    auto n = parse_sub(ns, "S3:{S3.123,S3.231,S3.312};C6:{C6.1,C6.g^3};A4:{A4.1234,A4.2143,A4.3412,A4.4321}");
    auto q = quotient(ns, n);
    CHECK(q.order() == 6 / 3 + 6 / 2 + 12 / 4);
    for (auto& c : q.components()) CHECK(oracle::group(oracle::raw(c.magma)));
    auto bad = parse_sub(ns, "S3:{S3.123,S3.213};C6:{C6.1};A4:{A4.1234}");
    CHECK_THROWS_AS(quotient(ns, bad), Error);
    auto gs = worked_structure("gs54");
    CHECK_THROWS_AS(quotient(gs, parse_sub(gs, "A4:{A4.1234};Z10:{Z10.1};T3:{T3.123};C5:{C5.1}")), Error);
}

TEST_CASE("S-N-loop witnesses are N-groups") {
    auto l52 = read_cayley(data_path("l52.cay"));
    auto l73 = read_cayley(data_path("l73.cay"));
    std::vector<std::pair<std::string, Magma>> parts{{"L52", with_prefix(l52, "L52.")},
                                                     {"L73", with_prefix(l73, "L73.")}};
    auto ns = assemble(std::move(parts));
    CHECK(ns.kind() == NKind::n_loop);
    auto r = smarandache_n_analysis(ns, {EnumMode::exhaustive, 0});
    auto& v = r.get("s_n_loop");
    CHECK(v.holds);
    REQUIRE(v.witness);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        REQUIRE(v.witness->slots[i]);
        CHECK(slot_ok(ns.component(i).magma, *v.witness->slots[i], Req::group));
    }
    CHECK(check_sub(ns, *v.witness, {Req::group, Req::group}).valid);
}

TEST_CASE("cosets and normalizers") {
    auto ns = worked_structure("gs_coset");
    auto h = parse_sub(ns, "S3:{S3.123,S3.213};Z10:{Z10.0,Z10.5};Z24:{Z24.0,Z24.8,Z24.16}");
    auto c = coset(ns, h, "S3.231", CosetSide::right);
    CHECK(c.translated[0]);
    CHECK_FALSE(c.translated[1]);
    CHECK(c.slots[0].count() == 2);
    CHECK_THROWS_AS(coset(ns, h, "nope", CosetSide::left), Error);
    auto nz = normalizer(make({{"S3", "symmetric_group:3"}, {"C4", "cyclic:4"}}), "S3.213");
    REQUIRE(nz.size() == 1);
    CHECK(nz[0].set.count() == 2);
    CHECK(nz[0].subgroup);
    CHECK(nz[0].index_num == 3);
}

TEST_CASE("homomorphism check") {
    auto src = make({{"Z4", "zn_add:4"}, {"C2", "cyclic:2"}});
    auto dst = make({{"Z2", "zn_add:2"}, {"C4", "cyclic:4"}});
    std::vector<std::map<std::string, std::string>> maps{
        {{"Z4.0", "Z2.0"}, {"Z4.1", "Z2.1"}, {"Z4.2", "Z2.0"}, {"Z4.3", "Z2.1"}},
        {{"C2.1", "C4.1"}, {"C2.g", "C4.g^2"}}};
    auto r = verify_homomorphism(src, dst, maps);
    CHECK(r.homomorphism);
    CHECK(r.slots[0].surjective);
    CHECK_FALSE(r.slots[0].injective);
    CHECK(r.slots[1].injective);
    maps[1]["C2.g"] = "C4.g";
    CHECK_FALSE(verify_homomorphism(src, dst, maps).homomorphism);
    maps[1].erase("C2.g");
    CHECK_THROWS_AS(verify_homomorphism(src, dst, maps), Error);
}

TEST_CASE("Lagrange and Sylow classes") {
    auto trivial = make({{"A", "cyclic:1"}, {"B", "cyclic:1"}});
    auto l = lagrange_analysis(trivial, achievable_orders(trivial, default_requirement(trivial)));
    CHECK(l.cls == LagrangeClass::lagrange_free);
    CHECK(l.subs.empty());
    auto ns = worked_structure("group34");
    auto a = achievable_orders(ns, default_requirement(ns));
    for (auto& f : sylow_analysis(ns, a).findings) {
        std::size_t pe = 1;
        for (std::size_t k = 0; k < f.exponent; ++k) pe *= f.p;
        CHECK(f.witness.order == pe);
        if (f.alpha == 0) CHECK(f.status == SylowStatus::pseudo_sylow);
        else if (f.exponent == f.alpha) CHECK(f.status == SylowStatus::sylow);
        else if (f.exponent > f.alpha) CHECK(f.status == SylowStatus::super_sylow);
    }
}

TEST_CASE("quotient of S3 and C4 by A3 and {1,g^2}") {
    auto ns = make({{"S3", "symmetric_group:3"}, {"C4", "cyclic:4"}});
    auto q = quotient(ns, parse_sub(ns, "S3:{S3.123,S3.231,S3.312};C4:{C4.1,C4.g^2}"));
    CHECK(q.order() == 4);
    CHECK(q.kind() == NKind::n_group);
    auto c2 = generate("cyclic:2");
    for (auto& c : q.components()) CHECK(find_isomorphism(c.magma, c2));
}

TEST_CASE("homomorphism into a non-group slot") {
    auto src = make({{"C2", "cyclic:2"}, {"C3", "cyclic:3"}});
    auto dst = make({{"M2", "zn_mul:2"}, {"D3", "cyclic:3"}});
    std::vector<std::map<std::string, std::string>> maps{{{"C2.1", "M2.1"}, {"C2.g", "M2.1"}},
                                                         {{"C3.1", "D3.1"}, {"C3.g", "D3.g"}, {"C3.g^2", "D3.g^2"}}};
    try {
        verify_homomorphism(src, dst, maps);
        FAIL("expected KindMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::kind_mismatch);
    }
}
