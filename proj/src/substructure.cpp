#include "magmakit/substructure.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <unordered_set>

#include "magmakit/config.hpp"
#include "magmakit/error.hpp"

namespace mk {

std::string_view to_string(Role r) {
    switch (r) {
        case Role::subgroup: return "subgroup";
        case Role::subloop: return "subloop";
        case Role::subsemigroup: return "subsemigroup";
        case Role::subgroupoid: return "subgroupoid";
        case Role::left_ideal: return "left_ideal";
        case Role::right_ideal: return "right_ideal";
        case Role::ideal: return "ideal";
        case Role::normal: return "normal";
        case Role::hyper: return "hyper";
    }
    return "?";
}

std::optional<Role> parse_role(std::string_view s) {
    for (auto r : {Role::subgroup, Role::subloop, Role::subsemigroup, Role::subgroupoid, Role::left_ideal,
                   Role::right_ideal, Role::ideal, Role::normal, Role::hyper})
        if (to_string(r) == s) return r;
    return std::nullopt;
}

bool SubMagma::has(Role r) const { return std::find(roles.begin(), roles.end(), r) != roles.end(); }

SubMagma make_sub(const Magma& m, const ElemSet& s) {
    SubMagma sub;
    sub.set = s;
    auto r = restrict(m, s);
    sub.kind = classify(r);
    auto el = s.elements();
    if (sub.kind.identity) sub.local_identity = el[*sub.kind.identity];
    sub.proper = !s.is_full();
    sub.roles.push_back(Role::subgroupoid);
    if (sub.kind.associative) sub.roles.push_back(Role::subsemigroup);
    if (sub.kind.latin_square && sub.kind.has_identity) sub.roles.push_back(Role::subloop);
    if (sub.kind.label == Label::group) sub.roles.push_back(Role::subgroup);
    return sub;
}

std::optional<EnumOptions> parse_enum_mode(std::string_view s) {
    if (s == "auto") return EnumOptions{EnumMode::automatic, 0};
    if (s == "exhaustive") return EnumOptions{EnumMode::exhaustive, 0};
    if (s.substr(0, 4) == "gen:") {
        std::size_t k = 0;
        auto body = s.substr(4);
        auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
        if (ec != std::errc() || p != body.data() + body.size() || k == 0) return std::nullopt;
        return EnumOptions{EnumMode::generated, k};
    }
    return std::nullopt;
}

namespace {

// closed sets reachable from singletons by adding one generator per level
std::pair<std::vector<ElemSet>, bool> closed_sets(const Magma& m, std::size_t levels) {
    const auto n = static_cast<ElementId>(m.size());
    std::unordered_set<ElemSet, ElemSetHash> seen;
    std::vector<ElemSet> all, frontier;
    auto add = [&](ElemSet s, std::vector<ElemSet>& next) {
        if (seen.insert(s).second) {
            if (seen.size() > caps().closed_sets_max)
                throw Error(Errc::cap_exceeded, "more than " + std::to_string(caps().closed_sets_max) +
                                                    " closed subsets; use a generated mode with fewer generators");
            all.push_back(s);
            next.push_back(std::move(s));
        }
    };
    for (ElementId x = 0; x < n; ++x) add(closure(m, ElemSet(n, {x})), frontier);
    for (std::size_t level = 1; level < levels && !frontier.empty(); ++level) {
        std::vector<ElemSet> next;
        for (const auto& c : frontier)
            for (ElementId x = 0; x < n; ++x)
                if (!c.contains(x)) add(closure_with(m, c, x), next);
        frontier = std::move(next);
    }
    // an empty frontier means nothing further is reachable
    bool complete = frontier.empty();
    if (!complete) {
        complete = true;
        for (const auto& c : frontier) {
            for (ElementId x = 0; x < n && complete; ++x)
                if (!c.contains(x) && !seen.count(closure_with(m, c, x))) complete = false;
            if (!complete) break;
        }
    }
    std::sort(all.begin(), all.end(), [](const ElemSet& a, const ElemSet& b) { return canonical_less(a, b); });
    return {std::move(all), complete};
}

std::size_t levels_for(const Magma& m, const EnumOptions& opt) {
    const auto n = m.size();
    switch (opt.mode) {
        case EnumMode::exhaustive:
            if (n > caps().max_exhaustive)
                throw Error(Errc::cap_exceeded, "exhaustive enumeration is capped at order " +
                                                    std::to_string(caps().max_exhaustive) + " (got " +
                                                    std::to_string(n) + "); use a generated mode");
            return n;
        case EnumMode::generated: return opt.depth ? opt.depth : caps().generated_depth;
        case EnumMode::automatic: return n <= caps().max_exhaustive ? n : caps().generated_depth;
    }
    return n;
}

}  // namespace

Enumeration enumerate_submagmas(const Magma& m, std::optional<Role> required, EnumOptions opt) {
    auto [sets, complete] = closed_sets(m, levels_for(m, opt));
    Enumeration e;
    e.complete = complete;
    for (const auto& s : sets) {
        auto sub = make_sub(m, s);
        if (!required || sub.has(*required)) e.subs.push_back(std::move(sub));
    }
    return e;
}

ElemSet left_translate(const Magma& m, ElementId x, const ElemSet& s) {
    ElemSet out(m.size());
    for (auto v : s.elements()) out.insert(m.op(x, v));
    return out;
}

ElemSet right_translate(const Magma& m, const ElemSet& s, ElementId x) {
    ElemSet out(m.size());
    for (auto v : s.elements()) out.insert(m.op(v, x));
    return out;
}

std::vector<SubMagma> ideals(const Magma& m, Side side) {
    auto e = enumerate_submagmas(m, std::nullopt, {EnumMode::exhaustive, 0});
    const auto n = static_cast<ElementId>(m.size());
    std::vector<SubMagma> out;
    for (auto& sub : e.subs) {
        if (!sub.proper) continue;
        bool left = true, right = true;
        for (ElementId x = 0; x < n && (left || right); ++x) {
            left = left && left_translate(m, x, sub.set).subset_of(sub.set);
            right = right && right_translate(m, sub.set, x).subset_of(sub.set);
        }
        if (left) sub.roles.push_back(Role::left_ideal);
        if (right) sub.roles.push_back(Role::right_ideal);
        if (left && right) sub.roles.push_back(Role::ideal);
        bool keep = side == Side::left ? left : side == Side::right ? right : (left && right);
        if (keep) out.push_back(std::move(sub));
    }
    return out;
}

bool is_normal_subgroup(const Magma& g, const ElemSet& nset) {
    auto e = find_identity(g);
    if (!e) return false;
    const auto n = static_cast<ElementId>(g.size());
    for (ElementId x = 0; x < n; ++x) {
        auto inv = g.ldiv(x, *e);
        for (auto v : nset.elements())
            if (!nset.contains(g.op(g.op(x, v), inv))) return false;
    }
    return true;
}

namespace {

// shared by the loop and groupoid readings: xV = Vx, (Vx)y = V(xy), y(xV) = (yx)V
bool three_conditions(const Magma& m, const ElemSet& v) {
    const auto n = static_cast<ElementId>(m.size());
    for (ElementId x = 0; x < n; ++x) {
        auto vx = right_translate(m, v, x);
        auto xv = left_translate(m, x, v);
        if (!(xv == vx)) return false;
        for (ElementId y = 0; y < n; ++y) {
            if (!(right_translate(m, vx, y) == right_translate(m, v, m.op(x, y)))) return false;
            if (!(left_translate(m, y, xv) == left_translate(m, m.op(y, x), v))) return false;
        }
    }
    return true;
}

}  // namespace

bool is_normal_subloop(const Magma& l, const ElemSet& h) { return three_conditions(l, h); }

bool is_normal_subgroupoid(const Magma& g, const ElemSet& v) { return three_conditions(g, v); }

NormalReport normal_substructures(const Magma& m, NormalFlavor flavor, EnumOptions opt) {
    auto kind = classify(m);
    std::optional<Role> need;
    switch (flavor) {
        case NormalFlavor::subgroup:
            if (kind.label != Label::group) throw Error(Errc::not_a_group, "normal subgroups need a group");
            need = Role::subgroup;
            break;
        case NormalFlavor::subloop:
            if (!(kind.latin_square && kind.has_identity)) throw Error(Errc::not_a_loop, "normal subloops need a loop");
            need = Role::subloop;
            break;
        case NormalFlavor::subgroupoid: break;
    }
    auto e = enumerate_submagmas(m, need, opt);
    NormalReport r;
    r.complete = e.complete;
    for (auto& sub : e.subs) {
        bool ok = flavor == NormalFlavor::subgroup  ? is_normal_subgroup(m, sub.set)
                  : flavor == NormalFlavor::subloop ? is_normal_subloop(m, sub.set)
                                                    : is_normal_subgroupoid(m, sub.set);
        if (!ok) continue;
        sub.roles.push_back(Role::normal);
        if (sub.proper && sub.size() >= 2) r.is_simple = false;
        r.normal.push_back(std::move(sub));
    }
    return r;
}

ConjugacyResult conjugacy(const Magma& m, const ElemSet& h, const ElemSet& k, ConjugacyFlavor flavor) {
    ConjugacyResult r;
    const auto n = static_cast<ElementId>(m.size());
    if (flavor == ConjugacyFlavor::group) {
        if (classify(m).label != Label::group) throw Error(Errc::not_a_group, "group conjugacy needs a group");
        auto e = *find_identity(m);
        for (ElementId g = 0; g < n; ++g) {
            auto inv = m.ldiv(g, e);
            ElemSet img(n);
            for (auto x : k.elements()) img.insert(m.op(m.op(g, x), inv));
            if (img == h) {
                r.conjugate = true;
                r.witness = g;
                return r;
            }
        }
        return r;
    }
    if (h.intersects(k)) throw Error(Errc::overlap_violation, "groupoid conjugacy needs H and K disjoint");
    for (auto x : h.elements()) {
        bool l = left_translate(m, x, k) == h;
        bool rt = right_translate(m, k, x) == h;
        if (l || rt) {
            r.conjugate = true;
            r.witness = x;
            r.left = l;
            r.right = rt;
            return r;
        }
    }
    return r;
}

std::vector<std::pair<ElementId, ElementId>> conjugate_pairs(const Magma& m) {
    const auto n = static_cast<ElementId>(m.size());
    // reach[b] holds every bx and xb
    std::vector<ElemSet> reach(n, ElemSet(n));
    for (ElementId b = 0; b < n; ++b)
        for (ElementId x = 0; x < n; ++x) {
            reach[b].insert(m.op(b, x));
            reach[b].insert(m.op(x, b));
        }
    std::vector<std::pair<ElementId, ElementId>> out;
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = a + 1; b < n; ++b)
            if (reach[b].contains(a) && reach[a].contains(b)) out.emplace_back(a, b);
    return out;
}

bool is_cyclic_set(const Magma& m, const ElemSet& s) {
    for (auto x : s.elements())
        if (closure(m, ElemSet(m.size(), {x})) == s) return true;
    return false;
}

bool is_s_subgroupoid(const Magma& m, const ElemSet& h) {
    auto el = h.elements();
    const auto sz = el.size();
    auto good = [&](const ElemSet& k) { return k.subset_of(h) && k.count() < sz && is_associative(restrict(m, k)); };
    for (std::size_t i = 0; i < el.size(); ++i) {
        auto ci = closure(m, ElemSet(m.size(), {el[i]}));
        if (good(ci)) return true;
        for (std::size_t j = i + 1; j < el.size(); ++j)
            if (good(closure_with(m, ci, el[j]))) return true;
    }
    return false;
}

const SVerdict& SAnalysis::get(std::string_view property) const {
    for (const auto& v : verdicts)
        if (v.property == property) return v;
    throw Error(Errc::invalid_params, "no verdict named " + std::string(property));
}

SAnalysis s_analysis(const Magma& m, EnumOptions opt) { return s_analysis(m, enumerate_submagmas(m, std::nullopt, opt)); }

namespace {

SVerdict from_witnesses(std::string name, const std::vector<ElemSet>& ws) {
    SVerdict v;
    v.property = std::move(name);
    v.permissive = !ws.empty();
    for (const auto& w : ws)
        if (w.count() >= 2) v.witnesses.push_back(w);
    v.strict = !v.witnesses.empty();
    if (!v.strict) v.witnesses = ws;
    return v;
}

// all / some over a witness family, both readings
SVerdict all_some(std::string name, bool want_all, const std::vector<ElemSet>& family,
                  const std::function<bool(const ElemSet&)>& pred) {
    SVerdict v;
    v.property = std::move(name);
    auto judge = [&](bool strict) {
        bool any = false, all = true;
        std::vector<ElemSet> hits;
        for (const auto& w : family) {
            if (strict && w.count() < 2) continue;
            any = true;
            if (pred(w))
                hits.push_back(w);
            else
                all = false;
        }
        bool verdict = want_all ? (any && all) : !hits.empty();
        return std::pair{verdict, hits};
    };
    auto [s, sh] = judge(true);
    auto [p, ph] = judge(false);
    v.strict = s;
    v.permissive = p;
    v.witnesses = s ? sh : ph;
    return v;
}

}  // namespace

SAnalysis s_analysis(const Magma& m, const Enumeration& e) {
    SAnalysis a;
    a.complete = e.complete;
    const auto kind = classify(m);
    const auto n = m.size();
    std::vector<ElemSet> groups, semigroups, proper_closed;
    for (const auto& sub : e.subs) {
        if (!sub.proper) continue;
        proper_closed.push_back(sub.set);
        if (sub.has(Role::subgroup)) groups.push_back(sub.set);
        if (sub.has(Role::subsemigroup)) semigroups.push_back(sub.set);
    }

    auto none = [](std::string name, std::string note) {
        SVerdict v;
        v.property = std::move(name);
        v.note = std::move(note);
        return v;
    };

    // s_semigroup
    if (kind.associative)
        a.verdicts.push_back(from_witnesses("s_semigroup", groups));
    else
        a.verdicts.push_back(none("s_semigroup", "not associative"));
    a.verdicts.push_back(from_witnesses("s_groupoid", semigroups));
    if (kind.latin_square && kind.has_identity)
        a.verdicts.push_back(from_witnesses("s_loop", groups));
    else
        a.verdicts.push_back(none("s_loop", "not a loop"));

    // group witnesses for semigroups, semigroup witnesses otherwise
    const auto& family = kind.associative ? groups : semigroups;
    auto commutative = [&](const ElemSet& s) { return is_commutative(restrict(m, s)); };
    auto cyclic = [&](const ElemSet& s) { return is_cyclic_set(m, s); };
    a.verdicts.push_back(all_some("s_commutative", kind.associative, family, commutative));
    a.verdicts.push_back(all_some("s_weakly_commutative", false, family, commutative));
    a.verdicts.push_back(all_some("s_cyclic", kind.associative, family, cyclic));
    a.verdicts.push_back(all_some("s_weakly_cyclic", false, family, cyclic));
    if (!kind.associative) {
        for (auto& v : a.verdicts)
            if (v.property == "s_commutative" || v.property == "s_cyclic")
                v.note = "groupoid reading: some proper subsemigroup has the property";
    }

    // largest proper subgroups and hyper subsemigroups
    std::size_t best = 0;
    for (const auto& g : groups) best = std::max(best, g.count());
    for (const auto& g : groups)
        if (g.count() == best) a.largest_subgroups.push_back(g);
    for (const auto& s : semigroups)
        for (const auto& g : a.largest_subgroups)
            if (g.subset_of(s) && s.count() > g.count()) {
                a.hyper.push_back(s);
                break;
            }
    const bool s_semigroup = kind.associative && !groups.empty();
    {
        SVerdict v;
        v.property = "s_hyper";
        v.witnesses = a.hyper;
        v.permissive = s_semigroup && !a.hyper.empty();
        v.strict = v.permissive && best >= 2;
        a.verdicts.push_back(v);
        SVerdict s;
        s.property = "s_simple";
        s.permissive = s_semigroup && a.hyper.empty();
        s.strict = s.permissive && best >= 2;
        s.witnesses = a.largest_subgroups;
        s.note = "hyper means strict containment of a largest subgroup";
        a.verdicts.push_back(s);
    }

    // S-normal and S-semi-normal subgroupoids
    {
        SVerdict normal, semi;
        normal.property = "s_normal_groupoid";
        semi.property = "s_semi_normal_groupoid";
        semi.note = "one-sided reading: aV or Va is an S-subgroupoid";
        const bool s_groupoid = !semigroups.empty();
        if (s_groupoid) {
            for (const auto& v : proper_closed) {
                if (!is_s_subgroupoid(m, v)) continue;
                bool both = true, either = true;
                for (ElementId x = 0; x < n && either; ++x) {
                    bool l = is_s_subgroupoid(m, left_translate(m, x, v));
                    bool r = is_s_subgroupoid(m, right_translate(m, v, x));
                    both = both && l && r;
                    either = either && (l || r);
                }
                if (both) normal.witnesses.push_back(v);
                if (either) semi.witnesses.push_back(v);
            }
        }
        normal.strict = normal.permissive = !normal.witnesses.empty();
        semi.strict = semi.permissive = !semi.witnesses.empty();
        a.verdicts.push_back(normal);
        a.verdicts.push_back(semi);
    }

    // s_idempotent: every element of every proper subsemigroup witness is idempotent
    {
        auto idem = [&](const ElemSet& s) {
            for (auto x : s.elements())
                if (m.op(x, x) != x) return false;
            return true;
        };
        auto v = all_some("s_idempotent", true, semigroups, idem);
        v.note = "reading: every proper subsemigroup consists of idempotents";
        a.verdicts.push_back(v);
    }
    return a;
}

}  // namespace mk
