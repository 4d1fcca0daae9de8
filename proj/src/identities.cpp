#include "magmakit/identities.hpp"

#include <unordered_set>

#include "magmakit/config.hpp"
#include "magmakit/error.hpp"

namespace mk {

std::string_view to_string(Identity id) {
    switch (id) {
        case Identity::moufang: return "moufang";
        case Identity::bol: return "bol";
        case Identity::bruck: return "bruck";
        case Identity::wip: return "wip";
        case Identity::left_alternative: return "left_alternative";
        case Identity::right_alternative: return "right_alternative";
        case Identity::alternative: return "alternative";
        case Identity::semi_alternative: return "semi_alternative";
        case Identity::p_groupoid: return "p_groupoid";
        case Identity::idempotent_everywhere: return "idempotent_everywhere";
        case Identity::diassociative: return "diassociative";
        case Identity::power_associative: return "power_associative";
    }
    return "?";
}

const std::vector<Identity>& all_identities() {
    static const std::vector<Identity> all{
        Identity::moufang,           Identity::bol,          Identity::bruck,
        Identity::wip,               Identity::left_alternative, Identity::right_alternative,
        Identity::alternative,       Identity::semi_alternative, Identity::p_groupoid,
        Identity::idempotent_everywhere, Identity::diassociative, Identity::power_associative};
    return all;
}

std::optional<Identity> parse_identity(std::string_view s) {
    for (auto id : all_identities())
        if (to_string(id) == s) return id;
    return std::nullopt;
}

namespace {

using Tuple = std::array<ElementId, 3>;

template <class F>
IdentityResult scan3(const Magma& m, F&& ok) {
    const auto n = static_cast<ElementId>(m.size());
    IdentityResult r;
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId z = 0; z < n; ++z)
                if (!ok(x, y, z)) {
                    r.holds = false;
                    r.counterexample = Tuple{x, y, z};
                    return r;
                }
    return r;
}

template <class F>
IdentityResult scan2(const Magma& m, F&& ok) {
    const auto n = static_cast<ElementId>(m.size());
    IdentityResult r;
    r.arity = 2;
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            if (!ok(x, y)) {
                r.holds = false;
                r.counterexample = Tuple{x, y, 0};
                return r;
            }
    return r;
}

void need_latin(const Magma& m, Identity id) {
    if (!m.latin())
        throw Error(Errc::precondition_unmet, std::string(to_string(id)) + " needs a Latin table (quasigroup)");
}

ElementId need_identity(const Magma& m, Identity id) {
    auto e = find_identity(m);
    if (!e) throw Error(Errc::precondition_unmet, std::string(to_string(id)) + " needs a two-sided identity");
    return *e;
}

// every closure of a small generating set is associative
template <class Seeds>
IdentityResult generated_associative(const Magma& m, Seeds&& seeds, unsigned arity) {
    IdentityResult r;
    r.arity = arity;
    std::unordered_set<ElemSet, ElemSetHash> seen;
    for (const auto& [tuple, seed] : seeds) {
        auto c = closure(m, seed);
        if (!seen.insert(c).second) continue;
        if (!is_associative(restrict(m, c))) {
            r.holds = false;
            r.counterexample = tuple;
            return r;
        }
    }
    return r;
}

}  // namespace

IdentityResult check_identity(const Magma& m, Identity id) {
    auto op = [&m](ElementId a, ElementId b) { return m.op(a, b); };
    switch (id) {
        case Identity::moufang: {
            auto form1 = [&](ElementId x, ElementId y, ElementId z) {
                return op(op(x, y), op(z, x)) == op(op(x, op(y, z)), x);
            };
            if (!(m.latin() && find_identity(m))) {
                auto r = scan3(m, form1);
                r.note = "groupoid form (xy)(zx) = (x(yz))x";
                return r;
            }
            int failed = 0;
            auto r = scan3(m, [&](ElementId x, ElementId y, ElementId z) {
                if (!form1(x, y, z)) return failed = 1, false;
                if (op(op(op(x, y), z), y) != op(x, op(y, op(z, y)))) return failed = 2, false;
                if (op(x, op(y, op(x, z))) != op(op(op(x, y), x), z)) return failed = 3, false;
                return true;
            });
            if (!r.holds) r.note = "form " + std::string(failed == 1 ? "i" : failed == 2 ? "ii" : "iii");
            return r;
        }
        case Identity::bol:
            return scan3(m, [&](ElementId x, ElementId y, ElementId z) {
                return op(op(op(x, y), z), y) == op(x, op(op(y, z), y));
            });
        case Identity::bruck: {
            const auto e = need_identity(m, id);
            auto r = scan3(m, [&](ElementId x, ElementId y, ElementId z) {
                return op(op(x, op(y, x)), z) == op(x, op(y, op(x, z)));
            });
            if (!r.holds) {
                r.note = "bracketing identity";
                return r;
            }
            auto kind = classify(m);
            if (!kind.has_inverses) {
                r.note = "no inverses, bracketing identity only";
                return r;
            }
            const auto n = m.size();
            std::vector<ElementId> inv(n);
            for (ElementId x = 0; x < n; ++x)
                for (ElementId y = 0; y < n; ++y)
                    if (op(x, y) == e && op(y, x) == e) inv[x] = y;
            r = scan2(m, [&](ElementId x, ElementId y) { return inv[op(x, y)] == op(inv[x], inv[y]); });
            r.arity = 3;
            if (!r.holds) r.note = "inverse rule (xy)^-1 = x^-1 y^-1";
            return r;
        }
        case Identity::wip: {
            const auto e = need_identity(m, id);
            return scan3(m, [&](ElementId x, ElementId y, ElementId z) {
                return op(op(x, y), z) != e || op(x, op(y, z)) == e;
            });
        }
        case Identity::left_alternative:
            return scan2(m, [&](ElementId x, ElementId y) { return op(op(x, x), y) == op(x, op(x, y)); });
        case Identity::right_alternative:
            return scan2(m, [&](ElementId x, ElementId y) { return op(op(x, y), y) == op(x, op(y, y)); });
        case Identity::alternative: {
            auto r = scan2(m, [&](ElementId x, ElementId y) {
                return op(op(x, x), y) == op(x, op(x, y)) && op(op(x, y), y) == op(x, op(y, y));
            });
            return r;
        }
        case Identity::semi_alternative:
            need_latin(m, id);
            return scan3(m, [&](ElementId x, ElementId y, ElementId z) {
                return associator(m, x, y, z) == associator(m, y, z, x);
            });
        case Identity::p_groupoid:
            return scan2(m, [&](ElementId x, ElementId y) { return op(op(x, y), x) == op(x, op(y, x)); });
        case Identity::idempotent_everywhere: {
            IdentityResult r;
            r.arity = 1;
            for (ElementId x = 0; x < m.size(); ++x)
                if (op(x, x) != x) {
                    r.holds = false;
                    r.counterexample = Tuple{x, 0, 0};
                    break;
                }
            return r;
        }
        case Identity::diassociative: {
            need_latin(m, id);
            std::vector<std::pair<Tuple, ElemSet>> seeds;
            for (ElementId x = 0; x < m.size(); ++x)
                for (ElementId y = x; y < m.size(); ++y) seeds.push_back({Tuple{x, y, 0}, ElemSet(m.size(), {x, y})});
            return generated_associative(m, seeds, 2);
        }
        case Identity::power_associative: {
            need_latin(m, id);
            std::vector<std::pair<Tuple, ElemSet>> seeds;
            for (ElementId x = 0; x < m.size(); ++x) seeds.push_back({Tuple{x, 0, 0}, ElemSet(m.size(), {x})});
            auto r = generated_associative(m, seeds, 1);
            r.note = "each element's generated sub-magma tested for associativity; power bracketing is not fixed by the definition";
            return r;
        }
    }
    throw Error(Errc::invalid_params, "unknown identity");
}

ElementId associator(const Magma& m, ElementId x, ElementId y, ElementId z) {
    return solve_left(m, m.op(x, m.op(y, z)), m.op(m.op(x, y), z));
}

ElementId commutator(const Magma& m, ElementId x, ElementId y) {
    return solve_left(m, m.op(y, x), m.op(x, y));
}

std::string_view to_string(DerivedRole r) {
    switch (r) {
        case DerivedRole::commutant: return "commutant";
        case DerivedRole::moufang_centre: return "moufang_centre";
        case DerivedRole::left_nucleus: return "left_nucleus";
        case DerivedRole::middle_nucleus: return "middle_nucleus";
        case DerivedRole::right_nucleus: return "right_nucleus";
        case DerivedRole::nucleus: return "nucleus";
        case DerivedRole::centre: return "centre";
        case DerivedRole::commutator_subloop: return "commutator_subloop";
        case DerivedRole::associator_subloop: return "associator_subloop";
    }
    return "?";
}

ElemSet subloop_generated(const Magma& m, const ElemSet& seed) {
    ElemSet set = seed;
    std::vector<ElementId> members = seed.elements();
    for (std::size_t qi = 0; qi < members.size(); ++qi) {
        const auto q = members[qi];
        for (std::size_t bi = 0; bi <= qi; ++bi) {
            const auto b = members[bi];
            for (ElementId p : {m.op(q, b), m.op(b, q), m.ldiv(q, b), m.ldiv(b, q), m.rdiv(q, b), m.rdiv(b, q)}) {
                if (!set.contains(p)) {
                    set.insert(p);
                    members.push_back(p);
                }
            }
        }
    }
    return set;
}

namespace {

void need_loop(const Magma& m, std::string_view what) {
    if (!m.latin() || !find_identity(m)) throw Error(Errc::not_a_loop, std::string(what) + " needs a loop");
}

}  // namespace

DerivedSubset derived_subloop(const Magma& m, DerivedFlavor flavor) {
    need_loop(m, flavor == DerivedFlavor::commutator ? "commutator subloop" : "associator subloop");
    const auto n = static_cast<ElementId>(m.size());
    ElemSet seed(n);
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (flavor == DerivedFlavor::commutator) {
                seed.insert(commutator(m, x, y));
            } else {
                for (ElementId z = 0; z < n; ++z) seed.insert(associator(m, x, y, z));
            }
        }
    DerivedSubset d{flavor == DerivedFlavor::commutator ? DerivedRole::commutator_subloop
                                                        : DerivedRole::associator_subloop,
                    subloop_generated(m, seed), true};
    return d;
}

std::vector<DerivedSubset> commutant_centre_nuclei(const Magma& m) {
    if (!find_identity(m)) throw Error(Errc::no_identity, "commutant and nuclei need an identity element");
    const auto n = static_cast<ElementId>(m.size());
    ElemSet c(n), nl(n), nm(n), nr(n);
    auto op = [&m](ElementId a, ElementId b) { return m.op(a, b); };
    for (ElementId a = 0; a < n; ++a) {
        bool comm = true, l = true, mid = true, r = true;
        for (ElementId x = 0; x < n; ++x) {
            comm = comm && op(a, x) == op(x, a);
            for (ElementId y = 0; y < n && (l || mid || r); ++y) {
                l = l && op(op(a, x), y) == op(a, op(x, y));
                mid = mid && op(op(x, a), y) == op(x, op(a, y));
                r = r && op(op(x, y), a) == op(x, op(y, a));
            }
        }
        if (comm) c.insert(a);
        if (l) nl.insert(a);
        if (mid) nm.insert(a);
        if (r) nr.insert(a);
    }
    ElemSet nuc(n), z(n);
    for (ElementId a = 0; a < n; ++a) {
        if (nl.contains(a) && nm.contains(a) && nr.contains(a)) nuc.insert(a);
        if (nuc.contains(a) && c.contains(a)) z.insert(a);
    }
    std::vector<DerivedSubset> out;
    for (auto [role, s] : {std::pair{DerivedRole::commutant, c}, std::pair{DerivedRole::moufang_centre, c},
                           std::pair{DerivedRole::left_nucleus, nl}, std::pair{DerivedRole::middle_nucleus, nm},
                           std::pair{DerivedRole::right_nucleus, nr}, std::pair{DerivedRole::nucleus, nuc},
                           std::pair{DerivedRole::centre, z}})
        out.push_back({role, s, is_closed(m, s)});
    return out;
}

Magma principal_isotope(const Magma& m, ElementId a, ElementId b) {
    need_loop(m, "principal isotope");
    std::vector<std::string> names = m.names();
    return Magma::from_function(std::move(names),
                                [&](ElementId x, ElementId y) { return m.op(m.rdiv(a, x), m.ldiv(b, y)); });
}

GLoopResult is_g_loop(const Magma& m) {
    need_loop(m, "G-loop test");
    if (m.size() > caps().g_loop_max)
        throw Error(Errc::cap_exceeded, "G-loop test is capped at order " + std::to_string(caps().g_loop_max));
    const auto n = static_cast<ElementId>(m.size());
    GLoopResult r;
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (!find_isomorphism(m, principal_isotope(m, a, b))) {
                r.holds = false;
                r.failing = std::pair{a, b};
                return r;
            }
    return r;
}

}  // namespace mk
