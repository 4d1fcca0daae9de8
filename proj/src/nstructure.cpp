#include "magmakit/nstructure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "magmakit/config.hpp"
#include "magmakit/error.hpp"
#include "magmakit/numtheory.hpp"

namespace mk {

Category category(const AlgebraKind& k) {
    if (k.label == Label::group) return Category::group;
    if (k.label == Label::loop) return Category::loop;
    if (k.associative) return Category::semigroup;
    return Category::groupoid;
}

std::string_view to_string(Category c) {
    switch (c) {
        case Category::group: return "group";
        case Category::loop: return "loop";
        case Category::semigroup: return "semigroup";
        case Category::groupoid: return "groupoid";
    }
    return "?";
}

namespace {
constexpr NKind all_kinds[] = {NKind::n_group,         NKind::n_semigroup,     NKind::n_loop, NKind::n_groupoid,
                               NKind::n_group_semigroup, NKind::n_loop_groupoid, NKind::n_gls,  NKind::n_gsg,
                               NKind::n_lsg,           NKind::n_glsg};
}

std::string_view to_string(NKind k) {
    switch (k) {
        case NKind::n_group: return "n_group";
        case NKind::n_semigroup: return "n_semigroup";
        case NKind::n_loop: return "n_loop";
        case NKind::n_groupoid: return "n_groupoid";
        case NKind::n_group_semigroup: return "n_group_semigroup";
        case NKind::n_loop_groupoid: return "n_loop_groupoid";
        case NKind::n_gls: return "n_gls";
        case NKind::n_gsg: return "n_gsg";
        case NKind::n_lsg: return "n_lsg";
        case NKind::n_glsg: return "n_glsg";
    }
    return "?";
}

std::optional<NKind> parse_nkind(std::string_view s) {
    for (auto k : all_kinds)
        if (to_string(k) == s) return k;
    return std::nullopt;
}

NKind classify_n(const std::vector<Category>& cats) {
    bool g = false, l = false, s = false, r = false;
    for (auto c : cats) {
        g |= c == Category::group;
        l |= c == Category::loop;
        s |= c == Category::semigroup;
        r |= c == Category::groupoid;
    }
    // a group fills a loop slot, so G only changes the label when nothing else absorbs it
    if (g && l && s && r) return NKind::n_glsg;
    if (l && s && r) return NKind::n_lsg;
    if (g && s && r) return NKind::n_gsg;
    if (l && s) return NKind::n_gls;
    if (l && r) return NKind::n_loop_groupoid;
    if (g && r) return NKind::n_loop_groupoid;
    if (g && s) return NKind::n_group_semigroup;
    if (s && r) return NKind::n_groupoid;
    if (r) return NKind::n_groupoid;
    if (l) return NKind::n_loop;
    if (s) return NKind::n_semigroup;
    return NKind::n_group;
}

std::optional<ElementId> NStructure::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ElemSet NStructure::lift(std::size_t slot, const ElemSet& local) const {
    ElemSet out(order());
    const auto& g = comps_.at(slot).global;
    for (auto x : local.elements()) out.insert(g[x]);
    return out;
}

NStructure assemble(std::vector<std::pair<std::string, Magma>> components, std::optional<NKind> declared) {
    if (components.size() < 2)
        throw Error(Errc::invalid_params, "an N-structure needs at least 2 components, got " +
                                              std::to_string(components.size()));
    NStructure ns;
    std::set<std::string> labels;
    std::vector<Category> cats;
    std::size_t total = 0;
    for (auto& [label, m] : components) {
        if (label.empty() || label.find_first_of(" \t:;{},") != std::string::npos)
            throw Error(Errc::invalid_params, "bad component label '" + label + "'");
        if (!labels.insert(label).second) throw Error(Errc::invalid_params, "duplicate component label " + label);
        Component c{label, m, classify(m), {}};
        for (const auto& nm : m.names()) {
            auto [it, fresh] = ns.index_.emplace(nm, static_cast<ElementId>(ns.names_.size()));
            if (fresh) ns.names_.push_back(nm);
            c.global.push_back(it->second);
        }
        total += m.size();
        cats.push_back(category(c.kind));
        ns.comps_.push_back(std::move(c));
    }
    ns.disjoint_ = total == ns.names_.size();

    std::vector<ElemSet> sets;
    for (std::size_t i = 0; i < ns.comps_.size(); ++i)
        sets.push_back(ns.lift(i, ElemSet::full(ns.comps_[i].magma.size())));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (i != j && sets[i].subset_of(sets[j]))
                throw Error(Errc::improper_components, ns.comps_[i].label + " is contained in " + ns.comps_[j].label);

    ns.kind_ = classify_n(cats);
    ns.declared_ = declared;
    if (declared && *declared != ns.kind_)
        throw Error(Errc::insufficient_mix, "expected " + std::string(to_string(*declared)) + " but the components make " +
                                                std::string(to_string(ns.kind_)));
    return ns;
}

std::string_view to_string(Req r) {
    switch (r) {
        case Req::absent: return "-";
        case Req::group: return "g";
        case Req::loop: return "l";
        case Req::semigroup: return "s";
        case Req::closed: return "gr";
    }
    return "?";
}

std::vector<Req> parse_requirement(std::string_view s, std::size_t n) {
    std::vector<Req> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        auto tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok == "-")
            out.push_back(Req::absent);
        else if (tok == "g")
            out.push_back(Req::group);
        else if (tok == "l")
            out.push_back(Req::loop);
        else if (tok == "s")
            out.push_back(Req::semigroup);
        else if (tok == "gr")
            out.push_back(Req::closed);
        else
            throw Error(Errc::parse_error, "bad requirement '" + std::string(tok) + "' (want g, l, s, gr or -)");
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (out.size() != n)
        throw Error(Errc::parse_error, "requirement has " + std::to_string(out.size()) + " slots, structure has " +
                                           std::to_string(n));
    return out;
}

std::vector<Req> default_requirement(const NStructure& ns) {
    std::vector<Req> out;
    for (const auto& c : ns.components()) {
        switch (category(c.kind)) {
            case Category::group: out.push_back(Req::group); break;
            case Category::loop: out.push_back(Req::loop); break;
            case Category::semigroup: out.push_back(Req::semigroup); break;
            case Category::groupoid: out.push_back(Req::closed); break;
        }
    }
    return out;
}

bool satisfies(const SubMagma& s, Req r) {
    switch (r) {
        case Req::absent: return false;
        case Req::group: return s.has(Role::subgroup);
        case Req::loop: return s.has(Role::subloop);
        case Req::semigroup: return s.has(Role::subsemigroup);
        case Req::closed: return true;
    }
    return false;
}

std::size_t SubNStructure::n_order() const {
    std::size_t s = 0;
    for (const auto& x : slots)
        if (x) s += x->count();
    return s;
}

bool SubNStructure::nontrivial() const {
    for (const auto& x : slots)
        if (x && x->count() >= 2) return true;
    return false;
}

namespace {
ElemSet union_of(const NStructure& ns, const SubNStructure& h) {
    ElemSet u(ns.order());
    for (std::size_t i = 0; i < h.slots.size(); ++i)
        if (h.slots[i]) u |= ns.lift(i, *h.slots[i]);
    return u;
}

void check_shape(const NStructure& ns, const SubNStructure& h, bool full) {
    if (h.slots.size() != ns.size())
        throw Error(Errc::invalid_params, "selection has " + std::to_string(h.slots.size()) + " slots, structure has " +
                                              std::to_string(ns.size()));
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (!h.slots[i]) {
            if (full) throw Error(Errc::invalid_params, "slot " + ns.component(i).label + " is absent");
            continue;
        }
        if (h.slots[i]->universe() != ns.component(i).magma.size())
            throw Error(Errc::invalid_params, "slot " + ns.component(i).label + " has the wrong universe");
    }
}

[[noreturn]] void rethrow_cap(const Error& e, const std::string& label) {
    throw Error(e.code(), "component " + label + ": " + e.what());
}
}  // namespace

std::size_t distinct_order(const NStructure& ns, const SubNStructure& h) { return union_of(ns, h).count(); }

bool is_proper(const NStructure& ns, const SubNStructure& h) { return !union_of(ns, h).is_full(); }

bool pseudo_divides(const NStructure& ns, const SubNStructure& h) {
    check_shape(ns, h, false);
    for (std::size_t i = 0; i < ns.size(); ++i)
        if (h.slots[i] && ns.component(i).magma.size() % h.slots[i]->count() != 0) return false;
    return true;
}

SubCheck check_sub(const NStructure& ns, const SubNStructure& h, const std::vector<Req>& req) {
    check_shape(ns, h, false);
    SubCheck c;
    c.n_order = h.n_order();
    c.distinct = distinct_order(ns, h);
    c.proper = is_proper(ns, h);
    c.nontrivial = h.nontrivial();
    c.valid = true;
    for (std::size_t i = 0; i < ns.size() && c.valid; ++i) {
        const auto& comp = ns.component(i);
        if (req.at(i) == Req::absent) {
            if (h.slots[i]) {
                c.valid = false;
                c.reason = comp.label + " should be absent";
            }
            continue;
        }
        if (!h.slots[i] || h.slots[i]->empty()) {
            c.valid = false;
            c.reason = comp.label + " is empty";
        } else if (!is_closed(comp.magma, *h.slots[i])) {
            c.valid = false;
            c.reason = comp.label + " is not closed";
        } else if (!satisfies(make_sub(comp.magma, *h.slots[i]), req[i])) {
            c.valid = false;
            c.reason = comp.label + " does not meet requirement " + std::string(to_string(req[i]));
        }
    }
    return c;
}

SlotSubs slot_subs(const NStructure& ns, const std::vector<Req>& req, EnumOptions opt) {
    if (req.size() != ns.size()) throw Error(Errc::invalid_params, "requirement length differs from N");
    SlotSubs out;
    out.subs.resize(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (req[i] == Req::absent) continue;
        const auto& comp = ns.component(i);
        try {
            auto e = enumerate_submagmas(comp.magma, std::nullopt, opt);
            out.complete = out.complete && e.complete;
            for (auto& s : e.subs)
                if (satisfies(s, req[i])) out.subs[i].push_back(std::move(s));
        } catch (const Error& e) {
            if (e.is_cap()) rethrow_cap(e, comp.label);
            throw;
        }
        if (out.subs[i].empty())
            throw Error(Errc::precondition_unmet, comp.label + " has no subset meeting requirement " +
                                                      std::string(to_string(req[i])));
    }
    return out;
}

namespace {
std::size_t combination_count(const NStructure& ns, const SlotSubs& ss) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        auto k = std::max<std::size_t>(1, ss.subs[i].size());
        if (total > caps().combinations_max / k + 1) return caps().combinations_max + 1;
        total *= k;
    }
    return total;
}

template <class F>
void for_each_combination(const NStructure& ns, const SlotSubs& ss, F&& f) {
    auto total = combination_count(ns, ss);
    if (total > caps().combinations_max) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < ns.size(); ++i)
            if (ss.subs[i].size() > ss.subs[worst].size()) worst = i;
        throw Error(Errc::cap_exceeded, "more than " + std::to_string(caps().combinations_max) +
                                            " sub-N-structure combinations (largest slot " +
                                            ns.component(worst).label + " with " +
                                            std::to_string(ss.subs[worst].size()) + " candidates)");
    }
    const auto n = ns.size();
    std::vector<std::size_t> idx(n, 0);
    SubNStructure h;
    h.slots.resize(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i)
            h.slots[i] = ss.subs[i].empty() ? std::nullopt : std::optional<ElemSet>(ss.subs[i][idx[i]].set);
        f(h);
        std::size_t i = n;
        while (i > 0) {
            --i;
            auto k = std::max<std::size_t>(1, ss.subs[i].size());
            if (++idx[i] < k) break;
            idx[i] = 0;
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}
}  // namespace

std::vector<SubNStructure> find_sub_nstructures(const NStructure& ns, const std::vector<Req>& req, EnumOptions opt) {
    auto ss = slot_subs(ns, req, opt);
    std::vector<SubNStructure> out;
    for_each_combination(ns, ss, [&](const SubNStructure& h) { out.push_back(h); });
    return out;
}

Achievable achievable_orders(const NStructure& ns, const std::vector<Req>& req, EnumOptions opt) {
    return achievable_orders(ns, slot_subs(ns, req, opt));
}

Achievable achievable_orders(const NStructure& ns, const SlotSubs& ss) {
    Achievable a;
    a.complete = ss.complete;
    std::map<std::size_t, SubNStructure> found;
    if (ns.disjoint()) {
        // with disjoint namespaces properness only depends on which slots are full, so a DP over
        // (N-order, nontrivial, every slot full) is exact
        using Key = std::tuple<std::size_t, bool, bool>;
        std::map<Key, std::vector<int>> states{{Key{0, false, true}, {}}};
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const auto gi = ns.component(i).magma.size();
            std::map<std::pair<std::size_t, bool>, int> reps;
            for (std::size_t k = 0; k < ss.subs[i].size(); ++k) {
                auto sz = ss.subs[i][k].size();
                reps.emplace(std::pair{sz, sz == gi}, static_cast<int>(k));
            }
            std::map<Key, std::vector<int>> next;
            for (const auto& [key, choice] : states) {
                auto [sum, nontrivial, full] = key;
                if (ss.subs[i].empty()) {
                    auto c = choice;
                    c.push_back(-1);
                    next.emplace(Key{sum, nontrivial, false}, std::move(c));
                    continue;
                }
                for (const auto& [sf, k] : reps) {
                    auto c = choice;
                    c.push_back(k);
                    next.emplace(Key{sum + sf.first, nontrivial || sf.first >= 2, full && sf.second}, std::move(c));
                }
            }
            states = std::move(next);
        }
        for (const auto& [key, choice] : states) {
            auto [sum, nontrivial, full] = key;
            if (!nontrivial || full || found.count(sum)) continue;
            SubNStructure h;
            for (std::size_t i = 0; i < ns.size(); ++i)
                h.slots.push_back(choice[i] < 0 ? std::nullopt
                                                : std::optional<ElemSet>(ss.subs[i][choice[i]].set));
            found.emplace(sum, std::move(h));
        }
    } else {
        for_each_combination(ns, ss, [&](const SubNStructure& h) {
            auto o = h.n_order();
            if (found.count(o) || !h.nontrivial() || !is_proper(ns, h)) return;
            found.emplace(o, h);
        });
    }
    for (auto& [o, h] : found) a.orders.push_back({o, std::move(h)});
    return a;
}

std::string_view to_string(LagrangeClass c) {
    switch (c) {
        case LagrangeClass::lagrange: return "lagrange";
        case LagrangeClass::weakly_lagrange: return "weakly_lagrange";
        case LagrangeClass::lagrange_free: return "lagrange_free";
    }
    return "?";
}

LagrangeReport lagrange_analysis(const NStructure& ns, const Achievable& a) {
    LagrangeReport r;
    r.order = ns.order();
    r.complete = a.complete;
    std::size_t dividing = 0;
    for (const auto& w : a.orders) {
        bool d = r.order % w.order == 0;
        dividing += d;
        r.subs.emplace_back(w, d);
    }
    if (dividing == 0)
        r.cls = LagrangeClass::lagrange_free;
    else if (dividing == r.subs.size())
        r.cls = LagrangeClass::lagrange;
    else
        r.cls = LagrangeClass::weakly_lagrange;
    return r;
}

std::string_view to_string(SylowStatus s) {
    switch (s) {
        case SylowStatus::sylow: return "sylow";
        case SylowStatus::super_sylow: return "super_sylow";
        case SylowStatus::weak_sylow: return "weak_sylow";
        case SylowStatus::pseudo_sylow: return "pseudo_sylow";
    }
    return "?";
}

namespace {
std::size_t valuation(std::size_t n, std::size_t p) {
    std::size_t k = 0;
    while (n && n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}
}  // namespace

SylowReport sylow_analysis(const NStructure& ns, const Achievable& a) {
    SylowReport r;
    r.complete = a.complete;
    for (const auto& w : a.orders) {
        std::uint64_t p = 0;
        if (!is_prime_power(w.order, &p)) continue;
        SylowFinding f;
        f.p = p;
        f.exponent = valuation(w.order, p);
        f.alpha = valuation(ns.order(), p);
        if (f.alpha == 0)
            f.status = SylowStatus::pseudo_sylow;
        else if (f.exponent == f.alpha)
            f.status = SylowStatus::sylow;
        else if (f.exponent > f.alpha)
            f.status = SylowStatus::super_sylow;
        else
            f.status = SylowStatus::weak_sylow;
        f.witness = w;
        r.findings.push_back(std::move(f));
    }
    std::stable_sort(r.findings.begin(), r.findings.end(), [](const SylowFinding& x, const SylowFinding& y) {
        return std::tie(x.p, x.exponent) < std::tie(y.p, y.exponent);
    });
    return r;
}

std::optional<TupleSylow> tuple_sylow(const NStructure& ns, const std::vector<std::size_t>& primes) {
    if (primes.size() != ns.size())
        throw Error(Errc::invalid_params, "need one prime per component (" + std::to_string(ns.size()) + ")");
    TupleSylow t;
    t.primes = primes;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (!is_prime(primes[i])) throw Error(Errc::invalid_params, std::to_string(primes[i]) + " is not prime");
        const auto& comp = ns.component(i);
        std::size_t target = 1;
        for (std::size_t k = valuation(comp.magma.size(), primes[i]); k > 0; --k) target *= primes[i];
        std::optional<ElemSet> hit;
        try {
            auto e = enumerate_submagmas(comp.magma, Role::subgroup);
            for (const auto& s : e.subs)
                if (s.size() == target) {
                    hit = s.set;
                    break;
                }
        } catch (const Error& e) {
            if (e.is_cap()) rethrow_cap(e, comp.label);
            throw;
        }
        if (!hit) return std::nullopt;
        t.slot_orders.push_back(target);
        t.witness.slots.push_back(hit);
        t.n_order += target;
    }
    return t;
}

std::string_view to_string(CauchyClass c) {
    switch (c) {
        case CauchyClass::cauchy: return "cauchy";
        case CauchyClass::weakly_cauchy: return "weakly_cauchy";
        case CauchyClass::cauchy_free: return "cauchy_free";
    }
    return "?";
}

CauchyReport cauchy_analysis(const NStructure& ns) {
    CauchyReport r;
    const auto o = ns.order();
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& comp = ns.component(i);
        const auto n = comp.magma.size();
        if (!comp.kind.has_identity) {
            r.ineligible += n;
            continue;
        }
        for (ElementId x = 0; x < n; ++x) {
            auto ord = element_order(comp.magma, x);
            if (!ord.is_periodic() || ord.period < 2) {
                ++r.ineligible;
                continue;
            }
            r.eligible.push_back({i, x, ord.period, o % ord.period == 0, n % ord.period == 0});
        }
    }
    auto hits = std::count_if(r.eligible.begin(), r.eligible.end(), [](const auto& e) { return e.cauchy; });
    if (static_cast<std::size_t>(hits) == r.eligible.size())
        r.cls = CauchyClass::cauchy;
    else if (hits > 0)
        r.cls = CauchyClass::weakly_cauchy;
    else
        r.cls = CauchyClass::cauchy_free;
    return r;
}

CosetResult coset(const NStructure& ns, const SubNStructure& h, std::string_view a, CosetSide side) {
    check_shape(ns, h, true);
    if (!ns.find(a)) throw Error(Errc::element_absent, std::string(a) + " is in no component");
    auto build = [&](CosetSide sd) {
        CosetResult r;
        r.set = ElemSet(ns.order());
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const auto& m = ns.component(i).magma;
            auto x = m.find(a);
            ElemSet s = *h.slots[i];
            if (x) s = sd == CosetSide::left ? left_translate(m, *x, s) : right_translate(m, s, *x);
            r.translated.push_back(x.has_value());
            r.set |= ns.lift(i, s);
            r.slots.push_back(std::move(s));
        }
        return r;
    };
    auto r = build(side);
    auto other = build(side == CosetSide::left ? CosetSide::right : CosetSide::left);
    r.s_coset = r.set == other.set;
    return r;
}

ProductResult product_sub(const NStructure& ns, const SubNStructure& h, const SubNStructure& k) {
    check_shape(ns, h, true);
    check_shape(ns, k, true);
    ProductResult r;
    r.commute = r.sub = true;
    auto req = default_requirement(ns);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& m = ns.component(i).magma;
        ElemSet hk(m.size()), kh(m.size());
        for (auto x : h.slots[i]->elements())
            for (auto y : k.slots[i]->elements()) {
                hk.insert(m.op(x, y));
                kh.insert(m.op(y, x));
            }
        r.commute = r.commute && hk == kh;
        r.sub = r.sub && is_closed(m, hk) && satisfies(make_sub(m, hk), req[i]);
        r.hk.push_back(std::move(hk));
        r.kh.push_back(std::move(kh));
    }
    return r;
}

NStructure quotient(const NStructure& ns, const SubNStructure& normal) {
    check_shape(ns, normal, true);
    std::vector<std::pair<std::string, Magma>> parts;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& comp = ns.component(i);
        const auto& m = comp.magma;
        if (comp.kind.label != Label::group)
            throw Error(Errc::not_a_group_component, comp.label + " is a " + std::string(to_string(comp.kind.label)));
        const auto& nset = *normal.slots[i];
        if (!is_normal_subgroup(m, nset)) throw Error(Errc::not_normal, "slot " + comp.label);
        const auto n = m.size();
        std::vector<int> cls(n, -1);
        std::vector<ElementId> reps;
        for (ElementId x = 0; x < n; ++x) {
            if (cls[x] >= 0) continue;
            for (auto y : left_translate(m, x, nset).elements()) cls[y] = static_cast<int>(reps.size());
            reps.push_back(x);
        }
        std::vector<std::string> names;
        for (auto r : reps) names.push_back(comp.label + ".[" + m.name(r) + "]");
        auto q = Magma::from_function(std::move(names), [&](ElementId a, ElementId b) {
            return static_cast<ElementId>(cls[m.op(reps[a], reps[b])]);
        });
        parts.emplace_back(comp.label, std::move(q));
    }
    return assemble(std::move(parts));
}

std::vector<NormalizerSlot> normalizer(const NStructure& ns, std::string_view a) {
    std::vector<NormalizerSlot> out;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& m = ns.component(i).magma;
        auto x = m.find(a);
        if (!x) continue;
        NormalizerSlot s;
        s.slot = i;
        s.set = ElemSet(m.size());
        for (ElementId y = 0; y < m.size(); ++y)
            if (m.op(y, *x) == m.op(*x, y)) s.set.insert(y);
        s.subgroup = is_closed(m, s.set) && make_sub(m, s.set).has(Role::subgroup);
        auto g = std::gcd(m.size(), s.set.count());
        s.index_num = m.size() / g;
        s.index_den = s.set.count() / g;
        out.push_back(std::move(s));
    }
    if (out.empty()) throw Error(Errc::element_absent, std::string(a) + " is in no component");
    return out;
}

ConjugateResult conjugate_subs(const NStructure& ns, const SubNStructure& h, const SubNStructure& k) {
    check_shape(ns, h, true);
    check_shape(ns, k, true);
    ConjugateResult r;
    r.conjugate = true;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& comp = ns.component(i);
        if (comp.kind.label != Label::group)
            throw Error(Errc::not_a_group_component, comp.label + " is a " + std::string(to_string(comp.kind.label)));
        auto c = conjugacy(comp.magma, *h.slots[i], *k.slots[i], ConjugacyFlavor::group);
        r.conjugate = r.conjugate && c.conjugate;
        r.witnesses.push_back(c.witness);
    }
    return r;
}

HomResult verify_homomorphism(const NStructure& src, const NStructure& dst,
                              const std::vector<std::map<std::string, std::string>>& maps) {
    if (src.size() != dst.size())
        throw Error(Errc::kind_mismatch, "source has " + std::to_string(src.size()) + " components, target has " +
                                             std::to_string(dst.size()));
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto a = category(src.component(i).kind), b = category(dst.component(i).kind);
        if (a != b)
            throw Error(Errc::kind_mismatch, src.component(i).label + " is a " + std::string(to_string(a)) + " but " +
                                                 dst.component(i).label + " is a " + std::string(to_string(b)));
    }
    if (maps.size() != src.size())
        throw Error(Errc::map_incomplete, "need one map per component (" + std::to_string(src.size()) + ")");
    HomResult r;
    r.homomorphism = true;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto& s = src.component(i);
        const auto& d = dst.component(i).magma;
        std::vector<ElementId> phi;
        for (const auto& nm : s.magma.names()) {
            auto it = maps[i].find(nm);
            if (it == maps[i].end()) throw Error(Errc::map_incomplete, s.label + ": no image for " + nm);
            auto y = d.find(it->second);
            if (!y) throw Error(Errc::map_incomplete, s.label + ": image " + it->second + " is not in the target");
            phi.push_back(*y);
        }
        HomSlot h;
        h.homomorphism = true;
        const auto n = s.magma.size();
        for (ElementId x = 0; x < n && h.homomorphism; ++x)
            for (ElementId y = 0; y < n; ++y)
                if (phi[s.magma.op(x, y)] != d.op(phi[x], phi[y])) {
                    h.homomorphism = false;
                    h.counterexample = std::pair{x, y};
                    break;
                }
        std::set<ElementId> image(phi.begin(), phi.end());
        h.injective = image.size() == n;
        h.surjective = image.size() == d.size();
        r.homomorphism = r.homomorphism && h.homomorphism;
        r.slots.push_back(h);
    }
    return r;
}

const NVerdict& SmarandacheNReport::get(std::string_view property) const {
    for (const auto& v : verdicts)
        if (v.property == property) return v;
    throw Error(Errc::invalid_params, "no verdict named " + std::string(property));
}

namespace {
constexpr std::size_t listing_cap = 32;

void inverse_scan(const Magma& m, ElementId e, std::size_t slot, SmarandacheNReport& r) {
    const auto n = m.size();
    for (ElementId x = 0; x < n; ++x) {
        if (x == e) continue;
        for (ElementId y = 0; y < n; ++y) {
            if (m.op(x, y) != e) continue;
            for (ElementId a = 0; a < n; ++a) {
                if (a == e || a == x || a == y || m.op(x, a) != y) continue;
                for (ElementId b = 0; b < n; ++b) {
                    if (b == e || b == x || b == y || m.op(y, b) != x || m.op(a, b) != e) continue;
                    ++r.inverse_count;
                    if (r.inverse_pairs.size() < listing_cap) r.inverse_pairs.push_back({slot, x, y, a, b});
                    goto next_y;  // one related pair per (x, y)
                }
            }
        next_y:;
        }
    }
}

void conjugate_scan(const Magma& m, std::size_t slot, SmarandacheNReport& r) {
    const auto n = m.size();
    // twisted[a][x]: some b with ab = bx, kept with its first witness
    std::vector<std::vector<int>> twisted(n, std::vector<int>(n, -1));
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b) {
            auto ab = m.op(a, b);
            for (ElementId x = 0; x < n; ++x)
                if (twisted[a][x] < 0 && m.op(b, x) == ab) twisted[a][x] = static_cast<int>(b);
        }
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (x == y) continue;
            for (ElementId a = 0; a < n; ++a) {
                if (m.op(x, a) != m.op(a, y) || twisted[a][x] < 0 || twisted[a][y] < 0) continue;
                ++r.conjugate_count;
                if (r.conjugates.size() < listing_cap)
                    r.conjugates.push_back({slot, x, y, a, static_cast<ElementId>(twisted[a][x]),
                                            static_cast<ElementId>(twisted[a][y])});
                break;
            }
        }
}

NVerdict verdict(std::string name, bool holds, std::string note = {}) {
    return NVerdict{std::move(name), holds, std::move(note), std::nullopt};
}
}  // namespace

SmarandacheNReport smarandache_n_analysis(const NStructure& ns, EnumOptions opt) {
    SmarandacheNReport r;
    const auto N = ns.size();
    std::vector<Category> cat;
    std::vector<bool> s_semi(N), s_groupoid(N), s_loop(N);
    for (std::size_t i = 0; i < N; ++i) {
        const auto& comp = ns.component(i);
        try {
            r.slots.push_back(s_analysis(comp.magma, opt));
        } catch (const Error& e) {
            if (e.is_cap()) rethrow_cap(e, comp.label);
            throw;
        }
        const auto& a = r.slots.back();
        r.complete = r.complete && a.complete;
        cat.push_back(category(comp.kind));
        s_semi[i] = cat[i] == Category::semigroup && a.get("s_semigroup").strict;
        s_groupoid[i] = !comp.kind.associative && a.get("s_groupoid").strict;
        s_loop[i] = cat[i] == Category::loop && a.get("s_loop").strict;
    }
    auto count = [&](auto pred) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < N; ++i) c += pred(i);
        return c;
    };
    auto is_group = [&](std::size_t i) { return cat[i] == Category::group; };

    const bool s_n_group =
        count([&](std::size_t i) { return is_group(i) || s_semi[i]; }) == N && count([&](std::size_t i) { return s_semi[i]; }) > 0;
    r.verdicts.push_back(verdict("s_n_group", s_n_group, "every slot a group or an S-semigroup, at least one S-semigroup"));

    r.verdicts.push_back(verdict(
        "s_n_group_semigroup",
        count([&](std::size_t i) { return is_group(i) || cat[i] == Category::semigroup; }) == N &&
            count(is_group) > 0 && count([&](std::size_t i) { return s_semi[i]; }) > 0,
        "associative slots, at least one group and one S-semigroup"));

    {
        auto v = verdict("s_n_loop", false);
        if (ns.kind() != NKind::n_loop) {
            v.note = "not an N-loop";
        } else {
            std::vector<Req> all_g(N, Req::group);
            auto a = achievable_orders(ns, all_g, opt);
            r.complete = r.complete && a.complete;
            if (!a.orders.empty()) {
                v.holds = true;
                v.witness = a.orders.back().witness;
                v.note = "proper nontrivial sub-N-group";
            } else {
                v.note = "no proper nontrivial sub-N-group";
            }
        }
        r.verdicts.push_back(std::move(v));
    }

    r.verdicts.push_back(verdict("s_n_groupoid", count([&](std::size_t i) { return s_groupoid[i] || s_semi[i]; }) == N,
                                 "every slot an S-groupoid or an S-semigroup"));

    r.verdicts.push_back(verdict("s_n_glsg",
                                 ns.kind() == NKind::n_glsg && count([&](std::size_t i) { return s_loop[i]; }) > 0 &&
                                     count([&](std::size_t i) { return s_semi[i]; }) > 0 &&
                                     count([&](std::size_t i) { return cat[i] == Category::groupoid && s_groupoid[i]; }) > 0,
                                 "some S-loop, some S-semigroup and some S-groupoid slot"));

    // group slots carry the property themselves, S-semigroup slots through their subgroup witnesses
    auto lifted = [&](const char* name, const char* slot_verdict, bool cyclic) {
        bool ok = s_n_group;
        for (std::size_t i = 0; i < N && ok; ++i) {
            const auto& m = ns.component(i).magma;
            if (is_group(i))
                ok = cyclic ? is_cyclic_set(m, ElemSet::full(m.size())) : ns.component(i).kind.commutative;
            else
                ok = r.slots[i].get(slot_verdict).strict;
        }
        return verdict(name, ok, s_n_group ? "" : "not an S-N-group");
    };
    r.verdicts.push_back(lifted("s_commutative", "s_commutative", false));
    r.verdicts.push_back(lifted("s_weakly_commutative", "s_weakly_commutative", false));
    r.verdicts.push_back(lifted("s_cyclic", "s_cyclic", true));
    r.verdicts.push_back(lifted("s_weakly_cyclic", "s_weakly_cyclic", true));

    // hyper: whole group, largest subgroup of an S-semigroup, largest proper ideal of a plain semigroup
    {
        auto v = verdict("s_hyper", true, "groups whole, S-semigroups by a largest subgroup, semigroups by a largest ideal");
        SubNStructure p;
        for (std::size_t i = 0; i < N && v.holds; ++i) {
            const auto& m = ns.component(i).magma;
            if (is_group(i)) {
                p.slots.push_back(ElemSet::full(m.size()));
            } else if (s_semi[i]) {
                p.slots.push_back(r.slots[i].largest_subgroups.front());
            } else if (cat[i] == Category::semigroup) {
                std::vector<SubMagma> ids;
                try {
                    ids = ideals(m, Side::two_sided);
                } catch (const Error& e) {
                    if (!e.is_cap()) throw;
                    r.complete = false;
                }
                if (ids.empty()) {
                    v.holds = false;
                    v.note = ns.component(i).label + " has no proper ideal found";
                } else {
                    p.slots.push_back(ids.back().set);
                }
            } else {
                v.holds = false;
                v.note = ns.component(i).label + " is not associative";
            }
        }
        if (v.holds) {
            v.holds = is_proper(ns, p);
            if (!v.holds) v.note = "assembled set is not proper";
            v.witness = std::move(p);
        }
        r.verdicts.push_back(std::move(v));
    }
    // P-hyper: a largest maximal subgroup per group slot, a largest group per S-semigroup slot
    {
        auto v = verdict("p_hyper", true, "groups by a largest maximal subgroup, S-semigroups by a largest group");
        SubNStructure p;
        for (std::size_t i = 0; i < N && v.holds; ++i) {
            if ((is_group(i) || s_semi[i]) && !r.slots[i].largest_subgroups.empty()) {
                p.slots.push_back(r.slots[i].largest_subgroups.front());
            } else {
                v.holds = false;
                v.note = ns.component(i).label + " is neither a group with a proper subgroup nor an S-semigroup";
            }
        }
        if (v.holds) v.witness = std::move(p);
        r.verdicts.push_back(std::move(v));
    }

    for (std::size_t i = 0; i < N; ++i) {
        const auto& comp = ns.component(i);
        if (comp.kind.identity) inverse_scan(comp.magma, *comp.kind.identity, i, r);
        conjugate_scan(comp.magma, i, r);
    }
    r.verdicts.push_back(verdict("s_inverse_pairs", r.inverse_count > 0));
    r.verdicts.push_back(verdict("s_conjugates", r.conjugate_count > 0));
    return r;
}

std::string format_sub(const NStructure& ns, const SubNStructure& h) {
    std::string out;
    for (std::size_t i = 0; i < h.slots.size(); ++i) {
        if (!out.empty()) out += ';';
        const auto& comp = ns.component(i);
        out += comp.label + ':';
        if (!h.slots[i]) {
            out += '-';
            continue;
        }
        out += '{';
        bool first = true;
        for (auto x : h.slots[i]->elements()) {
            if (!first) out += ',';
            first = false;
            out += comp.magma.name(x);
        }
        out += '}';
    }
    return out;
}

}  // namespace mk
