#include "magmakit/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "magmakit/config.hpp"
#include "magmakit/error.hpp"
#include "magmakit/numtheory.hpp"

namespace mk {

std::optional<std::string> ln_param_error(unsigned n, unsigned m) {
    if (n <= 3 || n % 2 == 0) return "n must be odd and greater than 3 (got " + std::to_string(n) + ")";
    if (m <= 1 || m >= n) return "m must satisfy 1 < m < n (got m=" + std::to_string(m) + ")";
    if (auto g = std::gcd(m, n); g != 1) return "gcd(m, n) = " + std::to_string(g) + ", need 1";
    if (auto g = std::gcd(m - 1, n); g != 1) return "gcd(m-1, n) = " + std::to_string(g) + ", need 1";
    return std::nullopt;
}

Magma with_prefix(const Magma& m, std::string_view prefix) {
    if (prefix.empty()) return m;
    std::vector<std::string> names;
    names.reserve(m.size());
    for (const auto& s : m.names()) names.push_back(std::string(prefix) + s);
    return rename(m, std::move(names));
}

Magma ln_loop(LnParams p, std::string_view prefix) {
    if (auto err = ln_param_error(p.n, p.m)) throw Error(Errc::invalid_params, "L_n(m): " + *err);
    const long n = p.n, m = p.m;
    std::vector<std::string> names{std::string(prefix) + "e"};
    for (long i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    // id 0 is e, id i is element i; residue 0 is element n
    return Magma::from_function(std::move(names), [&](ElementId a, ElementId b) -> ElementId {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) return 0;
        long r = ((m * b - (m - 1) * a) % n + n) % n;
        return static_cast<ElementId>(r == 0 ? n : r);
    });
}

std::vector<std::pair<unsigned, Magma>> ln_class(unsigned n) {
    if (n <= 3 || n % 2 == 0) throw Error(Errc::invalid_n, "L_n needs odd n > 3, got " + std::to_string(n));
    std::vector<std::pair<unsigned, Magma>> out;
    for (unsigned m = 2; m < n; ++m)
        if (!ln_param_error(n, m)) out.emplace_back(m, ln_loop({n, m}));
    return out;
}

std::string_view to_string(ZnClass c) {
    switch (c) {
        case ZnClass::z: return "z";
        case ZnClass::zstar: return "zstar";
        case ZnClass::zstarstar: return "zstarstar";
        case ZnClass::zzero: return "zzero";
    }
    return "zzero";
}

std::optional<ZnClass> parse_zn_class(std::string_view s) {
    if (s == "z") return ZnClass::z;
    if (s == "zstar") return ZnClass::zstar;
    if (s == "zstarstar") return ZnClass::zstarstar;
    if (s == "zzero") return ZnClass::zzero;
    return std::nullopt;
}

std::optional<std::string> zn_param_error(const ZnParams& p) {
    if (p.n < 3) return "n must be at least 3 (got " + std::to_string(p.n) + ")";
    if (p.t >= p.n || p.u >= p.n) return "t and u must be residues below n";
    if (p.cls == ZnClass::zzero) return std::nullopt;
    if (p.t == 0 || p.u == 0) return std::string("class ") + std::string(to_string(p.cls)) + " needs t, u nonzero";
    if (p.cls == ZnClass::zstarstar) return std::nullopt;
    if (p.t == p.u) return std::string("class ") + std::string(to_string(p.cls)) + " needs t != u";
    if (p.cls == ZnClass::zstar) return std::nullopt;
    if (std::gcd(p.t, p.u) != 1) return "class z needs gcd(t, u) = 1, got " + std::to_string(std::gcd(p.t, p.u));
    return std::nullopt;
}

ZnClass zn_tightest_class(unsigned n, unsigned t, unsigned u) {
    for (auto c : {ZnClass::z, ZnClass::zstar, ZnClass::zstarstar})
        if (!zn_param_error({n, t, u, c})) return c;
    return ZnClass::zzero;
}

Magma zn_groupoid(const ZnParams& p, std::string_view prefix) {
    if (auto err = zn_param_error(p)) throw Error(Errc::invalid_params, "Z_n(t,u): " + *err);
    std::vector<std::string> names;
    for (unsigned i = 0; i < p.n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    const std::uint64_t n = p.n, t = p.t, u = p.u;
    return Magma::from_function(std::move(names),
                                [&](ElementId a, ElementId b) { return static_cast<ElementId>((t * a + u * b) % n); });
}

std::vector<ZnEntry> zn_class_enumerate(unsigned n, ZnClass cls) {
    std::vector<ZnEntry> out;
    if (n < 3) return out;
    for (unsigned t = 0; t < n; ++t)
        for (unsigned u = 0; u < n; ++u)
            if (!zn_param_error({n, t, u, cls})) out.push_back({t, u, zn_groupoid({n, t, u, cls})});
    return out;
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::cyclic: return "cyclic";
        case Family::dihedral: return "dihedral";
        case Family::symmetric_group: return "symmetric_group";
        case Family::alternating: return "alternating";
        case Family::zn_add: return "zn_add";
        case Family::zn_mul: return "zn_mul";
        case Family::zn_units: return "zn_units";
        case Family::full_transformation: return "full_transformation";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    for (auto f : {Family::cyclic, Family::dihedral, Family::symmetric_group, Family::alternating, Family::zn_add,
                   Family::zn_mul, Family::zn_units, Family::full_transformation})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

namespace {

using Map = std::vector<unsigned>;

// digits are 1-based images; two-digit images switch to the bracket form
std::string map_name(const Map& p) {
    bool small = p.size() <= 9;
    std::string s;
    if (small) {
        for (auto v : p) s += std::to_string(v + 1);
        return s;
    }
    s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i] + 1);
    }
    return s + "]";
}

Magma maps_under_composition(const std::vector<Map>& maps, std::string_view prefix) {
    std::map<Map, ElementId> index;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        index.emplace(maps[i], static_cast<ElementId>(i));
        names.push_back(std::string(prefix) + map_name(maps[i]));
    }
    const auto k = maps.empty() ? 0 : maps[0].size();
    return Magma::from_function(std::move(names), [&](ElementId a, ElementId b) {
        Map c(k);
        for (std::size_t x = 0; x < k; ++x) c[x] = maps[a][maps[b][x]];  // (a∘b)(x) = a(b(x))
        return index.at(c);
    });
}

bool even(const Map& p) {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    return inv % 2 == 0;
}

[[noreturn]] void over_cap(const FamilySpec& s, std::size_t cap) {
    throw Error(Errc::cap_exceeded, std::string(to_string(s.family)) + "(" + std::to_string(s.size) +
                                        ") exceeds the configured cap of " + std::to_string(cap));
}

std::string power_name(std::string_view base, std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return std::string(base);
    return std::string(base) + "^" + std::to_string(k);
}

}  // namespace

Magma standard(const FamilySpec& spec) {
    const auto k = spec.size;
    const std::string& pre = spec.prefix;
    if (k == 0) throw Error(Errc::invalid_params, std::string(to_string(spec.family)) + " needs size >= 1");
    const auto& c = caps();
    switch (spec.family) {
        case Family::cyclic: {
            if (k > c.product_max) over_cap(spec, c.product_max);
            std::vector<std::string> names{pre + "1"};
            for (std::size_t i = 1; i < k; ++i) names.push_back(pre + power_name("g", i));
            return Magma::from_function(std::move(names),
                                        [&](ElementId a, ElementId b) { return static_cast<ElementId>((a + b) % k); });
        }
        case Family::dihedral: {
            if (2 * k > c.product_max) over_cap(spec, c.product_max);
            // id = i*k + j stands for a^i b^j; b^j a = a b^-j
            std::vector<std::string> names;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    std::string s = power_name("a", i) + power_name("b", j);
                    names.push_back(pre + (s.empty() ? "1" : s));
                }
            return Magma::from_function(std::move(names), [&](ElementId x, ElementId y) {
                std::size_t i = x / k, j = x % k, p = y / k, l = y % k;
                std::size_t jj = (p % 2 == 1) ? (k - j) % k : j;
                return static_cast<ElementId>(((i + p) % 2) * k + (jj + l) % k);
            });
        }
        case Family::symmetric_group:
        case Family::alternating: {
            if (k > c.symmetric_max) over_cap(spec, c.symmetric_max);
            std::vector<Map> maps;
            Map p(k);
            std::iota(p.begin(), p.end(), 0u);
            do {
                if (spec.family == Family::symmetric_group || even(p)) maps.push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
            return maps_under_composition(maps, pre);
        }
        case Family::full_transformation: {
            if (k > c.transformation_max) over_cap(spec, c.transformation_max);
            std::vector<Map> maps;
            Map p(k, 0);
            while (true) {
                maps.push_back(p);
                std::size_t i = k;
                while (i > 0 && p[i - 1] == k - 1) p[--i] = 0;
                if (i == 0) break;
                ++p[i - 1];
            }
            return maps_under_composition(maps, pre);
        }
        case Family::zn_add:
        case Family::zn_mul: {
            if (k > c.product_max) over_cap(spec, c.product_max);
            std::vector<std::string> names;
            for (std::size_t i = 0; i < k; ++i) names.push_back(pre + std::to_string(i));
            bool add = spec.family == Family::zn_add;
            return Magma::from_function(std::move(names), [&](ElementId a, ElementId b) {
                return static_cast<ElementId>(add ? (a + b) % k : (std::uint64_t{a} * b) % k);
            });
        }
        case Family::zn_units: {
            if (k > c.product_max) over_cap(spec, c.product_max);
            std::vector<std::uint64_t> units;
            for (std::uint64_t i = 0; i < k; ++i)
                if (std::gcd(i, std::uint64_t{k}) == 1) units.push_back(i);
            if (k == 1) units = {0};
            std::vector<ElementId> pos(k, 0);
            std::vector<std::string> names;
            for (std::size_t i = 0; i < units.size(); ++i) {
                pos[units[i]] = static_cast<ElementId>(i);
                names.push_back(pre + std::to_string(units[i]));
            }
            return Magma::from_function(std::move(names),
                                        [&](ElementId a, ElementId b) { return pos[(units[a] * units[b]) % k]; });
        }
    }
    throw Error(Errc::invalid_params, "unknown family");
}

bool strictly_noncommutative(const Magma& l, ElementId e) {
    const auto n = static_cast<ElementId>(l.size());
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = x + 1; y < n; ++y)
            if (x != e && y != e && l.op(x, y) == l.op(y, x)) return false;
    return true;
}

bool strictly_non_right_alternative(const Magma& l, ElementId e) {
    const auto n = static_cast<ElementId>(l.size());
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            if (x != y && x != e && y != e && l.op(l.op(x, y), y) == l.op(x, l.op(y, y))) return false;
    return true;
}

bool strictly_non_left_alternative(const Magma& l, ElementId e) {
    const auto n = static_cast<ElementId>(l.size());
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            if (x != y && x != e && y != e && l.op(l.op(x, x), y) == l.op(x, l.op(x, y))) return false;
    return true;
}

LnCounts ln_counts(unsigned n) {
    LnCounts c;
    c.n = n;
    auto loops = ln_class(n);
    std::uint64_t total = 1, f = 1;
    for (auto [p, a] : factorize(n)) {
        std::uint64_t pk = 1;
        for (unsigned i = 1; i < a; ++i) pk *= p;
        total *= (p - 2) * pk;
        f *= (p - 3) * pk;
    }
    c.formula_total = total;
    c.formula_strictly_noncommutative = f;
    c.formula_strictly_non_alternative = f;
    c.formula_commutative = ln_param_error(n, (n + 1) / 2) ? 0 : 1;
    for (const auto& [m, l] : loops) {
        ++c.total;
        c.commutative += is_commutative(l);
        c.strictly_noncommutative += strictly_noncommutative(l, 0);
        c.strictly_non_right_alternative += strictly_non_right_alternative(l, 0);
        c.strictly_non_left_alternative += strictly_non_left_alternative(l, 0);
    }
    return c;
}

RegularRepresentation regular_representation(const Magma& g) {
    if (classify(g).label != Label::group) throw Error(Errc::not_a_group, "regular representation needs a group");
    const auto n = g.size();
    std::vector<Map> maps;
    for (std::size_t a = 0; a < n; ++a) {
        Map p(n);
        for (std::size_t x = 0; x < n; ++x) p[x] = g.op(static_cast<ElementId>(a), static_cast<ElementId>(x));
        maps.push_back(std::move(p));
    }
    RegularRepresentation r{maps_under_composition(maps, ""), {}};
    r.embedding.resize(n);
    std::iota(r.embedding.begin(), r.embedding.end(), ElementId{0});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto A = static_cast<ElementId>(a), B = static_cast<ElementId>(b);
            if (r.image.op(r.embedding[A], r.embedding[B]) != r.embedding[g.op(A, B)])
                throw Error(Errc::not_a_group, "left translations do not transport the table");
        }
    return r;
}

}  // namespace mk
