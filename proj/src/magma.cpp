#include "magmakit/magma.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "magmakit/config.hpp"
#include "magmakit/error.hpp"
#include "magmakit/kernels.hpp"

namespace mk {

struct Magma::Division {
    std::once_flag once;
    std::vector<ElementId> left;   // left[a*n + b] = x with a∘x = b
    std::vector<ElementId> right;  // right[a*n + b] = y with y∘a = b
};

namespace {

bool has_space(const std::string& s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

bool compute_latin(std::size_t n, const std::vector<ElementId>& t) {
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t mark = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ++mark;
        for (std::size_t j = 0; j < n; ++j) {
            auto v = t[i * n + j];
            if (stamp[v] == mark) return false;
            stamp[v] = mark;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        ++mark;
        for (std::size_t i = 0; i < n; ++i) {
            auto v = t[i * n + j];
            if (stamp[v] == mark) return false;
            stamp[v] = mark;
        }
    }
    return true;
}

}  // namespace

Magma::Magma(std::vector<std::string> names, std::vector<ElementId> table)
    : n_(names.size()), names_(std::move(names)), table_(std::move(table)), div_(std::make_shared<Division>()) {
    if (n_ == 0) throw Error(Errc::invalid_magma, "a magma needs at least one element");
    if (table_.size() != n_ * n_)
        throw Error(Errc::invalid_magma, "table has " + std::to_string(table_.size()) + " entries, expected " +
                                             std::to_string(n_ * n_));
    index_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const auto& s = names_[i];
        if (s.empty() || has_space(s)) throw Error(Errc::invalid_magma, "bad element name '" + s + "'");
        if (!index_.emplace(s, static_cast<ElementId>(i)).second)
            throw Error(Errc::invalid_magma, "duplicate element name '" + s + "'");
    }
    for (auto v : table_)
        if (v >= n_) throw Error(Errc::invalid_magma, "table entry " + std::to_string(v) + " out of range");
    latin_ = compute_latin(n_, table_);
}

std::optional<ElementId> Magma::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ElementId Magma::id(std::string_view name) const {
    auto x = find(name);
    if (!x) throw Error(Errc::element_absent, "no element named '" + std::string(name) + "'");
    return *x;
}

const Magma::Division& Magma::division() const {
    std::call_once(div_->once, [this] {
        div_->left.assign(n_ * n_, 0);
        div_->right.assign(n_ * n_, 0);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t x = 0; x < n_; ++x) {
                div_->left[a * n_ + table_[a * n_ + x]] = static_cast<ElementId>(x);
                div_->right[a * n_ + table_[x * n_ + a]] = static_cast<ElementId>(x);
            }
    });
    return *div_;
}

namespace {

[[noreturn]] void not_latin(const Magma& m) {
    const auto n = m.size();
    std::vector<int> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < n; ++j)
            if (seen[m.op(static_cast<ElementId>(i), static_cast<ElementId>(j))]++)
                throw Error(Errc::not_a_quasigroup, "row " + m.name(static_cast<ElementId>(i)) + " repeats an entry");
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
            if (seen[m.op(static_cast<ElementId>(i), static_cast<ElementId>(j))]++)
                throw Error(Errc::not_a_quasigroup,
                            "column " + m.name(static_cast<ElementId>(j)) + " repeats an entry");
    }
    throw Error(Errc::not_a_quasigroup, "table is not a Latin square");
}

}  // namespace

ElementId Magma::ldiv(ElementId a, ElementId b) const {
    if (!latin_) not_latin(*this);
    return division().left[a * n_ + b];
}

ElementId Magma::rdiv(ElementId a, ElementId b) const {
    if (!latin_) not_latin(*this);
    return division().right[a * n_ + b];
}

std::string_view to_string(Label l) {
    switch (l) {
        case Label::group: return "group";
        case Label::monoid: return "monoid";
        case Label::semigroup: return "semigroup";
        case Label::loop: return "loop";
        case Label::quasigroup: return "quasigroup";
        case Label::magma: return "groupoid";
    }
    return "groupoid";
}

bool is_associative(const Magma& m) { return !kernels::first_nonassociative(m.table().data(), m.size()); }

bool is_commutative(const Magma& m) { return !kernels::first_noncommuting(m.table().data(), m.size()); }

std::optional<ElementId> find_identity(const Magma& m) {
    const auto n = m.size();
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            auto E = static_cast<ElementId>(e), A = static_cast<ElementId>(a);
            ok = m.op(E, A) == A && m.op(A, E) == A;
        }
        if (ok) return static_cast<ElementId>(e);
    }
    return std::nullopt;
}

AlgebraKind classify(const Magma& m) {
    AlgebraKind k;
    const auto n = m.size();
    k.associative = is_associative(m);
    k.commutative = is_commutative(m);
    k.latin_square = m.latin();
    for (std::size_t e = 0; e < n; ++e) {
        auto E = static_cast<ElementId>(e);
        bool left = true, right = true;
        for (std::size_t a = 0; a < n && (left || right); ++a) {
            auto A = static_cast<ElementId>(a);
            left = left && m.op(E, A) == A;
            right = right && m.op(A, E) == A;
        }
        if (left) k.left_identities.push_back(E);
        if (right) k.right_identities.push_back(E);
        if (left && right) k.identity = E;
    }
    k.has_identity = k.identity.has_value();
    if (k.has_identity) {
        const auto e = *k.identity;
        k.has_inverses = true;
        for (std::size_t x = 0; x < n && k.has_inverses; ++x) {
            bool found = false;
            for (std::size_t y = 0; y < n && !found; ++y) {
                auto X = static_cast<ElementId>(x), Y = static_cast<ElementId>(y);
                found = m.op(X, Y) == e && m.op(Y, X) == e;
            }
            k.has_inverses = found;
        }
    }
    if (k.associative) {
        if (k.latin_square && k.has_identity)
            k.label = Label::group;
        else if (k.has_identity)
            k.label = Label::monoid;
        else
            k.label = Label::semigroup;
    } else if (k.latin_square) {
        k.label = k.has_identity ? Label::loop : Label::quasigroup;
    } else {
        k.label = Label::magma;
    }
    return k;
}

ElementId solve_left(const Magma& m, ElementId a, ElementId b) { return m.ldiv(a, b); }

ElementId solve_right(const Magma& m, ElementId a, ElementId b) { return m.rdiv(a, b); }

std::string to_string(const OrderResult& r) {
    switch (r.kind) {
        case OrderResult::Kind::periodic: return "periodic:" + std::to_string(r.period);
        case OrderResult::Kind::idempotent: return "idempotent";
        case OrderResult::Kind::no_identity_return:
            return "no_identity_return:tail=" + std::to_string(r.tail) + ",cycle=" + std::to_string(r.cycle);
    }
    return "?";
}

OrderResult element_order(const Magma& m, ElementId x) {
    OrderResult r;
    const auto e = find_identity(m);
    if (e && x == *e) {
        r.kind = OrderResult::Kind::periodic;
        r.period = 1;
        return r;
    }
    if (m.op(x, x) == x) {
        r.kind = OrderResult::Kind::idempotent;
        return r;
    }
    std::vector<std::size_t> first_seen(m.size(), 0);  // power index, 0 = unseen
    ElementId p = x;
    first_seen[p] = 1;
    for (std::size_t k = 2;; ++k) {
        p = m.op(p, x);
        if (e && p == *e) {
            r.kind = OrderResult::Kind::periodic;
            r.period = k;
            return r;
        }
        if (first_seen[p]) {
            r.kind = OrderResult::Kind::no_identity_return;
            r.tail = first_seen[p];
            r.cycle = k - first_seen[p];
            return r;
        }
        first_seen[p] = k;
    }
}

ElementId power(const Magma& m, ElementId x, std::size_t k) {
    ElementId p = x;
    for (std::size_t i = 1; i < k; ++i) p = m.op(p, x);
    return p;
}

Magma direct_product(const Magma& a, const Magma& b, std::string_view joiner) {
    const auto na = a.size(), nb = b.size();
    if (na * nb > caps().product_max)
        throw Error(Errc::product_too_large, std::to_string(na) + "x" + std::to_string(nb) + " exceeds the cap of " +
                                                 std::to_string(caps().product_max));
    std::vector<std::string> names;
    names.reserve(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            names.push_back(a.name(static_cast<ElementId>(i)) + std::string(joiner) + b.name(static_cast<ElementId>(j)));
    return Magma::from_function(std::move(names), [&](ElementId x, ElementId y) {
        auto x1 = x / nb, x2 = x % nb, y1 = y / nb, y2 = y % nb;
        return a.op(static_cast<ElementId>(x1), static_cast<ElementId>(y1)) * nb +
               b.op(static_cast<ElementId>(x2), static_cast<ElementId>(y2));
    });
}

bool is_closed(const Magma& m, const ElemSet& s) {
    auto el = s.elements();
    for (auto x : el)
        for (auto y : el)
            if (!s.contains(m.op(x, y))) return false;
    return true;
}

namespace {

// members of `base` are assumed closed among themselves
ElemSet grow(const Magma& m, ElemSet set, std::vector<ElementId> members, std::vector<ElementId> queue) {
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const ElementId q = queue[qi];
        for (std::size_t bi = 0; bi < members.size(); ++bi) {
            const ElementId b = members[bi];
            for (ElementId p : {m.op(q, b), m.op(b, q)}) {
                if (!set.contains(p)) {
                    set.insert(p);
                    members.push_back(p);
                    queue.push_back(p);
                }
            }
        }
    }
    return set;
}

}  // namespace

ElemSet closure(const Magma& m, const ElemSet& seed) {
    ElemSet set(m.size());
    std::vector<ElementId> members;
    for (auto x : seed.elements()) {
        set.insert(x);
        members.push_back(x);
    }
    return grow(m, std::move(set), members, members);
}

ElemSet closure_with(const Magma& m, const ElemSet& closed, ElementId x) {
    if (closed.contains(x)) return closed;
    ElemSet set = closed;
    auto members = closed.elements();
    set.insert(x);
    members.push_back(x);
    return grow(m, std::move(set), std::move(members), {x});
}

Magma restrict(const Magma& m, const ElemSet& s) {
    auto el = s.elements();
    if (el.empty()) throw Error(Errc::invalid_params, "cannot restrict to the empty set");
    std::vector<ElementId> local(m.size(), 0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < el.size(); ++i) {
        local[el[i]] = static_cast<ElementId>(i);
        names.push_back(m.name(el[i]));
    }
    const auto k = el.size();
    std::vector<ElementId> t(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto p = m.op(el[i], el[j]);
            if (!s.contains(p))
                throw Error(Errc::invalid_params, "subset not closed: " + m.name(el[i]) + "*" + m.name(el[j]) + " = " +
                                                      m.name(p));
            t[i * k + j] = local[p];
        }
    return Magma(std::move(names), std::move(t));
}

Magma rename(const Magma& m, std::vector<std::string> names) {
    if (names.size() != m.size()) throw Error(Errc::invalid_params, "rename needs one name per element");
    return Magma(std::move(names), m.table());
}

namespace {

using Signature = std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, bool>;

std::vector<Signature> signatures(const Magma& m) {
    const auto n = m.size();
    std::vector<Signature> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto x = static_cast<ElementId>(i);
        auto o = element_order(m, x);
        std::size_t fixes_right = 0, fixes_left = 0;
        for (std::size_t j = 0; j < n; ++j) {
            auto y = static_cast<ElementId>(j);
            fixes_right += m.op(x, y) == y;
            fixes_left += m.op(y, x) == y;
        }
        out[i] = {static_cast<int>(o.kind), o.period, o.tail, o.cycle, fixes_right, fixes_left, m.op(x, x) == x};
    }
    return out;
}

}  // namespace

std::optional<std::vector<ElementId>> find_isomorphism(const Magma& a, const Magma& b) {
    const auto n = a.size();
    if (b.size() != n) return std::nullopt;
    auto sa = signatures(a), sb = signatures(b);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return std::nullopt;
    }
    std::vector<ElementId> gens;
    ElemSet gen_closure(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto x = static_cast<ElementId>(i);
        if (!gen_closure.contains(x)) {
            gens.push_back(x);
            gen_closure = closure_with(a, gen_closure, x);
        }
    }
    std::vector<std::vector<ElementId>> candidates(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t j = 0; j < n; ++j)
            if (sa[gens[g]] == sb[j]) candidates[g].push_back(static_cast<ElementId>(j));

    const ElementId unset = static_cast<ElementId>(n);
    std::vector<ElementId> phi(n, unset);
    std::vector<char> used(n, 0);

    auto extend = [&](std::vector<ElementId>& map, std::vector<char>& taken) {
        std::vector<ElementId> known;
        for (std::size_t i = 0; i < n; ++i)
            if (map[i] != unset) known.push_back(static_cast<ElementId>(i));
        for (std::size_t qi = 0; qi < known.size(); ++qi) {
            const auto q = known[qi];
            for (std::size_t ki = 0; ki <= qi; ++ki) {
                const auto k = known[ki];
                for (auto [u, v] : {std::pair{q, k}, std::pair{k, q}}) {
                    auto w = a.op(u, v);
                    auto target = b.op(map[u], map[v]);
                    if (map[w] == unset) {
                        if (taken[target]) return false;
                        map[w] = target;
                        taken[target] = 1;
                        known.push_back(w);
                    } else if (map[w] != target) {
                        return false;
                    }
                }
            }
        }
        return known.size() == n;
    };

    std::optional<std::vector<ElementId>> found;
    auto search = [&](auto&& self, std::size_t g) -> bool {
        if (g == gens.size()) {
            auto map = phi;
            auto taken = used;
            if (!extend(map, taken)) return false;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (map[a.op(static_cast<ElementId>(i), static_cast<ElementId>(j))] != b.op(map[i], map[j]))
                        return false;
            found = std::move(map);
            return true;
        }
        for (auto c : candidates[g]) {
            if (used[c]) continue;
            phi[gens[g]] = c;
            used[c] = 1;
            if (self(self, g + 1)) return true;
            phi[gens[g]] = unset;
            used[c] = 0;
        }
        return false;
    };
    search(search, 0);
    return found;
}

}  // namespace mk
