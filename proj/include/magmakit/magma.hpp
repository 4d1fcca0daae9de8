#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "magmakit/elemset.hpp"

namespace mk {

// Finite set with one total binary operation. table[i*n + j] = i∘j, row operand on the left.
class Magma {
public:
    Magma(std::vector<std::string> names, std::vector<ElementId> table);

    template <class F>
    static Magma from_function(std::vector<std::string> names, F&& f) {
        const auto n = names.size();
        std::vector<ElementId> t(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t[i * n + j] = static_cast<ElementId>(f(static_cast<ElementId>(i), static_cast<ElementId>(j)));
        return Magma(std::move(names), std::move(t));
    }

    std::size_t size() const noexcept { return n_; }
    ElementId op(ElementId a, ElementId b) const noexcept { return table_[a * n_ + b]; }
    const ElementId* row(ElementId a) const noexcept { return table_.data() + a * n_; }

    const std::string& name(ElementId x) const { return names_.at(x); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<ElementId>& table() const noexcept { return table_; }

    std::optional<ElementId> find(std::string_view name) const;
    ElementId id(std::string_view name) const;  // throws element_absent

    bool latin() const noexcept { return latin_; }

    // unique x with a∘x = b / unique y with y∘a = b; latin tables only
    ElementId ldiv(ElementId a, ElementId b) const;
    ElementId rdiv(ElementId a, ElementId b) const;

    friend bool operator==(const Magma& a, const Magma& b) {
        return a.names_ == b.names_ && a.table_ == b.table_;
    }

private:
    struct Division;
    const Division& division() const;

    std::size_t n_;
    std::vector<std::string> names_;
    std::vector<ElementId> table_;
    std::unordered_map<std::string, ElementId> index_;
    bool latin_ = false;
    std::shared_ptr<Division> div_;
};

enum class Label { group, monoid, semigroup, loop, quasigroup, magma };

// "magma" prints as "groupoid", the usual word for a plain binary system
std::string_view to_string(Label l);

struct AlgebraKind {
    bool associative = false;
    bool has_identity = false;
    std::optional<ElementId> identity;
    bool has_inverses = false;
    bool latin_square = false;
    bool commutative = false;
    std::vector<ElementId> left_identities;
    std::vector<ElementId> right_identities;
    Label label = Label::magma;
};

AlgebraKind classify(const Magma& m);

std::optional<ElementId> find_identity(const Magma& m);
bool is_associative(const Magma& m);
bool is_commutative(const Magma& m);

ElementId solve_left(const Magma& m, ElementId a, ElementId b);   // a∘x = b
ElementId solve_right(const Magma& m, ElementId a, ElementId b);  // y∘a = b

struct OrderResult {
    enum class Kind { periodic, idempotent, no_identity_return };
    Kind kind = Kind::periodic;
    std::size_t period = 0;  // periodic: minimal t with x^t = identity
    std::size_t tail = 0;    // no_identity_return: index of the first repeated power
    std::size_t cycle = 0;   // no_identity_return: cycle length of the power walk

    bool is_periodic() const noexcept { return kind == Kind::periodic; }
};

std::string to_string(const OrderResult& r);

// left-associated powers: x^(k+1) = x^k ∘ x
OrderResult element_order(const Magma& m, ElementId x);
ElementId power(const Magma& m, ElementId x, std::size_t k);

Magma direct_product(const Magma& a, const Magma& b, std::string_view joiner = ",");

bool is_closed(const Magma& m, const ElemSet& s);
ElemSet closure(const Magma& m, const ElemSet& seed);
ElemSet closure_with(const Magma& m, const ElemSet& closed, ElementId x);

// induced operation on a closed subset; names keep the parent's spelling
Magma restrict(const Magma& m, const ElemSet& s);

Magma rename(const Magma& m, std::vector<std::string> names);

// bijection phi with phi(a∘b) = phi(a)∘phi(b), if any
std::optional<std::vector<ElementId>> find_isomorphism(const Magma& a, const Magma& b);

}  // namespace mk
