#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magmakit/magma.hpp"

namespace mk {

enum class Identity {
    moufang,
    bol,
    bruck,
    wip,
    left_alternative,
    right_alternative,
    alternative,
    semi_alternative,
    p_groupoid,
    idempotent_everywhere,
    diassociative,
    power_associative,
};

std::string_view to_string(Identity id);
std::optional<Identity> parse_identity(std::string_view s);
const std::vector<Identity>& all_identities();

struct IdentityResult {
    bool holds = true;
    // first failing tuple in lexicographic order; unused coordinates are 0
    std::optional<std::array<ElementId, 3>> counterexample;
    unsigned arity = 3;
    std::string note;  // which form failed, or a caveat about the reading
};

// throws PreconditionUnmet when the identity needs an identity element or a Latin table
IdentityResult check_identity(const Magma& m, Identity id);

// (xy)z = (x(yz)) A  and  xy = (yx) C, solved by left division
ElementId associator(const Magma& m, ElementId x, ElementId y, ElementId z);
ElementId commutator(const Magma& m, ElementId x, ElementId y);

enum class DerivedRole {
    commutant,
    moufang_centre,
    left_nucleus,
    middle_nucleus,
    right_nucleus,
    nucleus,
    centre,
    commutator_subloop,
    associator_subloop,
};
std::string_view to_string(DerivedRole r);

struct DerivedSubset {
    DerivedRole role;
    ElemSet set;
    bool closed = false;
};

enum class DerivedFlavor { commutator, associator };

DerivedSubset derived_subloop(const Magma& m, DerivedFlavor flavor);
std::vector<DerivedSubset> commutant_centre_nuclei(const Magma& m);

// x*y = X∘Y with X∘a = x and b∘Y = y
Magma principal_isotope(const Magma& m, ElementId a, ElementId b);

struct GLoopResult {
    bool holds = true;
    std::optional<std::pair<ElementId, ElementId>> failing;
};
GLoopResult is_g_loop(const Magma& m);

// closure under ∘ and both divisions
ElemSet subloop_generated(const Magma& m, const ElemSet& seed);

}  // namespace mk
