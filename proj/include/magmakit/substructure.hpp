#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magmakit/magma.hpp"

namespace mk {

enum class Role { subgroup, subloop, subsemigroup, subgroupoid, left_ideal, right_ideal, ideal, normal, hyper };
std::string_view to_string(Role r);
std::optional<Role> parse_role(std::string_view s);

struct SubMagma {
    ElemSet set;
    AlgebraKind kind;                      // of the restricted table, ids local to it
    std::optional<ElementId> local_identity;  // parent id
    std::vector<Role> roles;
    bool proper = false;

    bool has(Role r) const;
    std::size_t size() const { return set.count(); }
};

SubMagma make_sub(const Magma& m, const ElemSet& s);

enum class EnumMode { automatic, exhaustive, generated };

struct EnumOptions {
    EnumMode mode = EnumMode::automatic;
    std::size_t depth = 0;  // generated: generator count, 0 means caps().generated_depth
};

std::optional<EnumOptions> parse_enum_mode(std::string_view s);  // "exhaustive", "gen:K", "auto"

struct Enumeration {
    std::vector<SubMagma> subs;  // canonical (size, ids) order
    bool complete = true;
};

// every nonempty closed subset, the whole carrier included
Enumeration enumerate_submagmas(const Magma& m, std::optional<Role> required = std::nullopt,
                                EnumOptions opt = {});

enum class Side { left, right, two_sided };

// proper, nonempty; exhaustive only
std::vector<SubMagma> ideals(const Magma& m, Side side);

enum class NormalFlavor { subgroup, subloop, subgroupoid };

struct NormalReport {
    std::vector<SubMagma> normal;
    bool is_simple = true;  // no proper normal sub of size >= 2
    bool complete = true;
};

NormalReport normal_substructures(const Magma& m, NormalFlavor flavor, EnumOptions opt = {});

// single-set tests behind normal_substructures
bool is_normal_subgroup(const Magma& g, const ElemSet& n);
bool is_normal_subloop(const Magma& l, const ElemSet& h);
// a, x, y range over the whole groupoid
bool is_normal_subgroupoid(const Magma& g, const ElemSet& v);

ElemSet left_translate(const Magma& m, ElementId x, const ElemSet& s);   // xS
ElemSet right_translate(const Magma& m, const ElemSet& s, ElementId x);  // Sx

enum class ConjugacyFlavor { group, groupoid };

struct ConjugacyResult {
    bool conjugate = false;
    std::optional<ElementId> witness;
    bool left = false;   // groupoid: H = xK
    bool right = false;  // groupoid: H = Kx
};

ConjugacyResult conjugacy(const Magma& m, const ElemSet& h, const ElemSet& k, ConjugacyFlavor flavor);

// a = bx or xb, and b = ay or ya
std::vector<std::pair<ElementId, ElementId>> conjugate_pairs(const Magma& m);

struct SVerdict {
    std::string property;
    bool strict = false;      // witnesses of size >= 2
    bool permissive = false;  // singletons allowed
    std::vector<ElemSet> witnesses;
    std::string note;
};

struct SAnalysis {
    std::vector<SVerdict> verdicts;
    std::vector<ElemSet> largest_subgroups;  // proper, ties kept
    std::vector<ElemSet> hyper;              // proper subsemigroups strictly containing a largest subgroup
    bool complete = true;

    const SVerdict& get(std::string_view property) const;
};

SAnalysis s_analysis(const Magma& m, EnumOptions opt = {});
SAnalysis s_analysis(const Magma& m, const Enumeration& e);

// H contains a proper subset that is a semigroup; searched among closures of at most two elements
bool is_s_subgroupoid(const Magma& m, const ElemSet& h);

bool is_cyclic_set(const Magma& m, const ElemSet& s);

}  // namespace mk
