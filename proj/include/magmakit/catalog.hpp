#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magmakit/magma.hpp"

namespace mk {

// L_n(m) on {e, 1..n}
struct LnParams {
    unsigned n = 0;
    unsigned m = 0;
};

// nullopt when valid, otherwise which condition failed
std::optional<std::string> ln_param_error(unsigned n, unsigned m);

Magma ln_loop(LnParams p, std::string_view prefix = {});
std::vector<std::pair<unsigned, Magma>> ln_class(unsigned n);

// Z(n) ⊂ Z*(n) ⊂ Z**(n) ⊂ Z***(n)
enum class ZnClass { z, zstar, zstarstar, zzero };
std::string_view to_string(ZnClass c);
std::optional<ZnClass> parse_zn_class(std::string_view s);

struct ZnParams {
    unsigned n = 0;
    unsigned t = 0;
    unsigned u = 0;
    ZnClass cls = ZnClass::zzero;
};

std::optional<std::string> zn_param_error(const ZnParams& p);
// tightest class admitting (t, u)
ZnClass zn_tightest_class(unsigned n, unsigned t, unsigned u);

Magma zn_groupoid(const ZnParams& p, std::string_view prefix = {});

struct ZnEntry {
    unsigned t, u;
    Magma table;
};
std::vector<ZnEntry> zn_class_enumerate(unsigned n, ZnClass cls);

enum class Family { cyclic, dihedral, symmetric_group, alternating, zn_add, zn_mul, zn_units, full_transformation };
std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

struct FamilySpec {
    Family family = Family::cyclic;
    std::size_t size = 1;
    std::string prefix;
};

Magma standard(const FamilySpec& spec);

Magma with_prefix(const Magma& m, std::string_view prefix);

struct LnCounts {
    unsigned n = 0;
    // closed forms
    std::uint64_t formula_total = 0;                // prod (p-2) p^(a-1)
    std::uint64_t formula_commutative = 0;          // 1 when m = (n+1)/2 is admissible
    std::uint64_t formula_strictly_noncommutative = 0;  // F_n = prod (p-3) p^(a-1)
    std::uint64_t formula_strictly_non_alternative = 0; // P_n, same product
    // by building every loop
    std::uint64_t total = 0;
    std::uint64_t commutative = 0;
    std::uint64_t strictly_noncommutative = 0;
    std::uint64_t strictly_non_right_alternative = 0;
    std::uint64_t strictly_non_left_alternative = 0;
};

LnCounts ln_counts(unsigned n);

// pairwise table scans used by ln_counts
bool strictly_noncommutative(const Magma& loop, ElementId e);
bool strictly_non_right_alternative(const Magma& loop, ElementId e);
bool strictly_non_left_alternative(const Magma& loop, ElementId e);

struct RegularRepresentation {
    Magma image;                      // permutations of {1..n} under composition
    std::vector<ElementId> embedding; // g element -> image element
};

RegularRepresentation regular_representation(const Magma& g);

}  // namespace mk
