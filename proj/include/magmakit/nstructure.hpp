#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magmakit/magma.hpp"
#include "magmakit/substructure.hpp"

namespace mk {

// slot category: G group, L loop (non-associative), S monoid/semigroup, R quasigroup/groupoid
enum class Category { group, loop, semigroup, groupoid };
Category category(const AlgebraKind& k);
std::string_view to_string(Category c);

enum class NKind {
    n_group,
    n_semigroup,
    n_loop,
    n_groupoid,
    n_group_semigroup,
    n_loop_groupoid,
    n_gls,
    n_gsg,
    n_lsg,
    n_glsg,
};
std::string_view to_string(NKind k);
std::optional<NKind> parse_nkind(std::string_view s);

struct Component {
    std::string label;
    Magma magma;
    AlgebraKind kind;
    std::vector<ElementId> global;  // local id -> global id
};

class NStructure {
public:
    const std::vector<Component>& components() const noexcept { return comps_; }
    const Component& component(std::size_t i) const { return comps_.at(i); }
    std::size_t size() const noexcept { return comps_.size(); }

    // distinct names across all components
    std::size_t order() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<ElementId> find(std::string_view name) const;

    bool disjoint() const noexcept { return disjoint_; }
    NKind kind() const noexcept { return kind_; }
    std::optional<NKind> declared() const noexcept { return declared_; }

    // global ids of a slot subset
    ElemSet lift(std::size_t slot, const ElemSet& local) const;

private:
    friend NStructure assemble(std::vector<std::pair<std::string, Magma>>, std::optional<NKind>);
    std::vector<Component> comps_;
    std::vector<std::string> names_;
    std::map<std::string, ElementId, std::less<>> index_;
    bool disjoint_ = true;
    NKind kind_ = NKind::n_group;
    std::optional<NKind> declared_;
};

NKind classify_n(const std::vector<Category>& cats);

NStructure assemble(std::vector<std::pair<std::string, Magma>> components, std::optional<NKind> declared = std::nullopt);

// slot requirement: "-" absent, g subgroup, l subloop or subgroup, s subsemigroup, gr any closed subset
enum class Req { absent, group, loop, semigroup, closed };
std::string_view to_string(Req r);
std::vector<Req> parse_requirement(std::string_view s, std::size_t n);  // "g,l,s,gr"
std::vector<Req> default_requirement(const NStructure& ns);
bool satisfies(const SubMagma& s, Req r);

struct SubNStructure {
    std::vector<std::optional<ElemSet>> slots;  // local ids; nullopt = absent slot

    std::size_t n_order() const;  // sum of slot sizes
    bool nontrivial() const;      // some slot of size >= 2
};

std::size_t distinct_order(const NStructure& ns, const SubNStructure& h);
bool is_proper(const NStructure& ns, const SubNStructure& h);

// componentwise o(H_i) | o(G_i) over present slots
bool pseudo_divides(const NStructure& ns, const SubNStructure& h);

struct SubCheck {
    bool valid = false;
    std::string reason;  // first failing slot when invalid
    std::size_t n_order = 0;
    std::size_t distinct = 0;
    bool proper = false;
    bool nontrivial = false;
};

SubCheck check_sub(const NStructure& ns, const SubNStructure& h, const std::vector<Req>& req);

struct SlotSubs {
    std::vector<std::vector<SubMagma>> subs;  // per slot, filtered by the requirement
    bool complete = true;
};

SlotSubs slot_subs(const NStructure& ns, const std::vector<Req>& req, EnumOptions opt = {});

// every combination, capped by caps().combinations_max
std::vector<SubNStructure> find_sub_nstructures(const NStructure& ns, const std::vector<Req>& req,
                                                EnumOptions opt = {});

struct OrderWitness {
    std::size_t order = 0;  // N-order
    SubNStructure witness;
};

struct Achievable {
    std::vector<OrderWitness> orders;  // proper nontrivial subs, one witness per N-order, ascending
    bool complete = true;
};

Achievable achievable_orders(const NStructure& ns, const std::vector<Req>& req, EnumOptions opt = {});
Achievable achievable_orders(const NStructure& ns, const SlotSubs& ss);

enum class LagrangeClass { lagrange, weakly_lagrange, lagrange_free };
std::string_view to_string(LagrangeClass c);

struct LagrangeReport {
    LagrangeClass cls = LagrangeClass::lagrange_free;
    std::size_t order = 0;
    std::vector<std::pair<OrderWitness, bool>> subs;  // divides o(G)
    bool complete = true;
};

LagrangeReport lagrange_analysis(const NStructure& ns, const Achievable& a);

enum class SylowStatus { sylow, super_sylow, weak_sylow, pseudo_sylow };
std::string_view to_string(SylowStatus s);

struct SylowFinding {
    std::size_t p = 0;
    std::size_t alpha = 0;  // p^alpha exactly divides o(G)
    std::size_t exponent = 0;
    SylowStatus status = SylowStatus::sylow;
    OrderWitness witness;
};

struct SylowReport {
    std::vector<SylowFinding> findings;  // by p, then exponent
    bool complete = true;
};

SylowReport sylow_analysis(const NStructure& ns, const Achievable& a);

struct TupleSylow {
    std::vector<std::size_t> primes;
    std::vector<std::size_t> slot_orders;  // p_i^alpha_i
    SubNStructure witness;
    std::size_t n_order = 0;
};

// slot i gets a subgroup of order p_i^alpha_i with p_i^alpha_i exactly dividing o(G_i)
std::optional<TupleSylow> tuple_sylow(const NStructure& ns, const std::vector<std::size_t>& primes);

enum class CauchyClass { cauchy, weakly_cauchy, cauchy_free };
std::string_view to_string(CauchyClass c);

struct CauchyElement {
    std::size_t slot = 0;
    ElementId element = 0;  // local id
    std::size_t t = 0;
    bool cauchy = false;    // t | o(G)
    bool s_cauchy = false;  // t | o(G_i)
};

struct CauchyReport {
    std::vector<CauchyElement> eligible;  // periodic with t > 1
    std::size_t ineligible = 0;
    CauchyClass cls = CauchyClass::cauchy;
};

CauchyReport cauchy_analysis(const NStructure& ns);

enum class CosetSide { left, right };

struct CosetResult {
    std::vector<ElemSet> slots;  // translated where the slot contains a
    std::vector<bool> translated;
    ElemSet set;                 // union, global ids
    bool s_coset = false;        // Ha == aH
};

CosetResult coset(const NStructure& ns, const SubNStructure& h, std::string_view a, CosetSide side);

struct ProductResult {
    std::vector<ElemSet> hk, kh;
    bool commute = false;  // H_iK_i = K_iH_i in every slot
    bool sub = false;      // every H_iK_i is closed and meets the slot's default requirement
};

ProductResult product_sub(const NStructure& ns, const SubNStructure& h, const SubNStructure& k);

NStructure quotient(const NStructure& ns, const SubNStructure& normal);

struct NormalizerSlot {
    std::size_t slot = 0;
    ElemSet set;
    bool subgroup = false;
    std::size_t index_num = 0;  // o(G_i) / o(N(a)) as num/den
    std::size_t index_den = 1;
};

std::vector<NormalizerSlot> normalizer(const NStructure& ns, std::string_view a);

struct ConjugateResult {
    bool conjugate = false;
    std::vector<std::optional<ElementId>> witnesses;
};

ConjugateResult conjugate_subs(const NStructure& ns, const SubNStructure& h, const SubNStructure& k);

struct HomSlot {
    bool homomorphism = false;
    std::optional<std::pair<ElementId, ElementId>> counterexample;
    bool injective = false;
    bool surjective = false;
};

struct HomResult {
    bool homomorphism = false;
    std::vector<HomSlot> slots;
};

// maps[i] sends names of src slot i to names of dst slot i
HomResult verify_homomorphism(const NStructure& src, const NStructure& dst,
                              const std::vector<std::map<std::string, std::string>>& maps);

struct NVerdict {
    std::string property;
    bool holds = false;
    std::string note;
    std::optional<SubNStructure> witness;
};

struct InversePair {
    std::size_t slot;
    ElementId x, y, a, b;
};

struct ConjugateElements {
    std::size_t slot;
    ElementId x, y, a, b, c;
};

struct SmarandacheNReport {
    std::vector<SAnalysis> slots;
    std::vector<NVerdict> verdicts;
    std::vector<InversePair> inverse_pairs;        // capped listing
    std::size_t inverse_count = 0;
    std::vector<ConjugateElements> conjugates;     // capped listing, x != y
    std::size_t conjugate_count = 0;
    bool complete = true;

    const NVerdict& get(std::string_view property) const;
};

SmarandacheNReport smarandache_n_analysis(const NStructure& ns, EnumOptions opt = {});

// "S3:{S3.123,S3.213};Z11:-", absent slots as -
std::string format_sub(const NStructure& ns, const SubNStructure& h);

}  // namespace mk
