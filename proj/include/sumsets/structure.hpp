#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sumsets/group.hpp"

namespace sumsets {

// The set {a·g^j·b : 0 <= j < length}.
struct ProgressionType {
    Element a;
    Element g;
    Element b;
    std::int64_t length = 1;

    friend bool operator==(const ProgressionType&, const ProgressionType&) = default;
};

// Throws ModelError when two indices collide (torsion, or g = 1 with length >= 2).
GSet realize(const GroupModel& model, const ProgressionType& t);

// Every left ratio h for which s = {x·h^j}, each with witness (x, h, 1) and x
// minimal. Sorted by (x, h). Singletons yield (s, 1, 1).
std::vector<ProgressionType> detect_progressions(const GSet& s);

// Witness that s is a progression with left ratio exactly h, if any.
std::optional<ProgressionType> progression_with_ratio(const GSet& s, const Element& h);

// Deterministic nontrivial element used for families of singletons.
Element canonical_generator(const GroupModel& model);

// c with h = c⁻¹·g·c, if g and h are conjugate.
std::optional<Element> find_conjugator(const GroupModel& model, const Element& g, const Element& h);

struct RatioFamily {
    Element g;
    std::vector<ProgressionType> types;
};

std::optional<RatioFamily> same_ratio_family(const std::vector<GSet>& sets);

// Consecutive link α_{i+1} = β_i⁻¹. Throws ModelError when ratios differ.
bool linked_chain_check(const GroupModel& model, const std::vector<ProgressionType>& types);

// The progression {α_1·g^j·β_ℓ} realized by a linked chain.
ProgressionType chain_progression(const std::vector<ProgressionType>& types);

std::optional<ProgressionType> union_progression(const GSet& a, const GSet& b, const Element& g);

// (p, r) with A = {α·g^s·β : s = r, r+p, ..., r+(|A|-1)p}.
std::optional<std::pair<std::int64_t, std::int64_t>> subprogression_form(const GSet& a,
                                                                         const ProgressionType& whole);

// Relation between two representations (a,g,b) and (α,g₁,β) of one set:
// c = α⁻¹a, and either g = c⁻¹g₁c, b = c⁻¹β or g = c⁻¹g₁⁻¹c, b = c⁻¹g₁^{m-1}β.
struct RepresentationRelation {
    Element c;
    bool reversed = false;
};

std::optional<RepresentationRelation> relate_representations(const GroupModel& model,
                                                             const ProgressionType& first,
                                                             const ProgressionType& second);

} // namespace sumsets
