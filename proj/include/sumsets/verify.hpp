#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/fuzz.hpp"
#include "sumsets/inverse.hpp"
#include "sumsets/json_io.hpp"

namespace sumsets {

struct ExhaustiveSpec {
    GroupModel model = GroupModel::integers();
    int m = 3;
    int ell = 2;
    std::vector<Element> universe;
    int min_size = 2;
};

// "Z,m=3,ell=2,universe=0..5"; finite models default to the whole group.
ExhaustiveSpec parse_exhaustive_spec(const std::string& s);

// Every m-tuple of subsets of the universe with at least min_size elements.
void for_each_exhaustive(const ExhaustiveSpec& spec, const std::function<void(const SetSequence&)>& fn);

struct VerifyOptions {
    std::uint64_t seed = 1;
    int count = 1000;
    std::optional<std::string> exhaustive;
    FuzzLimits limits;
    SearchBudget budget;
};

struct VerifySummary {
    std::string suite;
    std::int64_t instances = 0;
    std::int64_t equality_cases = 0;
    std::int64_t skipped = 0;
    std::vector<Json> violations;

    Json to_json() const;
};

// One instance of the exhaustive inverse check; returns a reason on failure.
struct InverseOutcome {
    bool gated = false; // outside the theorem's hypotheses
    bool equality = false;
    bool witness = false;
    std::optional<std::string> failure;
};
InverseOutcome inverse_biconditional(const SetSequence& seq, int ell, const SearchBudget& budget = {});

// Failures among the representation identities for t and its conjugate by c.
std::vector<std::string> progression_identity_failures(const GroupModel& model, const ProgressionType& t,
                                                       const Element& c);

// Greedy removal of elements while `still_fails` holds; sets keep at least min_size elements.
SetSequence minimize(const SetSequence& seq, int min_size, const std::function<bool(const SetSequence&)>& still_fails);
ElementSequence minimize(const ElementSequence& seq, int min_terms,
                         const std::function<bool(const ElementSequence&)>& still_fails);

// suite ∈ {bounds, inverse, structure, constructions, subseq, all}.
std::vector<VerifySummary> run_verify(const std::string& suite, const VerifyOptions& opts);

} // namespace sumsets
