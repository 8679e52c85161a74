#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sumsets/bounds.hpp"
#include "sumsets/constructions.hpp"
#include "sumsets/inverse.hpp"
#include "sumsets/seqset.hpp"
#include "sumsets/structure.hpp"
#include "sumsets/subseq.hpp"

namespace sumsets {

using Json = nlohmann::ordered_json;

// Thrown for malformed input documents.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "Z", "Z_7", "Z_2+Z_4", "F_2".
GroupModel parse_model(const std::string& s);
// {"kind":"cyclic","n":7} and friends; strings are accepted too.
GroupModel parse_model(const Json& j);
Json to_json(const GroupModel& model);

// Free elements are syllable arrays [[gen, exp], ...]; strings such as "xy^-2" ("1" for the
// identity) are accepted on input.
Element parse_element(const GroupModel& model, const Json& j);
Json to_json(const GroupModel& model, const Element& x);
GSet parse_set(const GroupModel& model, const Json& j);
Json to_json(const GSet& s);

struct Instance {
    GroupModel model = GroupModel::integers();
    int ell = 1;
    std::optional<SetSequence> sets;
    std::optional<ElementSequence> sequence;
};

Instance parse_instance(const Json& j);
Json to_json(const Instance& inst);
Json to_json(const SetSequence& seq, int ell);

Json to_json(const GroupModel& model, const ProgressionType& t);
Json to_json(const BoundReport& r);
Json to_json(const SetSequence& seq, const MultiplicityProfile& p);
Json to_json(const SetSequence& seq, const WitnessSets& w);
Json to_json(const GroupModel& model, const MinimizingWitness& w);
Json to_json(const SetSequence& seq, const ExtremalReport& r);
Json to_json(const GroupModel& model, const VosperReport& r);
Json to_json(const GroupModel& model, const SubseqReport& r);
Json to_json(const ConstructionParams& p);

} // namespace sumsets
