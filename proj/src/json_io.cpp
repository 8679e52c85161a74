#include "sumsets/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace sumsets {

namespace {

std::int64_t parse_int(const std::string& s, std::size_t& pos)
{
    const auto start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
        ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ParseError("expected an integer in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
}

std::int64_t whole_int(const std::string& s)
{
    std::size_t pos = 0;
    const auto v = parse_int(s, pos);
    if (pos != s.size())
        throw ParseError("trailing characters in '" + s + "'");
    return v;
}

int generator_index(const std::string& s, std::size_t& pos)
{
    const char c = s[pos++];
    switch (c) {
    case 'x':
        return 0;
    case 'y':
        return 1;
    case 'z':
        return 2;
    case 'w':
        return 3;
    case 'g': {
        const auto v = parse_int(s, pos);
        if (v < 4)
            throw ParseError("generators below g4 are written x, y, z, w");
        return static_cast<int>(v);
    }
    default:
        throw ParseError(std::string("unknown generator '") + c + "'");
    }
}

Word parse_word(const std::string& s)
{
    Word w;
    if (s == "1")
        return w;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const int g = generator_index(s, pos);
        std::int64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            e = parse_int(s, pos);
        }
        w.push_back({g, e});
    }
    if (w.empty())
        throw ParseError("empty word; write 1 for the identity");
    return w;
}

Json strings(const std::vector<std::string>& v)
{
    Json a = Json::array();
    for (const auto& s : v)
        a.push_back(s);
    return a;
}

Json types_json(const GroupModel& model, const std::vector<ProgressionType>& ts)
{
    Json a = Json::array();
    for (const auto& t : ts)
        a.push_back(to_json(model, t));
    return a;
}

Json sets_json(const std::vector<GSet>& sets)
{
    Json a = Json::array();
    for (const auto& s : sets)
        a.push_back(to_json(s));
    return a;
}

} // namespace

GroupModel parse_model(const std::string& s)
{
    try {
        if (s == "Z")
            return GroupModel::integers();
        if (s.rfind("F_", 0) == 0)
            return GroupModel::free(static_cast<int>(whole_int(s.substr(2))));
        std::vector<std::int64_t> moduli;
        std::size_t start = 0;
        while (true) {
            const auto plus = s.find('+', start);
            const auto part = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
            if (part.rfind("Z_", 0) != 0)
                throw ParseError("unknown model '" + s + "'");
            moduli.push_back(whole_int(part.substr(2)));
            if (plus == std::string::npos)
                break;
            start = plus + 1;
        }
        if (moduli.size() == 1)
            return GroupModel::cyclic(moduli[0]);
        return GroupModel::finite_abelian(moduli);
    } catch (const ModelError& e) {
        throw ParseError(e.what());
    }
}

GroupModel parse_model(const Json& j)
{
    if (j.is_string())
        return parse_model(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("a model is a string like \"Z_7\" or an object with a 'kind'");
    try {
        const auto kind = j["kind"].get<std::string>();
        if (kind == "integers")
            return GroupModel::integers();
        if (kind == "cyclic")
            return GroupModel::cyclic(j.at("n").get<std::int64_t>());
        if (kind == "finite_abelian")
            return GroupModel::finite_abelian(j.at("moduli").get<std::vector<std::int64_t>>());
        if (kind == "free")
            return GroupModel::free(j.at("rank").get<int>());
        throw ParseError("unknown model kind '" + kind + "'");
    } catch (const ModelError& e) {
        throw ParseError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const GroupModel& model)
{
    switch (model.kind()) {
    case ModelKind::Integers:
        return Json{{"kind", "integers"}};
    case ModelKind::Cyclic:
        return Json{{"kind", "cyclic"}, {"n", model.modulus()}};
    case ModelKind::FiniteAbelian:
        return Json{{"kind", "finite_abelian"}, {"moduli", model.moduli()}};
    case ModelKind::Free:
        return Json{{"kind", "free"}, {"rank", model.rank()}};
    }
    return nullptr;
}

Element parse_element(const GroupModel& model, const Json& j)
{
    try {
        switch (model.kind()) {
        case ModelKind::Integers:
        case ModelKind::Cyclic: {
            if (!j.is_number_integer())
                throw ParseError("expected an integer element for " + model.name());
            const auto v = j.get<std::int64_t>();
            const auto x = model.make(v);
            if (model.kind() == ModelKind::Cyclic && !(x == Element(v)))
                throw ParseError("element " + std::to_string(v) + " is not reduced mod " + std::to_string(model.modulus()));
            return x;
        }
        case ModelKind::FiniteAbelian: {
            if (!j.is_array())
                throw ParseError("expected a coordinate array for " + model.name());
            auto v = j.get<std::vector<std::int64_t>>();
            Element x(v);
            model.check(x);
            return x;
        }
        case ModelKind::Free: {
            Word w;
            if (j.is_string()) {
                w = parse_word(j.get<std::string>());
            } else if (j.is_array()) {
                for (const auto& syl : j) {
                    if (!syl.is_array() || syl.size() != 2)
                        throw ParseError("a syllable is [generator, exponent]");
                    w.push_back({syl[0].get<int>(), syl[1].get<std::int64_t>()});
                }
            } else {
                throw ParseError("expected a syllable array or word string for " + model.name());
            }
            const Element x = model.make(w);
            if (!(x == Element(w)))
                throw ParseError("word " + j.dump() + " is not reduced");
            return x;
        }
        }
    } catch (const ModelError& e) {
        throw ParseError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unsupported model");
}

Json to_json(const GroupModel& model, const Element& x)
{
    if (x.is_scalar())
        return x.scalar();
    if (x.is_vector())
        return x.vec();
    (void)model;
    Json a = Json::array();
    for (const auto& syl : x.word())
        a.push_back(Json::array({syl.gen, syl.exp}));
    return a;
}

GSet parse_set(const GroupModel& model, const Json& j)
{
    if (!j.is_array())
        throw ParseError("a set is a JSON array");
    std::vector<Element> e;
    for (const auto& x : j)
        e.push_back(parse_element(model, x));
    return GSet(model, std::move(e));
}

Json to_json(const GSet& s)
{
    Json a = Json::array();
    for (const auto& x : s)
        a.push_back(to_json(s.model(), x));
    return a;
}

Instance parse_instance(const Json& j)
{
    if (!j.is_object())
        throw ParseError("an instance is a JSON object");
    if (!j.contains("model"))
        throw ParseError("instance needs a field 'model'");
    Instance inst;
    inst.model = parse_model(j["model"]);
    if (!j.contains("ell") || !j["ell"].is_number_integer())
        throw ParseError("instance needs an integer field 'ell'");
    inst.ell = j["ell"].get<int>();
    const bool has_sets = j.contains("sets");
    const bool has_seq = j.contains("sequence");
    if (has_sets == has_seq)
        throw ParseError("instance needs exactly one of 'sets' or 'sequence'");
    try {
        if (has_sets) {
            if (!j["sets"].is_array() || j["sets"].empty())
                throw ParseError("'sets' must be a nonempty array");
            std::vector<GSet> sets;
            for (const auto& s : j["sets"])
                sets.push_back(parse_set(inst.model, s));
            inst.sets.emplace(inst.model, std::move(sets));
            check_ell(inst.ell, inst.sets->m());
        } else {
            if (!j["sequence"].is_array() || j["sequence"].empty())
                throw ParseError("'sequence' must be a nonempty array");
            std::vector<Element> terms;
            for (const auto& x : j["sequence"])
                terms.push_back(parse_element(inst.model, x));
            inst.sequence.emplace(inst.model, std::move(terms));
            check_ell(inst.ell, inst.sequence->m());
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return inst;
}

Json to_json(const Instance& inst)
{
    Json j;
    j["model"] = to_json(inst.model);
    j["ell"] = inst.ell;
    if (inst.sets)
        j["sets"] = sets_json(inst.sets->sets());
    if (inst.sequence) {
        Json a = Json::array();
        for (const auto& x : inst.sequence->terms())
            a.push_back(to_json(inst.model, x));
        j["sequence"] = a;
    }
    return j;
}

Json to_json(const SetSequence& seq, int ell)
{
    return to_json(Instance{seq.model(), ell, seq, std::nullopt});
}

Json to_json(const GroupModel& model, const ProgressionType& t)
{
    return Json{{"a", to_json(model, t.a)}, {"g", to_json(model, t.g)}, {"b", to_json(model, t.b)}, {"length", t.length}};
}

Json to_json(const BoundReport& r)
{
    Json j{{"bound", to_string(r.bound)}, {"value", r.value}, {"actual", r.actual}, {"slack", r.slack}, {"holds", r.holds()}};
    Json w = Json::object();
    if (r.witness.stabilizer)
        w["stabilizer"] = to_json(*r.witness.stabilizer);
    if (!r.witness.coset_mu.empty())
        w["coset_mu"] = r.witness.coset_mu;
    if (r.witness.mu_total)
        w["mu_total"] = *r.witness.mu_total;
    if (r.witness.p_of_g)
        w["p_of_g"] = *r.witness.p_of_g;
    else if (r.witness.mu_total || r.bound == BoundName::SubseqHamidoune)
        w["p_of_g"] = "inf";
    if (r.witness.size_disjunct)
        w["size_disjunct"] = *r.witness.size_disjunct;
    if (r.witness.membership_disjunct)
        w["membership_disjunct"] = *r.witness.membership_disjunct;
    if (!w.empty())
        j["witness"] = w;
    return j;
}

Json to_json(const SetSequence& seq, const MultiplicityProfile& p)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        rows.push_back({{"element", to_json(seq.model(), p.elements[i])},
                        {"incidence", seq.incidence(p.elements[i])},
                        {"mu", p.mu[i]},
                        {"eta", p.eta[i]},
                        {"tau", p.tau[i]}});
    return Json{{"ell", p.ell}, {"mu_total", p.mu_total()}, {"M", to_json(p.M)}, {"rows", rows}};
}

Json to_json(const SetSequence& seq, const WitnessSets& w)
{
    Json L = Json::array();
    for (const auto& [a, v] : w.L)
        L.push_back({{"element", to_json(seq.model(), a)}, {"L", v}});
    return Json{{"B", sets_json(w.B)}, {"A1", sets_json(w.A1)}, {"A2", sets_json(w.A2)},
                {"S", sets_json(w.S)},  {"X", to_json(w.X)},    {"L", L}};
}

Json to_json(const GroupModel& model, const MinimizingWitness& w)
{
    return Json{{"g", to_json(model, w.g)},
                {"B", sets_json(w.B)},
                {"types", types_json(model, w.types)},
                {"from_construction", w.from_construction}};
}

Json to_json(const SetSequence& seq, const ExtremalReport& r)
{
    const auto& model = seq.model();
    Json j{{"equality", r.equality},
           {"mu_total", r.mu_total},
           {"bound", to_json(r.bound)},
           {"applicable_theorems", strings(r.applicable_theorems)},
           {"hypothesis_failures", strings(r.hypothesis_failures)}};
    Json w = Json::object();
    if (r.minimizing)
        w["minimizing"] = to_json(model, *r.minimizing);
    if (r.union_family)
        w["union_family"] = {{"g", to_json(model, r.union_family->g)},
                             {"types", types_json(model, r.union_family->types)}};
    if (!r.union_progressions.empty()) {
        Json a = Json::array();
        for (const auto& t : r.union_progressions)
            a.push_back(t ? to_json(model, *t) : Json(nullptr));
        w["union_progressions"] = a;
    }
    if (r.union_set_progression)
        w["union_set_progression"] = to_json(model, *r.union_set_progression);
    if (r.prime_chain)
        w["prime_chain"] = types_json(model, *r.prime_chain);
    j["witnesses"] = w;
    j["violations"] = strings(r.violations);
    return j;
}

Json to_json(const GroupModel& model, const VosperReport& r)
{
    Json j{{"equality", r.equality},
           {"actual", r.actual},
           {"expected", r.expected},
           {"applicable_theorems", strings(r.applicable_theorems)},
           {"hypothesis_failures", strings(r.hypothesis_failures)}};
    Json w = Json::object();
    if (r.difference) {
        w["difference"] = to_json(model, *r.difference);
        w["progressions"] = types_json(model, r.witnesses);
    }
    j["witnesses"] = w;
    j["consistent"] = r.consistent();
    return j;
}

Json to_json(const GroupModel& model, const SubseqReport& r)
{
    Json j{{"equality", r.equality},
           {"actual", r.actual},
           {"mu_total", r.mu_total},
           {"disjunction", to_json(r.disjunction)},
           {"applicable_theorems", strings(r.applicable_theorems)},
           {"hypothesis_failures", strings(r.hypothesis_failures)}};
    Json w = Json::object();
    if (r.progression)
        w["progression"] = to_json(model, *r.progression);
    if (!r.x_sets.empty())
        w["x_sets"] = sets_json(r.x_sets);
    if (r.x_chain_equality)
        w["x_chain_equality"] = *r.x_chain_equality;
    j["witnesses"] = w;
    j["violations"] = strings(r.violations);
    return j;
}

Json to_json(const ConstructionParams& p)
{
    Json j{{"variant", to_string(p.variant)}, {"ell", p.ell}, {"k", p.k}};
    if (p.variant == Variant::C1)
        j["n"] = p.n_blocks;
    else
        j["n_aux"] = p.n_aux;
    return j;
}

} // namespace sumsets
