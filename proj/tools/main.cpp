// sumsets: compute, bound, classify, construct, verify.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sumsets/bounds.hpp"
#include "sumsets/constructions.hpp"
#include "sumsets/inverse.hpp"
#include "sumsets/json_io.hpp"
#include "sumsets/subseq.hpp"
#include "sumsets/verify.hpp"

using namespace sumsets;

namespace {

constexpr int kViolation = 1;
constexpr int kParse = 2;
constexpr int kBudget = 3;

struct Common {
    std::string input = "-";
    std::string model;
    int ell = 0;
    std::size_t budget = Budget{}.max_elements;
};

Budget budget_of(const Common& c)
{
    Budget b;
    b.max_elements = c.budget;
    return b;
}

Instance read_instance(const Common& c)
{
    std::string text;
    if (c.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(c.input);
        if (!in)
            throw ParseError("cannot open " + c.input);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object())
        throw ParseError("an instance is a JSON object");
    if (!c.model.empty())
        j["model"] = c.model;
    if (c.ell > 0)
        j["ell"] = c.ell;
    return parse_instance(j);
}

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

int cmd_compute(const Common& c, bool profile)
{
    const auto inst = read_instance(c);
    const auto budget = budget_of(c);
    Json out{{"model", to_json(inst.model)}, {"ell", inst.ell}};
    GSet result(inst.model);
    if (inst.sets) {
        result = generalized_product_set(*inst.sets, inst.ell, budget);
        out["operation"] = inst.model.is_abelian() ? "sumset" : "product_set";
        if (profile)
            out["profile"] = to_json(*inst.sets, multiplicity_profile(*inst.sets, inst.ell));
    } else {
        result = subsequence_sumset(*inst.sequence, inst.ell, budget);
        out["operation"] = "subsequence_sum";
        if (profile) {
            const auto p = subseq_profile(*inst.sequence, inst.ell);
            Json rows = Json::array();
            for (std::size_t i = 0; i < p.distinct.size(); ++i)
                rows.push_back({{"element", to_json(inst.model, p.distinct[i])}, {"rho", p.rho[i]}, {"mu", p.mu[i]}});
            out["profile"] = {{"ell", inst.ell}, {"mu_total", p.mu_total()}, {"rows", rows}};
            if (p.t)
                out["profile"]["t"] = *p.t;
        }
    }
    out["size"] = result.size();
    out["set"] = to_json(result);
    emit(out);
    return 0;
}

BoundReport named_bound(const Instance& inst, BoundName name, const Budget& budget)
{
    if (inst.sequence) {
        if (name != BoundName::SubseqHamidoune)
            throw std::invalid_argument("sequence instances only take SubseqHamidoune");
        return hamidoune_check(*inst.sequence, inst.ell, budget);
    }
    const auto& seq = *inst.sets;
    switch (name) {
    case BoundName::CauchyDavenport:
        return cauchy_davenport_bound(seq);
    case BoundName::KemperTF:
        return kemperman_tf_bound(seq, budget);
    case BoundName::Kneser:
        if (seq.m() != 2)
            throw std::invalid_argument("Kneser takes two sets");
        return kneser_bound(seq[0], seq[1]);
    case BoundName::DGM:
        return dgm_bound(seq, inst.ell);
    case BoundName::TorsionFreeMu:
        return torsion_free_mu_bound(seq, inst.ell, budget);
    case BoundName::ZpMu:
        return zp_mu_bound(seq, inst.ell);
    case BoundName::AbelianMu:
        return abelian_mu_bound(seq, inst.ell, budget);
    case BoundName::SubseqHamidoune:
        throw std::invalid_argument("SubseqHamidoune takes a sequence instance");
    }
    throw std::invalid_argument("unknown bound");
}

int cmd_bound(const Common& c, const std::string& name)
{
    const auto inst = read_instance(c);
    const auto budget = budget_of(c);
    std::vector<BoundReport> reports;
    if (!name.empty()) {
        const auto b = bound_from_string(name);
        if (!b)
            throw ParseError("unknown bound '" + name + "'");
        reports.push_back(named_bound(inst, *b, budget));
    } else if (inst.sets) {
        reports = applicable_bounds(*inst.sets, inst.ell, budget);
    } else {
        reports.push_back(hamidoune_check(*inst.sequence, inst.ell, budget));
    }
    Json a = Json::array();
    bool ok = true;
    for (const auto& r : reports) {
        a.push_back(to_json(r));
        ok = ok && r.holds();
    }
    emit(name.empty() ? a : a.front());
    return ok ? 0 : kViolation;
}

int cmd_classify(const Common& c)
{
    const auto inst = read_instance(c);
    SearchBudget sb;
    sb.sets = budget_of(c);
    if (inst.sequence) {
        const auto r = subseq_inverse_check(*inst.sequence, inst.ell, sb.sets);
        emit(to_json(inst.model, r));
        return r.violations.empty() ? 0 : kViolation;
    }
    const auto r = classify_extremal(*inst.sets, inst.ell, sb);
    emit(to_json(*inst.sets, r));
    return r.violations.empty() ? 0 : kViolation;
}

std::vector<std::int64_t> parse_list(const std::string& s)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(part, &pos));
            if (pos != part.size())
                throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            throw ParseError("bad integer list '" + s + "'");
        }
    }
    return out;
}

int cmd_construct(const std::string& variant, const std::string& example, int ell, const std::string& k, int n,
                  const std::string& n_aux, bool free_mirror)
{
    if (!example.empty()) {
        emit(to_json(named_example(example, free_mirror), named_example_ell(example)));
        return 0;
    }
    if (variant.empty() || k.empty())
        throw ParseError("construct needs --variant and --k, or --example");
    ConstructionParams p;
    p.variant = variant_from_string(variant);
    p.ell = ell;
    p.k = parse_list(k);
    p.n_blocks = n;
    if (!n_aux.empty())
        p.n_aux = parse_list(n_aux);
    emit(to_json(construct(p, free_mirror), p.ell));
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts)
{
    const auto summaries = run_verify(suite, opts);
    Json a = Json::array();
    bool ok = true;
    for (const auto& s : summaries) {
        a.push_back(s.to_json());
        ok = ok && s.violations.empty();
        std::cerr << s.suite << ": " << s.instances << " instances, " << s.equality_cases << " equality, "
                  << s.skipped << " skipped, " << s.violations.size() << " violations\n";
    }
    emit(a);
    return ok ? 0 : kViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized sumsets and product sets in small group models"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", common.input, "Instance JSON file, or - for stdin");
        sub->add_option("--model", common.model, "Override the instance model, e.g. Z, Z_7, Z_2+Z_4, F_2");
        sub->add_option("--ell", common.ell, "Override the instance ell");
        sub->add_option("--budget", common.budget, "Maximum number of elements in any intermediate set");
    };

    bool profile = false;
    auto* compute = app.add_subcommand("compute", "Print the generalized sumset or product set");
    add_common(compute);
    compute->add_flag("--profile", profile, "Include the multiplicity profile");

    std::string bound_name;
    auto* bound = app.add_subcommand("bound", "Evaluate lower bounds");
    add_common(bound);
    bound->add_option("--name", bound_name, "One bound (default: all that apply)");

    auto* classify = app.add_subcommand("classify", "Classify an equality case");
    add_common(classify);

    std::string variant, example, k, n_aux;
    int c_ell = 2, n = 0;
    bool free_mirror = false;
    auto* cons = app.add_subcommand("construct", "Emit an extremal construction as an instance");
    cons->add_option("--variant", variant, "c1, c2 or c3");
    cons->add_option("--example", example, "Named example, e.g. example-1.1");
    cons->add_option("--ell", c_ell, "ell");
    cons->add_option("--k", k, "Comma-separated interval lengths");
    cons->add_option("--n", n, "Block count for c1");
    cons->add_option("--n-aux", n_aux, "Comma-separated auxiliary lengths for c2/c3");
    cons->add_flag("--free", free_mirror, "Realize in F_1 instead of Z");

    std::string suite;
    VerifyOptions vopt;
    std::string exhaustive;
    std::size_t vbudget = Budget{}.max_elements;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "bounds, inverse, structure, constructions, subseq or all")->required();
    verify->add_option("--seed", vopt.seed, "Random seed");
    verify->add_option("--count", vopt.count, "Instances per model");
    verify->add_option("--exhaustive", exhaustive, "e.g. \"Z,m=3,ell=2,universe=0..5\"");
    verify->add_option("--budget", vbudget, "Maximum number of elements in any intermediate set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kParse;
    }

    try {
        if (*compute)
            return cmd_compute(common, profile);
        if (*bound)
            return cmd_bound(common, bound_name);
        if (*classify)
            return cmd_classify(common);
        if (*cons)
            return cmd_construct(variant, example, c_ell, k, n, n_aux, free_mirror);
        if (!exhaustive.empty())
            vopt.exhaustive = exhaustive;
        vopt.budget.sets.max_elements = vbudget;
        return cmd_verify(suite, vopt);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kParse;
    }
}
