#include "sumsets/verify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "sumsets/bounds.hpp"
#include "sumsets/constructions.hpp"
#include "sumsets/subseq.hpp"

namespace sumsets {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep))
        out.push_back(part);
    return out;
}

Json violation(const std::string& reason, Json instance)
{
    return Json{{"reason", reason}, {"instance", std::move(instance)}};
}

void finish(VerifySummary& s)
{
    std::sort(s.violations.begin(), s.violations.end(),
              [](const Json& a, const Json& b) { return a.dump() < b.dump(); });
}

std::vector<GSet> unions_with_saturated(const SetSequence& seq, const GSet& m)
{
    std::vector<GSet> out;
    for (const auto& s : seq.sets())
        out.push_back(set_union(s, m));
    return out;
}

VerifySummary verify_bounds(const VerifyOptions& o)
{
    VerifySummary s{"bounds", 0, 0, 0, {}};
    Rng rng(o.seed);
    for (const auto& model : standard_models()) {
        auto lim = o.limits;
        if (model.kind() == ModelKind::Free) {
            lim.max_m = std::min(lim.max_m, 4);
            lim.max_set = std::min(lim.max_set, 3);
        }
        for (int i = 0; i < o.count; ++i) {
            const auto seq = random_sequence(model, rng, lim);
            const int ell = uniform(rng, 1, seq.m());
            const auto elems = random_elements(model, rng, lim);
            const int ell2 = uniform(rng, 1, elems.m());
            ++s.instances;
            try {
                for (const auto& r : applicable_bounds(seq, ell, o.budget.sets)) {
                    if (r.holds())
                        continue;
                    const auto name = to_string(r.bound);
                    const auto small = minimize(seq, 1, [&](const SetSequence& q) {
                        for (const auto& r2 : applicable_bounds(q, std::min(ell, q.m()), o.budget.sets))
                            if (r2.bound == r.bound && !r2.holds())
                                return true;
                        return false;
                    });
                    s.violations.push_back(violation(name + " violated", to_json(small, ell)));
                }
                const auto h = hamidoune_check(elems, ell2, o.budget.sets);
                if (!h.holds())
                    s.violations.push_back(
                        violation("subsequence disjunction violated",
                                  to_json(Instance{model, ell2, std::nullopt, elems})));
            } catch (const BudgetExceeded&) {
                ++s.skipped;
            }
        }
    }
    finish(s);
    return s;
}

VerifySummary verify_inverse_exhaustive(const VerifyOptions& o)
{
    VerifySummary s{"inverse", 0, 0, 0, {}};
    const auto spec = parse_exhaustive_spec(*o.exhaustive);
    for_each_exhaustive(spec, [&](const SetSequence& seq) {
        ++s.instances;
        const auto out = inverse_biconditional(seq, spec.ell, o.budget);
        if (out.gated) {
            ++s.skipped;
            return;
        }
        s.equality_cases += out.equality;
        if (out.failure)
            s.violations.push_back(violation(*out.failure, to_json(seq, spec.ell)));
    });
    finish(s);
    return s;
}

VerifySummary verify_inverse(const VerifyOptions& o)
{
    if (o.exhaustive)
        return verify_inverse_exhaustive(o);
    VerifySummary s{"inverse", 0, 0, 0, {}};
    Rng rng(o.seed);
    std::vector<GroupModel> models{GroupModel::integers(), GroupModel::cyclic(5), GroupModel::cyclic(7),
                                   GroupModel::cyclic(11), GroupModel::cyclic(13)};
    auto lim = o.limits;
    lim.max_m = std::min(lim.max_m, 5);
    lim.max_set = std::min(lim.max_set, 4);
    lim.z_universe = std::min<std::int64_t>(lim.z_universe, 10);
    for (int i = 0; i < o.count; ++i) {
        const auto& model = models[static_cast<std::size_t>(i) % models.size()];
        auto seq = random_sequence(model, rng, lim, 2);
        if (seq.m() < 2)
            seq = SetSequence(model, {seq[0], random_set(model, rng, 2, lim.max_set, lim)});
        const int ell = uniform(rng, 2, seq.m());
        ++s.instances;
        try {
            const auto ws = build_witness_sets(seq, ell);
            const auto c = check_witness_sets(seq, ell, ws, o.budget.sets);
            if (!c.all())
                s.violations.push_back(violation("witness-set invariants fail", to_json(seq, ell)));
            const auto r = classify_extremal(seq, ell, o.budget);
            s.equality_cases += r.equality;
            for (const auto& v : r.violations)
                s.violations.push_back(violation(v, to_json(seq, ell)));
            if (r.applicable_theorems.empty())
                ++s.skipped;
        } catch (const BudgetExceeded&) {
            ++s.skipped;
        }
    }
    finish(s);
    return s;
}

VerifySummary verify_structure(const VerifyOptions& o)
{
    VerifySummary s{"structure", 0, 0, 0, {}};
    Rng rng(o.seed);
    for (const auto& model : {GroupModel::integers(), GroupModel::free(2)}) {
        for (int i = 0; i < o.count; ++i) {
            const auto t = random_progression(model, rng, o.limits);
            const auto c = random_element(model, rng, o.limits);
            ++s.instances;
            for (const auto& f : progression_identity_failures(model, t, c))
                s.violations.push_back(violation(f, Json{{"model", model.name()},
                                                         {"type", to_json(model, t)},
                                                         {"c", to_json(model, c)}}));
        }
    }
    finish(s);
    return s;
}

VerifySummary verify_constructions(const VerifyOptions&)
{
    VerifySummary s{"constructions", 0, 0, 0, {}};
    for_each_params(40, 40, [&](const ConstructionParams& p) {
        ++s.instances;
        const auto c = check_construction(p);
        s.equality_cases += c.actual == c.expected;
        if (!c.ok())
            s.violations.push_back(violation("construction misses its expected value", to_json(p)));
    });
    const auto ex = named_example("example-1.1");
    const auto r = torsion_free_mu_bound(ex, named_example_ell("example-1.1"));
    ++s.instances;
    if (!r.holds() || r.actual != 21)
        s.violations.push_back(violation("named example drifted", to_json(ex, 3)));
    finish(s);
    return s;
}

VerifySummary verify_subseq(const VerifyOptions& o)
{
    VerifySummary s{"subseq", 0, 0, 0, {}};
    Rng rng(o.seed);
    for (const auto& model : standard_models()) {
        auto lim = o.limits;
        if (model.kind() == ModelKind::Free)
            lim.max_m = std::min(lim.max_m, 4);
        for (int i = 0; i < o.count; ++i) {
            const auto a = random_elements(model, rng, lim);
            const int ell = uniform(rng, 1, a.m());
            ++s.instances;
            try {
                const auto r = subseq_inverse_check(a, ell, o.budget.sets);
                s.equality_cases += r.equality;
                if (r.violations.empty())
                    continue;
                const auto small = minimize(a, ell, [&](const ElementSequence& q) {
                    try {
                        return !subseq_inverse_check(q, ell, o.budget.sets).violations.empty();
                    } catch (const BudgetExceeded&) {
                        return false;
                    }
                });
                for (const auto& v : r.violations)
                    s.violations.push_back(violation(v, to_json(Instance{model, ell, std::nullopt, small})));
            } catch (const BudgetExceeded&) {
                ++s.skipped;
            }
        }
    }
    finish(s);
    return s;
}

} // namespace

ExhaustiveSpec parse_exhaustive_spec(const std::string& s)
{
    const auto parts = split(s, ',');
    if (parts.empty())
        throw ParseError("empty exhaustive spec");
    ExhaustiveSpec spec;
    spec.model = parse_model(parts[0]);
    std::optional<std::pair<std::int64_t, std::int64_t>> range;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value in exhaustive spec, got '" + parts[i] + "'");
        const auto key = parts[i].substr(0, eq);
        const auto val = parts[i].substr(eq + 1);
        try {
            if (key == "m")
                spec.m = std::stoi(val);
            else if (key == "ell")
                spec.ell = std::stoi(val);
            else if (key == "min")
                spec.min_size = std::stoi(val);
            else if (key == "universe") {
                const auto dots = val.find("..");
                if (dots == std::string::npos)
                    throw ParseError("universe is written lo..hi");
                range = std::make_pair(std::stoll(val.substr(0, dots)), std::stoll(val.substr(dots + 2)));
            } else
                throw ParseError("unknown exhaustive key '" + key + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad value in exhaustive spec: '" + parts[i] + "'");
        }
    }
    if (range) {
        for (auto x = range->first; x <= range->second; ++x)
            spec.universe.push_back(spec.model.make(x));
        GSet u(spec.model, spec.universe);
        spec.universe = u.elements();
    } else if (spec.model.is_finite()) {
        spec.universe = enumerate(spec.model).elements();
    } else {
        throw ParseError("infinite models need universe=lo..hi");
    }
    if (spec.universe.size() > 16)
        throw ParseError("exhaustive universe is limited to 16 elements");
    if (spec.m < 1 || spec.ell < 1 || spec.ell > spec.m)
        throw ParseError("exhaustive spec needs 1 <= ell <= m");
    return spec;
}

void for_each_exhaustive(const ExhaustiveSpec& spec, const std::function<void(const SetSequence&)>& fn)
{
    const auto n = spec.universe.size();
    std::vector<GSet> subsets;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < spec.min_size)
            continue;
        std::vector<Element> e;
        for (std::size_t b = 0; b < n; ++b)
            if (mask >> b & 1u)
                e.push_back(spec.universe[b]);
        subsets.push_back(GSet(spec.model, std::move(e)));
    }
    if (subsets.empty())
        return;
    const auto m = static_cast<std::size_t>(spec.m);
    std::vector<std::size_t> idx(m, 0);
    while (true) {
        std::vector<GSet> sets;
        for (auto i : idx)
            sets.push_back(subsets[i]);
        fn(SetSequence(spec.model, std::move(sets)));
        std::size_t k = 0;
        while (k < m && ++idx[k] == subsets.size())
            idx[k++] = 0;
        if (k == m)
            return;
    }
}

Json VerifySummary::to_json() const
{
    Json v = Json::array();
    for (const auto& x : violations)
        v.push_back(x);
    return Json{{"suite", suite},
                {"instances", instances},
                {"equality_cases", equality_cases},
                {"skipped", skipped},
                {"violations", v}};
}

InverseOutcome inverse_biconditional(const SetSequence& seq, int ell, const SearchBudget& budget)
{
    InverseOutcome out;
    const auto& model = seq.model();
    const auto prof = multiplicity_profile(seq, ell);
    const auto actual = static_cast<std::int64_t>(generalized_product_set(seq, ell, budget.sets).size());
    out.equality = actual == prof.mu_total() - ell + 1;
    bool small = ell < 2;
    for (const auto& s : seq.sets())
        small = small || s.size() < 2;
    if (small) {
        out.gated = true;
        return out;
    }
    if (!model.is_torsion_free()) {
        const auto pg = smallest_subgroup_order(model).value_or(0);
        if (ell >= seq.m() || actual >= (ell == 2 ? pg - 1 : pg)) {
            out.gated = true;
            return out;
        }
    }
    std::optional<MinimizingWitness> w;
    try {
        w = check_minimizing(seq, ell, budget);
    } catch (const BudgetExceeded& e) {
        out.failure = std::string("search budget exceeded: ") + e.what();
        return out;
    }
    out.witness = w.has_value();
    if (out.equality != out.witness) {
        out.failure = out.equality ? "equality without a minimizing witness" : "minimizing witness without equality";
        return out;
    }
    if (w && !verify_minimizing(seq, ell, *w, budget.sets)) {
        out.failure = "witness fails the defining conditions";
        return out;
    }
    if (!out.equality)
        return out;
    const auto unions = unions_with_saturated(seq, prof.M);
    if (model.is_torsion_free() || ell >= 3) {
        if (!same_ratio_family(unions))
            out.failure = "A_i u M do not share one ratio";
    } else {
        for (const auto& u : unions)
            if (detect_progressions(u).empty())
                out.failure = "some A_i u M is not a progression";
    }
    return out;
}

std::vector<std::string> progression_identity_failures(const GroupModel& model, const ProgressionType& t,
                                                       const Element& c)
{
    std::vector<std::string> f;
    const auto n = t.length;
    const auto id = model.identity();
    const auto ginv = model.inverse(t.g);
    GSet base(model);
    try {
        base = realize(model, t);
    } catch (const ModelError&) {
        return {"realize rejected a torsion-free progression"};
    }
    if (static_cast<std::int64_t>(base.size()) != n)
        f.push_back("size differs from length");
    // {a g^j b} read as a left progression from ab with ratio b⁻¹gb.
    const ProgressionType left{model.op(t.a, t.b), model.op(model.op(model.inverse(t.b), t.g), t.b), id, n};
    // ... and as (1, a g a⁻¹, ab).
    const ProgressionType right{id, model.op(model.op(t.a, t.g), model.inverse(t.a)), model.op(t.a, t.b), n};
    // Reversal: (a, g⁻¹, b) equals (a, g, g^{-(n-1)} b).
    const ProgressionType rev{t.a, ginv, t.b, n};
    const ProgressionType rev_fwd{t.a, t.g, model.op(model.pow(t.g, -(n - 1)), t.b), n};
    const ProgressionType flip{t.a, ginv, model.op(model.pow(t.g, n - 1), t.b), n};
    // Conjugation: (ac, c⁻¹gc, c⁻¹b).
    const auto cinv = model.inverse(c);
    const ProgressionType conj{model.op(t.a, c), model.op(model.op(cinv, t.g), c), model.op(cinv, t.b), n};

    const auto same = [&](const ProgressionType& p) { return realize(model, p) == base; };
    if (!same(left))
        f.push_back("(ab, b^-1 g b, 1) differs");
    if (!same(right))
        f.push_back("(1, a g a^-1, ab) differs");
    if (!(realize(model, rev) == realize(model, rev_fwd)))
        f.push_back("reversal identity fails");
    if (!same(flip))
        f.push_back("(a, g^-1, g^(n-1) b) differs");
    if (!same(conj))
        f.push_back("conjugated representation differs");
    if (t.b == id && !(base == realize(model, {t.a, t.g, id, n})))
        f.push_back("(a, g, 1) is not the plain progression");

    // detect ∘ realize: every detected witness realizes the same set, and one exists.
    const auto found = detect_progressions(base);
    if (found.empty())
        f.push_back("detect found no witness");
    for (const auto& d : found)
        if (!same(d)) {
            f.push_back("detected witness realizes a different set");
            break;
        }
    if (n >= 2)
        for (const auto& other : {left, right, conj, flip}) {
            const auto rel = relate_representations(model, t, other);
            if (!rel) {
                f.push_back("two representations are not related by a conjugator");
                break;
            }
            if (!(t.a == model.op(other.a, rel->c))) {
                f.push_back("conjugator does not carry one start to the other");
                break;
            }
        }
    return f;
}

SetSequence minimize(const SetSequence& seq, int min_size, const std::function<bool(const SetSequence&)>& still_fails)
{
    auto cur = seq.sets();
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < cur.size() && !progress; ++i) {
            if (static_cast<int>(cur[i].size()) <= min_size)
                continue;
            for (const auto& x : cur[i]) {
                auto trial = cur;
                trial[i] = set_difference(cur[i], GSet(seq.model(), {x}));
                if (still_fails(SetSequence(seq.model(), trial))) {
                    cur = std::move(trial);
                    progress = true;
                    break;
                }
            }
        }
    }
    return SetSequence(seq.model(), std::move(cur));
}

ElementSequence minimize(const ElementSequence& seq, int min_terms,
                         const std::function<bool(const ElementSequence&)>& still_fails)
{
    auto cur = seq.terms();
    bool progress = true;
    while (progress && static_cast<int>(cur.size()) > min_terms) {
        progress = false;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            auto trial = cur;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (still_fails(ElementSequence(seq.model(), trial))) {
                cur = std::move(trial);
                progress = true;
                break;
            }
        }
    }
    return ElementSequence(seq.model(), std::move(cur));
}

std::vector<VerifySummary> run_verify(const std::string& suite, const VerifyOptions& opts)
{
    std::vector<VerifySummary> out;
    const bool all = suite == "all";
    if (!all && suite != "bounds" && suite != "inverse" && suite != "structure" && suite != "constructions" &&
        suite != "subseq")
        throw ParseError("unknown suite '" + suite + "'");
    if (opts.exhaustive && suite != "inverse")
        throw ParseError("--exhaustive applies to the inverse suite");
    if (all || suite == "bounds")
        out.push_back(verify_bounds(opts));
    if (all || suite == "inverse")
        out.push_back(verify_inverse(opts));
    if (all || suite == "structure")
        out.push_back(verify_structure(opts));
    if (all || suite == "constructions")
        out.push_back(verify_constructions(opts));
    if (all || suite == "subseq")
        out.push_back(verify_subseq(opts));
    return out;
}

} // namespace sumsets
