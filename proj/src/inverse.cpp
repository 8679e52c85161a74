#include "sumsets/inverse.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace sumsets {

namespace {

void require_range(int ell, int m, const char* what)
{
    if (ell < 2 || ell > m)
        throw std::invalid_argument(std::string(what) + " needs 2 <= ell <= m");
}

bool all_at_least_two(const std::vector<GSet>& sets)
{
    return std::all_of(sets.begin(), sets.end(), [](const GSet& s) { return s.size() >= 2; });
}

GSet ordered_product(const std::vector<GSet>& sets, const Budget& budget)
{
    GSet acc = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) {
        if (acc.size() * sets[i].size() > budget.max_elements)
            throw BudgetExceeded("product exceeds the element budget");
        acc = product(acc, sets[i]);
    }
    return acc;
}

// U = {1, g, ..., g^{n-1}} exactly.
bool powers_fill(const GroupModel& model, const GSet& u, const Element& g)
{
    const auto id = model.identity();
    Element cur = id;
    for (std::size_t j = 1; j < u.size(); ++j) {
        cur = model.op(cur, g);
        if (cur == id || !u.contains(cur))
            return false;
    }
    return true;
}

struct ChainSearch {
    const std::vector<GSet>& sets;
    const GroupModel& model;
    std::vector<ProgressionType> types;
    std::optional<Element> g;

    // Set i with α_i fixed and β_i = t: T = α_i⁻¹A_i must equal {g^j t}.
    bool place(std::size_t i, const Element& alpha, const GSet& t_set, const Element& t)
    {
        const auto u = right_translate(t_set, model.inverse(t));
        const auto n = static_cast<std::int64_t>(u.size());
        if (n == 1) {
            types.push_back({alpha, model.identity(), t, 1});
            if (solve(i + 1, model.inverse(t)))
                return true;
            types.pop_back();
            return false;
        }
        std::vector<Element> ratios;
        if (g)
            ratios.push_back(*g);
        else
            for (const auto& x : u)
                if (!(x == model.identity()))
                    ratios.push_back(x);
        for (const auto& h : ratios) {
            if (!powers_fill(model, u, h))
                continue;
            const bool fixed_here = !g;
            if (fixed_here)
                g = h;
            types.push_back({alpha, h, t, n});
            if (solve(i + 1, model.inverse(t)))
                return true;
            types.pop_back();
            if (fixed_here)
                g.reset();
        }
        return false;
    }

    bool solve(std::size_t i, const Element& alpha)
    {
        if (i == sets.size())
            return true;
        const auto t_set = left_translate(model.inverse(alpha), sets[i]);
        for (const auto& t : t_set)
            if (place(i, alpha, t_set, t))
                return true;
        return false;
    }

    bool start()
    {
        // Conjugating by β_1 makes β_1 = 1 without loss of generality.
        const auto id = model.identity();
        for (const auto& x : sets[0]) {
            const auto t_set = left_translate(model.inverse(x), sets[0]);
            if (place(0, x, t_set, id))
                return true;
        }
        return false;
    }
};

// All left-ratio progressions {x·h^j} inside A with at least two terms.
std::vector<GSet> progression_pool(const GSet& a)
{
    const auto& model = a.model();
    std::set<std::vector<Element>> seen;
    std::vector<GSet> pool;
    for (const auto& x : a) {
        const auto xinv = model.inverse(x);
        for (const auto& y : a) {
            if (x == y)
                continue;
            const auto h = model.op(xinv, y);
            std::vector<Element> run{x};
            Element cur = y;
            while (a.contains(cur) && !(cur == x)) {
                run.push_back(cur);
                GSet s(model, run);
                if (seen.insert(s.elements()).second)
                    pool.push_back(std::move(s));
                cur = model.op(cur, h);
            }
        }
    }
    std::sort(pool.begin(), pool.end(), [](const GSet& p, const GSet& q) {
        if (p.size() != q.size())
            return p.size() > q.size();
        return p.elements() < q.elements();
    });
    return pool;
}

struct MinimizingSearch {
    const SetSequence& seq;
    int ell;
    const GSet& pi;
    const MultiplicityProfile& prof;
    const SearchBudget& budget;
    std::vector<GSet> pool;
    std::vector<std::vector<std::size_t>> members;
    std::vector<int> count;
    std::vector<std::size_t> chosen;
    std::size_t nodes = 0;
    std::optional<MinimizingWitness> found;

    bool feasible(int remaining) const
    {
        for (std::size_t k = 0; k < count.size(); ++k)
            if (prof.mu[k] - count[k] > remaining)
                return false;
        return true;
    }

    bool run(int level, std::size_t from)
    {
        if (++nodes > budget.max_nodes)
            throw BudgetExceeded("minimizing search exceeded its node budget");
        if (level == ell) {
            if (count != prof.mu)
                return false;
            std::vector<GSet> cand;
            for (auto c : chosen)
                cand.push_back(pool[c]);
            found = test_minimizing_candidate(seq, ell, cand, pi, prof);
            return found.has_value();
        }
        const std::size_t begin = seq.model().is_abelian() ? from : 0;
        for (std::size_t c = begin; c < pool.size(); ++c) {
            bool ok = true;
            for (auto k : members[c])
                ok = ok && count[k] < prof.mu[k];
            if (!ok)
                continue;
            for (auto k : members[c])
                ++count[k];
            chosen.push_back(c);
            const bool hit = feasible(ell - level - 1) && run(level + 1, c);
            chosen.pop_back();
            for (auto k : members[c])
                --count[k];
            if (hit)
                return true;
        }
        return false;
    }
};

void add_failure(std::vector<std::string>& out, const std::string& theorem, const std::string& reason)
{
    out.push_back(theorem + ": " + reason);
}

std::vector<GSet> unions_with(const SetSequence& seq, const GSet& m)
{
    std::vector<GSet> out;
    for (const auto& s : seq.sets())
        out.push_back(set_union(s, m));
    return out;
}

// A common ratio h for which every set is a progression, with A itself one too.
std::optional<ProgressionType> shared_progression_of_union(const GSet& whole, const std::vector<GSet>& sets)
{
    for (const auto& t : detect_progressions(whole)) {
        bool ok = true;
        for (const auto& s : sets)
            ok = ok && (s.size() == 1 || progression_with_ratio(s, t.g));
        if (ok)
            return t;
    }
    return std::nullopt;
}

} // namespace

int compute_L(const SetSequence& seq, int ell, const Element& a)
{
    require_range(ell, seq.m(), "compute_L");
    const int mu = std::min(ell, seq.incidence(a));
    const int eta = seq.incidence_in(a, 0, ell);
    if (eta < 1 || eta > mu || mu >= ell)
        throw std::invalid_argument("compute_L needs 1 <= eta(a) <= mu(a) < ell");
    for (int i = 0; i <= mu; ++i)
        if (i + seq.incidence_in(a, i, ell) == mu)
            return i;
    throw std::logic_error("compute_L: no index reaches mu(a)");
}

WitnessSets build_witness_sets(const SetSequence& seq, int ell)
{
    require_range(ell, seq.m(), "build_witness_sets");
    const auto& model = seq.model();
    const auto l = static_cast<std::size_t>(ell);
    WitnessSets ws{{}, {}, {}, {}, GSet(model), {}};
    if (ell == seq.m()) {
        for (const auto& s : seq.sets()) {
            ws.B.emplace_back(model);
            ws.A1.push_back(s);
            ws.A2.push_back(s);
            ws.S.emplace_back(model);
        }
        return ws;
    }
    const auto prof = multiplicity_profile(seq, ell);
    GSet head(model);
    GSet tail(model);
    for (int i = 0; i < seq.m(); ++i)
        (i < ell ? head : tail) = set_union(i < ell ? head : tail, seq[static_cast<std::size_t>(i)]);
    const auto tail_free = set_difference(tail, prof.M);

    for (std::size_t j = 1; j <= l; ++j) {
        std::vector<Element> b;
        for (const auto& a : tail_free)
            if (prof.tau_of(a) >= static_cast<int>(j))
                b.push_back(a);
        ws.B.push_back(GSet::from_sorted(model, std::move(b)));
        ws.A1.push_back(set_union(set_union(seq[j - 1], ws.B.back()), prof.M));
    }

    std::vector<Element> x;
    for (const auto& a : set_difference(set_intersection(head, tail), prof.M)) {
        int in = 0;
        for (const auto& s : ws.A1)
            in += s.contains(a);
        if (in < prof.mu_of(a))
            x.push_back(a);
    }
    ws.X = GSet::from_sorted(model, x);

    std::vector<std::vector<Element>> extra(l);
    for (const auto& a : ws.X) {
        const int L = compute_L(seq, ell, a);
        ws.L.emplace(a, L);
        for (int j = prof.tau_of(a); j < L; ++j)
            extra[static_cast<std::size_t>(j)].push_back(a);
    }
    for (std::size_t j = 0; j < l; ++j) {
        ws.A2.push_back(set_union(ws.A1[j], GSet(model, extra[j])));
        ws.S.push_back(set_difference(ws.A2[j], ws.A1[j]));
    }
    return ws;
}

WitnessCheck check_witness_sets(const SetSequence& seq, int ell, const WitnessSets& ws, const Budget& budget)
{
    WitnessCheck c;
    const auto l = static_cast<std::size_t>(ell);
    const auto prof = multiplicity_profile(seq, ell);
    const auto& whole = seq.union_set();
    if (ws.A1.size() != l || ws.A2.size() != l || ws.S.size() != l) {
        c.split = false;
        return c;
    }
    std::int64_t total = 0;
    for (std::size_t j = 0; j < l; ++j) {
        c.split = c.split && ws.A2[j] == set_union(ws.A1[j], ws.S[j]) &&
                  ws.S[j] == set_difference(ws.A2[j], ws.A1[j]);
        c.multiplicity = c.multiplicity && ws.A2[j].is_subset_of(whole);
        c.growth = c.growth && ws.A2[j].size() >= seq[j].size();
        total += static_cast<std::int64_t>(ws.A2[j].size());
    }
    for (const auto& a : whole) {
        int in = 0;
        for (const auto& s : ws.A2)
            in += s.contains(a);
        c.multiplicity = c.multiplicity && in == prof.mu_of(a);
    }
    c.total = total == prof.mu_total();

    for (std::size_t r = 1; r <= l; ++r)
        for (const auto& a : ws.S[r - 1]) {
            const int in = seq.incidence_in(a, 0, static_cast<int>(r) - 1) + seq.incidence_in(a, ell, seq.m());
            c.claim = c.claim && in >= static_cast<int>(r);
        }
    for (const auto& [a, L] : ws.L)
        c.late_insertion = c.late_insertion && L > prof.tau_of(a);

    if (std::all_of(ws.A2.begin(), ws.A2.end(), [](const GSet& s) { return !s.empty(); })) {
        const auto pi = generalized_product_set(seq, ell, budget);
        c.containment = ordered_product(ws.A2, budget).is_subset_of(pi);
    }
    return c;
}

PrimeChain build_prime_chain(const SetSequence& seq, int ell, const Budget& budget)
{
    require_range(ell, seq.m(), "build_prime_chain");
    const auto prof = multiplicity_profile(seq, ell);
    PrimeChain pc;
    std::int64_t total = 0;
    for (int j = 1; j <= ell; ++j) {
        std::vector<Element> s;
        for (std::size_t k = 0; k < prof.elements.size(); ++k)
            if (prof.mu[k] >= j)
                s.push_back(prof.elements[k]);
        total += static_cast<std::int64_t>(s.size());
        pc.sets.push_back(GSet::from_sorted(seq.model(), std::move(s)));
    }
    pc.total_matches = total == prof.mu_total();
    pc.hypothesis_met = !prof.M.empty();
    if (pc.hypothesis_met)
        pc.containment = ordered_product(pc.sets, budget).is_subset_of(generalized_product_set(seq, ell, budget));
    return pc;
}

std::optional<std::vector<ProgressionType>> find_linked_chain(const std::vector<GSet>& sets)
{
    if (sets.empty())
        return std::nullopt;
    for (const auto& s : sets)
        if (s.empty())
            return std::nullopt;
    const auto& model = sets.front().model();
    ChainSearch search{sets, model, {}, std::nullopt};
    if (!search.start())
        return std::nullopt;
    const auto g = search.g ? *search.g : canonical_generator(model);
    for (auto& t : search.types)
        t.g = g;
    return search.types;
}

std::optional<MinimizingWitness> test_minimizing_candidate(const SetSequence& seq, int ell,
                                                           const std::vector<GSet>& candidate,
                                                           const GSet& pi, const MultiplicityProfile& prof)
{
    if (candidate.size() != static_cast<std::size_t>(ell))
        return std::nullopt;
    for (const auto& b : candidate)
        if (b.size() < 2 || !b.is_subset_of(seq.union_set()))
            return std::nullopt;
    for (std::size_t k = 0; k < prof.elements.size(); ++k) {
        int in = 0;
        for (const auto& b : candidate)
            in += b.contains(prof.elements[k]);
        if (in != prof.mu[k])
            return std::nullopt;
    }
    if (!(ordered_product(candidate, Budget{}) == pi))
        return std::nullopt;
    auto chain = find_linked_chain(candidate);
    if (!chain)
        return std::nullopt;
    return MinimizingWitness{chain->front().g, candidate, std::move(*chain), false};
}

std::optional<MinimizingWitness> check_minimizing(const SetSequence& seq, int ell, const SearchBudget& budget)
{
    require_range(ell, seq.m(), "check_minimizing");
    if (!all_at_least_two(seq.sets()))
        throw std::invalid_argument("check_minimizing needs |A_i| >= 2");
    const auto prof = multiplicity_profile(seq, ell);
    const auto pi = generalized_product_set(seq, ell, budget.sets);

    const auto ws = build_witness_sets(seq, ell);
    if (auto w = test_minimizing_candidate(seq, ell, ws.A2, pi, prof)) {
        w->from_construction = true;
        return w;
    }
    if (seq.union_set().size() > budget.max_union)
        throw BudgetExceeded("minimizing search: union exceeds " + std::to_string(budget.max_union) + " elements");

    MinimizingSearch search{seq, ell, pi, prof, budget, progression_pool(seq.union_set()), {}, {}, {}, 0, {}};
    for (const auto& s : search.pool) {
        std::vector<std::size_t> idx;
        for (const auto& x : s)
            idx.push_back(prof.index_of(x));
        search.members.push_back(std::move(idx));
    }
    search.count.assign(prof.elements.size(), 0);
    if (search.feasible(ell) && search.run(0, 0))
        return search.found;
    return std::nullopt;
}

bool verify_minimizing(const SetSequence& seq, int ell, const MinimizingWitness& w, const Budget& budget)
{
    const auto& model = seq.model();
    if (w.B.size() != static_cast<std::size_t>(ell) || w.types.size() != w.B.size())
        return false;
    if (w.g == model.identity())
        return false;
    for (std::size_t i = 0; i < w.B.size(); ++i) {
        if (w.B[i].size() < 2 || !w.B[i].is_subset_of(seq.union_set()))
            return false;
        if (!(w.types[i].g == w.g))
            return false;
        try {
            if (!(realize(model, w.types[i]) == w.B[i]))
                return false;
        } catch (const ModelError&) {
            return false;
        }
    }
    if (!linked_chain_check(model, w.types))
        return false;
    const auto prof = multiplicity_profile(seq, ell);
    for (std::size_t k = 0; k < prof.elements.size(); ++k) {
        int in = 0;
        for (const auto& b : w.B)
            in += b.contains(prof.elements[k]);
        if (in != prof.mu[k])
            return false;
    }
    return ordered_product(w.B, budget) == generalized_product_set(seq, ell, budget);
}

ExtremalReport classify_extremal(const SetSequence& seq, int ell, const SearchBudget& budget)
{
    const auto& model = seq.model();
    check_ell(ell, seq.m());
    const auto prof = multiplicity_profile(seq, ell);
    ExtremalReport r;
    if (model.is_torsion_free())
        r.bound = torsion_free_mu_bound(seq, ell, budget.sets);
    else if (model.kind() == ModelKind::Cyclic && is_prime(model.modulus()) && ell >= 2)
        r.bound = zp_mu_bound(seq, ell);
    else
        r.bound = abelian_mu_bound(seq, ell, budget.sets);
    r.mu_total = prof.mu_total();
    r.equality = r.bound.actual == r.mu_total - ell + 1;

    auto& fails = r.hypothesis_failures;
    auto& apps = r.applicable_theorems;
    if (ell < 2) {
        add_failure(fails, "all", "ell >= 2 required");
        return r;
    }
    if (!all_at_least_two(seq.sets())) {
        add_failure(fails, "all", "|A_i| >= 2 required");
        return r;
    }
    const bool proper = ell < seq.m();
    const int repeated = static_cast<int>(std::count_if(prof.mu.begin(), prof.mu.end(), [](int v) { return v >= 2; }));
    const bool saturated = !prof.M.empty();
    const auto unions = unions_with(seq, prof.M);

    bool minimizing_app = false;
    bool family_app = false;      // A_i ∪ M share one ratio
    bool each_ap_app = false;     // A_i ∪ M are progressions, ratios may differ
    bool whole_app = false;       // A is a progression with the shared ratio
    bool chain_app = false;

    if (model.is_torsion_free()) {
        minimizing_app = family_app = true;
        apps.push_back("minimizing-characterization");
        apps.push_back("union-progressions-shared-ratio");
        if (model.is_abelian()) {
            if (proper) {
                whole_app = true;
                apps.push_back("union-set-progression");
                if (repeated <= 1)
                    apps.push_back("sparse-nonexistence");
                else
                    add_failure(fails, "sparse-nonexistence", "more than one element has mu >= 2");
            } else {
                add_failure(fails, "union-set-progression", "ell < m required");
                add_failure(fails, "sparse-nonexistence", "ell < m required");
            }
        }
        if (!proper)
            add_failure(fails, "saturated-chain", "ell < m required");
        else if (!saturated)
            add_failure(fails, "saturated-chain", "no element has mu = ell");
        else if (repeated < 2)
            add_failure(fails, "saturated-chain", "fewer than two elements have mu >= 2");
        else {
            chain_app = true;
            apps.push_back("saturated-chain");
        }
    } else {
        const auto pg = smallest_subgroup_order(model);
        const std::int64_t cap = pg ? (ell == 2 ? *pg - 1 : *pg) : 0;
        const std::string cap_text = ell == 2 ? "|sum| < p(G) - 1" : "|sum| < p(G)";
        if (!proper) {
            add_failure(fails, "minimizing-characterization", "ell < m required");
            const auto v = vosper_classify(seq.sets());
            for (const auto& t : v.applicable_theorems)
                apps.push_back(t);
            for (const auto& f : v.hypothesis_failures)
                fails.push_back(f);
            if (!v.consistent())
                r.violations.push_back("multiset progression characterization fails");
        } else if (r.bound.actual >= cap) {
            add_failure(fails, "minimizing-characterization", cap_text + " required");
        } else {
            minimizing_app = true;
            apps.push_back("minimizing-characterization");
            if (ell == 2) {
                each_ap_app = true;
                apps.push_back("union-progressions");
            } else {
                family_app = whole_app = true;
                apps.push_back("union-progressions-shared-ratio");
                apps.push_back("union-set-progression");
            }
            if (!saturated)
                add_failure(fails, "saturated-chain", "no element has mu = ell");
            else if (repeated < 2)
                add_failure(fails, "saturated-chain", "fewer than two elements have mu >= 2");
            else {
                chain_app = true;
                apps.push_back("saturated-chain");
            }
        }
    }

    if (minimizing_app) {
        try {
            r.minimizing = check_minimizing(seq, ell, budget);
            if (r.minimizing.has_value() != r.equality)
                r.violations.push_back(r.equality ? "equality without a minimizing witness"
                                                  : "minimizing witness without equality");
        } catch (const BudgetExceeded& e) {
            add_failure(fails, "minimizing-characterization", std::string("search not completed: ") + e.what());
        }
    }
    if (std::find(apps.begin(), apps.end(), "sparse-nonexistence") != apps.end() && r.equality)
        r.violations.push_back("equality with at most one repeated element");
    if (!r.equality)
        return r;

    if (family_app) {
        r.union_family = same_ratio_family(unions);
        if (!r.union_family)
            r.violations.push_back("A_i u M do not share one ratio");
    }
    if (each_ap_app) {
        for (const auto& u : unions) {
            const auto d = detect_progressions(u);
            r.union_progressions.push_back(d.empty() ? std::nullopt : std::optional<ProgressionType>(d.front()));
            if (d.empty())
                r.violations.push_back("some A_i u M is not a progression");
        }
    }
    if (whole_app) {
        r.union_set_progression = shared_progression_of_union(seq.union_set(), unions);
        if (!r.union_set_progression)
            r.violations.push_back("A is not a progression with the shared ratio");
    }
    if (chain_app) {
        const auto pc = build_prime_chain(seq, ell, budget.sets);
        std::vector<GSet> head;
        for (const auto& s : pc.sets) {
            if (s.size() < 2)
                break;
            head.push_back(s);
        }
        r.prime_chain = find_linked_chain(head);
        if (!r.prime_chain)
            r.violations.push_back("A'_1..A'_k are not a linked chain");
    }
    return r;
}

VosperReport vosper_classify(const GSet& a, const GSet& b)
{
    return vosper_classify(std::vector<GSet>{a, b});
}

VosperReport vosper_classify(const std::vector<GSet>& sets)
{
    if (sets.size() < 2)
        throw std::invalid_argument("vosper_classify needs at least two sets");
    const auto& model = sets.front().model();
    if (!model.is_abelian())
        throw ModelError("vosper_classify requires an abelian model, got " + model.name());
    VosperReport r;
    const auto ell = static_cast<std::int64_t>(sets.size());
    if (!all_at_least_two(sets)) {
        add_failure(r.hypothesis_failures, "all", "|A_i| >= 2 required");
        return r;
    }
    std::int64_t total = 0;
    for (const auto& s : sets)
        total += static_cast<std::int64_t>(s.size());
    r.expected = total - ell + 1;
    r.actual = static_cast<std::int64_t>(ordered_product(sets, Budget{}).size());
    r.equality = r.actual == r.expected;

    if (model.kind() == ModelKind::Integers) {
        r.applicable_theorems.push_back("integer-progression-characterization");
    } else {
        const auto pg = smallest_subgroup_order(model);
        const bool prime = model.kind() == ModelKind::Cyclic && is_prime(model.modulus());
        const std::string name = prime ? (ell == 2 ? "vosper" : "prime-multiset-progression")
                                       : (ell == 2 ? "abelian-two-set-progression" : "abelian-multiset-progression");
        const std::int64_t p = pg.value_or(0);
        if (ell == 2 && r.actual > p - 2)
            add_failure(r.hypothesis_failures, name, "|sum| <= p - 2 required");
        else if (ell >= 3 && r.actual >= p)
            add_failure(r.hypothesis_failures, name, "|sum| < p required");
        else
            r.applicable_theorems.push_back(name);
    }
    if (!r.applicable())
        return r;

    // Any progression through x0 steps to a neighbour, so d = ±(y - x0) for some y.
    const auto& first = sets.front();
    const auto x0 = first.front();
    std::vector<Element> cands;
    for (const auto& y : first)
        if (!(y == x0)) {
            const auto d = model.op(model.inverse(x0), y);
            cands.push_back(d);
            cands.push_back(model.inverse(d));
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& d : cands) {
        std::vector<ProgressionType> ws;
        for (const auto& s : sets) {
            auto w = progression_with_ratio(s, d);
            if (!w)
                break;
            ws.push_back(*w);
        }
        if (ws.size() == sets.size()) {
            r.difference = d;
            r.witnesses = std::move(ws);
            break;
        }
    }
    return r;
}

std::optional<std::vector<ProgressionType>> brailovsky_classify(const std::vector<GSet>& sets)
{
    if (sets.empty())
        throw std::invalid_argument("brailovsky_classify needs at least one set");
    if (!sets.front().model().is_torsion_free())
        throw ModelError("brailovsky_classify requires a torsion-free model");
    if (!all_at_least_two(sets))
        throw std::invalid_argument("brailovsky_classify needs |A_i| >= 2");
    return find_linked_chain(sets);
}

SparseScanResult no_sparse_extremal_scan(const SparseScanParams& params)
{
    if (params.ell < 2 || params.ell >= params.m)
        throw std::invalid_argument("sparse scan needs 2 <= ell < m");
    const auto width = params.hi - params.lo + 1;
    if (width < 2 || width > 20)
        throw std::invalid_argument("sparse scan universe must have 2..20 elements");
    if (params.shards < 1 || params.shard < 0 || params.shard >= params.shards)
        throw std::invalid_argument("bad shard selection");
    const auto model = GroupModel::integers();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = 0; s < (1u << width); ++s)
        if (std::popcount(s) >= 2)
            masks.push_back(s);

    SparseScanResult out;
    const auto m = static_cast<std::size_t>(params.m);
    std::vector<std::size_t> idx(m, 0);
    std::int64_t serial = 0;
    while (true) {
        if (serial++ % params.shards == params.shard) {
            ++out.scanned;
            // Elements lying in at least two sets.
            std::uint32_t once = 0;
            std::uint32_t twice = 0;
            for (auto i : idx) {
                twice |= once & masks[i];
                once |= masks[i];
            }
            if (std::popcount(twice) <= 1) {
                ++out.hypothesis_instances;
                std::vector<GSet> sets;
                for (auto i : idx) {
                    std::vector<Element> e;
                    for (std::int64_t b = 0; b < width; ++b)
                        if (masks[i] >> b & 1u)
                            e.emplace_back(params.lo + b);
                    sets.push_back(GSet::from_sorted(model, std::move(e)));
                }
                SetSequence seq(model, std::move(sets));
                const auto mu = multiplicity_profile(seq, params.ell).mu_total();
                if (static_cast<std::int64_t>(generalized_sumset(seq, params.ell).size()) == mu - params.ell + 1)
                    out.violations.push_back(std::move(seq));
            }
        }
        std::size_t k = 0;
        while (k < m && ++idx[k] == masks.size())
            idx[k++] = 0;
        if (k == m)
            break;
    }
    return out;
}

} // namespace sumsets
