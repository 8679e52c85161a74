#include "sumsets/subseq.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sumsets {

namespace {

void add_failure(std::vector<std::string>& out, const std::string& theorem, const std::string& reason)
{
    out.push_back(theorem + ": " + reason);
}

} // namespace

std::int64_t SubseqProfile::mu_total() const
{
    return std::accumulate(mu.begin(), mu.end(), std::int64_t{0});
}

SubseqProfile subseq_profile(const ElementSequence& a, int ell)
{
    check_ell(ell, a.m());
    SubseqProfile p;
    p.ell = ell;
    p.distinct = a.distinct();
    p.rho = a.rho();
    std::vector<Element> x;
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t i = 0; i < p.rho.size(); ++i) {
        p.mu.push_back(std::min(ell, p.rho[i]));
        if (p.mu.back() >= 2) {
            x.push_back(p.distinct[i]);
            order.emplace_back(-p.rho[i], i);
        }
    }
    p.X = GSet::from_sorted(a.model(), std::move(x));
    std::sort(order.begin(), order.end());
    std::vector<int> rho_x;
    for (const auto& [neg, i] : order) {
        p.X_order.push_back(p.distinct[i]);
        rho_x.push_back(-neg);
    }
    int s = 0;
    for (std::size_t i = 0; i < rho_x.size() && !p.t; ++i) {
        s += rho_x[i];
        const int t = static_cast<int>(i) + 1;
        if (t >= 2 && s >= ell + t)
            p.t = t;
    }
    // The greedy prefix maximizes Σρ for each size; confirm no smaller size works.
    if (rho_x.size() <= 16) {
        const int limit = p.t ? *p.t : static_cast<int>(rho_x.size()) + 1;
        for (std::uint32_t mask = 0; mask < (1u << rho_x.size()); ++mask) {
            const int size = std::popcount(mask);
            if (size < 2 || size >= limit)
                continue;
            int sum = 0;
            for (std::size_t i = 0; i < rho_x.size(); ++i)
                if (mask >> i & 1u)
                    sum += rho_x[i];
            if (sum >= ell + size)
                throw std::logic_error("subseq_profile: t is not minimal");
        }
    }
    return p;
}

std::vector<GSet> build_x_sets(const ElementSequence& a, int ell, const SubseqProfile& prof)
{
    if (ell < 1 || ell > a.m() - 2)
        throw std::invalid_argument("build_x_sets needs 1 <= ell <= m - 2");
    if (prof.X.size() < 2 || !prof.t)
        throw std::invalid_argument("build_x_sets needs |X| >= 2 and t");
    const auto& model = a.model();
    const int t = *prof.t;
    std::vector<Element> xs;
    for (int i = 0; i < t; ++i) {
        const auto& v = prof.X_order[static_cast<std::size_t>(i)];
        const int c = a.rho_of(v) - (i > 0 ? 1 : 0) - (i == t - 1 ? 1 : 0);
        for (int j = 0; j < c; ++j)
            xs.push_back(v);
    }
    if (static_cast<int>(xs.size()) < ell)
        throw std::logic_error("build_x_sets: witness sequence shorter than ell");

    std::map<Element, int> rho_b;
    for (const auto& v : a.terms())
        ++rho_b[v];
    for (int j = 0; j < ell; ++j)
        if (--rho_b[xs[static_cast<std::size_t>(j)]] == 0)
            rho_b.erase(xs[static_cast<std::size_t>(j)]);

    std::vector<GSet> out;
    for (int j = 1; j <= ell; ++j) {
        std::vector<Element> e{xs[static_cast<std::size_t>(j - 1)]};
        for (const auto& [v, c] : rho_b)
            if (c >= j)
                e.push_back(v);
        out.emplace_back(model, std::move(e));
    }
    return out;
}

XSetsCheck check_x_sets(const ElementSequence& a, int ell, const std::vector<GSet>& xs, const Budget& budget)
{
    XSetsCheck c;
    const auto prof = subseq_profile(a, ell);
    if (xs.size() != static_cast<std::size_t>(ell))
        return c;
    c.first_is_A = xs.front() == prof.distinct;
    c.multiplicity = true;
    for (std::size_t i = 0; i < prof.distinct.size(); ++i) {
        int in = 0;
        for (const auto& s : xs)
            in += s.contains(prof.distinct[i]);
        c.multiplicity = c.multiplicity && in == prof.mu[i];
    }
    std::int64_t total = 0;
    for (const auto& s : xs) {
        total += static_cast<std::int64_t>(s.size());
        c.multiplicity = c.multiplicity && s.is_subset_of(prof.distinct);
    }
    c.total = total == prof.mu_total();

    GSet acc = xs.front();
    for (std::size_t j = 1; j < xs.size(); ++j) {
        if (acc.size() * xs[j].size() > budget.max_elements)
            throw BudgetExceeded("X-set product exceeds the element budget");
        acc = product(acc, xs[j]);
    }
    c.containment = acc.is_subset_of(subsequence_sumset(a, ell, budget));

    int r = 0;
    while (r < ell && xs[static_cast<std::size_t>(r)].size() >= 2 &&
           (r == 0 || xs[static_cast<std::size_t>(r)].size() <= xs[static_cast<std::size_t>(r - 1)].size()))
        ++r;
    c.r = r;
    c.shape = r >= 2;
    for (int j = r; j < ell; ++j)
        c.shape = c.shape && xs[static_cast<std::size_t>(j)].size() == 1;
    return c;
}

SubseqReport subseq_inverse_check(const ElementSequence& a, int ell, const Budget& budget)
{
    const auto& model = a.model();
    const auto prof = subseq_profile(a, ell);
    SubseqReport r;
    r.actual = static_cast<std::int64_t>(subsequence_sumset(a, ell, budget).size());
    r.mu_total = prof.mu_total();
    r.equality = r.actual == r.mu_total - ell + 1;
    r.disjunction = hamidoune_check(a, ell, budget);
    if (!r.disjunction.holds())
        r.violations.push_back("neither the size bound nor an ell-fold term lies in the sum");

    bool capped = true;
    if (!model.is_torsion_free()) {
        if (!model.is_abelian()) {
            add_failure(r.hypothesis_failures, "all", "torsion-free or abelian model required");
            capped = false;
        } else {
            const auto pg = smallest_subgroup_order(model).value_or(0);
            const std::int64_t cap = ell == 2 ? pg - 1 : pg;
            if (r.actual >= cap) {
                add_failure(r.hypothesis_failures, "all", ell == 2 ? "|sum| < p(G) - 1 required" : "|sum| < p(G) required");
                capped = false;
            }
        }
    }
    const bool saturated = std::find(prof.mu.begin(), prof.mu.end(), ell) != prof.mu.end();
    const bool structural = ell <= a.m() - 2 && prof.X.size() >= 2 && prof.t.has_value();

    bool asserted = false;
    const std::string thm1 = "saturated-subsequence-progression";
    if (ell < 2)
        add_failure(r.hypothesis_failures, thm1, "ell >= 2 required");
    else if (!saturated)
        add_failure(r.hypothesis_failures, thm1, "no term has mu = ell");
    else if (prof.X.size() < 2)
        add_failure(r.hypothesis_failures, thm1, "fewer than two terms have mu >= 2");
    else if (capped) {
        r.applicable_theorems.push_back(thm1);
        asserted = true;
    }

    const std::string thm2 = "repeated-subsequence-progression";
    if (ell > a.m() - 2)
        add_failure(r.hypothesis_failures, thm2, "ell <= m - 2 required");
    else if (prof.X.size() < 2)
        add_failure(r.hypothesis_failures, thm2, "|X| >= 2 required");
    else if (!prof.t)
        add_failure(r.hypothesis_failures, thm2, "no t >= 2 with sum of rho >= ell + t");
    else if (capped) {
        r.applicable_theorems.push_back(thm2);
        asserted = true;
    }

    if (structural) {
        r.x_sets = build_x_sets(a, ell, prof);
        r.x_check = check_x_sets(a, ell, r.x_sets, budget);
        if (!r.x_check->all())
            r.violations.push_back("X-set construction fails its invariants");
    }
    if (!r.equality || !asserted)
        return r;

    const auto ds = detect_progressions(prof.distinct);
    if (!ds.empty())
        r.progression = ds.front();
    else
        r.violations.push_back("distinct terms do not form a progression");
    if (structural && capped && r.x_check->r >= 2) {
        const int rr = r.x_check->r;
        GSet acc = r.x_sets.front();
        std::int64_t total = static_cast<std::int64_t>(acc.size());
        for (int j = 1; j < rr; ++j) {
            acc = product(acc, r.x_sets[static_cast<std::size_t>(j)]);
            total += static_cast<std::int64_t>(r.x_sets[static_cast<std::size_t>(j)].size());
        }
        r.x_chain_equality = static_cast<std::int64_t>(acc.size()) == total - rr + 1;
        if (!*r.x_chain_equality)
            r.violations.push_back("X_1..X_r do not achieve equality");
    }
    return r;
}

} // namespace sumsets
