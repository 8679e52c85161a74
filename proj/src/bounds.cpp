#include "sumsets/bounds.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace sumsets {

namespace {

constexpr std::array<std::pair<BoundName, const char*>, 8> kNames{{
    {BoundName::CauchyDavenport, "CauchyDavenport"},
    {BoundName::KemperTF, "KemperTF"},
    {BoundName::Kneser, "Kneser"},
    {BoundName::DGM, "DGM"},
    {BoundName::TorsionFreeMu, "TorsionFreeMu"},
    {BoundName::ZpMu, "ZpMu"},
    {BoundName::AbelianMu, "AbelianMu"},
    {BoundName::SubseqHamidoune, "SubseqHamidoune"},
}};

BoundReport make_report(BoundName name, std::int64_t value, std::int64_t actual)
{
    BoundReport r{name, value, actual, actual - value, {}};
    return r;
}

void require_prime_cyclic(const GroupModel& model, const char* what)
{
    if (model.kind() != ModelKind::Cyclic || !is_prime(model.modulus()))
        throw ModelError(std::string(what) + " requires Z_p with p prime, got " + model.name());
}

void require_torsion_free(const GroupModel& model, const char* what)
{
    if (!model.is_torsion_free())
        throw ModelError(std::string(what) + " requires a torsion-free model, got " + model.name());
}

void require_finite_abelian(const GroupModel& model, const char* what)
{
    if (!model.is_finite())
        throw ModelError(std::string(what) + " requires a finite abelian model, got " + model.name());
}

void require_nonempty(const SetSequence& seq)
{
    for (const auto& s : seq.sets())
        if (s.empty())
            throw std::invalid_argument("bounds require nonempty sets");
}

GSet ordered_product(const SetSequence& seq, const Budget& budget)
{
    GSet acc = seq[0];
    for (int i = 1; i < seq.m(); ++i) {
        if (acc.size() * seq[static_cast<std::size_t>(i)].size() > budget.max_elements)
            throw BudgetExceeded("ordered product exceeds the element budget");
        acc = product(acc, seq[static_cast<std::size_t>(i)]);
    }
    return acc;
}

} // namespace

std::string to_string(BoundName b)
{
    for (const auto& [n, s] : kNames)
        if (n == b)
            return s;
    return "?";
}

std::optional<BoundName> bound_from_string(const std::string& s)
{
    std::string lower;
    for (char c : s)
        if (c != '-' && c != '_')
            lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const auto& [n, name] : kNames) {
        std::string key;
        for (const char* p = name; *p; ++p)
            key += static_cast<char>(std::tolower(static_cast<unsigned char>(*p)));
        if (key == lower)
            return n;
    }
    return std::nullopt;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool BoundReport::holds() const
{
    if (bound == BoundName::SubseqHamidoune)
        return witness.size_disjunct.value_or(false) || witness.membership_disjunct.value_or(false);
    return slack >= 0;
}

BoundReport cauchy_davenport_bound(const SetSequence& seq)
{
    require_prime_cyclic(seq.model(), "Cauchy-Davenport");
    require_nonempty(seq);
    const auto p = seq.model().modulus();
    const auto value = std::min(p, seq.total_size() - seq.m() + 1);
    return make_report(BoundName::CauchyDavenport, value,
                       static_cast<std::int64_t>(ordered_product(seq, Budget{}).size()));
}

BoundReport kemperman_tf_bound(const SetSequence& seq, const Budget& budget)
{
    require_torsion_free(seq.model(), "Kemperman");
    require_nonempty(seq);
    return make_report(BoundName::KemperTF, seq.total_size() - seq.m() + 1,
                       static_cast<std::int64_t>(ordered_product(seq, budget).size()));
}

BoundReport kneser_bound(const GSet& a, const GSet& b)
{
    require_finite_abelian(a.model(), "Kneser");
    if (a.empty() || b.empty())
        throw std::invalid_argument("Kneser requires nonempty sets");
    const auto sum = product(a, b);
    auto h = stabilizer(sum);
    const auto ah = product(a, h).size();
    const auto bh = product(b, h).size();
    auto r = make_report(BoundName::Kneser,
                         static_cast<std::int64_t>(ah + bh) - static_cast<std::int64_t>(h.size()),
                         static_cast<std::int64_t>(sum.size()));
    r.witness.stabilizer = std::move(h);
    return r;
}

BoundReport dgm_bound(const SetSequence& seq, int ell)
{
    require_finite_abelian(seq.model(), "DeVos-Goddyn-Mohar");
    require_nonempty(seq);
    check_ell(ell, seq.m());
    const auto s = generalized_sumset(seq, ell);
    auto h = stabilizer(s);
    const auto& model = seq.model();
    const auto qs = cosets(h);
    // Coset label of every group element.
    std::vector<int> label(static_cast<std::size_t>(model.order()));
    for (std::size_t q = 0; q < qs.size(); ++q)
        for (const auto& x : qs[q])
            label[static_cast<std::size_t>(model.index_of(x))] = static_cast<int>(q);
    std::vector<int> hits(qs.size(), 0);
    for (const auto& a : seq.sets()) {
        std::vector<char> touched(qs.size(), 0);
        for (const auto& x : a)
            touched[static_cast<std::size_t>(label[static_cast<std::size_t>(model.index_of(x))])] = 1;
        for (std::size_t q = 0; q < qs.size(); ++q)
            hits[q] += touched[q];
    }
    std::int64_t total = 0;
    std::vector<int> mu_q;
    for (auto c : hits) {
        mu_q.push_back(std::min(ell, c));
        total += mu_q.back();
    }
    const auto hsize = static_cast<std::int64_t>(h.size());
    auto r = make_report(BoundName::DGM, hsize * (total - ell + 1), static_cast<std::int64_t>(s.size()));
    r.witness.stabilizer = std::move(h);
    r.witness.coset_mu = std::move(mu_q);
    r.witness.mu_total = total;
    return r;
}

BoundReport torsion_free_mu_bound(const SetSequence& seq, int ell, const Budget& budget)
{
    require_torsion_free(seq.model(), "torsion-free multiplicity bound");
    const auto mu = multiplicity_profile(seq, ell).mu_total();
    auto r = make_report(BoundName::TorsionFreeMu, mu - ell + 1,
                         static_cast<std::int64_t>(generalized_product_set(seq, ell, budget).size()));
    r.witness.mu_total = mu;
    return r;
}

BoundReport zp_mu_bound(const SetSequence& seq, int ell)
{
    require_prime_cyclic(seq.model(), "Z_p multiplicity bound");
    if (ell < 2)
        throw std::invalid_argument("Z_p multiplicity bound needs ell >= 2");
    const auto mu = multiplicity_profile(seq, ell).mu_total();
    const auto p = seq.model().modulus();
    auto r = make_report(BoundName::ZpMu, std::min(p, mu - ell + 1),
                         static_cast<std::int64_t>(generalized_sumset(seq, ell).size()));
    r.witness.mu_total = mu;
    r.witness.p_of_g = p;
    return r;
}

BoundReport abelian_mu_bound(const SetSequence& seq, int ell, const Budget& budget)
{
    if (!seq.model().is_abelian())
        throw std::invalid_argument("abelian multiplicity bound requires an abelian model");
    const auto mu = multiplicity_profile(seq, ell).mu_total();
    const auto pg = smallest_subgroup_order(seq.model());
    auto value = mu - ell + 1;
    if (pg)
        value = std::min(*pg, value);
    auto r = make_report(BoundName::AbelianMu, value,
                         static_cast<std::int64_t>(generalized_product_set(seq, ell, budget).size()));
    r.witness.mu_total = mu;
    r.witness.p_of_g = pg;
    return r;
}

BoundReport hamidoune_check(const ElementSequence& a, int ell, const Budget& budget)
{
    check_ell(ell, a.m());
    const auto s = subsequence_sumset(a, ell, budget);
    const auto pg = smallest_subgroup_order(a.model());
    std::int64_t value = a.m() - ell + 1;
    if (pg)
        value = std::min(*pg, value);
    auto r = make_report(BoundName::SubseqHamidoune, value, static_cast<std::int64_t>(s.size()));
    r.witness.p_of_g = pg;
    r.witness.size_disjunct = r.actual >= value;
    bool member = false;
    for (const auto& x : a.distinct())
        if (s.contains(a.model().pow(x, ell))) {
            member = true;
            break;
        }
    r.witness.membership_disjunct = member;
    return r;
}

std::vector<BoundReport> applicable_bounds(const SetSequence& seq, int ell, const Budget& budget)
{
    std::vector<BoundReport> out;
    const auto& model = seq.model();
    if (model.is_abelian())
        out.push_back(abelian_mu_bound(seq, ell, budget));
    if (model.is_torsion_free()) {
        out.push_back(torsion_free_mu_bound(seq, ell, budget));
        out.push_back(kemperman_tf_bound(seq, budget));
        return out;
    }
    out.push_back(dgm_bound(seq, ell));
    if (seq.m() >= 2)
        out.push_back(kneser_bound(seq[0], seq[1]));
    if (model.kind() == ModelKind::Cyclic && is_prime(model.modulus())) {
        out.push_back(cauchy_davenport_bound(seq));
        if (ell >= 2)
            out.push_back(zp_mu_bound(seq, ell));
    }
    return out;
}

} // namespace sumsets
