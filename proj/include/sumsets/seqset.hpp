#pragma once

#include <cstdint>
#include <vector>

#include "sumsets/group.hpp"

namespace sumsets {

struct Budget {
    int max_sets = 14;
    std::size_t max_elements = 1'000'000;
};

class SetSequence {
public:
    SetSequence(GroupModel model, std::vector<GSet> sets);

    const GroupModel& model() const { return model_; }
    const std::vector<GSet>& sets() const { return sets_; }
    const GSet& operator[](std::size_t i) const { return sets_[i]; }
    int m() const { return static_cast<int>(sets_.size()); }

    // A = A_1 ∪ ... ∪ A_m.
    const GSet& union_set() const { return union_; }
    int incidence(const Element& a) const;
    // Incidence in A_{from+1}..A_{to} (0-based half-open index range).
    int incidence_in(const Element& a, int from, int to) const;
    std::int64_t total_size() const;

private:
    GroupModel model_;
    std::vector<GSet> sets_;
    GSet union_;
    std::vector<int> incidence_;
};

// Multiplicities aligned with seq.union_set().
struct MultiplicityProfile {
    int ell = 1;
    GSet elements;
    std::vector<int> mu;
    std::vector<int> eta;
    std::vector<int> tau;
    GSet M;

    std::int64_t mu_total() const;
    int mu_of(const Element& a) const;
    int eta_of(const Element& a) const;
    int tau_of(const Element& a) const;
    std::size_t index_of(const Element& a) const;
};

MultiplicityProfile multiplicity_profile(const SetSequence& seq, int ell);

GSet generalized_sumset(const SetSequence& seq, int ell);
GSet generalized_product_set(const SetSequence& seq, int ell, const Budget& budget = {});

class ElementSequence {
public:
    ElementSequence(GroupModel model, std::vector<Element> terms);

    const GroupModel& model() const { return model_; }
    const std::vector<Element>& terms() const { return terms_; }
    int m() const { return static_cast<int>(terms_.size()); }

    // Distinct terms and their multiplicities ρ.
    const GSet& distinct() const { return distinct_; }
    const std::vector<int>& rho() const { return rho_; }
    int rho_of(const Element& a) const;

    SetSequence as_singletons() const;

private:
    GroupModel model_;
    std::vector<Element> terms_;
    GSet distinct_;
    std::vector<int> rho_;
};

GSet subsequence_sumset(const ElementSequence& a, int ell, const Budget& budget = {});

void check_ell(int ell, int m);

} // namespace sumsets
