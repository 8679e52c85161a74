#include "sumsets/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dense.hpp"

namespace sumsets {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t n)
{
    const std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

// Appends a syllable onto a reduced word, cancelling as needed.
void push_syllable(Word& w, Syllable s)
{
    if (s.exp == 0)
        return;
    if (!w.empty() && w.back().gen == s.gen) {
        w.back().exp += s.exp;
        if (w.back().exp == 0)
            w.pop_back();
        return;
    }
    w.push_back(s);
}

std::string generator_name(int g)
{
    static const char* names[] = {"x", "y", "z", "w"};
    if (g < 4)
        return names[g];
    return "g" + std::to_string(g);
}

} // namespace

std::int64_t word_length(const Word& w)
{
    std::int64_t n = 0;
    for (const auto& s : w)
        n += s.exp < 0 ? -s.exp : s.exp;
    return n;
}

std::strong_ordering operator<=>(const Element& x, const Element& y)
{
    if (x.payload_.index() != y.payload_.index())
        return x.payload_.index() <=> y.payload_.index();
    switch (x.payload_.index()) {
    case 0:
        return x.scalar() <=> y.scalar();
    case 1:
        return x.vec() <=> y.vec();
    default: {
        const auto lx = word_length(x.word());
        const auto ly = word_length(y.word());
        if (lx != ly)
            return lx <=> ly;
        return x.word() <=> y.word();
    }
    }
}

Word reduce_word(const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (const auto& s : w)
        push_syllable(out, s);
    return out;
}

Word multiply_words(const Word& x, const Word& y)
{
    Word out = x;
    for (const auto& s : y)
        push_syllable(out, s);
    return out;
}

Word invert_word(const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->gen, -it->exp});
    return out;
}

GroupModel GroupModel::integers()
{
    return GroupModel{};
}

GroupModel GroupModel::cyclic(std::int64_t n)
{
    if (n < 1)
        throw ModelError("cyclic modulus must be >= 1");
    GroupModel g;
    g.kind_ = ModelKind::Cyclic;
    g.n_ = n;
    return g;
}

GroupModel GroupModel::finite_abelian(std::vector<std::int64_t> moduli)
{
    if (moduli.empty())
        throw ModelError("finite abelian model needs at least one modulus");
    for (auto m : moduli)
        if (m < 2)
            throw ModelError("finite abelian moduli must be >= 2");
    GroupModel g;
    g.kind_ = ModelKind::FiniteAbelian;
    g.moduli_ = std::move(moduli);
    return g;
}

GroupModel GroupModel::free(int rank)
{
    if (rank < 1)
        throw ModelError("free group rank must be >= 1");
    GroupModel g;
    g.kind_ = ModelKind::Free;
    g.rank_ = rank;
    return g;
}

std::int64_t GroupModel::order() const
{
    switch (kind_) {
    case ModelKind::Cyclic:
        return n_;
    case ModelKind::FiniteAbelian:
        return std::accumulate(moduli_.begin(), moduli_.end(), std::int64_t{1}, std::multiplies<>());
    default:
        throw ModelError("infinite group has no finite order");
    }
}

Element GroupModel::identity() const
{
    switch (kind_) {
    case ModelKind::FiniteAbelian:
        return Element(std::vector<std::int64_t>(moduli_.size(), 0));
    case ModelKind::Free:
        return Element(Word{});
    default:
        return Element(std::int64_t{0});
    }
}

void GroupModel::check(const Element& x) const
{
    if (!is_canonical(x))
        throw ModelError("element " + format(x) + " is not canonical in " + name());
}

bool GroupModel::is_canonical(const Element& x) const
{
    switch (kind_) {
    case ModelKind::Integers:
        return x.is_scalar();
    case ModelKind::Cyclic:
        return x.is_scalar() && x.scalar() >= 0 && x.scalar() < n_;
    case ModelKind::FiniteAbelian: {
        if (!x.is_vector() || x.vec().size() != moduli_.size())
            return false;
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            if (x.vec()[i] < 0 || x.vec()[i] >= moduli_[i])
                return false;
        return true;
    }
    case ModelKind::Free: {
        if (!x.is_word())
            return false;
        const auto& w = x.word();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i].exp == 0 || w[i].gen < 0 || w[i].gen >= rank_)
                return false;
            if (i > 0 && w[i].gen == w[i - 1].gen)
                return false;
        }
        return true;
    }
    }
    return false;
}

Element GroupModel::op(const Element& x, const Element& y) const
{
    switch (kind_) {
    case ModelKind::Integers:
        if (!x.is_scalar() || !y.is_scalar())
            throw ModelError("element kind does not match " + name());
        return Element(x.scalar() + y.scalar());
    case ModelKind::Cyclic:
        if (!x.is_scalar() || !y.is_scalar())
            throw ModelError("element kind does not match " + name());
        return Element(mod(x.scalar() + y.scalar(), n_));
    case ModelKind::FiniteAbelian: {
        if (!x.is_vector() || !y.is_vector() || x.vec().size() != moduli_.size() ||
            y.vec().size() != moduli_.size())
            throw ModelError("element kind does not match " + name());
        std::vector<std::int64_t> v(moduli_.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = mod(x.vec()[i] + y.vec()[i], moduli_[i]);
        return Element(std::move(v));
    }
    case ModelKind::Free:
        if (!x.is_word() || !y.is_word())
            throw ModelError("element kind does not match " + name());
        return Element(multiply_words(x.word(), y.word()));
    }
    return identity();
}

Element GroupModel::inverse(const Element& x) const
{
    switch (kind_) {
    case ModelKind::Integers:
        return Element(-x.scalar());
    case ModelKind::Cyclic:
        return Element(mod(-x.scalar(), n_));
    case ModelKind::FiniteAbelian: {
        std::vector<std::int64_t> v(moduli_.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = mod(-x.vec()[i], moduli_[i]);
        return Element(std::move(v));
    }
    case ModelKind::Free:
        return Element(invert_word(x.word()));
    }
    return identity();
}

Element GroupModel::pow(const Element& x, std::int64_t e) const
{
    switch (kind_) {
    case ModelKind::Integers:
        return Element(x.scalar() * e);
    case ModelKind::Cyclic:
        return Element(mod(mod(x.scalar(), n_) * mod(e, n_), n_));
    case ModelKind::FiniteAbelian: {
        std::vector<std::int64_t> v(moduli_.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = mod(x.vec()[i] * mod(e, moduli_[i]), moduli_[i]);
        return Element(std::move(v));
    }
    case ModelKind::Free: {
        if (e < 0)
            return inverse(pow(x, -e));
        Element result = identity();
        Element base = x;
        while (e > 0) {
            if (e & 1)
                result = op(result, base);
            e >>= 1;
            if (e > 0)
                base = op(base, base);
        }
        return result;
    }
    }
    return identity();
}

Element GroupModel::make(std::int64_t v) const
{
    switch (kind_) {
    case ModelKind::Integers:
        return Element(v);
    case ModelKind::Cyclic:
        return Element(mod(v, n_));
    case ModelKind::FiniteAbelian:
        if (moduli_.size() == 1)
            return Element(std::vector<std::int64_t>{mod(v, moduli_[0])});
        break;
    case ModelKind::Free:
        return Element(reduce_word({{0, v}}));
    }
    throw ModelError("scalar element given for " + name());
}

Element GroupModel::make(std::vector<std::int64_t> v) const
{
    if (kind_ != ModelKind::FiniteAbelian || v.size() != moduli_.size())
        throw ModelError("vector element does not match " + name());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = mod(v[i], moduli_[i]);
    return Element(std::move(v));
}

Element GroupModel::make(Word w) const
{
    if (kind_ != ModelKind::Free)
        throw ModelError("word element given for " + name());
    for (const auto& s : w)
        if (s.gen < 0 || s.gen >= rank_)
            throw ModelError("generator index out of range for " + name());
    return Element(reduce_word(w));
}

std::int64_t GroupModel::index_of(const Element& x) const
{
    switch (kind_) {
    case ModelKind::Cyclic:
        return x.scalar();
    case ModelKind::FiniteAbelian: {
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            idx = idx * moduli_[i] + x.vec()[i];
        return idx;
    }
    default:
        throw ModelError("dense index requires a finite model");
    }
}

Element GroupModel::element_at(std::int64_t idx) const
{
    switch (kind_) {
    case ModelKind::Cyclic:
        return Element(idx);
    case ModelKind::FiniteAbelian: {
        std::vector<std::int64_t> v(moduli_.size());
        for (std::size_t i = moduli_.size(); i-- > 0;) {
            v[i] = idx % moduli_[i];
            idx /= moduli_[i];
        }
        return Element(std::move(v));
    }
    default:
        throw ModelError("dense index requires a finite model");
    }
}

std::string GroupModel::name() const
{
    switch (kind_) {
    case ModelKind::Integers:
        return "Z";
    case ModelKind::Cyclic:
        return "Z_" + std::to_string(n_);
    case ModelKind::FiniteAbelian: {
        std::string s;
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            s += (i ? "+Z_" : "Z_") + std::to_string(moduli_[i]);
        return s;
    }
    case ModelKind::Free:
        return "F_" + std::to_string(rank_);
    }
    return "?";
}

std::string GroupModel::format(const Element& x) const
{
    std::ostringstream os;
    if (x.is_scalar()) {
        os << x.scalar();
    } else if (x.is_vector()) {
        os << '(';
        for (std::size_t i = 0; i < x.vec().size(); ++i)
            os << (i ? "," : "") << x.vec()[i];
        os << ')';
    } else if (x.word().empty()) {
        os << '1';
    } else {
        for (const auto& s : x.word()) {
            os << generator_name(s.gen);
            if (s.exp != 1)
                os << '^' << s.exp;
        }
    }
    return os.str();
}

GSet::GSet(GroupModel model, std::vector<Element> elems) : model_(std::move(model)), elems_(std::move(elems))
{
    for (const auto& e : elems_)
        model_.check(e);
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

GSet GSet::from_sorted(GroupModel model, std::vector<Element> elems)
{
    GSet s(std::move(model));
    s.elems_ = std::move(elems);
    return s;
}

bool GSet::contains(const Element& x) const
{
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool GSet::is_subset_of(const GSet& other) const
{
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

GSet make_set(const GroupModel& model, std::initializer_list<std::int64_t> values)
{
    std::vector<Element> v;
    for (auto x : values)
        v.push_back(model.make(x));
    return GSet(model, std::move(v));
}

GSet interval(const GroupModel& model, std::int64_t lo, std::int64_t hi)
{
    std::vector<Element> v;
    for (auto x = lo; x <= hi; ++x)
        v.push_back(model.make(x));
    return GSet(model, std::move(v));
}

GSet set_union(const GSet& a, const GSet& b)
{
    std::vector<Element> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return GSet::from_sorted(a.model(), std::move(out));
}

GSet set_intersection(const GSet& a, const GSet& b)
{
    std::vector<Element> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return GSet::from_sorted(a.model(), std::move(out));
}

GSet set_difference(const GSet& a, const GSet& b)
{
    std::vector<Element> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return GSet::from_sorted(a.model(), std::move(out));
}

GSet left_translate(const Element& g, const GSet& s)
{
    std::vector<Element> out;
    out.reserve(s.size());
    for (const auto& x : s)
        out.push_back(s.model().op(g, x));
    return GSet(s.model(), std::move(out));
}

GSet right_translate(const GSet& s, const Element& g)
{
    std::vector<Element> out;
    out.reserve(s.size());
    for (const auto& x : s)
        out.push_back(s.model().op(x, g));
    return GSet(s.model(), std::move(out));
}

GSet product(const GSet& a, const GSet& b)
{
    if (!(a.model() == b.model()))
        throw ModelError("product of sets from different models");
    const auto& model = a.model();
    if (a.empty() || b.empty())
        return GSet(model);
    const bool dense = model.is_finite() ||
        (model.kind() == ModelKind::Integers &&
         detail::integer_span(a) + detail::integer_span(b) < detail::DenseSet::kMaxWindow);
    if (dense)
        return detail::DenseSet::from(a).sum(detail::DenseSet::from(b)).to_gset();
    std::vector<Element> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(model.op(x, y));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return GSet::from_sorted(model, std::move(out));
}

GSet enumerate(const GroupModel& model)
{
    if (!model.is_finite())
        throw ModelError("cannot enumerate infinite group " + model.name());
    const auto n = model.order();
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        out.push_back(model.element_at(i));
    return GSet::from_sorted(model, std::move(out));
}

std::optional<std::int64_t> smallest_subgroup_order(const GroupModel& model)
{
    if (!model.is_finite())
        return std::nullopt;
    const auto n = model.order();
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return p;
    if (n == 1)
        return std::nullopt;
    return n;
}

GSet stabilizer(const GSet& s)
{
    const auto& model = s.model();
    if (!model.is_finite())
        return GSet::from_sorted(model, {model.identity()});
    const auto n = model.order();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (const auto& x : s)
        in[static_cast<std::size_t>(model.index_of(x))] = 1;
    std::vector<Element> out;
    for (std::int64_t i = 0; i < n; ++i) {
        const auto g = model.element_at(i);
        bool fixes = true;
        for (const auto& x : s) {
            if (!in[static_cast<std::size_t>(model.index_of(model.op(g, x)))]) {
                fixes = false;
                break;
            }
        }
        if (fixes)
            out.push_back(g);
    }
    return GSet::from_sorted(model, std::move(out));
}

bool is_subgroup(const GSet& h)
{
    const auto& model = h.model();
    if (h.empty() || !h.contains(model.identity()))
        return false;
    for (const auto& x : h)
        for (const auto& y : h)
            if (!h.contains(model.op(x, model.inverse(y))))
                return false;
    return true;
}

std::vector<GSet> cosets(const GSet& h)
{
    const auto& model = h.model();
    if (!model.is_finite())
        throw ModelError("cosets require a finite model");
    if (!is_subgroup(h))
        throw ModelError("cosets: set is not a subgroup");
    const auto n = model.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<GSet> out;
    for (std::int64_t i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)])
            continue;
        auto q = left_translate(model.element_at(i), h);
        for (const auto& x : q)
            seen[static_cast<std::size_t>(model.index_of(x))] = 1;
        out.push_back(std::move(q));
    }
    return out;
}

std::string format_set(const GSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += s.model().format(s[i]);
    }
    return out + "}";
}

} // namespace sumsets
