#include "dwind/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "dwind/errors.hpp"

namespace dwind {

NumericalSemigroup::NumericalSemigroup(int p, int q) {
    TorusKnot validated(p, q);  // same preconditions: p, q >= 2 and coprime
    p_ = validated.p();
    q_ = validated.q();
    const std::int64_t c = static_cast<std::int64_t>(p_ - 1) * (q_ - 1);
    member_.assign(static_cast<std::size_t>(c), false);
    for (std::int64_t a = 0; a < c; a += q_)
        for (std::int64_t x = a; x < c; x += p_) member_[static_cast<std::size_t>(x)] = true;
    prefix_.assign(static_cast<std::size_t>(c) + 1, 0);
    for (std::int64_t t = 0; t < c; ++t)
        prefix_[static_cast<std::size_t>(t) + 1] = prefix_[static_cast<std::size_t>(t)] + (member_[static_cast<std::size_t>(t)] ? 1 : 0);
}

bool NumericalSemigroup::contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x >= conductor()) return true;
    return member_[static_cast<std::size_t>(x)];
}

std::int64_t NumericalSemigroup::count_below(std::int64_t t) const {
    if (t < 0) throw ValidationError("count_below: t must be non-negative, got " + std::to_string(t));
    const auto c = conductor();
    if (t >= c) return prefix_.back() + (t - c);
    return prefix_[static_cast<std::size_t>(t)];
}

std::int64_t NumericalSemigroup::gap_count() const { return conductor() - prefix_.back(); }

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < conductor(); ++x)
        if (!member_[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

NumericalSemigroup semigroup_from_pair(int p, int q) { return NumericalSemigroup(p, q); }

std::int64_t count_below(const NumericalSemigroup& s, std::int64_t t) { return s.count_below(t); }

VSequence::VSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0) throw InternalError("V-sequence has a negative entry at index " + std::to_string(i));
        if (i + 1 < values_.size()) {
            auto step = values_[i] - values_[i + 1];
            if (step != 0 && step != 1)
                throw InternalError("V-sequence step at index " + std::to_string(i) + " is " +
                                    std::to_string(step) + ", expected 0 or 1");
        }
    }
}

std::int64_t VSequence::at(std::int64_t i) const {
    if (i < 0) throw ValidationError("V-sequence index must be non-negative");
    return static_cast<std::size_t>(i) < values_.size() ? values_[static_cast<std::size_t>(i)] : 0;
}

std::int64_t VSequence::support() const {
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] == 0) return static_cast<std::int64_t>(i);
    return static_cast<std::int64_t>(values_.size());
}

bool operator==(const VSequence& a, const VSequence& b) {
    const auto n = static_cast<std::int64_t>(std::max(a.size(), b.size()));
    for (std::int64_t i = 0; i < n; ++i)
        if (a.at(i) != b.at(i)) return false;
    return true;
}

VSequence v_sequence_torus(const TorusKnot& knot) {
    NumericalSemigroup gamma(knot.p(), knot.q());
    const std::int64_t g = knot.genus();
    std::vector<std::int64_t> values(static_cast<std::size_t>(g) + 1);
    for (std::int64_t i = 0; i <= g; ++i) values[static_cast<std::size_t>(i)] = gamma.count_below(g - i);
    return VSequence(std::move(values));
}

V0Family parse_v0_family(std::string_view tag) {
    if (tag == "I") return V0Family::I;
    if (tag == "II") return V0Family::II;
    if (tag == "III") return V0Family::III;
    throw ValidationError("unknown V0 family '" + std::string(tag) + "' (expected I, II or III)");
}

TorusKnot v0_family_knot(V0Family family, int n) {
    if (n < 1) throw ValidationError("family index n must be >= 1");
    switch (family) {
        case V0Family::I: return TorusKnot(2 * n, 2 * n + 1);
        case V0Family::II: return TorusKnot(2 * n, 8 * n + 1);
        case V0Family::III: return TorusKnot(2 * n + 1, 8 * n + 5);
    }
    throw ValidationError("unknown V0 family");
}

std::int64_t v0_closed_form(V0Family family, int n) {
    if (n < 1) throw ValidationError("family index n must be >= 1");
    const std::int64_t m = n;
    switch (family) {
        case V0Family::I: return m * (m + 1) / 2;
        case V0Family::II: return 2 * m * m;
        case V0Family::III: return 2 * m * (m + 1);
    }
    throw ValidationError("unknown V0 family");
}

MultiplicitySequence::MultiplicitySequence(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 1) throw ValidationError("multiplicity sequence entries must be positive");
    if (!std::is_sorted(entries_.begin(), entries_.end(), std::greater<>{}))
        throw ValidationError("multiplicity sequence must be non-increasing");
}

MultiplicitySequence MultiplicitySequence::concat(const MultiplicitySequence& other) const {
    auto all = entries_;
    all.insert(all.end(), other.entries_.begin(), other.entries_.end());
    std::sort(all.begin(), all.end(), std::greater<>{});
    return MultiplicitySequence(std::move(all));
}

std::optional<TorusKnot> MultiplicitySequence::as_uniform_torus_knot() const {
    if (entries_.empty()) return std::nullopt;
    const int n = entries_.front();
    if (n < 2 || entries_.back() != n) return std::nullopt;
    const int k = static_cast<int>(entries_.size());
    return TorusKnot(n, k * n + 1);
}

MultiplicitySequence multiplicity_sequence(const TorusKnot& knot) {
    // Blowing up x^a = y^b (a < b) gives x^a = y^(b-a) with multiplicity a.
    std::vector<int> out;
    int a = knot.p();
    int b = knot.q();
    while (a > 1) {
        out.push_back(a);
        b -= a;
        if (b < a) std::swap(a, b);
    }
    return MultiplicitySequence(std::move(out));
}

std::optional<TorusKnot> diamond_reduce(const KnotExpression& expr) {
    if (expr.is_unknot() || !expr.all_positive()) return std::nullopt;
    if (expr.summands().size() == 1) return expr.summands().front().knot;
    MultiplicitySequence combined;
    for (const auto& s : expr.summands()) combined = combined.concat(multiplicity_sequence(s.knot));
    return combined.as_uniform_torus_knot();
}

}  // namespace dwind
