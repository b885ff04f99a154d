#include <algorithm>
#include <string>

#include "dwind/complex.hpp"
#include "dwind/errors.hpp"
#include "f2.hpp"

namespace dwind {

namespace {

// In a fixed Maslov grading each generator contributes at most one basis
// element U^a g, so a basis can be indexed by generator.
struct GradedBasis {
    std::vector<TruncatedComplex::Element> elements;
    std::vector<std::size_t> index_of;  // generator -> position, npos if absent

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    GradedBasis(const TruncatedComplex& t, int maslov)
        : elements(t.basis_in_grading(maslov)), index_of(t.base().size(), npos) {
        for (std::size_t i = 0; i < elements.size(); ++i) index_of[elements[i].generator] = i;
    }

    std::size_t size() const { return elements.size(); }

    f2::BitVec encode(const std::vector<TruncatedComplex::Element>& terms) const {
        f2::BitVec v(elements.size());
        for (const auto& e : terms) {
            auto i = index_of[e.generator];
            if (i == npos || elements[i].u_power != e.u_power)
                throw InternalError("differential leaves its target grading");
            v.flip(i);
        }
        return v;
    }
};

std::vector<f2::BitVec> images(const TruncatedComplex& t, const std::vector<TruncatedComplex::Element>& source,
                               const GradedBasis& target) {
    std::vector<f2::BitVec> out;
    out.reserve(source.size());
    for (const auto& e : source) out.push_back(target.encode(t.differential(e)));
    return out;
}

f2::Echelon boundaries(const TruncatedComplex& t, int maslov, const GradedBasis& here) {
    f2::Echelon b(here.size());
    const GradedBasis above(t, maslov + 1);
    for (auto& v : images(t, above.elements, here)) b.insert(std::move(v));
    return b;
}

}  // namespace

TruncatedComplex::TruncatedComplex(BifilteredComplex base, int order) : base_(std::move(base)), order_(order) {
    if (order_ < 1) throw ValidationError("truncation order must be positive");
}

std::vector<TruncatedComplex::Element> TruncatedComplex::basis_in_grading(int m) const {
    std::vector<Element> out;
    for (std::size_t g = 0; g < base_.size(); ++g) {
        const int diff = base_.generator(g).maslov - m;
        if (diff < 0 || diff % 2 != 0) continue;
        const int a = diff / 2;
        if (a < order_) out.push_back(Element{g, a});
    }
    return out;
}

std::vector<TruncatedComplex::Element> TruncatedComplex::differential(const Element& e) const {
    std::vector<Element> out;
    for (const auto& a : base_.arrows(e.generator)) {
        const int power = e.u_power + a.u_power;
        if (power < order_) out.push_back(Element{a.target, power});
    }
    return out;
}

bool TruncatedComplex::d_squared_zero() const {
    const auto [top, bottom] = grading_range();
    for (int m = top; m >= bottom; --m) {
        const GradedBasis two_below(*this, m - 2);
        for (const auto& e : basis_in_grading(m)) {
            std::vector<Element> dd;
            for (const auto& x : differential(e))
                for (const auto& y : differential(x)) dd.push_back(y);
            if (!two_below.encode(dd).none()) return false;
        }
    }
    return true;
}

std::pair<int, int> TruncatedComplex::grading_range() const {
    return {base_.max_maslov(), base_.min_maslov() - 2 * (order_ - 1)};
}

std::size_t TruncatedComplex::homology_rank(int m) const {
    const GradedBasis here(*this, m);
    if (here.size() == 0) return 0;
    const GradedBasis below(*this, m - 1);
    const auto cycles = f2::kernel(images(*this, here.elements, below), below.size());
    return cycles.size() - boundaries(*this, m, here).rank();
}

bool TruncatedComplex::tower_survives(int m, std::optional<int> s) const {
    const GradedBasis here(*this, m);
    if (here.size() == 0) return false;

    std::vector<Element> sub;
    std::vector<std::size_t> sub_pos;
    for (std::size_t i = 0; i < here.size(); ++i) {
        const auto& e = here.elements[i];
        if (s && e.u_power < std::max(0, base_.generator(e.generator).alexander - *s)) continue;
        sub.push_back(e);
        sub_pos.push_back(i);
    }
    if (sub.empty()) return false;

    const GradedBasis below(*this, m - 1);
    const auto cycles = f2::kernel(images(*this, sub, below), below.size());
    if (cycles.empty()) return false;

    auto b = boundaries(*this, m, here);
    for (const auto& z : cycles) {
        f2::BitVec lifted(here.size());
        for (std::size_t j = 0; j < sub.size(); ++j)
            if (z.test(j)) lifted.set(sub_pos[j]);
        if (b.insert(std::move(lifted))) return true;
    }
    return false;
}

int default_truncation_order(const BifilteredComplex& c) { return 2 * std::max(0, c.max_alexander()) + 2; }

int localized_tower_top(const BifilteredComplex& c) {
    // Assumes H_*(C) is free of rank one, as for every knot complex.
    const TruncatedComplex t(c, default_truncation_order(c));
    const auto [top, bottom] = t.grading_range();
    for (int m = top; m >= bottom; --m)
        if (t.homology_rank(m) > 0) return m;
    throw InternalError("complex has vanishing homology");
}

bool has_normalized_tower(const BifilteredComplex& c, int order) {
    const TruncatedComplex t(c, order);
    const auto [top, bottom] = t.grading_range();
    for (int m = std::max(top, 0); m >= bottom; --m) {
        const bool in_tower = m <= 0 && m % 2 == 0 && m > -2 * order;
        if (t.homology_rank(m) != (in_tower ? 1U : 0U)) return false;
    }
    return true;
}

std::int64_t v_invariant_at_order(const BifilteredComplex& c, int s, int order) {
    if (s < 0) throw ValidationError("V_s needs s >= 0, got " + std::to_string(s));
    const TruncatedComplex t(c, order);
    for (int k = 0; k < order; ++k)
        if (t.tower_survives(-2 * k, s)) return k;
    throw TruncationError("no tower class for V_" + std::to_string(s) + " within truncation order " +
                          std::to_string(order) + "; a larger order is required");
}

std::int64_t v_invariant(const BifilteredComplex& c, int s) {
    const int order = default_truncation_order(c);
    const auto v = v_invariant_at_order(c, s, order);
    const auto check = v_invariant_at_order(c, s, order + 1);
    if (v != check)
        throw TruncationError("V_" + std::to_string(s) + " changes from " + std::to_string(v) + " to " +
                              std::to_string(check) + " between truncation orders " + std::to_string(order) +
                              " and " + std::to_string(order + 1));
    return v;
}

VSequence v_sequence_homology(const BifilteredComplex& c) {
    const int g = std::max(0, c.max_alexander());
    const int order = default_truncation_order(c);
    const TruncatedComplex t(c, order);
    const TruncatedComplex wider(c, order + 1);

    auto tower_top = [](const TruncatedComplex& tc, int s, int start) -> std::int64_t {
        for (int k = start; k < tc.order(); ++k)
            if (tc.tower_survives(-2 * k, s)) return k;
        throw TruncationError("no tower class for V_" + std::to_string(s) + " within truncation order " +
                              std::to_string(tc.order()));
    };

    std::vector<std::int64_t> values(static_cast<std::size_t>(g) + 1);
    // V_{s+1} is V_s or V_s - 1. Scanning from V_s - 2 keeps the search short
    // while a larger drop still shows up (and is rejected by VSequence).
    std::int64_t prev = 0;
    for (int s = 0; s <= g; ++s) {
        const int start = s == 0 ? 0 : static_cast<int>(std::max<std::int64_t>(0, prev - 2));
        const auto v = tower_top(t, s, start);
        const auto check = tower_top(wider, s, start);
        if (v != check)
            throw TruncationError("V_" + std::to_string(s) + " changes between truncation orders " +
                                  std::to_string(order) + " and " + std::to_string(order + 1));
        values[static_cast<std::size_t>(s)] = v;
        prev = v;
    }
    return VSequence(std::move(values));
}

VSequence v_sequence(const KnotExpression& expr) {
    if (expr.is_positive_torus_knot()) {
        auto fast = v_sequence_torus(expr.summands().front().knot);
#ifndef NDEBUG
        if (expr.genus() <= 30 && !(fast == v_sequence_homology(complex_of(expr))))
            throw InternalError("semigroup and homology V-sequences disagree for " + expr.str());
#endif
        return fast;
    }
    return v_sequence_homology(complex_of(expr));
}

std::int64_t v_zero(const KnotExpression& expr) {
    if (expr.is_unknot()) return 0;
    if (expr.is_positive_torus_knot()) {
        const auto& k = expr.summands().front().knot;
        return NumericalSemigroup(k.p(), k.q()).count_below(k.genus());
    }
    return v_invariant(complex_of(expr), 0);
}

const VSource& default_v_source() {
    static const VSource source;
    return source;
}

}  // namespace dwind
