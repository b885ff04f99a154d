#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dwind/knot.hpp"

namespace dwind {

/// The numerical semigroup generated by two coprime integers p, q >= 2.
///
/// Membership is tabulated on [0, conductor); everything at or above the
/// conductor (p-1)(q-1) is a member.
class NumericalSemigroup {
public:
    NumericalSemigroup(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    std::int64_t conductor() const { return static_cast<std::int64_t>(member_.size()); }

    bool contains(std::int64_t x) const;
    /// |Γ ∩ [0, t)|
    std::int64_t count_below(std::int64_t t) const;
    std::int64_t gap_count() const;
    std::vector<std::int64_t> gaps() const;

private:
    int p_;
    int q_;
    std::vector<bool> member_;
    std::vector<std::int64_t> prefix_;  // prefix_[t] = members in [0, t), t <= conductor
};

NumericalSemigroup semigroup_from_pair(int p, int q);
std::int64_t count_below(const NumericalSemigroup& s, std::int64_t t);

/// Non-increasing sequence V_0 >= V_1 >= ... >= 0 with unit steps.
/// Indices past the stored values read as 0.
class VSequence {
public:
    VSequence() = default;
    explicit VSequence(std::vector<std::int64_t> values);

    std::int64_t at(std::int64_t i) const;
    std::int64_t operator[](std::int64_t i) const { return at(i); }
    const std::vector<std::int64_t>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    /// Index of the first zero entry.
    std::int64_t support() const;

    friend bool operator==(const VSequence& a, const VSequence& b);

private:
    std::vector<std::int64_t> values_;
};

/// V_i(T(p,q)) = |Γ_{p,q} ∩ [0, g - i)| for 0 <= i <= g.
VSequence v_sequence_torus(const TorusKnot& knot);

enum class V0Family { I, II, III };

V0Family parse_v0_family(std::string_view tag);
/// T(2n,2n+1), T(2n,8n+1), T(2n+1,8n+5) for families I, II, III.
TorusKnot v0_family_knot(V0Family family, int n);
/// n(n+1)/2, 2n^2 and 2n(n+1) respectively.
std::int64_t v0_closed_form(V0Family family, int n);

/// Multiplicity sequence of the plane curve singularity x^p = y^q.
class MultiplicitySequence {
public:
    MultiplicitySequence() = default;
    explicit MultiplicitySequence(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    /// Concatenation, re-sorted into non-increasing order.
    MultiplicitySequence concat(const MultiplicitySequence& other) const;
    /// T(n, kn+1) when every entry equals n >= 2.
    std::optional<TorusKnot> as_uniform_torus_knot() const;

    friend bool operator==(const MultiplicitySequence&, const MultiplicitySequence&) = default;

private:
    std::vector<int> entries_;
};

MultiplicitySequence multiplicity_sequence(const TorusKnot& knot);

/// Collapses T(n,a_1 n+1) # ... # T(n,a_k n+1) to T(n,(a_1+...+a_k) n+1).
/// A single positive summand reduces to itself; anything else (mirrors,
/// mixed n, the unknot) has no reduction.
std::optional<TorusKnot> diamond_reduce(const KnotExpression& expr);

}  // namespace dwind
