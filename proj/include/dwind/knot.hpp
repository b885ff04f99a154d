#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dwind {

/// Positive torus knot T(p,q), stored with p < q.
///
/// T(1,q) is the unknot and is rejected here; the unknot is the empty KnotExpression.
class TorusKnot {
public:
    TorusKnot(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    int genus() const { return (p_ - 1) * (q_ - 1) / 2; }

    std::string str() const;

    friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;

private:
    int p_;
    int q_;
};

struct Summand {
    TorusKnot knot;
    bool mirrored = false;

    int sign() const { return mirrored ? -1 : 1; }
    friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// Formal connected sum of torus knots and their mirrors, kept in canonical (sorted) order.
class KnotExpression {
public:
    KnotExpression() = default;
    explicit KnotExpression(std::vector<Summand> summands);
    KnotExpression(const TorusKnot& knot);  // NOLINT: a single positive summand

    static KnotExpression unknot() { return {}; }

    const std::vector<Summand>& summands() const { return summands_; }
    bool is_unknot() const { return summands_.empty(); }
    /// Exactly one summand, not mirrored.
    bool is_positive_torus_knot() const;
    bool all_positive() const;
    bool all_mirrored() const;
    bool is_mixed() const { return !all_positive() && !all_mirrored(); }

    int genus() const;

    KnotExpression mirror() const;
    KnotExpression connect(const KnotExpression& other) const;

    /// Canonical text, e.g. "T(2,3) # -T(4,5)"; the unknot prints as "U".
    std::string str() const;

    friend bool operator==(const KnotExpression&, const KnotExpression&) = default;

private:
    std::vector<Summand> summands_;
};

}  // namespace dwind
