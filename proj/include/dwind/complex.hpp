#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dwind/knot.hpp"
#include "dwind/semigroup.hpp"

namespace dwind {

struct Generator {
    int maslov = 0;
    int alexander = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// One term U^u_power * g_target of the differential of a generator.
struct Arrow {
    std::size_t target = 0;
    int u_power = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Free, finitely generated chain complex over F_2[U] with a Maslov grading
/// and an Alexander filtration.
///
/// Row k of the differential lists ∂g_k = Σ U^{n_kl} g_l. Construction checks
/// that every arrow lowers Maslov grading by one (M_l - 2 n_kl = M_k - 1),
/// does not raise the Alexander filtration (A_l - n_kl <= A_k), and that
/// n_kl >= 0. ∂² = 0 and the tower normalization are checked separately
/// (d_squared_zero, has_normalized_tower).
class BifilteredComplex {
public:
    BifilteredComplex(std::vector<Generator> generators, std::vector<std::vector<Arrow>> differential);

    std::size_t size() const { return generators_.size(); }
    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& generator(std::size_t k) const { return generators_.at(k); }
    const std::vector<Arrow>& arrows(std::size_t k) const { return differential_.at(k); }
    /// U-exponent of the (k,l) entry, or nullopt when absent.
    std::optional<int> entry(std::size_t k, std::size_t l) const;
    std::size_t arrow_count() const;

    int max_alexander() const;
    int min_maslov() const;
    int max_maslov() const;

    BifilteredComplex shift_maslov(int shift) const;

    bool grading_law_holds() const;
    bool filtration_holds() const;
    bool d_squared_zero() const;

    friend bool operator==(const BifilteredComplex&, const BifilteredComplex&) = default;

private:
    std::vector<Generator> generators_;
    std::vector<std::vector<Arrow>> differential_;
};

/// Nonzero terms (exponent, coefficient) of the symmetrized Alexander
/// polynomial of T(p,q), exponents descending from g to -g.
std::vector<std::pair<int, int>> alexander_terms(const TorusKnot& knot);

/// Single generator at (0,0) with zero differential.
BifilteredComplex unknot_complex();
/// Staircase complex of a positive torus knot.
BifilteredComplex staircase(const TorusKnot& knot);
/// Dual complex (mirror knot): gradings negated, differential transposed,
/// Maslov grading re-normalized so the localized tower tops at 0.
BifilteredComplex dualize(const BifilteredComplex& c);
/// Tensor product over F_2[U] (connected sum). Generator (i,j) has index i * c2.size() + j.
BifilteredComplex tensor(const BifilteredComplex& c1, const BifilteredComplex& c2);
BifilteredComplex complex_of(const KnotExpression& expr);

/// C ⊗ F_2[U]/U^N with explicit basis {U^a g : 0 <= a < N}.
class TruncatedComplex {
public:
    struct Element {
        std::size_t generator = 0;
        int u_power = 0;

        friend auto operator<=>(const Element&, const Element&) = default;
    };

    TruncatedComplex(BifilteredComplex base, int order);

    const BifilteredComplex& base() const { return base_; }
    int order() const { return order_; }
    std::size_t dimension() const { return base_.size() * static_cast<std::size_t>(order_); }

    int maslov(const Element& e) const { return base_.generator(e.generator).maslov - 2 * e.u_power; }
    int alexander(const Element& e) const { return base_.generator(e.generator).alexander - e.u_power; }

    /// Basis elements of the given Maslov grading.
    std::vector<Element> basis_in_grading(int maslov) const;
    /// Truncated differential; terms with U-power >= N are dropped.
    std::vector<Element> differential(const Element& e) const;
    bool d_squared_zero() const;

    /// Highest and lowest Maslov gradings carried by the truncated complex.
    std::pair<int, int> grading_range() const;

    /// dim H_m of the truncated complex.
    std::size_t homology_rank(int maslov) const;

    /// Whether H_m(A_s) -> H_m(C) is nonzero, where A_s is spanned by the U^a g
    /// with a >= max(0, A(g) - s). nullopt stands for s = +∞ (A_s = C).
    bool tower_survives(int maslov, std::optional<int> s) const;

private:
    BifilteredComplex base_;
    int order_;
};

/// 2 * max Alexander grading + 2.
int default_truncation_order(const BifilteredComplex& c);

/// Top grading of the localized tower of the full complex.
int localized_tower_top(const BifilteredComplex& c);
/// H_*(C ⊗ F_2[U]/U^N) is one copy of F_2 in each grading 0, -2, ..., -2(N-1).
bool has_normalized_tower(const BifilteredComplex& c, int order);

/// V_s at a fixed truncation order; throws TruncationError if the tower is
/// not seen inside the window.
std::int64_t v_invariant_at_order(const BifilteredComplex& c, int s, int order);
/// V_s at the default order, cross-checked against order + 1.
std::int64_t v_invariant(const BifilteredComplex& c, int s);

/// V_s for s = 0 .. max Alexander grading through the homology route.
VSequence v_sequence_homology(const BifilteredComplex& c);

/// Semigroup count for one positive torus knot, homology otherwise.
VSequence v_sequence(const KnotExpression& expr);
std::int64_t v_zero(const KnotExpression& expr);

/// Source of V-invariants; the library default computes them, callers may
/// substitute a cached implementation.
class VSource {
public:
    virtual ~VSource() = default;
    virtual VSequence sequence(const KnotExpression& expr) const { return v_sequence(expr); }
    virtual std::int64_t v0(const KnotExpression& expr) const { return v_zero(expr); }
};

const VSource& default_v_source();

}  // namespace dwind
