#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwind/complex.hpp"
#include "dwind/knot.hpp"
#include "dwind/rational.hpp"
#include "dwind/surgery.hpp"

namespace dwind {

/// Anchor used for bookkeeping-only trail entries.
inline constexpr const char* kPlumbingAnchor = "plumbing";

struct TrailEntry {
    std::string name;
    Rational value;
    std::string anchor;
};

/// Result of a bound evaluation together with the chain of quantities that
/// produced it.
struct BoundReport {
    std::string kind;
    Rational value;
    /// Smallest admissible invariant value after the ceiling/parity refinement.
    std::optional<std::int64_t> induced_minimum;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<TrailEntry> trail;
    /// Known upper bound for the invariant, when one is available.
    std::optional<std::int64_t> upper_bound;
    std::optional<bool> sharp;
    std::vector<std::string> notes;

    void add(std::string name, Rational v, std::string anchor);
    /// Every trail entry carries an anchor.
    bool well_formed() const;
};

/// ceil(g/4) >= V_0(J) + V_0(-J) for a null-homologous K in S^2 x S^1 whose
/// +1-surgery is S^3_0(J).
BoundReport winding_bound_via_zero_surgery(const KnotExpression& j, const VSource& source = default_v_source());

/// (1/2) max_i { d(Y, t_i) + d(-Y, t_i) + 1 }, tables paired by index.
Rational correction_rhs(const CorrectionTable& y, const CorrectionTable& neg_y);

/// Smallest even g >= 0 with ceil(g/4) >= rhs.
std::int64_t min_even_with_quarter_ceiling(const Rational& rhs);

/// Geometric winding number bound from correction tables of ±Y_{K,n}.
BoundReport winding_bound_from_tables(const CorrectionTable& y, const CorrectionTable& neg_y);
/// Thurston norm bound ceil((x+1)/4) >= rhs for the capped meridian class.
BoundReport thurston_bound_from_tables(const CorrectionTable& y, const CorrectionTable& neg_y);

/// Null-homologous knots in #^m S^2 x S^1:
/// g >= 2 max_i { d(Y,t_i) + d(-Y,t_i) + 1 } - 2m, clamped at 0.
BoundReport multi_sphere_bound(const CorrectionTable& y, const CorrectionTable& neg_y, int m);

/// Essential knot in S^2 x S^1 in class w[S^1], w even, with d(Y, t) given
/// for the w^2 spin^c structures t = k[μ].
struct EssentialInput {
    EssentialInput(int w, std::vector<Rational> dtable);

    int w;
    std::vector<Rational> dtable;
};

/// 2 max_k { d(k) - d(k + w^2/2 mod w^2) }
Rational essential_bound(const EssentialInput& input);
BoundReport essential_report(const EssentialInput& input);

/// g_sh^0(K) >= max(0, 2 max{V_0(K), V_0(-K)} - 1), cross-checked against the
/// twisted correction term of the 0-surgery on K and on -K.
BoundReport shake_bound(const KnotExpression& knot, const VSource& source = default_v_source());

struct KnOptions {
    /// Recompute V_0(J') from the tensor-product complex instead of trusting
    /// the multiplicity-sequence reduction alone.
    bool homology_cross_check = false;
};

/// Full bound chain for the family K_n, whose winding number is at most 4n+2.
BoundReport reproduce_kn(int n, KnOptions options = {}, const VSource& source = default_v_source());

/// The knotified Hopf link W: +1-surgery is S^3_0 of the right-handed trefoil.
BoundReport reproduce_whitehead(const VSource& source = default_v_source());

}  // namespace dwind
