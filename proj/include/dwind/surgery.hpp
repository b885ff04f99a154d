#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dwind/complex.hpp"
#include "dwind/knot.hpp"
#include "dwind/rational.hpp"
#include "dwind/semigroup.hpp"

namespace dwind {

/// Spin^c structure t_i on S^3_n(K), 0 <= i < n, with <c_1(s_i), [A]> = n - 2i.
class SpincLabel {
public:
    SpincLabel(int n, int i);

    int n() const { return n_; }
    int i() const { return i_; }
    int chern() const { return n_ - 2 * i_; }
    /// t_{n-i mod n}
    SpincLabel conjugate() const;

    friend bool operator==(const SpincLabel&, const SpincLabel&) = default;

private:
    int n_;
    int i_;
};

/// Correction terms d(Y, t_i) for i = 0 .. n-1. Conjugation symmetry
/// entries[i] == entries[n-i] is enforced at construction.
class CorrectionTable {
public:
    CorrectionTable(int n, std::vector<Rational> entries);

    int n() const { return n_; }
    const Rational& at(int i) const;
    const std::vector<Rational>& entries() const { return entries_; }

private:
    int n_;
    std::vector<Rational> entries_;
};

/// d(S^3_n(K), t_i) = -2 max{V_i, V_{n-i}} + (n-2i)^2/(4n) - 1/4, for n > 0.
Rational d_positive_surgery(const VSequence& v, int n, int i);
Rational d_positive_surgery(const KnotExpression& knot, int n, int i, const VSource& source = default_v_source());
CorrectionTable correction_table(const VSequence& v, int n);

/// Twisted correction term of S^3_0(K): -1/2 + 2 V_0(-K).
Rational d_zero_twisted(const KnotExpression& knot, const VSource& source = default_v_source());

/// Twisted correction term of Σ_g × S^1: (-1)^(g+1)/2.
Rational d_circle_bundle_twisted(int genus);
/// 4 d(Σ_g × S^1) + 2 b_1 = 8 ceil(g/2), checked internally.
std::int64_t combined_invariant(int genus);

/// [a_1, ..., a_k]^- = a_1 - 1/(a_2 - 1/(... - 1/a_k)); every a_j >= 2.
Rational ncf_eval(std::span<const int> coeffs);
/// Inverse of ncf_eval for r > 1.
std::vector<int> ncf_expand(const Rational& r);

/// M(e0; r_1, ..., r_k) with 0 < r_j < 1.
struct SeifertPresentation {
    SeifertPresentation(int e0, std::vector<Rational> fibers);

    int e0;
    std::vector<Rational> fibers;
};

Rational euler_number(const SeifertPresentation& s);

/// Large surgery on T(2n+1,4n+3) # T(2n+1,4n+3):
/// M(-2; 2n/(2n+1), 2n/(2n+1), 2/(4n+3), 2/(4n+3)).
SeifertPresentation kn_seifert(int n);

}  // namespace dwind
