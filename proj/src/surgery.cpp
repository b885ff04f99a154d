#include "dwind/surgery.hpp"

#include <algorithm>
#include <string>

#include "dwind/errors.hpp"

namespace dwind {

SpincLabel::SpincLabel(int n, int i) : n_(n), i_(i) {
    if (n < 1) throw ValidationError("surgery coefficient must be positive, got " + std::to_string(n));
    if (i < 0 || i >= n)
        throw ValidationError("spin^c index " + std::to_string(i) + " out of range [0," + std::to_string(n) + ")");
}

SpincLabel SpincLabel::conjugate() const { return SpincLabel(n_, (n_ - i_) % n_); }

CorrectionTable::CorrectionTable(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 1) throw ValidationError("correction table needs n >= 1");
    if (static_cast<int>(entries_.size()) != n)
        throw ValidationError("correction table for n=" + std::to_string(n) + " has " +
                              std::to_string(entries_.size()) + " entries");
    for (int i = 1; i < n; ++i)
        if (entries_[static_cast<std::size_t>(i)] != entries_[static_cast<std::size_t>(n - i)])
            throw ValidationError("correction table breaks conjugation symmetry at i=" + std::to_string(i));
}

const Rational& CorrectionTable::at(int i) const {
    if (i < 0 || i >= n_) throw ValidationError("correction table index " + std::to_string(i) + " out of range");
    return entries_[static_cast<std::size_t>(i)];
}

Rational d_positive_surgery(const VSequence& v, int n, int i) {
    const SpincLabel label(n, i);
    const auto vmax = std::max(v.at(i), v.at(n - i));
    const std::int64_t c = label.chern();
    return Rational(-2 * vmax) + Rational(c * c, 4 * static_cast<std::int64_t>(n)) - Rational(1, 4);
}

Rational d_positive_surgery(const KnotExpression& knot, int n, int i, const VSource& source) {
    SpincLabel(n, i);  // validate before any V computation
    return d_positive_surgery(source.sequence(knot), n, i);
}

CorrectionTable correction_table(const VSequence& v, int n) {
    if (n < 1) throw ValidationError("surgery coefficient must be positive, got " + std::to_string(n));
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) entries.push_back(d_positive_surgery(v, n, i));
    return CorrectionTable(n, std::move(entries));
}

Rational d_zero_twisted(const KnotExpression& knot, const VSource& source) {
    return Rational(-1, 2) + Rational(2 * source.v0(knot.mirror()));
}

Rational d_circle_bundle_twisted(int genus) {
    if (genus < 0) throw ValidationError("surface genus must be non-negative");
    return Rational(genus % 2 == 1 ? 1 : -1, 2);
}

std::int64_t combined_invariant(int genus) {
    const Rational b1 = 2 * static_cast<std::int64_t>(genus) + 1;
    const Rational combined = 4 * d_circle_bundle_twisted(genus) + 2 * b1;
    const std::int64_t expected = 8 * ((static_cast<std::int64_t>(genus) + 1) / 2);
    if (combined != Rational(expected))
        throw InternalError("4d + 2b_1 = " + combined.str() + " for genus " + std::to_string(genus) +
                            ", expected " + std::to_string(expected));
    return expected;
}

Rational ncf_eval(std::span<const int> coeffs) {
    if (coeffs.empty()) throw ValidationError("continued fraction needs at least one coefficient");
    for (int a : coeffs)
        if (a < 2) throw ValidationError("continued fraction coefficients must be >= 2, got " + std::to_string(a));
    Rational value = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) value = Rational(*it) - Rational(1) / value;
    return value;
}

std::vector<int> ncf_expand(const Rational& r) {
    if (r <= Rational(1)) throw ValidationError("continued fraction expansion needs r > 1, got " + r.str());
    std::vector<int> out;
    Rational x = r;
    while (true) {
        const BigInt a = x.ceil();
        if (a > 1'000'000'000) throw ValidationError("continued fraction coefficient too large");
        out.push_back(a.convert_to<int>());
        if (x.is_integer()) break;
        x = Rational(1) / (Rational(a, BigInt(1)) - x);
    }
    return out;
}

SeifertPresentation::SeifertPresentation(int e0_, std::vector<Rational> fibers_)
    : e0(e0_), fibers(std::move(fibers_)) {
    for (const auto& r : fibers)
        if (r <= Rational(0) || r >= Rational(1))
            throw ValidationError("Seifert invariant " + r.str() + " is not in (0,1)");
}

Rational euler_number(const SeifertPresentation& s) {
    Rational e = s.e0;
    for (const auto& r : s.fibers) e += r;
    return e;
}

SeifertPresentation kn_seifert(int n) {
    if (n < 1) throw ValidationError("family index n must be >= 1");
    // Two chains of 2n (-2)-spheres and two chains [2n+2, 2]; each fibre invariant is 1/[chain]^-.
    const std::vector<int> long_chain(static_cast<std::size_t>(2 * n), 2);
    const std::vector<int> short_chain{2 * n + 2, 2};
    const Rational r_long = Rational(1) / ncf_eval(long_chain);
    const Rational r_short = Rational(1) / ncf_eval(short_chain);
    SeifertPresentation s(-2, {r_long, r_long, r_short, r_short});
    const Rational closed = 2 * (Rational(2, 4 * n + 3) - Rational(1, 2 * n + 1));
    if (euler_number(s) != closed)
        throw InternalError("Euler number " + euler_number(s).str() + " differs from closed form " + closed.str());
    return s;
}

}  // namespace dwind
