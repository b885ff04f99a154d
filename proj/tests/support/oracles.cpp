#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace oracle {

std::set<std::int64_t> semigroup_members(int p, int q, std::int64_t limit) {
    std::set<std::int64_t> out;
    for (std::int64_t h = 0; h * p < limit; ++h)
        for (std::int64_t k = 0; h * p + k * q < limit; ++k) out.insert(h * p + k * q);
    return out;
}

std::vector<std::int64_t> torus_v_enumerated(int p, int q) {
    const std::int64_t g = static_cast<std::int64_t>(p - 1) * (q - 1) / 2;
    const auto members = semigroup_members(p, q, g + 1);
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i <= g; ++i)
        v.push_back(std::count_if(members.begin(), members.end(), [&](std::int64_t x) { return x < g - i; }));
    return v;
}

std::int64_t ceiling_sum_count(int p, int q, std::int64_t t) {
    std::int64_t total = 0;
    for (std::int64_t k = 0; k * q < t; ++k) total += (t - k * q + p - 1) / p;
    return total;
}

namespace {

using Poly = std::vector<long long>;

Poly multiply(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by a monic polynomial.
Poly divide(Poly num, const Poly& den) {
    const std::size_t dn = den.size() - 1;
    Poly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const long long c = num[i];
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return quot;
}

Poly t_power_minus_one(int e) {
    Poly p(static_cast<std::size_t>(e) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(e)] = 1;
    return p;
}

}  // namespace

std::vector<int> alexander_product(int p, int q) {
    const Poly num = multiply(t_power_minus_one(p * q), t_power_minus_one(1));
    const Poly den = multiply(t_power_minus_one(p), t_power_minus_one(q));
    const Poly quot = divide(num, den);
    return {quot.begin(), quot.end()};
}

std::vector<std::int64_t> h_convolution_v(const std::vector<dwind::TorusKnot>& knots) {
    // H(s) over s in [-G, G]; H(s) = V_s for s >= 0 and H(-s) = H(s) + s.
    std::map<std::int64_t, std::int64_t> total{{0, 0}};
    std::int64_t span = 0;
    for (const auto& k : knots) {
        const auto v = torus_v_enumerated(k.p(), k.q());
        const std::int64_t g = k.genus();
        auto h = [&](std::int64_t s) -> std::int64_t {
            if (s >= 0) return s < static_cast<std::int64_t>(v.size()) ? v[static_cast<std::size_t>(s)] : 0;
            const std::int64_t a = -s;
            return (a < static_cast<std::int64_t>(v.size()) ? v[static_cast<std::size_t>(a)] : 0) + a;
        };
        std::map<std::int64_t, std::int64_t> next;
        const std::int64_t new_span = span + g;
        for (std::int64_t s = -new_span; s <= new_span; ++s) {
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            for (std::int64_t s1 = -span; s1 <= span; ++s1) {
                const std::int64_t s2 = s - s1;
                // Splits outside both supports never give a smaller value.
                if (s2 < -g || s2 > g) continue;
                best = std::min(best, total.at(s1) + h(s2));
            }
            next[s] = best;
        }
        total = std::move(next);
        span = new_span;
    }
    std::vector<std::int64_t> out;
    for (std::int64_t s = 0; s <= span; ++s) out.push_back(total.at(s));
    return out;
}

dwind::Rational lens_d(std::int64_t p, std::int64_t q, std::int64_t i) {
    if (p == 1) return 0;
    const std::int64_t r = p % q;
    const std::int64_t j = i % q;
    const std::int64_t num = (2 * i + 1 - p - q) * (2 * i + 1 - p - q);
    return dwind::Rational(-1, 4) + dwind::Rational(num, 4 * p * q) - lens_d(q, r, j);
}

dwind::TorusKnot random_torus_knot(std::mt19937_64& rng, int max_q) {
    std::uniform_int_distribution<int> dist(2, max_q);
    for (;;) {
        int p = dist(rng), q = dist(rng);
        if (p != q && std::gcd(p, q) == 1) return dwind::TorusKnot(p, q);
    }
}

dwind::KnotExpression random_expression(std::mt19937_64& rng, int max_summands, int max_genus, int max_q,
                                        bool allow_mirrors) {
    std::uniform_int_distribution<int> count(1, max_summands);
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        std::vector<dwind::Summand> summands;
        int genus = 0;
        const int c = count(rng);
        for (int j = 0; j < c; ++j) {
            const auto k = random_torus_knot(rng, max_q);
            summands.push_back({k, allow_mirrors && coin(rng)});
            genus += k.genus();
        }
        if (genus <= max_genus) return dwind::KnotExpression(std::move(summands));
    }
}

std::size_t staircase_size(const dwind::TorusKnot& k) {
    const auto coeffs = alexander_product(k.p(), k.q());
    return static_cast<std::size_t>(std::count_if(coeffs.begin(), coeffs.end(), [](int c) { return c != 0; }));
}

}  // namespace oracle
