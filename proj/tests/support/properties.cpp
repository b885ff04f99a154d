#include "properties.hpp"

#include <cctype>
#include <filesystem>
#include <random>
#include <sstream>

#include "dwind/cli/cache.hpp"
#include "dwind/cli/parse.hpp"
#include "dwind/complex.hpp"
#include "dwind/surgery.hpp"
#include "oracles.hpp"

namespace property {

using namespace dwind;

namespace {

// Keeps tensor products small enough for repeated homology computations.
KnotExpression small_expression(std::mt19937_64& rng, std::size_t max_generators) {
    for (;;) {
        auto e = oracle::random_expression(rng, 3, 12, 9);
        std::size_t size = 1;
        for (const auto& s : e.summands()) size *= oracle::staircase_size(s.knot);
        if (size <= max_generators) return e;
    }
}

VSequence random_v_sequence(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(1, 30);
    std::bernoulli_distribution step(0.6);
    std::vector<std::int64_t> values(static_cast<std::size_t>(len(rng)));
    std::int64_t v = 0;
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
        *it = v;
        if (step(rng)) ++v;
    }
    return VSequence(values);
}

std::string with_random_spaces(const std::string& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> spaces(0, 2);
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != ' ') out += s[i];
        const bool inside_number = i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) &&
                                   std::isdigit(static_cast<unsigned char>(s[i + 1]));
        if (!inside_number) out.append(static_cast<std::size_t>(spaces(rng)), ' ');
    }
    return out;
}

}  // namespace

std::string fuzzed_complexes(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.3);
    for (int k = 0; k < count; ++k) {
        const auto e = small_expression(rng, 200);
        auto c = complex_of(e);
        if (coin(rng)) c = dualize(c);
        std::ostringstream where;
        where << "complex #" << k << " (" << e.str() << ")";
        if (!c.grading_law_holds()) return where.str() + ": grading law fails";
        if (!c.filtration_holds()) return where.str() + ": filtration fails";
        if (!c.d_squared_zero()) return where.str() + ": d^2 != 0";
        const TruncatedComplex t(c, default_truncation_order(c));
        if (!t.d_squared_zero()) return where.str() + ": truncated d^2 != 0";
        if (!has_normalized_tower(c, default_truncation_order(c))) return where.str() + ": tower not normalized";
    }
    return {};
}

std::string v_sequences_monotone(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        const auto e = small_expression(rng, 200);
        try {
            const auto v = v_sequence_homology(complex_of(e));
            for (std::size_t i = 0; i + 1 < v.size(); ++i) {
                const auto step = v.values()[i] - v.values()[i + 1];
                if (step < 0 || step > 1) return e.str() + ": step " + std::to_string(step) + " at " + std::to_string(i);
            }
            if (v.values().back() != 0) return e.str() + ": V_g != 0";
        } catch (const std::exception& ex) {
            return e.str() + ": " + ex.what();
        }
    }
    return {};
}

std::string conjugation_symmetry(std::uint64_t seed, int max_n) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = random_v_sequence(rng);
        for (int n = 1; n <= max_n; ++n)
            for (int i = 0; i < n; ++i) {
                const int j = SpincLabel(n, i).conjugate().i();
                if (d_positive_surgery(v, n, i) != d_positive_surgery(v, n, j))
                    return "n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
    }
    return {};
}

std::string lens_space_reduction(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (int i = 0; i < n; ++i)
            if (d_positive_surgery(KnotExpression::unknot(), n, i) != oracle::lens_d(n, 1, i))
                return "n=" + std::to_string(n) + " i=" + std::to_string(i);
    return {};
}

std::string ncf_round_trip(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, 8), coeff(2, 9), num(2, 500);
    for (int k = 0; k < count; ++k) {
        std::vector<int> a(static_cast<std::size_t>(len(rng)));
        for (auto& x : a) x = coeff(rng);
        if (ncf_expand(ncf_eval(a)) != a) return "coefficients do not round-trip";
        const int p = num(rng);
        std::uniform_int_distribution<int> den(1, p - 1);
        const Rational r(p, den(rng));
        if (ncf_eval(ncf_expand(r)) != r) return r.str() + " does not round-trip";
    }
    return {};
}

std::string cache_round_trip(std::uint64_t seed, int count) {
    namespace fs = std::filesystem;
    std::mt19937_64 rng(seed);
    const auto path = fs::temp_directory_path() / ("dwind-prop-cache-" + std::to_string(seed) + ".json");
    std::ostringstream warn;
    for (int k = 0; k < count; ++k) {
        cli::ResultCache c(path);
        for (int j = 0; j < 5; ++j) {
            const auto e = oracle::random_expression(rng, 3, 30, 12);
            // Debug builds spot-check single torus knot entries on load.
            c.insert(e.str(), e.is_positive_torus_knot() ? v_sequence_torus(e.summands().front().knot)
                                                         : random_v_sequence(rng));
        }
        if (!c.store(warn)) return "store failed: " + warn.str();
        cli::ResultCache back(path);
        back.load(warn);
        if (back.entries() != c.entries()) return "entries differ after reload";
        if (!warn.str().empty()) return "unexpected warning: " + warn.str();
    }
    std::error_code ec;
    fs::remove(path, ec);
    return {};
}

std::string parser_round_trip(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        const auto e = oracle::random_expression(rng, 5, 200, 30);
        if (cli::parse_knot_expr(e.str()) != e) return e.str() + " does not round-trip";
        const auto spaced = with_random_spaces(e.str(), rng);
        if (cli::parse_knot_expr(spaced) != e) return "'" + spaced + "' does not parse back";
    }
    return {};
}

}  // namespace property
