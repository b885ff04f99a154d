#include "dwind/complex.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dwind/errors.hpp"

namespace dwind {

BifilteredComplex::BifilteredComplex(std::vector<Generator> generators,
                                     std::vector<std::vector<Arrow>> differential)
    : generators_(std::move(generators)), differential_(std::move(differential)) {
    if (generators_.empty()) throw InternalError("complex must have at least one generator");
    if (differential_.size() != generators_.size())
        throw InternalError("differential has " + std::to_string(differential_.size()) + " rows for " +
                            std::to_string(generators_.size()) + " generators");
    std::vector<std::size_t> seen(generators_.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t k = 0; k < differential_.size(); ++k) {
        for (const auto& a : differential_[k]) {
            if (a.target >= generators_.size())
                throw InternalError("arrow from generator " + std::to_string(k) + " targets " +
                                    std::to_string(a.target) + ", out of range");
            if (a.u_power < 0) throw InternalError("negative U-power in differential");
            if (seen[a.target] == k)
                throw InternalError("duplicate entry (" + std::to_string(k) + "," + std::to_string(a.target) + ")");
            seen[a.target] = k;
        }
    }
    if (!grading_law_holds()) throw InternalError("differential violates the Maslov grading law");
    if (!filtration_holds()) throw InternalError("differential raises the Alexander filtration");
}

std::optional<int> BifilteredComplex::entry(std::size_t k, std::size_t l) const {
    for (const auto& a : arrows(k))
        if (a.target == l) return a.u_power;
    return std::nullopt;
}

std::size_t BifilteredComplex::arrow_count() const {
    std::size_t n = 0;
    for (const auto& row : differential_) n += row.size();
    return n;
}

int BifilteredComplex::max_alexander() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& g : generators_) m = std::max(m, g.alexander);
    return m;
}

int BifilteredComplex::min_maslov() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& g : generators_) m = std::min(m, g.maslov);
    return m;
}

int BifilteredComplex::max_maslov() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& g : generators_) m = std::max(m, g.maslov);
    return m;
}

BifilteredComplex BifilteredComplex::shift_maslov(int shift) const {
    auto gens = generators_;
    for (auto& g : gens) g.maslov += shift;
    return BifilteredComplex(std::move(gens), differential_);
}

bool BifilteredComplex::grading_law_holds() const {
    for (std::size_t k = 0; k < size(); ++k)
        for (const auto& a : differential_[k])
            if (generators_[a.target].maslov - 2 * a.u_power != generators_[k].maslov - 1) return false;
    return true;
}

bool BifilteredComplex::filtration_holds() const {
    for (std::size_t k = 0; k < size(); ++k)
        for (const auto& a : differential_[k])
            if (generators_[a.target].alexander - a.u_power > generators_[k].alexander) return false;
    return true;
}

bool BifilteredComplex::d_squared_zero() const {
    std::vector<std::pair<std::size_t, int>> terms;
    for (std::size_t k = 0; k < size(); ++k) {
        terms.clear();
        for (const auto& first : differential_[k])
            for (const auto& second : differential_[first.target])
                terms.emplace_back(second.target, first.u_power + second.u_power);
        std::sort(terms.begin(), terms.end());
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == terms[i]) ++j;
            if ((j - i) % 2 != 0) return false;
            i = j;
        }
    }
    return true;
}

std::vector<std::pair<int, int>> alexander_terms(const TorusKnot& knot) {
    // Δ(t) = (1 - t) Σ_{s ∈ Γ} t^s, a polynomial of degree 2g; shift by -g to symmetrize.
    NumericalSemigroup gamma(knot.p(), knot.q());
    const int g = knot.genus();
    std::vector<std::pair<int, int>> terms;
    for (int j = 2 * g; j >= 0; --j) {
        int coeff = (gamma.contains(j) ? 1 : 0) - (gamma.contains(j - 1) ? 1 : 0);
        if (coeff != 0) terms.emplace_back(j - g, coeff);
    }
    return terms;
}

BifilteredComplex unknot_complex() { return BifilteredComplex({Generator{0, 0}}, {{}}); }

BifilteredComplex staircase(const TorusKnot& knot) {
    const auto terms = alexander_terms(knot);
    const std::size_t n = terms.size();
    std::vector<Generator> gens(n);
    std::vector<std::vector<Arrow>> diff(n);
    gens[0] = Generator{0, terms[0].first};
    for (std::size_t j = 1; j < n; ++j) {
        gens[j].alexander = terms[j].first;
        if (j % 2 == 1) {
            // horizontal step back to x_{j-1}, vertical step down to x_{j+1}
            const int h = terms[j - 1].first - terms[j].first;
            gens[j].maslov = gens[j - 1].maslov - 2 * h + 1;
            diff[j].push_back(Arrow{j - 1, h});
            diff[j].push_back(Arrow{j + 1, 0});
        } else {
            gens[j].maslov = gens[j - 1].maslov - 1;
        }
    }
    return BifilteredComplex(std::move(gens), std::move(diff));
}

BifilteredComplex dualize(const BifilteredComplex& c) {
    std::vector<Generator> gens(c.size());
    std::vector<std::vector<Arrow>> diff(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        gens[k] = Generator{-c.generator(k).maslov, -c.generator(k).alexander};
        for (const auto& a : c.arrows(k)) diff[a.target].push_back(Arrow{k, a.u_power});
    }
    BifilteredComplex dual(std::move(gens), std::move(diff));
    const int top = localized_tower_top(dual);
    return top == 0 ? dual : dual.shift_maslov(-top);
}

BifilteredComplex tensor(const BifilteredComplex& c1, const BifilteredComplex& c2) {
    const std::size_t n1 = c1.size();
    const std::size_t n2 = c2.size();
    std::vector<Generator> gens(n1 * n2);
    std::vector<std::vector<Arrow>> diff(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            const std::size_t k = i * n2 + j;
            const auto& g1 = c1.generator(i);
            const auto& g2 = c2.generator(j);
            gens[k] = Generator{g1.maslov + g2.maslov, g1.alexander + g2.alexander};
            auto& row = diff[k];
            row.reserve(c1.arrows(i).size() + c2.arrows(j).size());
            for (const auto& a : c1.arrows(i)) row.push_back(Arrow{a.target * n2 + j, a.u_power});
            for (const auto& a : c2.arrows(j)) row.push_back(Arrow{i * n2 + a.target, a.u_power});
        }
    }
    return BifilteredComplex(std::move(gens), std::move(diff));
}

BifilteredComplex complex_of(const KnotExpression& expr) {
    auto result = unknot_complex();
    for (const auto& s : expr.summands()) {
        auto piece = staircase(s.knot);
        if (s.mirrored) piece = dualize(piece);
        result = tensor(result, piece);
    }
    return result;
}

}  // namespace dwind
