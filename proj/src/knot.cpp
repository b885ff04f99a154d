#include "dwind/knot.hpp"

#include <algorithm>
#include <numeric>

#include "dwind/errors.hpp"

namespace dwind {

TorusKnot::TorusKnot(int p, int q) {
    if (p < 2 || q < 2)
        throw ValidationError("torus knot T(" + std::to_string(p) + "," + std::to_string(q) +
                              "): p and q must both be >= 2");
    if (std::gcd(p, q) != 1)
        throw ValidationError("torus knot T(" + std::to_string(p) + "," + std::to_string(q) +
                              "): p and q are not coprime");
    p_ = std::min(p, q);
    q_ = std::max(p, q);
}

std::string TorusKnot::str() const {
    return "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

KnotExpression::KnotExpression(std::vector<Summand> summands) : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
}

KnotExpression::KnotExpression(const TorusKnot& knot) : summands_{Summand{knot, false}} {}

bool KnotExpression::is_positive_torus_knot() const {
    return summands_.size() == 1 && !summands_.front().mirrored;
}

bool KnotExpression::all_positive() const {
    return std::none_of(summands_.begin(), summands_.end(), [](const Summand& s) { return s.mirrored; });
}

bool KnotExpression::all_mirrored() const {
    return std::all_of(summands_.begin(), summands_.end(), [](const Summand& s) { return s.mirrored; });
}

int KnotExpression::genus() const {
    int g = 0;
    for (const auto& s : summands_) g += s.knot.genus();
    return g;
}

KnotExpression KnotExpression::mirror() const {
    auto flipped = summands_;
    for (auto& s : flipped) s.mirrored = !s.mirrored;
    return KnotExpression(std::move(flipped));
}

KnotExpression KnotExpression::connect(const KnotExpression& other) const {
    auto all = summands_;
    all.insert(all.end(), other.summands_.begin(), other.summands_.end());
    return KnotExpression(std::move(all));
}

std::string KnotExpression::str() const {
    if (summands_.empty()) return "U";
    std::string out;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (i) out += " # ";
        if (summands_[i].mirrored) out += "-";
        out += summands_[i].knot.str();
    }
    return out;
}

}  // namespace dwind
