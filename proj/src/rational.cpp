#include "dwind/rational.hpp"

#include <cctype>
#include <limits>

#include "dwind/errors.hpp"

namespace dwind {

namespace mp = boost::multiprecision;

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    value_ = den < 0 ? mp::cpp_rational(-num, -den) : mp::cpp_rational(num, den);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ValidationError("malformed rational '" + std::string(whole) + "'");
    BigInt out = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ValidationError("malformed rational '" + std::string(whole) + "'");
        out = out * 10 + (c - '0');
    }
    return negative ? BigInt(-out) : out;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text), BigInt(1));
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!den.empty() && (den.front() == '-' || den.front() == '+'))
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    return Rational(parse_integer(num, text), parse_integer(den, text));
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

bool Rational::is_integer() const { return denominator() == 1; }

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw ValidationError("rational " + str() + " is not an integer");
    auto n = numerator();
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw ValidationError("integer " + n.str() + " out of range");
    return n.convert_to<std::int64_t>();
}

BigInt Rational::floor() const {
    BigInt q, r;
    mp::divide_qr(numerator(), denominator(), q, r);
    if (r < 0) q -= 1;
    return q;
}

BigInt Rational::ceil() const { return -(-*this).floor(); }

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

std::string Rational::pretty() const { return is_integer() ? numerator().str() : str(); }

Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) throw ValidationError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace dwind
