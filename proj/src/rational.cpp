#include "mltmf/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace mltmf {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(Errc::Usage, "rational arithmetic overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(Errc::Usage, "rational arithmetic overflow");
    return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(Errc::Usage, "rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::from_decimal_string(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool saw_digit = false;
    bool after_point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            if (after_point) throw Error(Errc::Io, "bad decimal literal: " + text);
            after_point = true;
            continue;
        }
        if (c == '/') {
            // n/d form
            const std::string d = text.substr(i + 1);
            if (after_point || d.empty()) throw Error(Errc::Io, "bad rational literal: " + text);
            return Rational(neg ? -num : num, std::strtoll(d.c_str(), nullptr, 10));
        }
        if (c < '0' || c > '9') throw Error(Errc::Io, "bad decimal literal: " + text);
        saw_digit = true;
        num = checked_add(checked_mul(num, 10), c - '0');
        if (after_point) den = checked_mul(den, 10);
    }
    if (!saw_digit) throw Error(Errc::Io, "bad decimal literal: " + text);
    return Rational(neg ? -num : num, den);
}

Rational Rational::from_double_exact(double v) {
    if (!std::isfinite(v)) throw Error(Errc::Io, "non-finite mass value");
    // Every finite double is m * 2^e with integral m.
    int exp = 0;
    double frac = std::frexp(v, &exp);
    std::int64_t num = 0;
    std::int64_t den = 1;
    // 53 mantissa bits suffice.
    frac = std::ldexp(frac, 53);
    exp -= 53;
    num = static_cast<std::int64_t>(frac);
    while (exp > 0) {
        num = checked_mul(num, 2);
        --exp;
    }
    while (exp < 0) {
        if (num % 2 == 0) {
            num /= 2;
        } else {
            den = checked_mul(den, 2);
        }
        ++exp;
    }
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(Errc::Usage, "rational division by zero");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::Syntax: return "SyntaxError";
        case Errc::UnknownSymbol: return "UnknownSymbol";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::SelfApplication: return "SelfApplication";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::MissingTable: return "MissingTable";
        case Errc::NotTotal: return "NotTotal";
        case Errc::NotSurjective: return "NotSurjective";
        case Errc::LossNotSubset: return "LossNotSubset";
        case Errc::SuperposedOverlaps: return "SuperposedOverlaps";
        case Errc::ResultInconsistent: return "ResultInconsistent";
        case Errc::ComponentMismatch: return "ComponentMismatch";
        case Errc::SignatureMismatch: return "SignatureMismatch";
        case Errc::NotLearnable: return "NotLearnable";
        case Errc::NotProcessable: return "NotProcessable";
        case Errc::WordTooLong: return "WordTooLong";
        case Errc::SupportMismatch: return "SupportMismatch";
        case Errc::InfiniteDivergence: return "InfiniteDivergence";
        case Errc::TooLargeForExact: return "TooLargeForExact";
        case Errc::Io: return "IoError";
        case Errc::Usage: return "UsageError";
    }
    return "UnknownError";
}

}  // namespace mltmf
