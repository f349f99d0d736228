#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace nwfund {

// Exact euro amount in integer cents. Used for cost inputs and report
// outputs so that golden files never drift; simulation arithmetic runs
// on doubles.
class Money {
public:
    constexpr Money() = default;

    static constexpr Money from_cents(std::int64_t cents) {
        Money m;
        m.cents_ = cents;
        return m;
    }

    // Nearest cent, ties away from zero.
    static Money from_eur(double eur);

    // Strict decimal parse: optional sign, digits, optional '.' with at
    // most two fractional digits. No thousands separators, no exponent.
    static Money parse(std::string_view text);

    constexpr std::int64_t cents() const { return cents_; }
    double eur() const { return static_cast<double>(cents_) / 100.0; }

    // "1234.56" / "-0.05"; always two fractional digits.
    std::string str() const;

    constexpr Money operator+(Money o) const { return from_cents(cents_ + o.cents_); }
    constexpr Money operator-(Money o) const { return from_cents(cents_ - o.cents_); }
    constexpr Money operator*(std::int64_t k) const { return from_cents(cents_ * k); }
    constexpr Money& operator+=(Money o) { cents_ += o.cents_; return *this; }
    constexpr Money& operator-=(Money o) { cents_ -= o.cents_; return *this; }
    constexpr auto operator<=>(const Money&) const = default;

private:
    std::int64_t cents_ = 0;
};

// Shortest decimal form that parses back to the identical double. Used
// for all float columns in CSV exports so re-reading is lossless.
std::string format_double(double value);

// Fixed two-decimal formatting ("%.2f"), locale independent.
std::string format_fixed2(double value);

// Locale-independent strtod via std::from_chars; throws std::invalid_argument
// on malformed input.
double parse_double(std::string_view text);

}  // namespace nwfund
