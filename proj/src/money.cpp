#include "nwfund/money.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace nwfund {

Money Money::from_eur(double eur) {
    double cents = std::round(eur * 100.0);
    if (!std::isfinite(cents) || std::abs(cents) > 9.2e18) {
        throw std::invalid_argument("money amount out of range: " + std::to_string(eur));
    }
    return from_cents(static_cast<std::int64_t>(cents));
}

Money Money::parse(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("malformed money amount: '" + std::string(text) + "'");
    };

    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) fail();

    std::int64_t whole = 0;
    std::size_t i = 0;
    if (!std::isdigit(static_cast<unsigned char>(s[0]))) fail();
    for (; i < s.size() && s[i] != '.'; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        int digit = s[i] - '0';
        if (whole > (INT64_MAX - digit) / 10) fail();  // overflow
        whole = whole * 10 + digit;
    }

    std::int64_t frac = 0;
    if (i < s.size()) {  // at the '.'
        ++i;
        if (i == s.size() || s.size() - i > 2) fail();  // cents precision only
        int scale = 10;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
            frac += (s[i] - '0') * scale;
            scale /= 10;
        }
    }

    if (whole > (INT64_MAX - frac) / 100) fail();
    std::int64_t cents = whole * 100 + frac;
    return from_cents(negative ? -cents : cents);
}

std::string Money::str() const {
    std::int64_t c = cents_;
    const char* sign = "";
    if (c < 0) {
        sign = "-";
        c = -c;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s%lld.%02lld", sign,
                  static_cast<long long>(c / 100), static_cast<long long>(c % 100));
    return buf;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

std::string format_fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

double parse_double(std::string_view text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace nwfund
