#include "gbt/scenarios/rational.hpp"

#include "gbt/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

namespace gbt::scenarios {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

cpp_int pow10(std::size_t n) {
    cpp_int r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= 10;
    return r;
}

cpp_int parse_digits(std::string_view s) {
    std::string t(s);
    t.erase(0, std::min(t.find_first_not_of('0'), t.size() - 1));
    return cpp_int(t);
}

[[noreturn]] void bad(std::string_view text) {
    throw StructuralError("not a rational number: \"" + std::string(text) + "\"");
}

Rational parse_decimal(std::string_view text, std::string_view s) {
    int exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp = s.substr(e + 1);
        const bool neg = !exp.empty() && exp.front() == '-';
        if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) exp.remove_prefix(1);
        if (!all_digits(exp) || exp.size() > 4) bad(text);
        std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
        if (neg) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string_view whole = s;
    std::string_view frac;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        whole = s.substr(0, dot);
        frac = s.substr(dot + 1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
        bad(text);
    }
    // cpp_int reads a leading 0 as octal.
    std::string joined = std::string(whole) + std::string(frac);
    joined.erase(0, std::min(joined.find_first_not_of('0'), joined.size() - 1));
    const cpp_int digits(joined);
    Rational r(digits, pow10(frac.size()));
    if (exponent > 0) r *= Rational(pow10(static_cast<std::size_t>(exponent)));
    if (exponent < 0) r /= Rational(pow10(static_cast<std::size_t>(-exponent)));
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text);
    Rational r;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        const cpp_int d = parse_digits(den);
        if (d == 0) throw StructuralError("zero denominator in \"" + std::string(text) + "\"");
        r = Rational(parse_digits(num), d);
    } else {
        r = parse_decimal(text, s);
    }
    return negative ? Rational(-r) : r;
}

Rational rational_from_json(const nlohmann::json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const StructuralError& e) {
            throw StructuralError(where + ": " + e.what());
        }
    }
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) {
        std::array<char, 64> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), j.get<double>());
        return parse_rational(std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data())));
    }
    throw StructuralError(where + ": expected a number or a string like \"3/8\"");
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace gbt::scenarios
