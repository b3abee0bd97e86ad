#include "binmom/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace binmom {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    Integer value(std::string(s), 10);
    return negative ? Integer(-value) : value;
}

Integer pow10(unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (const auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        const Integer e = parse_integer(s.substr(epos + 1));
        if (!e.fits_slong_p() || abs(e) > 100000) {
            throw std::invalid_argument("decimal exponent out of range: '" + std::string(text) + "'");
        }
        exponent = e.get_si();
        s = s.substr(0, epos);
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }

    const std::string digits = std::string(int_part) + std::string(frac_part);
    Integer mantissa(digits, 10);
    exponent -= static_cast<long>(frac_part.size());

    Rational value = exponent >= 0 ? Rational(mantissa * pow10(static_cast<unsigned long>(exponent)))
                                   : make_rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    if (negative) {
        value = -value;
    }
    return value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Integer num = parse_integer(text.substr(0, slash));
        const Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        }
        return make_rational(num, den);
    }
    return parse_decimal(text);
}

std::string to_string(const Integer& value)
{
    return value.get_str(10);
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str(10);
    }
    return value.get_str(10);
}

std::string to_decimal(const Rational& value, int digits)
{
    if (digits < 1) {
        throw std::invalid_argument("to_decimal: need at least one significant digit");
    }
    if (value == 0) {
        return "0";
    }

    const bool negative = value < 0;
    const Rational magnitude = abs(value);

    // decimal exponent e with 10^e <= magnitude < 10^(e+1)
    long e = static_cast<long>(mpz_sizeinbase(magnitude.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(magnitude.get_den_mpz_t(), 10));
    auto power = [](long k) {
        return k >= 0 ? Rational(pow10(static_cast<unsigned long>(k)))
                      : make_rational(Integer(1), pow10(static_cast<unsigned long>(-k)));
    };
    while (power(e) > magnitude) {
        --e;
    }
    while (power(e + 1) <= magnitude) {
        ++e;
    }

    // round half away from zero to `digits` significant digits
    const Rational scaled = magnitude * power(digits - 1 - e);
    Integer q = scaled.get_num() / scaled.get_den();
    const Rational frac = scaled - Rational(q);
    if (frac * 2 >= 1) {
        ++q;
    }
    if (q == pow10(static_cast<unsigned long>(digits))) {
        q /= 10;
        ++e;
    }

    std::string mant = q.get_str(10);  // exactly `digits` characters
    std::string out = negative ? "-" : "";

    auto trim = [](std::string s) {
        if (s.find('.') != std::string::npos) {
            while (!s.empty() && s.back() == '0') {
                s.pop_back();
            }
            if (!s.empty() && s.back() == '.') {
                s.pop_back();
            }
        }
        return s;
    };

    if (e < -4 || e >= digits) {
        std::string m = mant.substr(0, 1) + "." + mant.substr(1);
        out += trim(m);
        out += e < 0 ? "e-" : "e+";
        const std::string ex = std::to_string(e < 0 ? -e : e);
        out += ex.size() < 2 ? "0" + ex : ex;
        return out;
    }
    if (e >= 0) {
        const auto int_len = static_cast<std::size_t>(e + 1);
        out += trim(mant.substr(0, int_len) + "." + mant.substr(int_len));
        return out;
    }
    out += trim("0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mant);
    return out;
}

} // namespace binmom
