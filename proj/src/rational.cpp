#include <ramsey/errors.hpp>
#include <ramsey/rational.hpp>

#include <cctype>

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

namespace ramsey {

namespace {

auto parse_integer(const std::string & digits, const std::string & whole) -> Integer
{
    if (digits.empty())
        throw ParseError("expected digits in '" + whole + "'");
    for (char c : digits)
        if (! std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("unexpected character in '" + whole + "'");
    // a leading zero would make the string constructor read octal
    auto start = digits.find_first_not_of('0');
    return start == std::string::npos ? Integer(0) : Integer(digits.substr(start));
}

auto pow10(long e) -> Integer
{
    Integer r = 1;
    for (long i = 0; i < e; ++i)
        r *= 10;
    return r;
}

} // namespace

auto parse_rational(const std::string & text) -> Rational
{
    std::string s = text;
    bool negative = false;
    if (! s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }

    Rational result;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = parse_integer(s.substr(0, slash), text);
        Integer den = parse_integer(s.substr(slash + 1), text);
        if (den == 0)
            throw ParseError("zero denominator in '" + text + "'");
        result = Rational(num, den);
    }
    else {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string::npos) {
            std::string exp_text = s.substr(e + 1);
            bool exp_negative = false;
            if (! exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
                exp_negative = exp_text[0] == '-';
                exp_text = exp_text.substr(1);
            }
            if (exp_text.size() > 4)
                throw ParseError("exponent too large in '" + text + "'");
            exponent = std::stol(parse_integer(exp_text, text).str());
            if (exp_negative)
                exponent = -exponent;
            s = s.substr(0, e);
        }
        std::string int_part = s, frac_part;
        if (auto dot = s.find('.'); dot != std::string::npos) {
            int_part = s.substr(0, dot);
            frac_part = s.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty())
            throw ParseError("empty number '" + text + "'");
        Integer num = parse_integer(int_part.empty() ? "0" : int_part, text);
        if (! frac_part.empty())
            num = num * pow10(static_cast<long>(frac_part.size())) + parse_integer(frac_part, text);
        Integer den = pow10(static_cast<long>(frac_part.size()));
        if (exponent > 0)
            num *= pow10(exponent);
        else if (exponent < 0)
            den *= pow10(-exponent);
        result = Rational(num, den);
    }
    return negative ? Rational(-result) : result;
}

auto to_string(const Rational & q) -> std::string
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

auto to_decimal(const Rational & q, int digits) -> std::string
{
    Integer num = numerator(q), den = denominator(q);
    bool negative = num < 0;
    if (negative)
        num = -num;
    Integer whole = num / den;
    Integer rest = num % den;
    std::string out = (negative ? "-" : "") + whole.str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rest *= 10;
            out += static_cast<char>('0' + static_cast<int>(rest / den));
            rest %= den;
        }
    }
    return out;
}

auto floor_of(const Rational & q) -> Integer
{
    Integer num = numerator(q), den = denominator(q);
    Integer d = num / den;
    if (num % den != 0 && num < 0)
        d -= 1;
    return d;
}

auto ceil_of(const Rational & q) -> Integer
{
    return -floor_of(-q);
}

namespace {

auto exact_isqrt(const Integer & x, bool & is_square) -> Integer
{
    Integer r = boost::multiprecision::sqrt(x);
    is_square = r * r == x;
    return r;
}

} // namespace

auto sqrt_enclosure(const Rational & q) -> SqrtEnclosure
{
    if (q < 0)
        throw OutOfRange("square root of a negative rational");
    Integer num = numerator(q), den = denominator(q);
    bool num_square = false, den_square = false;
    Integer rn = exact_isqrt(num, num_square), rd = exact_isqrt(den, den_square);
    if (num_square && den_square)
        return {Rational(rn, rd), Rational(rn, rd)};

    // sqrt(num/den) = sqrt(num*den*S^2) / (den*S)
    const Integer scale = pow10(12);
    Integer radicand = num * den * scale * scale;
    bool unused = false;
    Integer root = exact_isqrt(radicand, unused);
    Rational lo(root, den * scale), hi(root + 1, den * scale);
    return {lo, hi};
}

auto less_than_sqrt(const Integer & a, const Integer & b) -> bool
{
    if (a < 0)
        return true;
    return a * a < b;
}

} // namespace ramsey
