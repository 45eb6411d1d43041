#include "sltk/rational.hpp"

#include "sltk/error.hpp"

#include <cctype>
#include <cmath>

namespace sltk {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!is_integer_text(s)) throw InputError("malformed integer '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InputError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
        if (ip.empty()) ip = "0";
        if (fp.empty() || !is_integer_text(fp) || fp[0] == '-' || fp[0] == '+')
            throw InputError("malformed decimal '" + std::string(text) + "'");
        BigInt whole = parse_integer(ip);
        BigInt frac = parse_integer(fp);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(fp.size()));
        Rational r = Rational(whole) + Rational(frac, scale);
        return neg ? -r : r;
    }
    return Rational(parse_integer(text));
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw InputError("non-finite number");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
    // 53 bits of mantissa as an exact integer.
    double scaled = std::ldexp(mant, 53);
    auto mi = static_cast<long long>(scaled);
    Rational r(mi);
    int shift = exp - 53;
    BigInt two(2);
    if (shift >= 0)
        r *= Rational(boost::multiprecision::pow(two, static_cast<unsigned>(shift)));
    else
        r /= Rational(boost::multiprecision::pow(two, static_cast<unsigned>(-shift)));
    return r;
}

std::string format_rational(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt lcm_of_denominators(const std::vector<Rational>& values) {
    BigInt l = 1;
    for (const auto& v : values) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(v)));
    return l;
}

}  // namespace sltk
