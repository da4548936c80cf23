#include "ramsey/rational.hpp"

#include <cctype>

namespace ramsey {

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
        long long n = std::stoll(std::string(s.substr(0, slash)));
        long long d = std::stoll(std::string(s.substr(slash + 1)));
        return Rational(n, d);
    }
    size_t dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(std::stoll(std::string(s)));
    bool neg = s.front() == '-';
    std::string_view ip = s.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
    std::string_view fp = s.substr(dot + 1);
    if (fp.size() > 18) throw std::invalid_argument("Rational: too many decimal digits");
    for (char c : fp)
        if (!std::isdigit((unsigned char)c)) throw std::invalid_argument("Rational: bad decimal");
    long long whole = ip.empty() ? 0 : std::stoll(std::string(ip));
    long long frac = fp.empty() ? 0 : std::stoll(std::string(fp));
    long long den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    Rational r = Rational(whole) + Rational(frac, den);
    return neg ? -r : r;
}

}  // namespace ramsey
