#include "hoffman/rational.hpp"

namespace hoffman {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Integer num(s.substr(0, slash));
            Integer den(s.substr(slash + 1));
            if (den == 0) throw InputError("zero denominator in '" + s + "'");
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(Integer(s));
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad decimal '" + s + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
        Integer ip = head.empty() ? Integer(0) : Integer(head);
        Integer fp = tail.empty() ? Integer(0) : Integer(tail);
        Integer den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        Rational r = Rational(ip) + Rational(fp, den);
        return neg ? -r : r;
    } catch (const std::exception& e) {
        throw InputError("cannot parse rational '" + s + "': " + e.what());
    }
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hoffman
