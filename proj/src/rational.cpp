#include "tropcurve/rational.hpp"

namespace tropcurve {

Rat rat_gcd(const Rat& a, const Rat& b) {
    Rat x = abs(a), y = abs(b);
    if (x == 0) return y;
    if (y == 0) return x;
    Int num = int_gcd(numerator(x) * denominator(y), numerator(y) * denominator(x));
    Int den = denominator(x) * denominator(y);
    return Rat(num, den);
}

bool rat_divides(const Rat& a, const Rat& b) {
    if (a == 0) return b == 0;
    Rat q = b / a;
    return is_integer(q) && q > 0;
}

Int rat_quotient(const Rat& a, const Rat& b) {
    if (a == 0) throw std::domain_error("rat_quotient: zero divisor");
    Rat q = b / a;
    if (!is_integer(q)) throw std::domain_error("rat_quotient: not an exact multiple");
    return numerator(q);
}

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rat parse_rat(const std::string& s) {
    auto bad = [&]() { return std::invalid_argument("malformed rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        std::string ns = s.substr(0, slash);
        std::string ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw bad();
        Int num(ns), den(ds);
        if (den == 0) throw bad();
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

} // namespace tropcurve
