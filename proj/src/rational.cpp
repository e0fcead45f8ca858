#include "msd/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

namespace msd {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rat(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string tail = text.substr(dot + 1);
        for (char c : tail)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad decimal literal '" + text + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (head == "-" || head.empty()) head = "0";
        Int ip(head);
        Int scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Int frac = tail.empty() ? Int(0) : Int(tail);
        Int n = boost::multiprecision::abs(ip) * scale + frac;
        if (neg || ip < 0) n = -n;
        return Rat(n, scale);
    }
    return Rat(Int(text), Int(1));
}

Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
Int lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    Int l = lcm(Int(a), Int(b));
    return static_cast<long long>(l);
}

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

}  // namespace msd
