#include "vcreg/rational.hpp"

#include <cctype>
#include <cmath>

#include "vcreg/errors.hpp"

namespace vcreg {

Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
        text.find('E') != std::string::npos)
        throw Error("rational expected as a/b, decimals are rejected: '" + text + "'");
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw Error("rational expected as a/b: '" + text + "'");
        return Rat(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw Error("rational expected as a/b: '" + text + "'");
    Int d(den);
    if (d == 0) throw Error("rational with zero denominator: '" + text + "'");
    return Rat(Int(num), d);
}

std::string rational_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rat_from_double_dyadic(double x, int bits) {
    if (!std::isfinite(x)) throw Error("cannot rationalize non-finite value");
    Int den = Int(1) << bits;
    double scaled = x * std::ldexp(1.0, bits);
    Int num = Int(std::llround(scaled));
    return Rat(num, den);
}

}  // namespace vcreg
