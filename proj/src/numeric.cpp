#include "genusdist/numeric.hpp"

#include <stdexcept>

namespace genusdist {

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

Int as_integer(const Rat& r, const char* context) {
    if (!is_integer(r)) {
        throw internal_error(std::string(context) + ": expected integer, got " + rat_to_string(r));
    }
    return boost::multiprecision::numerator(r);
}

std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

}  // namespace genusdist
