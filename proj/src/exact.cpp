#include "rinv/exact.hpp"

#include <vector>

namespace rinv {

ExactCount binomial(std::int64_t a, std::int64_t b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    ExactCount r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;
    }
    return r;
}

ExactCount catalan(std::int64_t n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

ExactRational pow2(std::int64_t e) {
    ExactCount p = 1;
    p <<= static_cast<unsigned>(e < 0 ? -e : e);
    if (e >= 0) return ExactRational(p);
    return ExactRational(ExactCount(1), p);
}

ExactCount require_integral(const ExactRational& q, const std::string& what) {
    if (denominator(q) != 1) {
        throw std::logic_error(what + " evaluated to non-integral " + q.str());
    }
    return numerator(q);
}

}  // namespace rinv
