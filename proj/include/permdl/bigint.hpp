#ifndef PERMDL_BIGINT_HPP
#define PERMDL_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace permdl {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline BigInt catalan(unsigned d) { return binomial(2 * d, d) / (d + 1); }

}  // namespace permdl

#endif  // PERMDL_BIGINT_HPP
