#include "ncfgl/bigint.hpp"

#include "ncfgl/errors.hpp"

namespace ncfgl {

ExtGcd ext_gcd(const Int& a, const Int& b) {
    // iterative extended Euclid; fix signs so g >= 0
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;  // truncated division is fine: loop only needs r -> old_r mod-ish descent
        Int tmp = old_r - q * r;
        old_r = r; r = tmp;
        tmp = old_s - q * s;
        old_s = s; s = tmp;
        tmp = old_t - q * t;
        old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return ExtGcd{old_r, old_s, old_t};
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

Int multinomial(const std::vector<int>& parts) {
    int n = 0;
    Int r = 1;
    for (int p : parts) {
        if (p < 0) throw BadInput("multinomial: negative part");
        n += p;
        r *= binomial(n, p);
    }
    return r;
}

}  // namespace ncfgl
