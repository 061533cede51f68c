#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ncfgl {

using Int = boost::multiprecision::cpp_int;

// g = a*x + b*y with g = gcd(a,b) >= 0. ext_gcd(a,a) keeps the weight on x.
struct ExtGcd {
    Int g, x, y;
};

ExtGcd ext_gcd(const Int& a, const Int& b);

Int binomial(int n, int k);
Int multinomial(const std::vector<int>& parts);

}  // namespace ncfgl
