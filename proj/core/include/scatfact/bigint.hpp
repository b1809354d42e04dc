#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace scatfact {

using BigInt = boost::multiprecision::cpp_int;

// C(n, r) with the convention C(n, r) = 0 whenever r < 0, n < 0 or n < r.
BigInt binomial(std::int64_t n, std::int64_t r);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace scatfact
