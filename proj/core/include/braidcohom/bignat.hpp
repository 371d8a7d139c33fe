#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace braidcohom {

/// Exact integer used for counts. Always nonnegative where returned by the
/// library; boost has no arbitrary-precision unsigned backend, so this is the
/// checked signed cpp_int and callers producing it assert the sign.
using BigNat = boost::multiprecision::checked_cpp_int;

/// Signed exact integer for alternating sums.
using BigInt = boost::multiprecision::checked_cpp_int;

} // namespace braidcohom
