#pragma once

#include <gmpxx.h>
#include <string>

namespace ostrings {

/// Arbitrary-precision integer. Series coefficients grow like e^{pi sqrt(n)},
/// so a fixed-width type is never acceptable anywhere in the exact kernel.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace ostrings
