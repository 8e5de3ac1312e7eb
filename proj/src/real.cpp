#include "ostrings/real.hpp"

#include <cstdio>
#include <cstdlib>

namespace ostrings {

std::string Real::str(int significant_digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", significant_digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace ostrings
