#include "gns/real.hpp"

#include <cstdio>
#include <vector>

namespace gns {

std::string Real::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, fmt, v_);
    return std::string(buf);
}

}  // namespace gns
