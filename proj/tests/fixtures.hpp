#pragma once

#include "maxlor/pattern.hpp"

namespace fx {

inline maxlor::DiskCirclePattern regular(int n = 6, double s = 0.12) { return maxlor::gen_regular_pattern(n, n, s); }

inline maxlor::DiskCirclePattern mobius(int n = 6, double s = 0.12) {
    return maxlor::apply_disk_automorphism(regular(n, s), {0.2, 0.1}, 0.3);
}

}  // namespace fx
