#pragma once

#include <complex>
#include <vector>

#include "maxlor/quad.hpp"

namespace maxlor {

using cplx = std::complex<double>;

// Orthogonal circle pattern in the Poincaré disk.
struct DiskCirclePattern {
    Patch patch;
    std::vector<cplx> center;      // by vid
    std::vector<double> radius;    // by vid
    std::vector<cplx> face_point;  // by fid
};

struct PatternReport {
    double orthogonality = 0;  // max | |c-c'|^2 - rho^2 - rho'^2 |
    double incidence = 0;      // max | |z - c| - rho | over face corners
    bool contained = true;     // |c| + rho < 1 everywhere
};

DiskCirclePattern gen_regular_pattern(int M, int N, double s);
DiskCirclePattern apply_disk_automorphism(const DiskCirclePattern& p, cplx a, double alpha);
PatternReport validate_pattern(const DiskCirclePattern& p);
// Throws PatternInvalid when the report exceeds tol.
void require_valid(const DiskCirclePattern& p, double tol = 1e-9);

}  // namespace maxlor
