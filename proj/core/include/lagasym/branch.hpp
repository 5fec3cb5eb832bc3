#pragma once

#include <complex>
#include <optional>

namespace lagasym {

using cplx = std::complex<double>;

// Which side of a cut a real argument is approached from.
enum class Side { upper, lower };

// Principal-branch elementary functions that take the limiting value from
// above (dir > 0) or below (dir < 0) when the argument lies on their cut.
// Off the cut `dir` is ignored. dir == 0 on a cut throws branch_cut.
cplx cut_sqrt(cplx w, int dir);
cplx cut_pow(cplx w, double p, int dir);
cplx cut_log(cplx w, int dir);
// Cuts (-inf,-1] and [1,inf).
cplx cut_arccos(cplx w, int dir);
cplx cut_arcsin(cplx w, int dir);

// Direction flag for a point: sign(Im z) if nonzero, otherwise from `side`
// (0 when no side was given).
int side_dir(cplx z, std::optional<Side> side);

}  // namespace lagasym
