#pragma once

#include <optional>
#include <string>

#include "lagasym/branch.hpp"
#include "lagasym/equilibrium.hpp"

namespace lagasym {

enum class Region { A_outer, B_bulk, C_airy, D_bessel };

struct RegionTag {
  Region region;
  double delta;
};

inline constexpr double default_delta = 0.1;
// Largest disk radius for which the edge maps are evaluated.
inline constexpr double edge_disk_radius = 0.5;

const char* region_name(Region r);
Region parse_region(const std::string& s);

// 2(z-1/2) + 2 z^{1/2}(z-1)^{1/2}; maps C\[0,1] onto |w| > 1.
cplx phi_map(cplx z, std::optional<Side> side = std::nullopt);

// z^{alpha/2} / phi(z)^{alpha/2}.
cplx szego_D(double alpha, cplx z, std::optional<Side> side = std::nullopt);

// Soft-edge map f_n = c_n n^{2/3} (z-1) fhat_n(z) with c_n = (h_n(1)/2)^{2/3},
// for |z-1| < edge_disk_radius.
cplx f_n(const EquilibriumData& eq, long n, cplx z);
cplx f_hat_n(const EquilibriumData& eq, cplx z);
double c_n(const EquilibriumData& eq);

// Hard-edge map f~_n = -c~_n n^2 z fhat~_n(z) with c~_n = (h_n(0)/2)^2,
// for |z| < edge_disk_radius.
cplx f_tilde_n(const EquilibriumData& eq, long n, cplx z);
cplx f_tilde_hat_n(const EquilibriumData& eq, cplx z);
double c_tilde_n(const EquilibriumData& eq);

// Region of a point of the closed upper half-plane (lower half-plane points
// are classified by their conjugate). Disk tests win over the band.
RegionTag classify_region(cplx z, double delta = default_delta);

// Closed-set membership: points on a shared boundary belong to both regions.
bool in_region(cplx z, RegionTag tag);

}  // namespace lagasym
