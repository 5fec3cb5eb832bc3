#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lagasym/equilibrium.hpp"
#include "lagasym/oracle.hpp"

namespace lagasym {

double sine_kernel(double u, double v);
double airy_kernel(double u, double v);
// [J(sqrt u) sqrt v J'(sqrt v) - J(sqrt v) sqrt u J'(sqrt u)] / (2(u-v)), u, v > 0.
double bessel_kernel_hard(double alpha, double u, double v);

// Rows of the limiting hard-edge kernel table. The II and III rows need u
// (and v) in the half-planes named by the sign: II_plus wants Im u > 0,
// III_mixed wants Im u > 0 and Im v < 0.
enum class Table1Kernel { I, II_plus, II_minus, III_plus, III_minus, III_mixed };

const char* table1_name(Table1Kernel k);
cplx table1_kernel(double alpha, cplx u, cplx v, Table1Kernel which);

// beta_n / (4 c~_n n^2): argument scale of the hard-edge limits.
double hard_edge_scale(const EquilibriumData& eq);

enum class KernelRegime { bulk, soft, hard, w_I, w_II, w_III };

const char* regime_name(KernelRegime r);
KernelRegime parse_regime(const std::string& s);

struct CompareOptions {
  double bulk_x = 0.5;  // reference point of the bulk scaling, in (0,1)
  // Grid values for u and v (both axes). Empty selects the default grid of
  // the regime. Unused for w_II and w_III, which use fixed complex pairs.
  std::vector<double> grid;
  double min_separation = 0.1;  // |u - v| exclusion for the W kernels
};

struct ComparisonSample {
  int n;
  cplx u, v;
  cplx finite;  // scaled finite-n kernel, with the limit's prefactor removed
  cplx limit;
  double error;  // |finite - limit|, divided by (uv)^{alpha/2} for `hard`
};

struct KernelComparison {
  KernelRegime regime;
  std::vector<int> n_list;
  std::vector<double> sup_error;  // one per n
  double fitted_order = 0.0;      // least-squares slope of log sup_error vs log n
  double fit_residual = 0.0;      // rms deviation of the fit in log space
  std::vector<ComparisonSample> samples;
};

std::vector<double> default_grid(KernelRegime r);

// Least-squares slope of log y against log x, with the rms residual.
std::pair<double, double> fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

KernelComparison compare_limit(const OracleTable& table, KernelRegime regime,
                               const std::vector<int>& n_list, const CompareOptions& opt = {});

}  // namespace lagasym
