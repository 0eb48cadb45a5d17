#pragma once

#include <string>
#include <vector>

#include "maxspread/graph.hpp"
#include "maxspread/kernels.hpp"

namespace maxspread {

/// Full spectrum (descending) plus the two extreme eigenpairs.
struct EigenReport {
  std::vector<double> values;
  std::vector<double> vec_top;     // unit vector for values.front()
  std::vector<double> vec_bottom;  // unit vector for values.back()
  double residual_top = 0.0;       // ||A v - lambda v||_inf
  double residual_bottom = 0.0;

  double lambda1() const { return values.front(); }
  double lambdan() const { return values.back(); }
  double spread() const { return values.front() - values.back(); }
};

struct EigenOptions {
  bool vectors = true;
  KernelPolicy policy = KernelPolicy::Auto;
};

/// Extreme eigenpairs are accepted when the residual is below this bound times
/// (1 + |lambda|); anything worse raises ConvergenceError.
inline constexpr double kResidualTolerance = 1e-10;

SymmetricMatrix adjacency_matrix(const Graph& g);

/// Householder tridiagonalization, implicit-shift QL for the spectrum and
/// inverse iteration (two steps, more only if the residual demands it) for the
/// extreme eigenvectors. The top vector is signed to have a positive sum; the
/// bottom vector so that its largest-magnitude entry is positive.
EigenReport eigen_symmetric(const SymmetricMatrix& a, const EigenOptions& options = {});

EigenReport eigenvalues_sym(const Graph& g, const EigenOptions& options = {});

double spread(const Graph& g);

/// Spectrum of the join of a k-regular graph on m vertices and an l-regular
/// graph on n vertices, from the spectra of the two parts.
struct RegularJoinInput {
  int k = 0;
  int l = 0;
  int m = 0;
  int n = 0;
  std::vector<double> spec_g;  // descending, spec_g[0] == k
  std::vector<double> spec_h;  // descending, spec_h[0] == l
};

/// Drops the two regularity eigenvalues and adds the roots of
/// (x - k)(x - l) = m n. Output descending.
std::vector<double> join_regular_spectrum(const RegularJoinInput& input);

enum class Extreme { Top, Bottom };

/// Sign classification threshold for eigenvector entries.
inline constexpr double kSignThreshold = 1e-10;

struct SignProfile {
  double lambda = 0.0;
  std::vector<double> alpha;      // eigenvector scaled so alpha[center] == 1
  std::vector<int> violations;    // entries failing the expected sign pattern
  bool holds() const { return violations.empty(); }
};

/// Extreme eigenvector of a graph with a dominating center vertex, rescaled to 1
/// at the center. For the top eigenvalue (>= 2) every entry should exceed
/// kSignThreshold; for the bottom one (<= -2) every non-center entry should be
/// below -kSignThreshold. Entries in between are reported as violations.
SignProfile extreme_sign_profile(const Graph& g, Extreme which, int center = 0);

std::string to_json(const EigenReport& report);

}  // namespace maxspread
