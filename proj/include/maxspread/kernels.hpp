#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace maxspread {

/// Dense symmetric matrix, row-major, both triangles stored.
struct SymmetricMatrix {
  int n = 0;
  std::vector<double> a;

  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  void set_symmetric(int i, int j, double v) {
    (*this)(i, j) = v;
    (*this)(j, i) = v;
  }
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Symmetric tridiagonal T = Q' A Q with Q = H_0 H_1 ... H_{n-3}. The working
/// matrix keeps reflector k in column k below the subdiagonal.
struct HouseholderTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;  // offdiag[i] couples rows i and i+1
  std::vector<double> betas;    // H_k = I - beta_k v_k v_k'
  SymmetricMatrix work;
  bool has_reflectors = false;
};

enum class KernelPolicy { Auto, Serial, Parallel };

namespace kernels {

/// Matrices at least this large use the OpenMP kernel under KernelPolicy::Auto
/// when more than one thread is available.
inline constexpr int kParallelThreshold = 96;

HouseholderTridiagonal tridiagonalize(SymmetricMatrix a, KernelPolicy policy = KernelPolicy::Auto,
                                      bool keep_reflectors = true);

/// OpenMP kernel: full-storage symmetric matvec and rank-2 update, both
/// row-parallel.
HouseholderTridiagonal tridiagonalize_parallel(SymmetricMatrix a, bool keep_reflectors = true);

/// Applies Q to a vector given in the tridiagonal basis.
std::vector<double> back_transform(const HouseholderTridiagonal& t, std::span<const double> y);

/// Eigenvalues of the symmetric tridiagonal matrix (diag, offdiag) by implicit
/// QL with Wilkinson shifts, returned unsorted. Throws ConvergenceError once
/// the total number of QL sweeps exceeds 100 * n.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> offdiag);

/// Inverse iteration on (T - shift I) from a fixed start vector; returns a unit
/// vector. Zero pivots are replaced by a tiny multiple of ||T||.
std::vector<double> tridiagonal_inverse_iteration(std::span<const double> diag,
                                                  std::span<const double> offdiag, double shift,
                                                  int steps);

namespace reference {

/// Serial kernel on the lower triangle only; the baseline the OpenMP kernel is
/// tested and benchmarked against.
HouseholderTridiagonal tridiagonalize(SymmetricMatrix a, bool keep_reflectors = true);

}  // namespace reference

}  // namespace kernels
}  // namespace maxspread
