#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace maxspread {

/// Total number of length-k walks in the path P_l summed over start vertices,
/// i.e. 1' A_l^k 1, by k exact vector-adjacency products.
mpz_class total_walks_exact(int l, int k);

/// Closed forms l, 2(l-1), 4l-6, 8(l-2), 16l-38, 32l-88 for k = 0..5. Accepted
/// for l >= max(1, 2k), where the k end vertices on each side are disjoint;
/// rejected below that (callers fall back to the exact count).
mpz_class total_walks_closed(int l, int k);

/// 1' A_l^k 1 = p l + q for every l >= threshold.
struct WalkCoeff {
  int k = 0;
  mpz_class p;
  mpz_class q;
  int threshold = 1;
};

/// Interpolates the line through l = 2k+1 and 2k+2, checks it at l = 2k+10
/// (throws std::runtime_error on disagreement) and scans downward for the
/// smallest l where the line still matches. Requires 0 <= k <= 12.
WalkCoeff fit_linear_walk_coeffs(int k);

/// CSV table "k,p,q,threshold" for k = 0..kmax.
std::string walk_table_csv(int kmax);

}  // namespace maxspread
