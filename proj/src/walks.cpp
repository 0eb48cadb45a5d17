#include "maxspread/walks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace maxspread {

mpz_class total_walks_exact(int l, int k) {
  if (l < 1) throw std::invalid_argument("total_walks_exact: l must be positive");
  if (k < 0) throw std::invalid_argument("total_walks_exact: k must be non-negative");
  std::vector<mpz_class> w(static_cast<std::size_t>(l), 1), next(static_cast<std::size_t>(l));
  for (int step = 0; step < k; ++step) {
    for (int j = 0; j < l; ++j) {
      next[j] = 0;
      if (j > 0) next[j] += w[j - 1];
      if (j + 1 < l) next[j] += w[j + 1];
    }
    w.swap(next);
  }
  mpz_class total = 0;
  for (const auto& x : w) total += x;
  return total;
}

mpz_class total_walks_closed(int l, int k) {
  if (k < 0 || k > 5) throw std::invalid_argument("total_walks_closed: k must be in 0..5");
  if (l < std::max(1, 2 * k)) {
    throw std::invalid_argument("total_walks_closed: requires l >= max(1, 2k) (l=" + std::to_string(l) +
                                ", k=" + std::to_string(k) + ")");
  }
  const mpz_class L = l;
  switch (k) {
    case 0:
      return L;
    case 1:
      return 2 * (L - 1);
    case 2:
      return 4 * L - 6;
    case 3:
      return 8 * (L - 2);
    case 4:
      return 16 * L - 38;
    default:
      return 32 * L - 88;
  }
}

WalkCoeff fit_linear_walk_coeffs(int k) {
  if (k < 0 || k > 12) throw std::invalid_argument("fit_linear_walk_coeffs: k must be in 0..12");
  const int l1 = 2 * k + 1;
  const mpz_class w1 = total_walks_exact(l1, k);
  const mpz_class w2 = total_walks_exact(l1 + 1, k);
  WalkCoeff c;
  c.k = k;
  c.p = w2 - w1;
  c.q = w1 - c.p * l1;
  const int check = 2 * k + 10;
  if (total_walks_exact(check, k) != c.p * check + c.q) {
    throw std::runtime_error("fit_linear_walk_coeffs: walk total is not linear at l=" +
                             std::to_string(check) + " for k=" + std::to_string(k));
  }
  c.threshold = l1;
  while (c.threshold > 1 && total_walks_exact(c.threshold - 1, k) == c.p * (c.threshold - 1) + c.q) {
    --c.threshold;
  }
  return c;
}

std::string walk_table_csv(int kmax) {
  std::ostringstream out;
  out << "k,p,q,threshold\n";
  for (int k = 0; k <= kmax; ++k) {
    const auto c = fit_linear_walk_coeffs(k);
    out << c.k << ',' << c.p.get_str() << ',' << c.q.get_str() << ',' << c.threshold << '\n';
  }
  return out.str();
}

}  // namespace maxspread
