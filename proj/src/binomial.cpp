#include "cliquevec/binomial.hpp"

#include <stdexcept>

namespace cliquevec {

Nat binom(const Nat& n, long long k) {
  if (k < 0 || n < k) return 0;
  if (k == 0) return 1;
  // Multiplicative form; each intermediate division is exact.
  Nat result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Nat r_sum(int k, const std::vector<Nat>& terms) {
  Nat total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    total += binom(terms[i], k - static_cast<long long>(i));
  }
  return total;
}

Nat turan_binom(const Nat& n, long long k, long long r) {
  if (n < 0) throw std::invalid_argument("turan_binom: n must be >= 0");
  if (k < 0) return 0;
  if (r == 0) {
    if (n > 0) throw std::invalid_argument("turan_binom: r = 0 with n > 0");
    return k == 0 ? Nat(1) : Nat(0);
  }
  if (r < 0) throw std::invalid_argument("turan_binom: r must be >= 0");
  if (k == 0) return 1;

  // Part sizes are q+1 (t parts) and q (r-t parts). A k-clique picks k
  // distinct parts and one vertex from each:
  //   e_k = sum_j C(t, j) C(r-t, k-j) (q+1)^j q^(k-j).
  Nat q = n / r;
  long long t = static_cast<long long>(n % r);
  Nat total = 0;
  for (long long j = 0; j <= k; ++j) {
    if (j > t) break;
    Nat small_parts = binom(Nat(r - t), k - j);
    if (small_parts == 0) continue;
    if (q == 0 && k - j > 0) continue;  // 0^(k-j) = 0, but 0^0 = 1
    Nat term = binom(Nat(t), j) * small_parts;
    term *= boost::multiprecision::pow(q + 1, static_cast<unsigned>(j));
    if (k - j > 0) {
      term *= boost::multiprecision::pow(q, static_cast<unsigned>(k - j));
    }
    total += term;
  }
  return total;
}

}  // namespace cliquevec
