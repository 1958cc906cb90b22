#pragma once

// Brute-force oracles for the test suites. None of these call into the
// binomial formulas of the library: they enumerate monomial bases directly,
// taking f = x0^d as a representative degree-d form (the dimensions depend
// only on d, so any form with the same Hilbert function will do).

#include <cstdint>

namespace oracle {

/// Monomials x0^a0 x1^a1 x2^a2 x3^a3 of total degree k, all ai >= 0.
inline std::int64_t monomials_p3(std::int64_t k) {
  if (k < 0) return 0;
  std::int64_t count = 0;
  for (std::int64_t a0 = 0; a0 <= k; ++a0)
    for (std::int64_t a1 = 0; a0 + a1 <= k; ++a1)
      for (std::int64_t a2 = 0; a0 + a1 + a2 <= k; ++a2) ++count;  // a3 is forced
  return count;
}

/// Cech basis of H^3(P^3, O(k)): inverse monomials with every ai <= -1 and
/// sum ai = k.
inline std::int64_t cech_h3_p3(std::int64_t k) {
  std::int64_t count = 0;
  for (std::int64_t a0 = -1; a0 >= k + 3; --a0)
    for (std::int64_t a1 = -1; a0 + a1 >= k + 2; --a1)
      for (std::int64_t a2 = -1; a0 + a1 + a2 >= k + 1; --a2) ++count;  // a3 = k - a0 - a1 - a2 <= -1
  return count;
}

/// h^0(X, O_X(k)) as the degree-k part of k[x0..x3]/(x0^d): standard
/// monomials are those with a0 < d.
inline std::int64_t h0_hypersurface(std::int64_t d, std::int64_t k) {
  if (k < 0) return 0;
  std::int64_t count = 0;
  for (std::int64_t a0 = 0; a0 <= k && a0 < d; ++a0)
    for (std::int64_t a1 = 0; a0 + a1 <= k; ++a1)
      for (std::int64_t a2 = 0; a0 + a1 + a2 <= k; ++a2) ++count;
  return count;
}

/// h^2(X, O_X(k)) as the kernel of multiplication by x0^d from
/// H^3(P^3, O(k - d)) to H^3(P^3, O(k)): inverse monomials of degree k - d
/// whose a0 + d is no longer negative, i.e. -d <= a0 <= -1.
inline std::int64_t h2_hypersurface(std::int64_t d, std::int64_t k) {
  const std::int64_t deg = k - d;
  std::int64_t count = 0;
  for (std::int64_t a0 = -1; a0 >= -d && a0 >= deg + 3; --a0)
    for (std::int64_t a1 = -1; a0 + a1 >= deg + 2; --a1)
      for (std::int64_t a2 = -1; a0 + a1 + a2 >= deg + 1; --a2) ++count;
  return count;
}

/// chi(O_X) by Noether's formula (K^2 + c2) / 12 with K = (d - 4)H,
/// H^2 = d, c2 = d (d^2 - 4d + 6).
inline std::int64_t noether_chi_structure(std::int64_t d) {
  const std::int64_t k2 = d * (d - 4) * (d - 4);
  const std::int64_t c2 = d * (d * d - 4 * d + 6);
  return (k2 + c2) / 12;
}

/// chi(O_X(k)) by Riemann-Roch: chi(O_X) + (L.L - L.K) / 2 with L = kH.
inline std::int64_t riemann_roch(std::int64_t d, std::int64_t k) {
  return noether_chi_structure(d) + (d * k * k - d * k * (d - 4)) / 2;
}

}  // namespace oracle
