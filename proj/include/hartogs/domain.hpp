#ifndef HARTOGS_DOMAIN_HPP
#define HARTOGS_DOMAIN_HPP

#include <complex>
#include <cstdint>

namespace hartogs {

using Complex = std::complex<double>;

struct DomainPoint {
  Complex z1;
  Complex z2;
};

/// Strict membership in H_gamma = {|z1|^gamma < |z2| < 1} for gamma = m/n,
/// tested as m log|z1| < n log|z2| so that no power underflows.
/// Requires m, n >= 1.
bool in_domain(std::int64_t m, std::int64_t n, const DomainPoint& z);

/// Distance-like interior margin min(|z2| - |z1|^(m/n), 1 - |z2|).
/// Positive exactly for interior points.
double domain_margin(std::int64_t m, std::int64_t n, const DomainPoint& z);

}  // namespace hartogs

#endif  // HARTOGS_DOMAIN_HPP
