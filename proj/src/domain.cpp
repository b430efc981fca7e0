#include "hartogs/domain.hpp"

#include <algorithm>
#include <cmath>

namespace hartogs {

bool in_domain(std::int64_t m, std::int64_t n, const DomainPoint& z) {
  const double r1 = std::abs(z.z1);
  const double r2 = std::abs(z.z2);
  if (!(r2 < 1.0) || r2 == 0.0) return false;
  if (r1 == 0.0) return true;
  // Compared in logarithms; the powers underflow for large m, n.
  return static_cast<double>(m) * std::log(r1) < static_cast<double>(n) * std::log(r2);
}

double domain_margin(std::int64_t m, std::int64_t n, const DomainPoint& z) {
  const double r1 = std::abs(z.z1);
  const double r2 = std::abs(z.z2);
  const double gamma = static_cast<double>(m) / static_cast<double>(n);
  return std::min(r2 - std::pow(r1, gamma), 1.0 - r2);
}

}  // namespace hartogs
