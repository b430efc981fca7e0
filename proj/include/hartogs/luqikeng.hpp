#ifndef HARTOGS_LUQIKENG_HPP
#define HARTOGS_LUQIKENG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hartogs/arith.hpp"
#include "hartogs/domain.hpp"
#include "hartogs/poly.hpp"

namespace hartogs {

/// Explicit zero of the Bergman kernel of H_{m/n} on the diagonal slice
/// {s = t}. For an interior root s0 of Q_{m,n} the points
///     z = (sqrt|s0| e^{i arg s0}, sqrt|s0| e^{i arg s0}),
///     w = (sqrt|s0|, sqrt|s0|)
/// satisfy z1 conj(w1) = z2 conj(w2) = s0, and both are interior because
/// |s0|^(gamma/2) < |s0|^(1/2) < 1 for gamma > 1. This is one preimage of
/// (s0, s0) under (z, w) -> (z1 conj w1, z2 conj w2) among many.
struct ZeroWitness {
  PairMN pair;
  Complex s0;
  DomainPoint z;
  DomainPoint w;
  Complex kernel_value;
  /// |K(z, w)|.
  double residual = 0.0;
  /// min of domain_margin over z and w.
  double margin = 0.0;
};

/// Minimum interior margin a witness must keep.
inline constexpr double kWitnessMargin = 1e-6;

/// Interior roots of Q_{m,n}, refined: real roots by exact-sign bisection on
/// the squarefree part, complex ones by Newton on the squarefree part.
std::vector<Complex> interior_roots(const PairMN& pair);

/// Witness for the interior root of smallest modulus.
/// Throws NoInteriorRoot when the census has no interior root, and
/// WitnessMargin when the construction cannot keep kWitnessMargin.
ZeroWitness zero_witness(const PairMN& pair);

/// One witness per interior root (with multiplicity collapsed).
std::vector<ZeroWitness> zero_witnesses(const PairMN& pair);

struct ScanRow {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t degree = 0;
  std::int64_t circle_count = -1;
  std::int64_t interior_count = -1;
  bool conjecture_holds = false;
  double elapsed_ms = 0.0;
  /// Non-empty when the pair failed internally; counts are then -1.
  std::string error;
};

/// Values of m - n for which non-vanishing on the circle is established;
/// violations there are bugs rather than findings.
bool is_proven_family(std::int64_t k);

struct ScanOptions {
  std::int64_t m_max = 2;
  std::optional<std::int64_t> k_filter;
  std::size_t workers = 1;
};

/// Census of Q_{m,n} for every coprime n < m <= m_max (optionally m - n = k).
/// Rows come back in (m, n) order regardless of the worker count. Per-pair
/// failures are recorded in ScanRow::error instead of aborting the scan.
std::vector<ScanRow> scan(const ScanOptions& options);

/// Census for a single pair.
ScanRow scan_pair(const PairMN& pair);

}  // namespace hartogs

#endif  // HARTOGS_LUQIKENG_HPP
