#ifndef HARTOGS_SERIALIZE_HPP
#define HARTOGS_SERIALIZE_HPP

// Machine-readable output. Integers that may exceed 64 bits are written as
// decimal strings; bivariate terms are listed in (deg_s, deg_t) order.

#include <string>
#include <vector>

#include "json.hpp"

#include "hartogs/kernel.hpp"
#include "hartogs/luqikeng.hpp"
#include "hartogs/palindrome.hpp"
#include "hartogs/rootloc.hpp"

namespace hartogs {

using Json = nlohmann::ordered_json;

/// {"var":"s,t","terms":[[i,j,"c"],...]}
Json to_json(const BiPoly& p);
/// {"m":..,"n":..,"numerator":<BiPoly>,"denominator":"m*pi^2*(1-t)^2*(t^n-s^m)^2"}
Json to_json(const KernelRational& k);
/// {"m":..,"n":..,"k":m-n,"coeffs":["1","6","1"]}
Json to_json(const QPoly& q);
Json to_json(const RootCensus& c);
Json to_json(const ZeroWitness& w);
/// ScanRow objects carry an "error" key only when the pair failed.
Json to_json(const ScanRow& row, bool include_timing);

inline constexpr const char* kScanCsvHeader =
    "m,n,k,degree,circle_count,interior_count,conjecture_holds,elapsed_ms";

/// One CSV line without trailing newline. Without timing the elapsed_ms
/// field is left empty so that output is reproducible byte for byte.
std::string to_csv_line(const ScanRow& row, bool include_timing);
std::string to_csv(const std::vector<ScanRow>& rows, bool include_timing);

/// Parses BiPoly JSON back; throws DegenerateInput on malformed input.
BiPoly bipoly_from_json(const Json& j);

}  // namespace hartogs

#endif  // HARTOGS_SERIALIZE_HPP
