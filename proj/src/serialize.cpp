#include "hartogs/serialize.hpp"

#include <cstdio>

#include "hartogs/error.hpp"

namespace hartogs {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json point_json(const DomainPoint& p) { return Json::array({complex_json(p.z1), complex_json(p.z2)}); }

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

Json to_json(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e.first, e.second, c.get_str()}));
  return Json{{"var", "s,t"}, {"terms", std::move(terms)}};
}

Json to_json(const KernelRational& k) {
  return Json{{"m", k.pair.m()},
              {"n", k.pair.n()},
              {"numerator", to_json(k.numerator)},
              {"denominator", k.denominator_string()}};
}

Json to_json(const QPoly& q) {
  return Json{{"m", q.pair.m()}, {"n", q.pair.n()}, {"k", q.pair.k()}, {"coeffs", q.poly.coeff_strings()}};
}

Json to_json(const RootCensus& c) {
  Json out{{"inside", c.inside},
           {"on_circle", c.on_circle},
           {"outside", c.outside},
           {"method", to_string(c.method)}};
  if (c.float_roots) {
    Json roots = Json::array();
    for (const auto& r : *c.float_roots) {
      roots.push_back(Json{{"re", r.value.real()},
                           {"im", r.value.imag()},
                           {"residual", r.residual},
                           {"location", to_string(r.location)}});
    }
    out["float_roots"] = std::move(roots);
  }
  out["warnings"] = c.warnings;
  return out;
}

Json to_json(const ZeroWitness& w) {
  return Json{{"m", w.pair.m()},
              {"n", w.pair.n()},
              {"s0", complex_json(w.s0)},
              {"z", point_json(w.z)},
              {"w", point_json(w.w)},
              {"kernel_value", complex_json(w.kernel_value)},
              {"residual", w.residual},
              {"margin", w.margin}};
}

Json to_json(const ScanRow& row, bool include_timing) {
  Json out{{"m", row.m},
           {"n", row.n},
           {"k", row.k},
           {"degree", row.degree},
           {"circle_count", row.circle_count},
           {"interior_count", row.interior_count},
           {"conjecture_holds", row.conjecture_holds},
           {"elapsed_ms", include_timing ? Json(row.elapsed_ms) : Json(nullptr)}};
  if (!row.error.empty()) out["error"] = row.error;
  return out;
}

std::string to_csv_line(const ScanRow& row, bool include_timing) {
  std::string out;
  out += std::to_string(row.m) + ',' + std::to_string(row.n) + ',' + std::to_string(row.k) + ',';
  out += std::to_string(row.degree) + ',' + std::to_string(row.circle_count) + ',';
  out += std::to_string(row.interior_count) + ',';
  out += row.conjecture_holds ? "true" : "false";
  out += ',';
  if (include_timing) out += fixed3(row.elapsed_ms);
  return out;
}

std::string to_csv(const std::vector<ScanRow>& rows, bool include_timing) {
  std::string out = kScanCsvHeader;
  out += '\n';
  for (const auto& row : rows) {
    out += to_csv_line(row, include_timing);
    out += '\n';
  }
  return out;
}

BiPoly bipoly_from_json(const Json& j) {
  BiPoly out;
  try {
    if (j.at("var").get<std::string>() != "s,t") {
      throw HartogsError(ErrorKind::DegenerateInput, "expected var \"s,t\"");
    }
    for (const auto& term : j.at("terms")) {
      if (!term.is_array() || term.size() != 3) {
        throw HartogsError(ErrorKind::DegenerateInput, "term must be [i, j, \"coeff\"]");
      }
      Integer c;
      if (c.set_str(term[2].get<std::string>(), 10) != 0) {
        throw HartogsError(ErrorKind::DegenerateInput, "coefficient is not a decimal integer");
      }
      out.add_term(term[0].get<std::uint32_t>(), term[1].get<std::uint32_t>(), c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw HartogsError(ErrorKind::DegenerateInput, std::string("malformed polynomial JSON: ") + e.what());
  }
  return out;
}

}  // namespace hartogs
