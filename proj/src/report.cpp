#include "curvar/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace curvar {

namespace {

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string pad_close(static_cast<std::size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += ": ";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += "\n" + pad_close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const Json& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_rec(v, out, indent, depth + 1);
      }
      out += "\n" + pad_close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = j.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      // keep floats distinguishable from ints on round-trip
      if (!std::strpbrk(buf, ".eE")) out += ".0";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_deterministic(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += '\n';
  return out;
}

Json make_report(Json inputs_echo, Json results, Json diagnostics,
                 std::vector<std::string> warnings) {
  Json r;
  r["schema_version"] = "1.0";
  r["inputs_echo"] = std::move(inputs_echo);
  r["results"] = std::move(results);
  r["diagnostics"] = std::move(diagnostics);
  r["warnings"] = warnings;
  return r;
}

Json breakdown_to_json(const VarianceBreakdown& b) {
  Json j;
  j["minkowski"] = b.minkowski;
  j["ricci_term"] = b.ricci_term;
  j["riemann_term"] = b.riemann_term;
  j["log_term"] = b.log_term;
  j["state_term"] = b.state_term;
  j["total"] = b.total;
  j["ell_times_sqrt_curvature"] = b.ell_times_sqrt_curvature;
  j["validity_warning"] = b.validity_warning;
  return j;
}

}  // namespace curvar
