#include "besselsum/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace besselsum {

namespace {

void write(std::ostringstream& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{' << nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ',' << nl;
        first = false;
        out << pad << Json(key).dump() << (indent > 0 ? ": " : ":");
        write(out, value, indent, depth + 1);
      }
      out << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << '[' << nl;
      bool first = true;
      for (const auto& value : j) {
        if (!first) out << ',' << nl;
        first = false;
        out << pad;
        write(out, value, indent, depth + 1);
      }
      out << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        out << format_double(v);
      } else {
        out << '"' << format_double(v) << '"';
      }
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const EvalResult& r) {
  Json j;
  j["value"] = r.value;
  j["error_estimate"] = r.error_estimate;
  j["terms_used"] = r.terms_used;
  j["method"] = r.method;
  return j;
}

Json terms_to_json(const Expansion& e) {
  Json arr = Json::array();
  for (const auto& t : e.terms) {
    Json term;
    term["power"] = t.power;
    term["const_coeff"] = t.const_coeff;
    term["log_coeff"] = t.log_coeff;
    arr.push_back(term);
  }
  return arr;
}

Json to_json(const Expansion& e) {
  Json j;
  j["terms"] = terms_to_json(e);
  j["case_tag"] = e.case_tag;
  j["max_power"] = e.max_power;
  j["remainder_power"] = e.remainder_power;
  return j;
}

std::string dump(const Json& j, int indent) {
  std::ostringstream out;
  write(out, j, indent, 0);
  return out.str();
}

std::string terms_csv(const Expansion& e) {
  std::string s = "power,const_coeff,log_coeff\n";
  for (const auto& t : e.terms) {
    s += format_double(t.power) + ',' + format_double(t.const_coeff) + ',' + format_double(t.log_coeff) + '\n';
  }
  return s;
}

}  // namespace besselsum
