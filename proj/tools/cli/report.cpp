#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace ep::cli {

using ojson = nlohmann::ordered_json;

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::info: return "INFO";
  }
  return "INFO";
}

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("--format must be table, json or csv");
}

std::string fmt_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

namespace {

std::string fmt_cx(const std::complex<double>& z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  std::string im = fmt_double(std::abs(z.imag()));
  return fmt_double(z.real()) + (z.imag() < 0 ? "-" : "+") + im + "i";
}

ojson json_double(double x) {
  if (!std::isfinite(x)) return fmt_double(x);
  return std::stod(fmt_double(x));
}

ojson to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> ojson {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return json_double(x);
        } else if constexpr (std::is_same_v<T, std::complex<double>>) {
          return ojson{{"re", json_double(x.real())}, {"im", json_double(x.imag())}};
        } else {
          return ojson(x);
        }
      },
      v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string fmt_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return fmt_double(x);
        } else if constexpr (std::is_same_v<T, std::complex<double>>) {
          return fmt_cx(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(x);
        } else {
          return x;
        }
      },
      v);
}

void render(const Report& r, Format f, std::ostream& out) {
  if (f == Format::json) {
    ojson j;
    j["schema"] = "euler-pencil/1";
    j["command"] = r.command;
    ojson params = ojson::object();
    for (const auto& [k, v] : r.params) params[k] = to_json(v);
    j["params"] = params;
    j["tolerance"] = json_double(r.tolerance);
    j["status"] = status_name(r.status);
    ojson result = ojson::object();
    for (const auto& [k, v] : r.fields) result[k] = to_json(v);
    j["result"] = result;
    if (!r.columns.empty()) {
      ojson rows = ojson::array();
      for (const auto& row : r.rows) {
        ojson o = ojson::object();
        for (std::size_t i = 0; i < r.columns.size() && i < row.size(); ++i) o[r.columns[i]] = to_json(row[i]);
        rows.push_back(o);
      }
      j["rows"] = rows;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    out << j.dump(2) << "\n";
    return;
  }
  if (f == Format::csv) {
    if (!r.columns.empty()) {
      for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_escape(r.columns[i]);
      out << "\n";
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(fmt_value(row[i]));
        out << "\n";
      }
      return;
    }
    out << "key,value\n";
    for (const auto& [k, v] : r.fields) out << csv_escape(k) << "," << csv_escape(fmt_value(v)) << "\n";
    out << "status," << status_name(r.status) << "\n";
    return;
  }
  out << r.command;
  for (const auto& [k, v] : r.params) out << " " << k << "=" << fmt_value(v);
  out << "\n";
  std::size_t width = 0;
  for (const auto& [k, v] : r.fields) width = std::max(width, k.size());
  for (const auto& [k, v] : r.fields) out << "  " << k << std::string(width - k.size(), ' ') << "  " << fmt_value(v) << "\n";
  if (!r.columns.empty()) {
    std::vector<std::size_t> w(r.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < r.columns.size(); ++i) w[i] = r.columns[i].size();
    for (const auto& row : r.rows) {
      std::vector<std::string> c;
      for (std::size_t i = 0; i < row.size(); ++i) {
        c.push_back(fmt_value(row[i]));
        if (i < w.size()) w[i] = std::max(w[i], c.back().size());
      }
      cells.push_back(std::move(c));
    }
    auto line = [&](const std::vector<std::string>& c) {
      out << " ";
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t wi = i < w.size() ? w[i] : c[i].size();
        out << " " << std::string(wi - c[i].size(), ' ') << c[i];
      }
      out << "\n";
    };
    line(r.columns);
    for (const auto& c : cells) line(c);
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  out << "status: " << status_name(r.status) << " (tol " << fmt_double(r.tolerance) << ")\n";
}

}  // namespace ep::cli
