#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ep::cli {

using Value = std::variant<std::string, long, double, bool, std::complex<double>>;

enum class Status { pass, fail, info };
enum class Format { table, json, csv };

const char* status_name(Status s);
Format parse_format(const std::string& s);

/// %.12g, with nan and inf spelled out.
std::string fmt_double(double x);
std::string fmt_value(const Value& v);

struct Report {
  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  std::vector<std::pair<std::string, Value>> params;
  std::vector<std::pair<std::string, Value>> fields;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
  std::vector<std::string> notes;
  Status status = Status::info;
  double tolerance = 0;

  Report& param(std::string k, Value v) {
    params.emplace_back(std::move(k), std::move(v));
    return *this;
  }
  Report& field(std::string k, Value v) {
    fields.emplace_back(std::move(k), std::move(v));
    return *this;
  }
};

void render(const Report& r, Format f, std::ostream& out);

}  // namespace ep::cli
