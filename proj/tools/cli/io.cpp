#include "io.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hybridwig::cli {

namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_number(const std::string& s, int line) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
    throw std::runtime_error("line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    os << number(r.omega_t_over_pi) << ',' << number(r.negativity_volume) << ',' << number(r.negativity_err) << ','
       << number(r.critical_value) << ',' << number(r.fidelity) << ',' << (r.witnessed_entangled ? "true" : "false")
       << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    arr.push_back({{"omega_t_over_pi", r.omega_t_over_pi},
                   {"negativity_volume", r.negativity_volume},
                   {"negativity_err", r.negativity_err},
                   {"critical_value", r.critical_value},
                   {"fidelity", r.fidelity},
                   {"witnessed_entangled", r.witnessed_entangled}});
  }
  os << arr.dump(2) << '\n';
}

void write_rows(std::ostream& os, const std::vector<SweepRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    write_json(os, rows);
  } else {
    write_csv(os, rows);
  }
}

std::vector<SweepRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw std::runtime_error("CSV header mismatch");
  std::vector<SweepRow> rows;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw std::runtime_error("line " + std::to_string(lineno) + ": expected 6 columns");
    SweepRow r;
    r.omega_t_over_pi = parse_number(cells[0], lineno);
    r.negativity_volume = parse_number(cells[1], lineno);
    r.negativity_err = parse_number(cells[2], lineno);
    r.critical_value = parse_number(cells[3], lineno);
    r.fidelity = parse_number(cells[4], lineno);
    if (cells[5] == "true") {
      r.witnessed_entangled = true;
    } else if (cells[5] != "false") {
      throw std::runtime_error("line " + std::to_string(lineno) + ": witnessed_entangled must be true or false");
    }
    rows.push_back(r);
  }
  return rows;
}

std::vector<SweepRow> read_json(std::istream& is) {
  const nlohmann::json arr = nlohmann::json::parse(is);
  if (!arr.is_array()) throw std::runtime_error("JSON output must be an array");
  std::vector<SweepRow> rows;
  for (const auto& o : arr) {
    if (!o.is_object() || o.size() != 6) throw std::runtime_error("JSON row must have 6 fields");
    SweepRow r;
    r.omega_t_over_pi = o.at("omega_t_over_pi").get<double>();
    r.negativity_volume = o.at("negativity_volume").get<double>();
    r.negativity_err = o.at("negativity_err").get<double>();
    r.critical_value = o.at("critical_value").get<double>();
    r.fidelity = o.at("fidelity").get<double>();
    r.witnessed_entangled = o.at("witnessed_entangled").get<bool>();
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hybridwig::cli
