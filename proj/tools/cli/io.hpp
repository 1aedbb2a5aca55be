#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "hybridwig/sweep.hpp"

namespace hybridwig::cli {

inline constexpr std::string_view kCsvHeader =
    "omega_t_over_pi,negativity_volume,negativity_err,critical_value,fidelity,witnessed_entangled";

/// Header line then one row per line, reals with 17 significant digits.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Array of row objects keyed by the CSV column names.
void write_json(std::ostream& os, const std::vector<SweepRow>& rows);

void write_rows(std::ostream& os, const std::vector<SweepRow>& rows, OutputFormat format);

/// Inverse of write_csv / write_json; std::runtime_error on schema mismatch.
std::vector<SweepRow> read_csv(std::istream& is);
std::vector<SweepRow> read_json(std::istream& is);

}  // namespace hybridwig::cli
