#ifndef GMUX_IO_HPP
#define GMUX_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gmux/model.hpp"
#include "gmux/simulate.hpp"

namespace gmux {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Design file schema: {"n": N, "rows": [[0,1,...],...], "times": [t1,...]}
/// with "times" optional (defaults to N/M per row).
nlohmann::json design_to_json(const Design& design);
Design design_from_json(const nlohmann::json& j);

Design read_design_file(const std::string& path);
void write_design_file(const Design& design, const std::string& path);

nlohmann::json report_to_json(const SimReport& report);

}  // namespace gmux

#endif
