#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "mcurve/cli_io/document.hpp"

inline std::string bench_read(const std::string& name) {
  std::ifstream in(std::string(MCURVE_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline mcurve::Arrangement bench_arrangement(const std::string& name) {
  return mcurve::validate(mcurve::parse_arrangement(bench_read(name)).arrangement);
}
