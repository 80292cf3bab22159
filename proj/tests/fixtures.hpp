#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "abelred/parser.hpp"

namespace abelred::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(ABELRED_TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline InputODE load_ode(const std::string& name) { return parse_ode(read_data(name)); }

}  // namespace abelred::testing
