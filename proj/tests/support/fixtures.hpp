#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dlout/parser.hpp"
#include "dlout/theory.hpp"

#ifndef DLOUT_TEST_DATA
#error "DLOUT_TEST_DATA must point at tests/data"
#endif

namespace dlout::testing {

inline std::string data_path(const std::string& name) {
  return std::string(DLOUT_TEST_DATA) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data file " + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline DefaultTheory load(const std::string& name) { return parse_theory(read_data(name)); }

inline DefaultTheory creditcard() { return load("creditcard.dth"); }
inline DefaultTheory cellphone() { return load("cellphone.dth"); }
inline DefaultTheory unrelated() { return load("unrelated.dth"); }

inline LiteralSet lits(const std::string& text) { return parse_literal_list(text); }
inline Literal lit(const std::string& text) { return parse_literal(text); }

}  // namespace dlout::testing
