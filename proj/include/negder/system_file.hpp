#ifndef NEGDER_SYSTEM_FILE_HPP
#define NEGDER_SYSTEM_FILE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "negder/polynomial.hpp"
#include "negder/weight_system.hpp"

namespace negder {

// Line-oriented UTF-8 system description:
//
//   # comment
//   vars: x1 x2 x3
//   weights: 8 8 5
//   eq: x1*x2 + x3^2
//   field: Q            (optional; only the rationals are supported)
//
// The weights line is optional for weight inference.
struct SystemFile {
  std::vector<std::string> vars;
  std::optional<std::vector<long>> weights;
  std::vector<std::string> equations_text;
  std::optional<std::string> field;

  static SystemFile parse(std::istream& in);
  static SystemFile parse_string(const std::string& text);
  static SystemFile load(const std::string& path);

  std::string serialize() const;

  std::vector<Polynomial> parse_equations() const;
  WeightSystem weight_system() const;  // throws InputError when absent
};

}  // namespace negder

#endif
