#include "negder/system_file.hpp"

#include <fstream>
#include <sstream>

#include "negder/errors.hpp"
#include "negder/parser.hpp"

namespace negder {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void line_error(std::size_t lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what, lineno);
}

}  // namespace

SystemFile SystemFile::parse(std::istream& in) {
  SystemFile f;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t colon = s.find(':');
    if (colon == std::string::npos) line_error(lineno, "expected 'key: value'");
    std::string key = trim(s.substr(0, colon));
    std::string value = trim(s.substr(colon + 1));
    if (key == "vars") {
      if (!f.vars.empty()) line_error(lineno, "duplicate vars line");
      std::istringstream vs(value);
      std::string name;
      while (vs >> name) f.vars.push_back(name);
      if (f.vars.empty()) line_error(lineno, "empty vars line");
    } else if (key == "weights") {
      if (f.weights) line_error(lineno, "duplicate weights line");
      std::vector<long> w;
      std::istringstream vs(value);
      std::string tok;
      while (vs >> tok) {
        try {
          std::size_t used = 0;
          long v = std::stol(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          w.push_back(v);
        } catch (const std::exception&) {
          line_error(lineno, "bad weight '" + tok + "'");
        }
      }
      if (w.empty()) line_error(lineno, "empty weights line");
      f.weights = std::move(w);
    } else if (key == "eq") {
      if (value.empty()) line_error(lineno, "empty equation");
      f.equations_text.push_back(value);
    } else if (key == "field") {
      if (value != "Q") line_error(lineno, "unsupported field '" + value + "' (only Q)");
      f.field = value;
    } else {
      line_error(lineno, "unknown key '" + key + "'");
    }
  }
  if (f.vars.empty()) throw ParseError("missing vars line", 0);
  if (f.equations_text.empty()) throw ParseError("missing eq lines", 0);
  if (f.weights && f.weights->size() != f.vars.size())
    throw ParseError("weights count (" + std::to_string(f.weights->size()) +
                         ") does not match variable count (" + std::to_string(f.vars.size()) + ")",
                     0);
  return f;
}

SystemFile SystemFile::parse_string(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

SystemFile SystemFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse(in);
}

std::string SystemFile::serialize() const {
  std::ostringstream os;
  os << "vars:";
  for (const std::string& v : vars) os << " " << v;
  os << "\n";
  if (weights) {
    os << "weights:";
    for (long w : *weights) os << " " << w;
    os << "\n";
  }
  for (const std::string& eq : equations_text) os << "eq: " << eq << "\n";
  if (field) os << "field: " << *field << "\n";
  return os.str();
}

std::vector<Polynomial> SystemFile::parse_equations() const {
  std::vector<Polynomial> g;
  g.reserve(equations_text.size());
  for (std::size_t i = 0; i < equations_text.size(); ++i) {
    try {
      g.push_back(parse_polynomial(equations_text[i], vars));
    } catch (const ParseError& e) {
      throw ParseError("equation " + std::to_string(i + 1) + ", position " +
                           std::to_string(e.position()) + ": " + e.what(),
                       e.position());
    }
  }
  return g;
}

WeightSystem SystemFile::weight_system() const {
  if (!weights) throw InputError("system file has no weights line");
  return WeightSystem(*weights);
}

}  // namespace negder
