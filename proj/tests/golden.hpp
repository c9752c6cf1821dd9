#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace genform::testing {

struct GoldenCase {
  std::string expected_file;
  std::vector<std::string> args;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Reads "<expected>: <args...>" lines; arguments ending in .gf are resolved against `dir`.
inline std::vector<GoldenCase> golden_cases(const std::string& dir) {
  std::vector<GoldenCase> out;
  std::istringstream lines(read_file(dir + "/cases.txt"));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    GoldenCase c{line.substr(0, colon), {}};
    std::istringstream words(line.substr(colon + 1));
    std::string w;
    while (words >> w) c.args.push_back(w.ends_with(".gf") ? dir + "/" + w : w);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace genform::testing
