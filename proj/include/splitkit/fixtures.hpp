#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitkit/diagram.hpp"

namespace splitkit {

// Named example diagrams.  The SPLITKIT_FIXTURES environment variable points
// at a directory of <name>.pd files overriding the builtin texts.
inline const std::map<std::string, std::string>& builtin_fixtures() {
  static const std::map<std::string, std::string> m{
      {"unknot", "O*1"},
      {"unknot-kink", "X[1,2,2,1]"},
      {"unlink-2", "O*2"},
      {"clasp-unlink", "X[2,3,4,1] X[4,3,2,1]"},
      {"hopf", "X[1,4,2,3] X[3,2,4,1]"},
      {"trefoil", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"},
      {"whitehead-l5a1",
       "X[6,1,7,2] X[10,7,5,8] X[4,5,1,6] X[2,10,3,9] X[8,4,9,3]"},
      {"torus-2-6",
       "X[7,1,2,8] X[8,2,3,9] X[9,3,4,10] X[10,4,5,11] X[11,5,6,12] "
       "X[12,6,1,7]"},
  };
  return m;
}

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : builtin_fixtures()) out.push_back(k);
  return out;
}

inline std::string fixture_text(const std::string& name) {
  if (const char* dir = std::getenv("SPLITKIT_FIXTURES")) {
    std::ifstream in(std::string(dir) + "/" + name + ".pd");
    if (in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      std::string text = ss.str();
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.pop_back();
      return text;
    }
  }
  auto it = builtin_fixtures().find(name);
  if (it == builtin_fixtures().end())
    throw std::invalid_argument("unknown fixture: " + name);
  return it->second;
}

inline Diagram fixture(const std::string& name) {
  return Diagram::parse(fixture_text(name));
}

}  // namespace splitkit
