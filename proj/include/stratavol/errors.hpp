#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace stratavol {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct InvalidSignature : Error {
  using Error::Error;
};

struct UnsupportedConversion : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct DuplicateKey : Error {
  explicit DuplicateKey(const std::string& key)
      : Error("duplicate volume key: " + key), key(key) {}
  std::string key;
};

// Carries every unresolved table line, ready to paste into a volume file.
struct MissingVolume : Error {
  explicit MissingVolume(std::vector<std::string> keys, std::string graph = {});
  std::vector<std::string> keys;
  std::string graph;
};

}  // namespace stratavol
