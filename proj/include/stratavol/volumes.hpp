#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratavol/core.hpp"

namespace stratavol {

struct VolumeEntry {
  Rational value;
  std::string source;
  int line = 0;
};

class VolumeTable {
 public:
  VolumeTable() = default;

  static VolumeTable parse(const std::string& text, const std::string& source = "inline");
  static VolumeTable load(const std::string& path);

  // Adds entries from other; redefining a key throws DuplicateKey.
  void merge(const VolumeTable& other);
  void insert(const Signature& sig, const Rational& v, const std::string& source = "inline",
              int line = 0);

  const VolumeEntry* find(const Signature& sig) const;
  const std::map<std::string, VolumeEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, VolumeEntry> entries_;
};

VolumeTable parse_table(const std::string& text);

enum class Role { Main, Sun, Flower, Bottom };

struct VolumeQuery {
  Signature sig;
  Role role = Role::Main;
};

enum class Provider { KnownEmpty, GenusZeroTwoPoles, SunflowerBottom, Table };

struct Resolution {
  Rational value;
  Provider provider;
  std::optional<std::string> warning;  // set when a table entry disagrees with a built-in value
};

Rational vol_q0_two_poles(int m1, int m2, const std::vector<int>& genera);
Rational vol_sf_bottom(int m, int r);

// Closed-form value for a signature, if one applies (steps 1 and 2 of the chain).
std::optional<std::pair<Rational, Provider>> builtin_volume(const Signature& sig);

Resolution resolve(const VolumeQuery& q, const VolumeTable& table);
Rational lookup(const VolumeQuery& q, const VolumeTable& table);

const char* provider_name(Provider p);

}  // namespace stratavol
