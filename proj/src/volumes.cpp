#include "stratavol/volumes.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace stratavol {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string field(const std::string& part, const std::string& name, int line) {
  auto t = trim(part);
  auto eq = t.find('=');
  if (eq == std::string::npos || trim(t.substr(0, eq)) != name)
    throw ParseError(line, "expected '" + name + "=...', got '" + t + "'");
  auto v = trim(t.substr(eq + 1));
  if (v.empty()) throw ParseError(line, "empty value for '" + name + "'");
  return v;
}

bool is_odd(int m) { return m % 2 != 0; }

}  // namespace

VolumeTable VolumeTable::parse(const std::string& text, const std::string& source) {
  VolumeTable t;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    auto body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;

    std::vector<std::string> parts;
    std::stringstream ss(body);
    std::string p;
    while (std::getline(ss, p, ';')) parts.push_back(p);
    if (parts.size() != 3) throw ParseError(line, "expected 'k=..; mu=..; vol=..'");

    int k = 0;
    std::optional<Signature> sig;
    Rational v;
    try {
      auto ks = field(parts[0], "k", line);
      size_t used = 0;
      k = std::stoi(ks, &used);
      if (used != ks.size()) throw ParseError(line, "bad k '" + ks + "'");
      sig.emplace(k, parse_int_list(field(parts[1], "mu", line)));
      v = Rational::parse(field(parts[2], "vol", line));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
    t.insert(*sig, v, source, line);
  }
  return t;
}

VolumeTable VolumeTable::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open volume file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

void VolumeTable::insert(const Signature& sig, const Rational& v, const std::string& source,
                         int line) {
  auto key = sig.canonical_key();
  if (entries_.count(key)) throw DuplicateKey(key);
  entries_.emplace(key, VolumeEntry{v, source, line});
}

void VolumeTable::merge(const VolumeTable& other) {
  for (const auto& [key, e] : other.entries_)
    if (entries_.count(key)) throw DuplicateKey(key);
  for (const auto& [key, e] : other.entries_) entries_.emplace(key, e);
}

const VolumeEntry* VolumeTable::find(const Signature& sig) const {
  auto it = entries_.find(sig.canonical_key());
  return it == entries_.end() ? nullptr : &it->second;
}

VolumeTable parse_table(const std::string& text) { return VolumeTable::parse(text); }

Rational vol_q0_two_poles(int m1, int m2, const std::vector<int>& genera) {
  if (m1 < 1 || m2 < 1 || !is_odd(m1) || !is_odd(m2))
    throw DomainError("vol_q0_two_poles needs odd m1, m2 >= 1");
  for (int g : genera)
    if (g < 1) throw DomainError("vol_q0_two_poles needs genera >= 1");
  const int h = static_cast<int>(genera.size());
  const int total = std::accumulate(genera.begin(), genera.end(), 0);
  if (m1 + m2 + 4 != 4 * total)
    throw InvalidSignature("(" + std::to_string(m1) + "," + std::to_string(m2) +
                           ", -4g_i) is not of genus 0");
  Rational sum;
  for (int mask = 0; mask < (1 << h); ++mask) {
    int c1 = m1 + 2, size = 0;
    for (int i = 0; i < h; ++i)
      if (mask >> i & 1) {
        c1 -= 4 * genera[i];
        ++size;
      }
    if (c1 > 0) sum += Rational(c1) * f2(m1, size + 1) * f2(m2, h - size + 1);
  }
  return sum;
}

Rational vol_sf_bottom(int m, int r) {
  if (m < 1 || !is_odd(m) || r < 1 || m - 2 * (r - 1) < -1)
    throw DomainError("vol_sf_bottom(" + std::to_string(m) + ", " + std::to_string(r) +
                      ") out of domain");
  return Rational(dfact2(m)) / Rational(dfact2(m - 2 * (r - 1)));
}

std::optional<std::pair<Rational, Provider>> builtin_volume(const Signature& sig) {
  if (sig.k() != 2) return std::nullopt;
  auto o = sig.orders();
  std::sort(o.begin(), o.end(), std::greater<>());
  if (o == std::vector<int>{3, 1} || o == std::vector<int>{1, -1})
    return std::make_pair(Rational(0), Provider::KnownEmpty);
  if (sig.genus() != 0) return std::nullopt;

  std::vector<int> pos, odd_poles, genera;
  for (int m : o) {
    if (m > 0 && is_odd(m))
      pos.push_back(m);
    else if (m < 0 && m % 4 == 0)
      genera.push_back(-m / 4);
    else if (m < 0 && is_odd(m))
      odd_poles.push_back(m);
    else
      return std::nullopt;
  }
  if (pos.size() == 2 && odd_poles.empty() && !genera.empty())
    return std::make_pair(vol_q0_two_poles(pos[0], pos[1], genera), Provider::GenusZeroTwoPoles);
  if (pos.size() == 1 && odd_poles.size() == 1 && odd_poles[0] <= -3 && !genera.empty()) {
    int m = pos[0], r = static_cast<int>(genera.size());
    if (m - 2 * (r - 1) >= -1)
      return std::make_pair(vol_sf_bottom(m, r), Provider::SunflowerBottom);
  }
  return std::nullopt;
}

Resolution resolve(const VolumeQuery& q, const VolumeTable& table) {
  if (q.role == Role::Flower && q.sig.k() != 1)
    throw DomainError("flower queries must carry k=1 signatures");
  const VolumeEntry* entry = table.find(q.sig);
  if (auto b = builtin_volume(q.sig)) {
    Resolution r{b->first, b->second, std::nullopt};
    if (entry && entry->value != b->first)
      r.warning = "table value " + entry->value.str() + " for '" + q.sig.canonical_key() +
                  "' (" + entry->source + ":" + std::to_string(entry->line) +
                  ") disagrees with built-in " + b->first.str() + "; using built-in";
    return r;
  }
  if (entry) return {entry->value, Provider::Table, std::nullopt};
  throw MissingVolume({q.sig.canonical_key()});
}

Rational lookup(const VolumeQuery& q, const VolumeTable& table) { return resolve(q, table).value; }

const char* provider_name(Provider p) {
  switch (p) {
    case Provider::KnownEmpty: return "known-empty";
    case Provider::GenusZeroTwoPoles: return "genus-zero closed form";
    case Provider::SunflowerBottom: return "sunflower-bottom closed form";
    case Provider::Table: return "table";
  }
  return "?";
}

}  // namespace stratavol
