#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "generators.hpp"
#include "lattice_json.hpp"

namespace shlat {

// Textual lattice specification:
//   zn:12   chain:4   m3   n5   b2   prod(zn:4,zn:9)   file:<path>
struct LatticeSpec {
  enum class Kind { zn, chain, product, named, file };

  Kind kind = Kind::named;
  long parameter = 0;               // n for zn, k for chain
  std::string name;                 // m3 | n5 | b2
  std::string path;                 // file
  std::vector<LatticeSpec> factors;  // product

  static LatticeSpec parse(std::string_view text);
  std::string to_string() const;
};

namespace detail {

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

inline long parse_long(std::string_view digits, std::string_view context) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw SpecError("expected an integer in \"" + std::string(context) + "\"");
  return value;
}

// Splits on top-level commas, ignoring commas nested inside parentheses.
inline std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') {
      if (--depth < 0) throw SpecError("unbalanced parentheses in \"" + std::string(s) + "\"");
    }
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw SpecError("unbalanced parentheses in \"" + std::string(s) + "\"");
  out.push_back(trim(s.substr(start)));
  return out;
}

}  // namespace detail

inline LatticeSpec LatticeSpec::parse(std::string_view raw) {
  const std::string text = detail::trim(raw);
  LatticeSpec spec;
  if (text.rfind("file:", 0) == 0) {
    spec.kind = Kind::file;
    spec.path = text.substr(5);
    if (spec.path.empty()) throw SpecError("file: spec needs a path");
    return spec;
  }
  if (text.rfind("zn:", 0) == 0) {
    spec.kind = Kind::zn;
    spec.parameter = detail::parse_long(std::string_view(text).substr(3), text);
    if (spec.parameter < 2) throw SpecError("zn requires n >= 2 in \"" + text + "\"");
    if (spec.parameter > kMaxZn) throw SpecError("zn requires n <= " + std::to_string(kMaxZn));
    return spec;
  }
  if (text.rfind("chain:", 0) == 0) {
    spec.kind = Kind::chain;
    spec.parameter = detail::parse_long(std::string_view(text).substr(6), text);
    if (spec.parameter < 1) throw SpecError("chain requires k >= 1 in \"" + text + "\"");
    return spec;
  }
  if (text.rfind("prod(", 0) == 0) {
    if (text.back() != ')') throw SpecError("prod(...) must end with ')' in \"" + text + "\"");
    spec.kind = Kind::product;
    for (const auto& part : detail::split_top_level(std::string_view(text).substr(5, text.size() - 6)))
      spec.factors.push_back(parse(part));
    if (spec.factors.size() < 2) throw SpecError("prod(...) requires at least two factors");
    return spec;
  }
  if (text == "m3" || text == "n5" || text == "b2") {
    spec.kind = Kind::named;
    spec.name = text;
    return spec;
  }
  throw SpecError("unrecognized lattice spec \"" + text + "\"");
}

inline std::string LatticeSpec::to_string() const {
  switch (kind) {
    case Kind::zn: return "zn:" + std::to_string(parameter);
    case Kind::chain: return "chain:" + std::to_string(parameter);
    case Kind::named: return name;
    case Kind::file: return "file:" + path;
    case Kind::product: {
      std::string out = "prod(";
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "," : "") + factors[i].to_string();
      return out + ")";
    }
  }
  return {};
}

inline FiniteLattice build(const LatticeSpec& spec) {
  switch (spec.kind) {
    case LatticeSpec::Kind::zn: return ideal_lattice_zn(spec.parameter);
    case LatticeSpec::Kind::chain: return chain_lattice(static_cast<int>(spec.parameter));
    case LatticeSpec::Kind::file: return read_lattice_file(spec.path);
    case LatticeSpec::Kind::named:
      if (spec.name == "m3") return m3_lattice();
      if (spec.name == "n5") return n5_lattice();
      return b2_lattice();
    case LatticeSpec::Kind::product: {
      std::vector<FiniteLattice> parts;
      for (const auto& f : spec.factors) parts.push_back(build(f));
      return product(parts);
    }
  }
  throw SpecError("unreachable spec kind");
}

inline FiniteLattice build(std::string_view text) { return build(LatticeSpec::parse(text)); }

// Comma-separated spec list with ranges: "zn:2..60,m3,prod(zn:4,zn:9)".
inline std::vector<std::string> expand_spec_list(std::string_view list) {
  std::vector<std::string> out;
  for (const auto& item : detail::split_top_level(list)) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    const auto colon = item.find(':');
    if (dots != std::string::npos && colon != std::string::npos && colon < dots && item.rfind("file:", 0) != 0) {
      const std::string head = item.substr(0, colon + 1);
      const long lo = detail::parse_long(std::string_view(item).substr(colon + 1, dots - colon - 1), item);
      const long hi = detail::parse_long(std::string_view(item).substr(dots + 2), item);
      if (hi < lo) throw SpecError("empty range in \"" + item + "\"");
      for (long v = lo; v <= hi; ++v) {
        out.push_back(head + std::to_string(v));
        LatticeSpec::parse(out.back());
      }
      continue;
    }
    LatticeSpec::parse(item);
    out.push_back(item);
  }
  return out;
}

}  // namespace shlat
