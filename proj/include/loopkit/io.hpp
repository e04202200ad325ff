#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "loopkit/table.hpp"

namespace loopkit {

// File formats. ".loop": optional '#' comment lines, then `n`, then n lines
// of n whitespace-separated integers in 0..n-1. ".map": `n` then one line of
// n integers. ".perms": `n` then one permutation per line.

namespace detail {

inline std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;       // blank
    if (line[i] == '#') continue;               // comment
    lines.push_back(line);
  }
  return lines;
}

inline std::vector<int> parse_ints(const std::string& line, const char* what) {
  std::istringstream ss(line);
  std::vector<int> out;
  long long v;
  while (ss >> v) out.push_back(static_cast<int>(v));
  if (!ss.eof()) throw error(std::string(what) + ": non-integer token in \"" + line + "\"");
  return out;
}

inline int parse_order(const std::vector<std::string>& lines, const char* what) {
  if (lines.empty()) throw error(std::string(what) + ": empty input");
  auto head = parse_ints(lines[0], what);
  if (head.size() != 1 || head[0] <= 0)
    throw error(std::string(what) + ": first line must be the positive order n");
  return head[0];
}

}  // namespace detail

inline LoopTable parse_loop(std::istream& in, bool canonicalize = false) {
  auto lines = detail::data_lines(in);
  int n = detail::parse_order(lines, "loop file");
  if (static_cast<int>(lines.size()) != n + 1)
    throw error("loop file: expected " + std::to_string(n) + " table rows, got " +
                std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) rows.push_back(detail::parse_ints(lines[static_cast<size_t>(r) + 1], "loop file"));
  return LoopTable::from_rows(rows, canonicalize);
}

inline LoopTable parse_loop(const std::string& text, bool canonicalize = false) {
  std::istringstream ss(text);
  return parse_loop(ss, canonicalize);
}

inline LoopTable load_loop(const std::string& path, bool canonicalize = false) {
  std::ifstream in(path);
  if (!in) throw error("cannot open loop file: " + path);
  return parse_loop(in, canonicalize);
}

inline void write_loop(std::ostream& out, const LoopTable& q) {
  out << q.order() << "\n";
  for (int x = 0; x < q.order(); ++x) {
    for (int y = 0; y < q.order(); ++y) out << (y ? " " : "") << q.mul(x, y);
    out << "\n";
  }
}

inline void save_loop(const std::string& path, const LoopTable& q) {
  std::ofstream out(path);
  if (!out) throw error("cannot write loop file: " + path);
  write_loop(out, q);
}

inline SelfMap parse_map(std::istream& in) {
  auto lines = detail::data_lines(in);
  int n = detail::parse_order(lines, "map file");
  if (lines.size() != 2) throw error("map file: expected one image line");
  auto img = detail::parse_ints(lines[1], "map file");
  if (static_cast<int>(img.size()) != n)
    throw error("map file: expected " + std::to_string(n) + " images");
  return SelfMap(std::move(img));
}

inline SelfMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open map file: " + path);
  return parse_map(in);
}

inline void write_map(std::ostream& out, const SelfMap& s) {
  out << s.size() << "\n";
  for (int x = 0; x < s.size(); ++x) out << (x ? " " : "") << s(x);
  out << "\n";
}

inline void save_map(const std::string& path, const SelfMap& s) {
  std::ofstream out(path);
  if (!out) throw error("cannot write map file: " + path);
  write_map(out, s);
}

inline std::vector<Perm> parse_perms(std::istream& in) {
  auto lines = detail::data_lines(in);
  int n = detail::parse_order(lines, "perms file");
  std::vector<Perm> out;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto img = detail::parse_ints(lines[i], "perms file");
    if (static_cast<int>(img.size()) != n)
      throw error("perms file: line " + std::to_string(i) + " has wrong length");
    out.emplace_back(std::move(img));
  }
  return out;
}

inline std::vector<Perm> load_perms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open perms file: " + path);
  return parse_perms(in);
}

inline void write_perms(std::ostream& out, int n, const std::vector<Perm>& perms) {
  out << n << "\n";
  for (const Perm& p : perms) {
    for (int x = 0; x < p.size(); ++x) out << (x ? " " : "") << p(x);
    out << "\n";
  }
}

inline void save_perms(const std::string& path, int n, const std::vector<Perm>& perms) {
  std::ofstream out(path);
  if (!out) throw error("cannot write perms file: " + path);
  write_perms(out, n, perms);
}

}  // namespace loopkit
