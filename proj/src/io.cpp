#include "radsol/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace radsol::io {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << header << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << g17(row[i]);
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<std::vector<double>> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {  // header
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      // strtod, not stod: stod throws out_of_range on subnormals
      const char* begin = cell.c_str();
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) throw std::runtime_error("non-numeric cell '" + cell + "' in " + path.string());
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Manifest Manifest::load(const std::filesystem::path& path) {
  Manifest m;
  std::ifstream in(path);
  if (!in) return m;
  std::string line, section;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b2 = s.find_first_not_of(" \t");
      if (b2 == std::string::npos) return std::string();
      const auto e2 = s.find_last_not_of(" \t");
      return s.substr(b2, e2 - b2 + 1);
    };
    m.sections_[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return m;
}

void Manifest::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  auto dump = [&](const std::map<std::string, std::string>& kv) {
    for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
  };
  if (auto it = sections_.find(""); it != sections_.end()) dump(it->second);
  for (const auto& [name, kv] : sections_) {
    if (name.empty()) continue;
    out << "[" << name << "]\n";
    dump(kv);
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

bool Manifest::has(const std::string& section, const std::string& key) const {
  const auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) > 0;
}

std::string Manifest::get(const std::string& section, const std::string& key,
                          const std::string& fallback) const {
  const auto it = sections_.find(section);
  if (it == sections_.end()) return fallback;
  const auto kt = it->second.find(key);
  return kt == it->second.end() ? fallback : kt->second;
}

void Manifest::set(const std::string& section, const std::string& key, const std::string& value) {
  sections_[section][key] = value;
}

void Manifest::erase_section(const std::string& section) { sections_.erase(section); }

}  // namespace radsol::io
