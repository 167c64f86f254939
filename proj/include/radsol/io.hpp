#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace radsol::io {

// Locale-independent %.17g: doubles round-trip exactly.
std::string g17(double v);

// CSV with a one-line header naming columns and units. Rows are written in
// order with g17 cells, so identical inputs give byte-identical files.
void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

// Reads a CSV written by write_csv (header skipped, non-numeric rows rejected).
std::vector<std::vector<double>> read_csv(const std::filesystem::path& path);

// INI-style manifest: top-level keys plus one section per CLI command. The
// sections are CLI11-config compatible, so a manifest doubles as a --config
// file for bit-identical re-runs. Keys and sections are kept sorted.
class Manifest {
 public:
  static Manifest load(const std::filesystem::path& path);  // missing file -> empty
  void save(const std::filesystem::path& path) const;

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key,
                  const std::string& fallback = "") const;
  void set(const std::string& section, const std::string& key, const std::string& value);
  void erase_section(const std::string& section);

  const std::map<std::string, std::map<std::string, std::string>>& sections() const {
    return sections_;
  }

 private:
  // section "" holds top-level keys
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace radsol::io
