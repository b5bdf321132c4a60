#pragma once

#include <cstddef>
#include <fstream>
#include <string>
#include <vector>

namespace psphdc {

// Canonical float formatting: shortest round-trip decimal via to_chars.
// Every CSV writer in the project goes through this so that re-running a
// command from its manifest reproduces byte-identical files.
std::string format_double(double v);

// Exact fp64 round trips for checkpoints ("%a" hexfloat).
std::string format_hexfloat(double v);
double parse_hexfloat(const std::string& s);

// Minimal CSV emitter. Fields containing separators or quotes are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  // '#'-prefixed free-text line before or between rows (report headers).
  void comment(const std::string& text);
  void row(const std::vector<std::string>& fields);
  void close();

  bool good() const { return out_.good(); }

 private:
  std::ofstream out_;
};

std::string csv_escape(const std::string& field);

}  // namespace psphdc
