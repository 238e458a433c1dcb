#pragma once

#include "sortnet/bigint.hpp"
#include "sortnet/core_perm.hpp"
#include "sortnet/tableaux.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace sortnet::harness {

using json = nlohmann::ordered_json;

inline constexpr const char* kArtifactName = "sortnet";
inline constexpr const char* kArtifactVersion = "1.0.0";
/// Bumped whenever a JSON or CSV layout changes.
inline constexpr int kSchemaVersion = 1;

struct RunMetadata {
  std::string command;
  std::uint64_t seed = 0;
  json params = json::object();
  /// Omitted from the output when empty, which keeps sampled files byte-stable.
  std::optional<double> wall_time_s;

  json to_json() const;
};

/// Throws std::runtime_error unless `meta` names this artifact with the same
/// artifact and schema versions and generator.
void check_metadata(const json& meta);

json network_to_json(const SortingNetwork& w);
/// Validates the swap sequence; throws std::runtime_error on malformed input.
SortingNetwork network_from_json(const json& j);

json tableau_to_json(const StandardYoungTableau& t);
StandardYoungTableau tableau_from_json(const json& j);

/// {"num": "...", "den": "...", "value": double}.
json rational_to_json(const ExactRational& q);
json big_to_json(const BigCount& v);

void write_json(const std::string& path, const json& j);
json read_json(const std::string& path);

/// Reads every network in a file written by `sortnet sample` (one network or
/// a "networks" array), checking the metadata first.
std::vector<SortingNetwork> read_networks(const std::string& path);

/// 17 significant digits.
std::string format_double(double x);

/// A CSV file whose first line is
///   # sortnet-csv schema=<v> artifact_version=<v> metadata=<json>
/// followed by the header row.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const RunMetadata& meta, const std::vector<std::string>& columns);

  CsvWriter& operator<<(double x);
  CsvWriter& operator<<(std::int64_t x);
  CsvWriter& operator<<(int x) { return *this << static_cast<std::int64_t>(x); }
  CsvWriter& operator<<(std::size_t x) { return *this << static_cast<std::int64_t>(x); }
  CsvWriter& operator<<(const std::string& s);
  void end_row();
  std::size_t rows() const { return rows_; }

 private:
  void sep();
  std::ofstream out_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
  std::size_t rows_ = 0;
};

/// Metadata embedded in the first line of a CSV written by CsvWriter.
json read_csv_metadata(const std::string& path);

}  // namespace sortnet::harness
