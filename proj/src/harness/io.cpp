#include "sortnet/harness/io.hpp"

#include "sortnet/random_stream.hpp"

#include <cstdio>
#include <stdexcept>

namespace sortnet::harness {

json RunMetadata::to_json() const {
  json j;
  j["artifact"] = kArtifactName;
  j["artifact_version"] = kArtifactVersion;
  j["schema_version"] = kSchemaVersion;
  j["rng"] = std::string(RandomStream::kGeneratorName);
  j["command"] = command;
  j["seed"] = seed;
  j["params"] = params;
  if (wall_time_s) j["wall_time_s"] = *wall_time_s;
  return j;
}

void check_metadata(const json& meta) {
  auto expect = [&](const char* key, const json& want) {
    if (!meta.contains(key)) throw std::runtime_error(std::string("metadata lacks \"") + key + "\"");
    if (meta.at(key) != want) {
      throw std::runtime_error(std::string("metadata mismatch for \"") + key + "\": found " + meta.at(key).dump() +
                               ", expected " + want.dump());
    }
  };
  if (!meta.is_object()) throw std::runtime_error("metadata is not an object");
  expect("artifact", kArtifactName);
  expect("artifact_version", kArtifactVersion);
  expect("schema_version", kSchemaVersion);
  expect("rng", std::string(RandomStream::kGeneratorName));
}

json network_to_json(const SortingNetwork& w) {
  json j;
  j["n"] = w.n();
  j["swaps"] = std::vector<int>(w.swaps().begin(), w.swaps().end());
  return j;
}

SortingNetwork network_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto swaps = j.at("swaps").get<std::vector<int>>();
    if (n < 1) throw std::runtime_error("network size must be positive");
    return SortingNetwork(n, std::move(swaps));
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed network: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid network: ") + e.what());
  }
}

json tableau_to_json(const StandardYoungTableau& t) {
  json j;
  j["shape"] = std::vector<int>(t.shape().parts().begin(), t.shape().parts().end());
  j["rows"] = t.rows();
  return j;
}

StandardYoungTableau tableau_from_json(const json& j) {
  try {
    StandardYoungTableau t(j.at("rows").get<std::vector<std::vector<int>>>());
    if (j.contains("shape")) {
      const auto shape = j.at("shape").get<std::vector<int>>();
      if (!std::equal(shape.begin(), shape.end(), t.shape().parts().begin(), t.shape().parts().end())) {
        throw std::runtime_error("tableau rows do not match the stated shape");
      }
    }
    return t;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed tableau: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid tableau: ") + e.what());
  }
}

json rational_to_json(const ExactRational& q) {
  json j;
  j["num"] = to_string(BigCount(boost::multiprecision::numerator(q)));
  j["den"] = to_string(BigCount(boost::multiprecision::denominator(q)));
  j["value"] = to_double(q);
  return j;
}

json big_to_json(const BigCount& v) { return to_string(v); }

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(1) << '\n';
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<SortingNetwork> read_networks(const std::string& path) {
  const json j = read_json(path);
  if (!j.contains("metadata")) throw std::runtime_error(path + ": no metadata block");
  check_metadata(j.at("metadata"));
  std::vector<SortingNetwork> out;
  if (j.contains("networks")) {
    for (const auto& x : j.at("networks")) out.push_back(network_from_json(x));
  } else {
    out.push_back(network_from_json(j));
  }
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path, const RunMetadata& meta, const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), columns_(columns.size()) {
  if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
  out_ << "# sortnet-csv schema=" << kSchemaVersion << " artifact_version=" << kArtifactVersion
       << " metadata=" << meta.to_json().dump() << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::sep() {
  if (in_row_ == columns_) throw std::logic_error("too many CSV fields in a row");
  if (in_row_++ > 0) out_ << ',';
}

CsvWriter& CsvWriter::operator<<(double x) {
  sep();
  out_ << format_double(x);
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::int64_t x) {
  sep();
  out_ << x;
  return *this;
}

CsvWriter& CsvWriter::operator<<(const std::string& s) {
  sep();
  out_ << s;
  return *this;
}

void CsvWriter::end_row() {
  if (in_row_ != columns_) throw std::logic_error("CSV row has the wrong number of fields");
  out_ << '\n';
  in_row_ = 0;
  ++rows_;
}

json read_csv_metadata(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::getline(in, line);
  const std::string tag = "# sortnet-csv ";
  const auto at = line.find(" metadata=");
  if (line.rfind(tag, 0) != 0 || at == std::string::npos) throw std::runtime_error(path + ": missing sortnet-csv header");
  try {
    return json::parse(line.substr(at + 10));
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": bad metadata line: " + e.what());
  }
}

}  // namespace sortnet::harness
