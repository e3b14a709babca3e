#pragma once

#include <chrono>
#include <ctime>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cospec/census.hpp"
#include "cospec/io.hpp"

namespace cospec {

inline constexpr const char* kVersion = "0.1.0";

inline std::string iso8601_utc_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

/// Machine-readable command outcome. The line-oriented text form is the
/// stable contract; the JSON form mirrors it for convenience. Everything but
/// the timestamp is deterministic given inputs and flags.
struct Report {
  std::string command;
  std::string timestamp = iso8601_utc_now();
  std::string status = "ok";
  std::vector<std::pair<std::string, std::string>> fields;

  std::optional<CycleCensus> census;
  std::optional<int> census_girth;  // nullopt while census is set means acyclic

  std::vector<double> spectrum;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, int value) { add(std::move(key), std::to_string(value)); }

  std::string to_text() const {
    std::ostringstream out;
    out << "command " << command << '\n';
    out << "version " << kVersion << '\n';
    out << "timestamp " << timestamp << '\n';
    for (const auto& [key, value] : fields) out << key << ' ' << value << '\n';
    if (census) {
      out << "census_begin\n";
      out << serialize_census(*census, census_girth);
      out << "census_end\n";
    }
    if (!spectrum.empty()) {
      out << "spectrum_begin\n";
      out.setf(std::ios::fixed);
      out.precision(9);
      for (double value : spectrum) out << value << '\n';
      out.unsetf(std::ios::fixed);
      out << "spectrum_end\n";
    }
    out << "status " << status << '\n';
    return out.str();
  }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["timestamp"] = timestamp;
    nlohmann::ordered_json f = nlohmann::ordered_json::object();
    for (const auto& [key, value] : fields) f[key] = value;
    j["fields"] = std::move(f);
    if (census) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::object();
      if (census_girth) {
        for (int len = *census_girth; len <= census->max_len; ++len)
          rows[std::to_string(len)] = census->count_at(len);
      }
      j["census"] = std::move(rows);
    }
    if (!spectrum.empty()) j["spectrum"] = spectrum;
    j["status"] = status;
    return j.dump(2) + "\n";
  }
};

}  // namespace cospec
