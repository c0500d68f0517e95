#pragma once

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lgv {

enum class Status { pass, fail, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

using Json = nlohmann::ordered_json;

/// One check outcome. FAIL entries carry a witness; `details` holds measured
/// quantities (dimensions, counts) in insertion order.
struct ReportEntry {
  ReportEntry() = default;
  ReportEntry(std::string check_name, Json parameters, Status st = Status::pass, std::string witness_text = {})
      : check(std::move(check_name)), params(std::move(parameters)), status(st), witness(std::move(witness_text)) {}

  std::string check;
  Json params = Json::object();
  Status status = Status::pass;
  std::string witness;
  Json details = Json::object();
  std::int64_t millis = 0;

  bool passed() const noexcept { return status == Status::pass; }

  Json to_json() const {
    Json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = lgv::to_string(status);
    j["witness"] = witness;
    j["details"] = details;
    j["millis"] = millis;
    return j;
  }
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  std::uint64_t seed = 0;
  std::string field;

  bool has_failure() const {
    for (const auto& e : entries)
      if (e.status == Status::fail) return true;
    return false;
  }
  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.status == s;
    return n;
  }

  Json to_json() const {
    Json j;
    j["field"] = field;
    j["seed"] = seed;
    j["entries"] = Json::array();
    for (const auto& e : entries) j["entries"].push_back(e.to_json());
    j["summary"] = {{"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"inconclusive", count(Status::inconclusive)}};
    return j;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "field " << field << ", seed " << seed << "\n";
    for (const auto& e : entries) {
      out << to_string(e.status) << "  " << e.check << " " << e.params.dump();
      if (!e.details.empty()) out << " " << e.details.dump();
      if (!e.witness.empty()) out << "  witness: " << e.witness;
      out << "  (" << e.millis << " ms)\n";
    }
    out << count(Status::pass) << " pass, " << count(Status::fail) << " fail, " << count(Status::inconclusive)
        << " inconclusive\n";
    return out.str();
  }
};

/// Wall-clock stopwatch for entry timings.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace lgv
