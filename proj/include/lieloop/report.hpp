#pragma once

// Defect bookkeeping shared by all verifiers, and the report emitted by the CLI.

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace lieloop {

struct DefectStat {
  double max = 0.0;
  double sum = 0.0;
  int count = 0;

  void add(double d) {
    // NaN must not hide behind max().
    if (!(d <= max)) max = (d == d) ? d : std::numeric_limits<double>::infinity();
    sum += d;
    ++count;
  }
  void merge(const DefectStat& o) {
    if (o.max > max || o.max != o.max) max = o.max;
    sum += o.sum;
    count += o.count;
  }
  double mean() const { return count ? sum / count : 0.0; }
};

/// One measured identity, before a tolerance is attached.
struct Measurement {
  std::string id;
  std::string anchor;  // the formula being checked
  DefectStat stat;
  std::uint64_t seed = 0;
};

struct CheckRecord {
  std::string id;
  std::string anchor;
  double max_defect = 0.0;
  double mean_defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int samples = 0;
  std::uint64_t seed = 0;
};

CheckRecord make_record(const Measurement& m, double tolerance);

/// Record for a quantity that must exceed a threshold (negative controls).
CheckRecord make_lower_bound_record(const Measurement& m, double threshold);

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  void add(CheckRecord r) { records_.push_back(std::move(r)); }
  void add(const Measurement& m, double tolerance) { add(make_record(m, tolerance)); }
  void add_all(const std::vector<Measurement>& ms, double tolerance);
  void append(const VerificationReport& other);
  void set_env(const std::string& key, const std::string& value) { env_[key] = value; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  const std::string& suite() const { return suite_; }
  bool all_pass() const;
  std::vector<CheckRecord> sorted_records() const;
  const std::vector<CheckRecord>& records() const { return records_; }
  const std::map<std::string, std::string>& env() const { return env_; }
  const std::vector<std::string>& notes() const { return notes_; }

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
  std::map<std::string, std::string> env_;
  std::vector<std::string> notes_;
};

}  // namespace lieloop
