#include "lieloop/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace lieloop {

CheckRecord make_record(const Measurement& m, double tolerance) {
  CheckRecord r;
  r.id = m.id;
  r.anchor = m.anchor;
  r.max_defect = m.stat.max;
  r.mean_defect = m.stat.mean();
  r.tolerance = tolerance;
  r.pass = m.stat.max < tolerance;
  r.samples = m.stat.count;
  r.seed = m.seed;
  return r;
}

CheckRecord make_lower_bound_record(const Measurement& m, double threshold) {
  CheckRecord r = make_record(m, threshold);
  r.pass = m.stat.max > threshold;
  r.anchor += "  [expected > tolerance]";
  return r;
}

void VerificationReport::add_all(const std::vector<Measurement>& ms, double tolerance) {
  for (const auto& m : ms) add(m, tolerance);
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& r : other.records_) records_.push_back(r);
  for (const auto& [k, v] : other.env_) env_[k] = v;
  for (const auto& n : other.notes_) notes_.push_back(n);
}

bool VerificationReport::all_pass() const {
  return std::all_of(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.pass; });
}

std::vector<CheckRecord> VerificationReport::sorted_records() const {
  std::vector<CheckRecord> out = records_;
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite_ << "\n";
  char buf[64];
  for (const auto& r : sorted_records()) {
    std::snprintf(buf, sizeof buf, "  %.3e  tol %.1e  ", r.max_defect, r.tolerance);
    os << r.id << "  " << r.anchor << buf << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  for (const auto& n : notes_) os << "note: " << n << "\n";
  const auto total = records_.size();
  const auto passed = std::count_if(records_.begin(), records_.end(),
                                    [](const CheckRecord& r) { return r.pass; });
  os << passed << "/" << total << " checks passed\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["pass"] = all_pass();
  nlohmann::ordered_json env = nlohmann::ordered_json::object();
  for (const auto& [k, v] : env_) env[k] = v;
  j["environment"] = env;
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const auto& r : sorted_records()) {
    nlohmann::ordered_json rj;
    rj["id"] = r.id;
    rj["anchor"] = r.anchor;
    rj["max_defect"] = r.max_defect;
    rj["mean_defect"] = r.mean_defect;
    rj["tolerance"] = r.tolerance;
    rj["pass"] = r.pass;
    rj["samples"] = r.samples;
    rj["seed"] = r.seed;
    recs.push_back(rj);
  }
  j["records"] = recs;
  j["notes"] = notes_;
  return j.dump(2) + "\n";
}

}  // namespace lieloop
