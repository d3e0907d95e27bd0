#include "skewzf/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace skewzf {

std::string to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::pass: return "pass";
    case InstanceStatus::fail: return "fail";
    case InstanceStatus::finding: return "finding";
  }
  return "unknown";
}

void VerdictReport::add(std::string graph6, std::string expected, std::string actual, bool ok) {
  add({std::move(graph6), std::move(expected), std::move(actual), ok ? InstanceStatus::pass : InstanceStatus::fail});
}

void VerdictReport::merge(const VerdictReport& other) {
  instances_.insert(instances_.end(), other.instances_.begin(), other.instances_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

std::vector<InstanceRecord> VerdictReport::failures() const {
  std::vector<InstanceRecord> out;
  std::copy_if(instances_.begin(), instances_.end(), std::back_inserter(out),
               [](const InstanceRecord& r) { return r.status == InstanceStatus::fail; });
  return out;
}

std::vector<InstanceRecord> VerdictReport::findings() const {
  std::vector<InstanceRecord> out;
  std::copy_if(instances_.begin(), instances_.end(), std::back_inserter(out),
               [](const InstanceRecord& r) { return r.status == InstanceStatus::finding; });
  return out;
}

bool VerdictReport::passed() const {
  return std::none_of(instances_.begin(), instances_.end(),
                      [](const InstanceRecord& r) { return r.status == InstanceStatus::fail; });
}

std::string VerdictReport::to_text() const {
  const auto failed = failures();
  const auto found = findings();
  std::ostringstream out;
  out << suite_ << ": " << (failed.empty() ? "PASS" : "FAIL") << " (" << checked() << " checked, " << failed.size()
      << " failed, " << found.size() << " findings)\n";
  for (const auto& n : notes_) out << "  note: " << n << '\n';
  for (const auto& r : instances_) {
    if (r.status == InstanceStatus::pass) continue;
    out << "  " << to_string(r.status) << ": " << r.graph6 << " expected " << r.expected << ", got " << r.actual << '\n';
  }
  return out.str();
}

std::string VerdictReport::to_json_lines() const {
  std::string out;
  for (const auto& r : instances_) {
    const nlohmann::ordered_json line = {{"suite", suite_},
                                         {"graph6", r.graph6},
                                         {"expected", r.expected},
                                         {"actual", r.actual},
                                         {"status", to_string(r.status)}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace skewzf
