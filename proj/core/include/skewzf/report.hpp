#pragma once

#include <string>
#include <vector>

namespace skewzf {

enum class InstanceStatus {
  pass,
  fail,
  /// A disagreement explained by the choice of prime field, not a failure.
  finding,
};

std::string to_string(InstanceStatus s);

struct InstanceRecord {
  std::string graph6;
  std::string expected;
  std::string actual;
  InstanceStatus status = InstanceStatus::pass;
};

/// Outcome of one verification suite. passed() holds iff no instance failed.
class VerdictReport {
 public:
  explicit VerdictReport(std::string suite) : suite_(std::move(suite)) {}

  void add(InstanceRecord record) { instances_.push_back(std::move(record)); }
  void add(std::string graph6, std::string expected, std::string actual, bool ok);
  void note(std::string line) { notes_.push_back(std::move(line)); }
  /// Appends another report's instances and notes, keeping their order.
  void merge(const VerdictReport& other);

  const std::string& suite() const { return suite_; }
  const std::vector<InstanceRecord>& instances() const { return instances_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t checked() const { return instances_.size(); }
  std::vector<InstanceRecord> failures() const;
  std::vector<InstanceRecord> findings() const;
  bool passed() const;

  /// Summary line, notes, then one line per failure or finding.
  std::string to_text() const;
  /// One JSON object per instance with keys suite, graph6, expected, actual, status.
  std::string to_json_lines() const;

 private:
  std::string suite_;
  std::vector<InstanceRecord> instances_;
  std::vector<std::string> notes_;
};

}  // namespace skewzf
