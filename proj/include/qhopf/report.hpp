#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qhopf {

/// Outcome of one exact check. The witness is empty iff the check holds.
struct Verdict {
  bool holds = true;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string witness) { return {false, std::move(witness)}; }
  explicit operator bool() const { return holds; }
};

struct CheckEntry {
  std::string name;
  Verdict verdict;
};

/// Named verdicts for a family of axioms.
class CheckReport {
 public:
  void add(std::string name, Verdict v) { entries_.push_back({std::move(name), std::move(v)}); }
  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& e : other.entries_) add(prefix + e.name, e.verdict);
  }

  const std::vector<CheckEntry>& entries() const { return entries_; }

  bool all_pass() const {
    for (const auto& e : entries_) {
      if (!e.verdict.holds) return false;
    }
    return true;
  }

  /// Verdict for the named entry; throws std::out_of_range if absent.
  const Verdict& operator[](const std::string& name) const {
    for (const auto& e : entries_) {
      if (e.name == name) return e.verdict;
    }
    throw std::out_of_range("no check named " + name);
  }

  /// "name: witness" for each failing entry, joined by "; ".
  std::string failures() const {
    std::string out;
    for (const auto& e : entries_) {
      if (e.verdict.holds) continue;
      if (!out.empty()) out += "; ";
      out += e.name + ": " + e.verdict.witness;
    }
    return out;
  }

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace qhopf
