#pragma once

#include <string>
#include <vector>

namespace fbeta {

// One named pass/fail line of a verification run. Ids are stable machine
// readable slugs; detail carries the witness on failure (and occasionally
// a short summary on success).
struct CheckLine {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckLine> lines;

  void add(std::string id, bool pass, std::string detail = "");
  bool all_pass() const;
  // Append another report's lines, prefixing their ids with "prefix.".
  void merge(const Report& o, const std::string& prefix = "");
};

// Human-readable block: title, one indented line per check, summary line.
std::string render_text(const Report& r);
// Machine-readable: one "CHECK <id> PASS|FAIL[ <detail>]" line per check.
std::string render_lines(const Report& r);

}  // namespace fbeta
