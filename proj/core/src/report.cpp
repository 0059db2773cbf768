#include "fbeta/report.hpp"

#include <sstream>

namespace fbeta {

void Report::add(std::string id, bool pass, std::string detail) {
  lines.push_back({std::move(id), pass, std::move(detail)});
}

bool Report::all_pass() const {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

void Report::merge(const Report& o, const std::string& prefix) {
  for (const auto& l : o.lines) {
    if (prefix.empty())
      lines.push_back(l);
    else
      lines.push_back({prefix + "." + l.id, l.pass, l.detail});
  }
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  if (!r.title.empty()) os << r.title << "\n";
  size_t failed = 0;
  for (const auto& l : r.lines) {
    os << "  [" << (l.pass ? "ok" : "FAIL") << "] " << l.id;
    if (!l.detail.empty()) os << ": " << l.detail;
    os << "\n";
    if (!l.pass) ++failed;
  }
  if (failed == 0)
    os << "  all " << r.lines.size() << " checks passed\n";
  else
    os << "  " << failed << " of " << r.lines.size() << " checks FAILED\n";
  return os.str();
}

std::string render_lines(const Report& r) {
  std::ostringstream os;
  for (const auto& l : r.lines) {
    os << "CHECK " << l.id << " " << (l.pass ? "PASS" : "FAIL");
    if (!l.detail.empty()) os << " " << l.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace fbeta
