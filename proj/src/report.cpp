#include "skt/report.hpp"

#include <algorithm>
#include <sstream>

#include "skt/model_io.hpp"

namespace skt {

void Report::add(std::string section, std::string name, std::string status) {
  lines.push_back(
      {std::move(section), std::move(name), std::move(status), false, 0.0, ""});
}

void Report::add(std::string section, std::string name, std::string status,
                 double value, std::string detail) {
  lines.push_back({std::move(section), std::move(name), std::move(status), true,
                   value, std::move(detail)});
}

void Report::info(std::string section, std::string name, double value,
                  std::string detail) {
  add(std::move(section), std::move(name), "info", value, std::move(detail));
}

void Report::check(std::string section, std::string name, bool ok, double value,
                   std::string detail) {
  add(std::move(section), std::move(name), ok ? "pass" : "fail", value,
      std::move(detail));
}

bool Report::passed() const {
  return std::none_of(lines.begin(), lines.end(),
                      [](const ReportLine& l) { return l.status == "fail"; });
}

std::string emit_report(const Report& r, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::records) {
    out << "report title=" << r.title << "\n";
    for (const ReportLine& l : r.lines) {
      out << "check section=" << l.section << " name=" << l.name
          << " status=" << l.status;
      if (l.has_value) out << " value=" << format_scalar(l.value);
      if (!l.detail.empty()) out << " detail=" << l.detail;
      out << "\n";
    }
    out << "end checks=" << r.lines.size()
        << " verdict=" << (r.passed() ? "pass" : "fail") << "\n";
    return out.str();
  }

  std::size_t wsec = 7, wname = 4;
  for (const ReportLine& l : r.lines) {
    wsec = std::max(wsec, l.section.size());
    wname = std::max(wname, l.name.size());
  }
  out << "# " << r.title << "\n";
  for (const ReportLine& l : r.lines) {
    out << l.section << std::string(wsec - l.section.size() + 2, ' ') << l.name
        << std::string(wname - l.name.size() + 2, ' ') << l.status;
    if (l.has_value) out << "  " << format_scalar(l.value);
    if (!l.detail.empty()) out << "  " << l.detail;
    out << "\n";
  }
  out << "# verdict: " << (r.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace skt
