#ifndef SKT_REPORT_HPP
#define SKT_REPORT_HPP

#include <string>
#include <vector>

namespace skt {

enum class ReportFormat { text, records };

/// One check line of a report. `status` is "pass", "fail" or "info";
/// only "fail" affects the overall verdict.
struct ReportLine {
  std::string section;
  std::string name;
  std::string status;
  bool has_value = false;
  double value = 0.0;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<ReportLine> lines;

  void add(std::string section, std::string name, std::string status);
  void add(std::string section, std::string name, std::string status,
           double value, std::string detail = "");
  void info(std::string section, std::string name, double value,
            std::string detail = "");
  void check(std::string section, std::string name, bool ok, double value,
             std::string detail = "");
  bool passed() const;
};

/// Deterministic rendering; identical reports produce identical bytes.
std::string emit_report(const Report& r, ReportFormat format);

}  // namespace skt

#endif
