#include "ostrings/reports.hpp"

#include <sstream>

namespace ostrings::io {

namespace {

std::string complex_json(const Complex& z) {
  return "{\"re\": \"" + z.re.str() + "\", \"im\": \"" + z.im.str() + "\"}";
}

}  // namespace

std::string coeff_table_csv(const qseries::TruncatedSeries& s,
                            std::size_t n_max) {
  std::ostringstream out;
  out << "n,coefficient\n";
  for (std::size_t n = 0; n <= n_max; ++n)
    out << n << "," << to_decimal(s[n]) << "\n";
  return out.str();
}

std::string coeff_table_json(const std::string& series_id, long parameter,
                             const qseries::TruncatedSeries& s,
                             std::size_t n_max) {
  std::ostringstream out;
  out << "{\"series\": \"" << series_id << "\"";
  if (parameter > 0) out << ", \"parameter\": " << parameter;
  out << ", \"n_max\": " << n_max << ", \"coefficients\": [";
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n) out << ", ";
    out << "\"" << to_decimal(s[n]) << "\"";
  }
  out << "]}\n";
  return out.str();
}

std::string kind_name(asym::ReportKind kind) {
  switch (kind) {
    case asym::ReportKind::AB: return "AB";
    case asym::ReportKind::C: return "C";
    case asym::ReportKind::ospt: return "ospt";
  }
  return "?";
}

std::string family_name(circle::Family fam) {
  return fam == circle::Family::string_diff ? "F" : "H";
}

std::string asym_rows_csv(const std::vector<asym::AsymptoticReport>& rows) {
  std::ostringstream out;
  out << "kind,parameter,N,exact,main_term,relative_error\n";
  for (const auto& r : rows)
    out << kind_name(r.kind) << "," << r.parameter << "," << r.N << ","
        << to_decimal(r.exact) << "," << r.main_term.str() << ","
        << r.relative_error.str() << "\n";
  return out.str();
}

std::string asym_rows_jsonl(const std::vector<asym::AsymptoticReport>& rows) {
  std::ostringstream out;
  for (const auto& r : rows)
    out << "{\"kind\": \"" << kind_name(r.kind)
        << "\", \"parameter\": " << r.parameter << ", \"N\": " << r.N
        << ", \"exact\": \"" << to_decimal(r.exact) << "\", \"main_term\": \""
        << r.main_term.str() << "\", \"relative_error\": \""
        << r.relative_error.str() << "\"}\n";
  return out.str();
}

std::string contour_report_json(const circle::ContourReport& report) {
  std::ostringstream out;
  out << "{\"kind\": \"" << family_name(report.fam)
      << "\", \"parameter\": " << report.parameter << ", \"N\": " << report.N
      << ", \"n_points\": " << report.n_points
      << ", \"precision_bits\": " << report.precision_bits
      << ", \"I_major\": " << complex_json(report.split.major)
      << ", \"I_minor\": " << complex_json(report.split.minor)
      << ", \"total\": " << complex_json(report.split.total)
      << ", \"rounded\": \"" << to_decimal(report.rounded)
      << "\", \"exact\": \"" << to_decimal(report.exact) << "\", \"match\": "
      << (report.match ? "true" : "false") << "}\n";
  return out.str();
}

std::string oracle_count_record(const std::string& stat, unsigned n,
                                long parameter, const std::string& count) {
  std::ostringstream out;
  out << "{\"stat\": \"" << stat << "\", \"n\": " << n
      << ", \"m\": " << parameter << ", \"count\": \"" << count << "\"}";
  return out.str();
}

std::string oracle_check_record(const std::string& stat, unsigned n,
                                long parameter, long oracle,
                                const BigInt& series, bool agree) {
  std::ostringstream out;
  out << "{\"stat\": \"" << stat << "\", \"n\": " << n
      << ", \"m\": " << parameter << ", \"oracle\": \"" << oracle
      << "\", \"series\": \"" << to_decimal(series) << "\", \"agree\": "
      << (agree ? "true" : "false") << "}";
  return out.str();
}

std::string oracle_diff_record(unsigned n, long k, const std::string& interp,
                               const std::string& mode, long oracle,
                               const BigInt& series, bool agree) {
  std::ostringstream out;
  out << "{\"stat\": \"AB\", \"n\": " << n << ", \"k\": " << k
      << ", \"interp\": \"" << interp << "\", \"mode\": \"" << mode
      << "\", \"oracle\": \"" << oracle << "\", \"series\": \""
      << to_decimal(series) << "\", \"agree\": " << (agree ? "true" : "false")
      << "}";
  return out.str();
}

}  // namespace ostrings::io
