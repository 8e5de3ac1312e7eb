#pragma once

#include <string>
#include <vector>

#include "ostrings/asymptotics.hpp"
#include "ostrings/circle.hpp"
#include "ostrings/combinatorics.hpp"
#include "ostrings/series.hpp"

namespace ostrings::io {

/// Big values (series coefficients, exact counts) are always rendered as
/// decimal strings; floats carry 20 significant digits. Output is
/// byte-deterministic for a fixed request.

std::string coeff_table_csv(const qseries::TruncatedSeries& s,
                            std::size_t n_max);
std::string coeff_table_json(const std::string& series_id, long parameter,
                             const qseries::TruncatedSeries& s,
                             std::size_t n_max);

std::string asym_rows_csv(const std::vector<asym::AsymptoticReport>& rows);
std::string asym_rows_jsonl(const std::vector<asym::AsymptoticReport>& rows);

std::string contour_report_json(const circle::ContourReport& report);

std::string kind_name(asym::ReportKind kind);
std::string family_name(circle::Family fam);

/// One oracle record: {"stat":...,"n":...,...,"count":"..."} on a single line.
std::string oracle_count_record(const std::string& stat, unsigned n,
                                long parameter, const std::string& count);
std::string oracle_diff_record(unsigned n, long k, const std::string& interp,
                               const std::string& mode, long oracle,
                               const BigInt& series, bool agree);
std::string oracle_check_record(const std::string& stat, unsigned n,
                                long parameter, long oracle,
                                const BigInt& series, bool agree);

}  // namespace ostrings::io
