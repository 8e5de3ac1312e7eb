#include "ostrings/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ostrings::comb {

unsigned Partition::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(parts[i]);
  }
  return out;
}

unsigned Overpartition::n() const {
  unsigned total = 0;
  for (const auto& p : parts) total += p.size;
  return total;
}

std::string Overpartition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(parts[i].size);
    if (parts[i].overlined) out += "~";
  }
  return out;
}

PartitionStream::PartitionStream(unsigned n) : n_(n) {}

bool PartitionStream::next(Partition& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    cur_.clear();
    if (n_ > 0) cur_.push_back(n_);
    out.parts = cur_;
    return true;
  }
  // reverse lexicographic successor: shrink the rightmost part above 1 and
  // refill the freed amount greedily
  long i = static_cast<long>(cur_.size()) - 1;
  while (i >= 0 && cur_[i] == 1) --i;
  if (i < 0) {
    done_ = true;
    return false;
  }
  unsigned rem = static_cast<unsigned>(cur_.size() - 1 - i) + 1;
  cur_.resize(i + 1);
  cur_[i] -= 1;
  const unsigned cap = cur_[i];
  while (rem > cap) {
    cur_.push_back(cap);
    rem -= cap;
  }
  cur_.push_back(rem);
  out.parts = cur_;
  return true;
}

std::vector<Partition> enumerate_partitions(unsigned n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Overpartition> enumerate_overpartitions(unsigned n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&](const Overpartition& o) { out.push_back(o); });
  return out;
}

std::vector<StringOccurrence> find_m_strings(const Partition& p, long m) {
  if (m < 1) throw std::invalid_argument("m-string modulus must be positive");
  std::vector<StringOccurrence> out;
  if (p.parts.empty()) return out;
  std::vector<bool> present(p.parts.front() + 1, false);
  for (unsigned s : p.parts) present[s] = true;
  const long max_size = static_cast<long>(p.parts.front());
  for (long j = 1; m * (2 * j - 1) <= max_size; ++j) {
    for (long shift = 0; shift <= j; ++shift) {
      if (m * (2 * j - 1 + shift) > max_size) break;
      bool ok = true;
      for (long t = 0; t < j && ok; ++t)
        ok = present[static_cast<std::size_t>(m * (2 * t + 1 + shift))];
      if (!ok) continue;
      StringOccurrence occ;
      occ.kind = StringKind::m_string;
      occ.m = m;
      occ.j = j;
      occ.shift = shift;
      occ.weight = (shift == 0 || shift == j) ? 1 : 2;
      out.push_back(occ);
    }
  }
  return out;
}

long m_string_count(unsigned n, long m) {
  long total = 0;
  for_each_partition(n, [&](const Partition& p) {
    for (const auto& occ : find_m_strings(p, m)) total += occ.weight;
  });
  return total;
}

long m_string_count_overpartitions(unsigned n, long m) {
  long total = 0;
  for_each_overpartition(n, [&](const Overpartition& o) {
    Partition plain;
    for (const auto& part : o.parts)
      if (!part.overlined) plain.parts.push_back(part.size);
    for (const auto& occ : find_m_strings(plain, m)) total += occ.weight;
  });
  return total;
}

Interp parse_interp(std::string_view id) {
  if (id == "literal") return Interp::literal;
  if (id == "non-overlined") return Interp::non_overlined;
  if (id == "inclusion-exclusion") return Interp::inclusion_exclusion;
  throw std::invalid_argument("unknown interpretation id: " + std::string(id));
}

std::string interp_name(Interp interp) {
  switch (interp) {
    case Interp::literal: return "literal";
    case Interp::non_overlined: return "non-overlined";
    case Interp::inclusion_exclusion: return "inclusion-exclusion";
  }
  throw std::invalid_argument("bad interpretation enum");
}

std::vector<Interp> all_interps() {
  return {Interp::literal, Interp::non_overlined,
          Interp::inclusion_exclusion};
}

namespace {

std::map<unsigned, int> visible_multiset(const Overpartition& o,
                                         Interp interp) {
  std::map<unsigned, int> mult;
  for (const auto& part : o.parts) {
    if (interp != Interp::literal && part.overlined) continue;
    ++mult[part.size];
  }
  return mult;
}

int mult_of(const std::map<unsigned, int>& mult, long size) {
  if (size < 1) return 0;
  auto it = mult.find(static_cast<unsigned>(size));
  return it == mult.end() ? 0 : it->second;
}

// Weight of a single (parity, ell) condition set against a visible
// multiset. Boolean readings require: every run size present, the excluded
// size X at most as often as the run itself forces, the blocking size Y
// absent. The inclusion_exclusion reading instead expands the two clauses
// of condition (2) over marked forbidden parts, so a configuration can
// contribute -1; when X != Y the expansion collapses to the boolean test.
long condition_weight(const std::map<unsigned, int>& mult, long k, long ell,
                      bool odd, Interp interp) {
  const long run_end = odd ? (2 * k + 2 * ell - 3) : (2 * k + 2 * ell - 2);
  for (long s = 2 * k - 1; s <= run_end; ++s)
    if (mult_of(mult, s) < 1) return 0;
  const long excluded = odd ? (2 * ell * ell - ell) : (2 * ell * ell + ell);
  const long blocking = odd ? (4 * ell + 2 * k - 2) : (4 * ell + 2 * k);
  const bool excluded_in_run = (excluded >= 2 * k - 1 && excluded <= run_end);
  const int forced = excluded_in_run ? 1 : 0;
  const int ax = mult_of(mult, excluded);
  const int ay = mult_of(mult, blocking);
  if (interp != Interp::inclusion_exclusion) {
    if (ax > forced) return 0;
    if (ay > 0) return 0;
    return 1;
  }
  long total = 0;
  for (int u = 0; u <= 1; ++u)
    for (int v = 0; v <= 1; ++v) {
      const int need_x = forced + u + ((excluded == blocking) ? v : 0);
      const bool ok_x = ax >= need_x;
      const bool ok_y = (excluded == blocking) ? true : (ay >= v);
      if (ok_x && ok_y) total += ((u + v) % 2 == 0) ? 1 : -1;
    }
  return total;
}

std::vector<StringOccurrence> find_strings(const Overpartition& o, long k,
                                           Interp interp, bool odd) {
  if (k < 1) throw std::invalid_argument("string start index k must be >= 1");
  if (interp == Interp::inclusion_exclusion)
    throw std::invalid_argument(
        "the inclusion-exclusion reading is signed; use the weight API");
  std::vector<StringOccurrence> out;
  const auto mult = visible_multiset(o, interp);
  if (mult.empty()) return out;
  const long max_size = static_cast<long>(mult.rbegin()->first);
  for (long ell = 1;; ++ell) {
    const long run_end = odd ? (2 * k + 2 * ell - 3) : (2 * k + 2 * ell - 2);
    if (run_end > max_size) break;
    bool run_ok = true;
    for (long s = 2 * k - 1; s <= run_end; ++s)
      if (mult_of(mult, s) < 1) {
        run_ok = false;
        break;
      }
    if (!run_ok) break;  // a longer run needs the same missing size
    if (condition_weight(mult, k, ell, odd, interp) != 1) continue;
    StringOccurrence occ;
    occ.kind = odd ? StringKind::odd : StringKind::even;
    occ.k = k;
    occ.ell = ell;
    occ.weight = 1;
    out.push_back(occ);
  }
  return out;
}

}  // namespace

long string_parity_weight(const Overpartition& o, long k, bool odd,
                          Interp interp) {
  if (k < 1) throw std::invalid_argument("string start index k must be >= 1");
  const auto mult = visible_multiset(o, interp);
  if (mult.empty()) return 0;
  const long max_size = static_cast<long>(mult.rbegin()->first);
  long total = 0;
  for (long ell = 1;; ++ell) {
    const long run_end = odd ? (2 * k + 2 * ell - 3) : (2 * k + 2 * ell - 2);
    if (run_end > max_size) break;
    bool run_ok = true;
    for (long s = 2 * k - 1; s <= run_end; ++s)
      if (mult_of(mult, s) < 1) {
        run_ok = false;
        break;
      }
    if (!run_ok) break;  // a longer run needs the same missing size
    total += condition_weight(mult, k, ell, odd, interp);
  }
  return total;
}

std::vector<StringOccurrence> find_odd_strings(const Overpartition& o, long k,
                                               Interp interp) {
  return find_strings(o, k, interp, true);
}

std::vector<StringOccurrence> find_even_strings(const Overpartition& o, long k,
                                                Interp interp) {
  return find_strings(o, k, interp, false);
}

long string_diff_count(unsigned n, long k, Interp interp,
                            CountMode mode) {
  long total = 0;
  for_each_overpartition(n, [&](const Overpartition& o) {
    const long odd = string_parity_weight(o, k, true, interp);
    const long even = string_parity_weight(o, k, false, interp);
    if (mode == CountMode::occurrences) {
      total += odd - even;
    } else {
      total += (odd > 0 ? 1 : 0) - (even > 0 ? 1 : 0);
    }
  });
  return total;
}

AgreementReport string_diff_agreement(long k, unsigned n_max, Interp interp,
                                      CountMode mode,
                                      const qseries::TruncatedSeries& series) {
  if (series.order() < n_max)
    throw qseries::OrderMismatchError("series order below requested n_max");
  AgreementReport report{k, interp, mode, -1, -1, 0, 0};
  for (unsigned n = 0; n <= n_max; ++n) {
    const long oracle = string_diff_count(n, k, interp, mode);
    if (series[n] != static_cast<long>(oracle)) {
      report.first_mismatch_n = static_cast<long>(n);
      report.oracle_value = oracle;
      report.series_value = series[n];
      return report;
    }
    report.agree_up_to = static_cast<long>(n);
  }
  return report;
}

}  // namespace ostrings::comb
