#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ostrings/bigint.hpp"
#include "ostrings/series.hpp"

namespace ostrings::comb {

/// Ordinary partition: weakly decreasing positive parts.
struct Partition {
  std::vector<unsigned> parts;
  unsigned n() const;
  std::string str() const;
};

struct OverPart {
  unsigned size;
  bool overlined;
  bool operator==(const OverPart&) const = default;
};

/// Overpartition in canonical order: sizes non-increasing, the (at most one)
/// overlined copy of each distinct size listed first among equal sizes.
struct Overpartition {
  std::vector<OverPart> parts;
  unsigned n() const;
  std::string str() const;
  bool operator==(const Overpartition&) const = default;
};

enum class StringKind { odd, even, m_string };

/// A detected string. Odd/even strings carry (k, ell) and weight 1;
/// m-strings carry (m, j, shift) with weight 1 at boundary shifts 0 and j,
/// weight 2 in the interior.
struct StringOccurrence {
  StringKind kind;
  long k = 0;
  long ell = 0;
  long m = 0;
  long j = 0;
  long shift = 0;
  int weight = 1;
  bool operator==(const StringOccurrence&) const = default;
};

/// Streams the partitions of n in reverse lexicographic order, n itself
/// first and the all-ones partition last. n = 0 yields one empty partition.
class PartitionStream {
 public:
  explicit PartitionStream(unsigned n);
  bool next(Partition& out);

 private:
  unsigned n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<unsigned> cur_;
};

template <typename Fn>
void for_each_partition(unsigned n, Fn&& fn) {
  PartitionStream stream(n);
  Partition p;
  while (stream.next(p)) fn(p);
}

/// Overline patterns run through a binary counter over the distinct sizes,
/// bit 0 = largest size, so each partition's 2^(#distinct) variants come out
/// in a fixed order.
template <typename Fn>
void for_each_overpartition(unsigned n, Fn&& fn) {
  for_each_partition(n, [&](const Partition& p) {
    std::vector<unsigned> distinct;
    for (unsigned s : p.parts)
      if (distinct.empty() || distinct.back() != s) distinct.push_back(s);
    const unsigned r = static_cast<unsigned>(distinct.size());
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
      Overpartition o;
      o.parts.reserve(p.parts.size());
      unsigned bit = 0;
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const bool first_of_size = (i == 0 || p.parts[i - 1] != p.parts[i]);
        if (first_of_size && i > 0) ++bit;
        o.parts.push_back({p.parts[i], first_of_size && ((mask >> bit) & 1u)});
      }
      fn(o);
    }
  });
}

std::vector<Partition> enumerate_partitions(unsigned n);
std::vector<Overpartition> enumerate_overpartitions(unsigned n);

/// All m-strings of p: pairs (j, shift) with 0 <= shift <= j such that every
/// part size m(1+shift), m(3+shift), ..., m(2j-1+shift) occurs in p.
std::vector<StringOccurrence> find_m_strings(const Partition& p, long m);

/// Weighted m-string count over the partitions of n.
long m_string_count(unsigned n, long m);

/// Weighted m-string count over the overpartitions of n, detecting strings
/// on the non-overlined parts only (the reading that matches the
/// overpartition generating function at small n).
long m_string_count_overpartitions(unsigned n, long m);

/// Readings of the odd/even string side conditions. `literal` tests part
/// presence and multiplicity over all parts, overlined or not;
/// `non_overlined` restricts every condition to the non-overlined parts.
/// `inclusion_exclusion` also works on non-overlined parts but applies the
/// two exclusion clauses of condition (2) independently, by
/// inclusion-exclusion over marked forbidden parts: when the excluded size
/// 2l^2 -+ l and the blocking size coincide, an overpartition holding one
/// such part contributes weight -1 instead of merely failing the test.
enum class Interp { literal, non_overlined, inclusion_exclusion };

Interp parse_interp(std::string_view id);  // throws on unknown ids
std::string interp_name(Interp);
std::vector<Interp> all_interps();

/// Occurrences counts every admissible (k, ell) pair; bearers counts each
/// overpartition at most once per k and parity.
enum class CountMode { occurrences, bearers };

/// Detected strings under a boolean reading (literal or non_overlined); the
/// signed inclusion_exclusion reading has no per-string occurrence list and
/// is rejected here.
std::vector<StringOccurrence> find_odd_strings(const Overpartition& o, long k,
                                               Interp interp);
std::vector<StringOccurrence> find_even_strings(const Overpartition& o, long k,
                                                Interp interp);

/// Net string weight of one overpartition at start 2k-1 and one parity:
/// the occurrence count for the boolean readings, the signed clause-marking
/// sum for inclusion_exclusion.
long string_parity_weight(const Overpartition& o, long k, bool odd,
                          Interp interp);

/// Sum over the overpartitions of n of (#odd - #even) strings at start 2k-1
/// under the chosen reading and counting mode.
long string_diff_count(unsigned n, long k, Interp interp,
                            CountMode mode = CountMode::occurrences);

/// Agreement diagnostic of the enumeration against the series coefficients.
struct AgreementReport {
  long k;
  Interp interp;
  CountMode mode;
  long agree_up_to;       // largest n0 with agreement for all n <= n0
  long first_mismatch_n;  // -1 when none up to n_max
  long oracle_value = 0;
  BigInt series_value = 0;
};

AgreementReport string_diff_agreement(long k, unsigned n_max, Interp interp,
                                      CountMode mode,
                                      const qseries::TruncatedSeries& series);

}  // namespace ostrings::comb
