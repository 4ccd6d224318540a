#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "motif/count.hpp"
#include "motif/nullmodel.hpp"

namespace motif {

/// Deterministic facts for the report footer. Timing and cache diagnostics
/// deliberately stay out so identical runs produce byte-identical reports.
struct ReportSummary {
  std::uint64_t n = 0;
  std::uint64_t m_directed = 0;
  std::uint64_t m_unordered = 0;
  std::uint64_t bases = 0;
  std::uint64_t total_subgraphs = 0;
  int workers = 1;
  std::uint32_t replicas = 0;
  std::optional<bool> oracle_match;
};

/// Fixed 6-decimal rendering with '.' separator.
std::string format_stat(double v);

/// Rows sorted by motif id; stats columns appear when `ens` is present.
void write_tsv(std::ostream& out, const Histogram& hist,
               const EnsembleStats* ens, const ReportSummary& summary);

void write_json(std::ostream& out, const Histogram& hist,
                const EnsembleStats* ens, const ReportSummary& summary);

void write_census_tsv(std::ostream& out, int k, std::uint64_t classes);
void write_census_json(std::ostream& out, int k, std::uint64_t classes);

}  // namespace motif
