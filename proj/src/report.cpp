#include "motif/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace motif {

std::string format_stat(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

namespace {

const MotifEnsemble* find_ensemble(const EnsembleStats* ens, MotifId id) {
  if (!ens) return nullptr;
  const auto it = ens->motifs.find(id);
  return it == ens->motifs.end() ? nullptr : &it->second;
}

void write_footer_tsv(std::ostream& out, const ReportSummary& s) {
  out << "# n\t" << s.n << "\n";
  out << "# m_directed\t" << s.m_directed << "\n";
  out << "# m_unordered\t" << s.m_unordered << "\n";
  out << "# bases\t" << s.bases << "\n";
  out << "# total_subgraphs\t" << s.total_subgraphs << "\n";
  out << "# workers\t" << s.workers << "\n";
  if (s.replicas > 0) out << "# replicas\t" << s.replicas << "\n";
  if (s.oracle_match.has_value())
    out << "# oracle\t" << (*s.oracle_match ? "MATCH" : "MISMATCH") << "\n";
}

}  // namespace

// Row set: every motif in the histogram plus, when significance ran, every
// motif seen only in replicas (count 0), kept sorted by id.
std::map<MotifId, std::uint64_t> report_rows(const Histogram& hist,
                                             const EnsembleStats* ens) {
  std::map<MotifId, std::uint64_t> rows(hist.counts.begin(), hist.counts.end());
  if (ens)
    for (const auto& [id, e] : ens->motifs) rows.emplace(id, 0);
  return rows;
}

void write_tsv(std::ostream& out, const Histogram& hist,
               const EnsembleStats* ens, const ReportSummary& summary) {
  out << "#motif_id\tcount";
  if (ens) out << "\tmean\tstd\tz\tp";
  out << "\n";

  for (const auto& [id, count] : report_rows(hist, ens)) {
    out << id.to_string() << "\t" << count;
    if (const MotifEnsemble* e = find_ensemble(ens, id)) {
      out << "\t" << format_stat(e->mean) << "\t" << format_stat(e->stddev)
          << "\t" << (e->z ? format_stat(*e->z) : "NA") << "\t"
          << format_stat(e->p_value);
    } else if (ens) {
      out << "\t" << format_stat(0.0) << "\t" << format_stat(0.0) << "\tNA\t"
          << format_stat(1.0);
    }
    out << "\n";
  }

  write_footer_tsv(out, summary);
}

namespace {

double round6(double v) { return std::stod(format_stat(v)); }

nlohmann::json motif_row(MotifId id, std::uint64_t count, const MotifEnsemble* e) {
  nlohmann::json row;
  row["id"] = id.to_string();
  row["count"] = count;
  if (e) {
    row["mean"] = round6(e->mean);
    row["std"] = round6(e->stddev);
    if (e->z)
      row["z"] = round6(*e->z);
    else
      row["z"] = nullptr;
    row["p"] = round6(e->p_value);
  }
  return row;
}

}  // namespace

void write_json(std::ostream& out, const Histogram& hist,
                const EnsembleStats* ens, const ReportSummary& summary) {
  nlohmann::json doc;
  doc["k"] = hist.k;

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [id, count] : report_rows(hist, ens))
    rows.push_back(motif_row(id, count, find_ensemble(ens, id)));
  doc["motifs"] = std::move(rows);

  nlohmann::json s;
  s["n"] = summary.n;
  s["m_directed"] = summary.m_directed;
  s["m_unordered"] = summary.m_unordered;
  s["bases"] = summary.bases;
  s["total_subgraphs"] = summary.total_subgraphs;
  s["workers"] = summary.workers;
  if (summary.replicas > 0) s["replicas"] = summary.replicas;
  if (summary.oracle_match.has_value())
    s["oracle"] = *summary.oracle_match ? "MATCH" : "MISMATCH";
  doc["summary"] = std::move(s);

  out << doc.dump(2) << "\n";
}

void write_census_tsv(std::ostream& out, int k, std::uint64_t classes) {
  out << "#k\tconnected_classes\n" << k << "\t" << classes << "\n";
}

void write_census_json(std::ostream& out, int k, std::uint64_t classes) {
  nlohmann::json doc;
  doc["census"]["k"] = k;
  doc["census"]["connected_classes"] = classes;
  out << doc.dump(2) << "\n";
}

}  // namespace motif
