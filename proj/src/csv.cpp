#include "polysem/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polysem {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

constexpr const char* kTraceHeader = "step,t,row,l1,l2sq,l4p4,m_prime,loss";

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw std::runtime_error("bad float in csv: " + s);
  return v;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

void write_metadata(std::ofstream& out, const MetadataList& metadata) {
  for (const auto& [key, value] : metadata) {
    out << "# " << key << " = " << value << "\n";
  }
}

// Returns true if the line was a metadata comment and was consumed.
bool consume_metadata_line(const std::string& line, MetadataList& metadata) {
  if (line.empty() || line[0] != '#') return false;
  const auto eq = line.find('=');
  if (eq != std::string::npos) {
    metadata.emplace_back(trim(line.substr(1, eq - 1)), trim(line.substr(eq + 1)));
  }
  return true;
}

}  // namespace

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void write_trace_csv(const TrainingTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  write_metadata(out, trace.metadata);
  out << kTraceHeader << "\n";
  for (const TraceRecord& r : trace.records) {
    out << r.step << ',' << format_g17(r.t) << ',' << r.row << ',' << format_g17(r.l1) << ','
        << format_g17(r.l2sq) << ',' << format_g17(r.l4p4) << ',' << r.m_prime << ','
        << format_g17(r.loss) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

TrainingTrace read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  TrainingTrace trace;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (consume_metadata_line(line, trace.metadata)) continue;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kTraceHeader) throw std::runtime_error("unexpected trace header: " + line);
      header_seen = true;
      continue;
    }
    const auto fields = split_commas(line);
    if (fields.size() != 8) throw std::runtime_error("bad trace row: " + line);
    TraceRecord r;
    r.step = std::strtoll(fields[0].c_str(), nullptr, 10);
    r.t = parse_double(fields[1]);
    r.row = static_cast<std::int32_t>(std::strtol(fields[2].c_str(), nullptr, 10));
    r.l1 = parse_double(fields[3]);
    r.l2sq = parse_double(fields[4]);
    r.l4p4 = parse_double(fields[5]);
    r.m_prime = static_cast<std::int32_t>(std::strtol(fields[6].c_str(), nullptr, 10));
    r.loss = parse_double(fields[7]);
    trace.records.push_back(r);
  }
  return trace;
}

void write_matrix_csv(const WeightMatrix& W, const std::filesystem::path& path,
                      const MetadataList& metadata) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  write_metadata(out, metadata);
  out << "# rows = " << W.rows() << "\n";
  out << "# cols = " << W.cols() << "\n";
  for (std::size_t i = 0; i < W.rows(); ++i) {
    for (std::size_t k = 0; k < W.cols(); ++k) {
      if (k) out << ',';
      out << format_g17(W(i, k));
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

WeightMatrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  MetadataList metadata;
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (consume_metadata_line(line, metadata)) continue;
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_double(f));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return {};
  WeightMatrix W(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != W.cols()) throw std::runtime_error("ragged matrix csv");
    for (std::size_t k = 0; k < W.cols(); ++k) W(i, k) = rows[i][k];
  }
  return W;
}

}  // namespace polysem
