#include "symseq/io.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "symseq/error.hpp"

namespace symseq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) {
    throw Error("cannot open file for writing: " + path);
  }
  out << content;
  if (!out.good()) {
    throw Error("failed to write file: " + path);
  }
}

// Splits CSV content into lines, tolerating CRLF and a trailing newline.
std::vector<std::string> split_lines(const std::string& content) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == content.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double parse_double_field(const std::string& field, std::size_t line,
                          std::size_t column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError("expected a number, got \"" + field + "\"", line, column);
  }
  return value;
}

std::int64_t parse_int_field(const std::string& field, std::size_t line,
                             std::size_t column) {
  std::int64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError("expected an integer, got \"" + field + "\"", line,
                     column);
  }
  return value;
}

ordered_json parse_json_file(const std::string& path) {
  const std::string content = read_text_file(path);
  ordered_json doc = ordered_json::parse(content, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError("invalid JSON in " + path);
  }
  return doc;
}

ordered_json bounds_to_json(const RangeBounds& bounds,
                            const std::string& alphabet) {
  ordered_json doc;
  doc["alphabet"] = alphabet;
  doc["num_ranges"] = bounds.num_ranges;
  doc["min"] = bounds.min();
  doc["max"] = bounds.max();
  doc["interval"] = bounds.interval;
  doc["bounds"] = bounds.bounds;
  return doc;
}

LoadedBounds bounds_from_json(const ordered_json& doc, const std::string& path) {
  if (!doc.is_object() || !doc.contains("alphabet") ||
      !doc.contains("num_ranges") || !doc.contains("interval") ||
      !doc.contains("bounds")) {
    throw ParseError("malformed bounds object in " + path);
  }
  LoadedBounds out;
  out.alphabet = doc["alphabet"].get<std::string>();
  out.bounds.num_ranges = doc["num_ranges"].get<int>();
  out.bounds.interval = doc["interval"].get<double>();
  out.bounds.bounds = doc["bounds"].get<std::vector<double>>();
  if (out.bounds.bounds.size() !=
      static_cast<std::size_t>(out.bounds.num_ranges) + 1) {
    throw ParseError("bounds array length does not match num_ranges in " +
                     path);
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) {
    throw Error("failed to format a double");
  }
  return std::string(buffer.data(), ptr);
}

TimeSeriesDataset load_dataset(const std::string& path) {
  const std::vector<std::string> lines = split_lines(read_text_file(path));
  if (lines.empty()) {
    throw ParseError("empty dataset file: " + path);
  }

  TimeSeriesDataset dataset;
  std::vector<std::string> labels;
  bool any_label = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    const std::vector<std::string> fields = split_fields(lines[li]);
    if (fields.size() < 3) {
      throw ParseError("expected id,label,v1,... with at least 3 fields",
                       line_no, fields.size());
    }
    if (fields[0].empty()) {
      throw ParseError("signal id is empty", line_no, 1);
    }
    Signal signal;
    signal.id = fields[0];
    signal.values.reserve(fields.size() - 2);
    for (std::size_t f = 2; f < fields.size(); ++f) {
      signal.values.push_back(parse_double_field(fields[f], line_no, f + 1));
    }
    dataset.signals.push_back(std::move(signal));
    labels.push_back(fields[1]);
    if (!fields[1].empty()) any_label = true;
  }

  if (any_label) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].empty()) {
        throw ParseError("label is empty but other rows are labeled", i + 1,
                         2);
      }
    }
    dataset.labels = std::move(labels);
  }
  return validate_dataset(dataset);
}

void save_dataset(const TimeSeriesDataset& dataset, const std::string& path) {
  validate_dataset(dataset);
  std::string out;
  for (std::size_t i = 0; i < dataset.signals.size(); ++i) {
    const Signal& signal = dataset.signals[i];
    out += signal.id;
    out += ',';
    if (dataset.labeled()) out += dataset.labels[i];
    for (double v : signal.values) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  write_text_file(path, out);
}

void save_sequences(const std::vector<SymbolicSequence>& sequences,
                    const std::string& path) {
  std::string out = "id,sequence\n";
  for (const SymbolicSequence& seq : sequences) {
    out += seq.id;
    out += ',';
    out += seq.chars;
    out += '\n';
  }
  write_text_file(path, out);
}

std::vector<SymbolicSequence> load_sequences(const std::string& path) {
  const std::vector<std::string> lines = split_lines(read_text_file(path));
  if (lines.empty() || lines[0] != "id,sequence") {
    throw ParseError("expected header id,sequence in " + path, 1, 1);
  }
  std::vector<SymbolicSequence> out;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::vector<std::string> fields = split_fields(lines[li]);
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError("expected id,sequence", li + 1, 1);
    }
    out.push_back(SymbolicSequence{fields[0], fields[1]});
  }
  return out;
}

void save_bounds(const RangeBounds& bounds, const Alphabet& alphabet,
                 const std::string& path) {
  write_text_file(path,
                  bounds_to_json(bounds, alphabet.symbols()).dump(2) + "\n");
}

LoadedBounds load_bounds(const std::string& path) {
  return bounds_from_json(parse_json_file(path), path);
}

void save_spectrum(const EmbeddingMatrix& embedding, const RangeBounds& bounds,
                   const Alphabet& alphabet, int ksize,
                   const std::vector<std::size_t>& sequence_lengths,
                   const std::string& csv_path,
                   const std::string& manifest_path) {
  if (sequence_lengths.size() != embedding.ids.size()) {
    throw ValidationError("sequence length count does not match signal count");
  }

  std::string csv = "signal_id,kmer_index,count\n";
  for (std::size_t row = 0; row < embedding.rows.size(); ++row) {
    const KmerSpectrum& spectrum = embedding.rows[row];
    for (std::size_t j = 0; j < spectrum.counts.size(); ++j) {
      if (spectrum.counts[j] == 0) continue;
      csv += embedding.ids[row];
      csv += ',';
      csv += std::to_string(j);
      csv += ',';
      csv += std::to_string(spectrum.counts[j]);
      csv += '\n';
    }
  }
  write_text_file(csv_path, csv);

  ordered_json manifest;
  manifest["alphabet"] = alphabet.symbols();
  manifest["ksize"] = ksize;
  manifest["dim"] = embedding.dim;
  manifest["ids"] = embedding.ids;
  manifest["sequence_lengths"] = sequence_lengths;
  manifest["bounds"] = bounds_to_json(bounds, alphabet.symbols());
  write_text_file(manifest_path, manifest.dump(2) + "\n");
}

LoadedSpectrum load_spectrum(const std::string& csv_path,
                             const std::string& manifest_path) {
  const ordered_json manifest = parse_json_file(manifest_path);
  if (!manifest.is_object() || !manifest.contains("alphabet") ||
      !manifest.contains("ksize") || !manifest.contains("dim") ||
      !manifest.contains("ids") || !manifest.contains("sequence_lengths") ||
      !manifest.contains("bounds")) {
    throw ParseError("malformed spectrum manifest in " + manifest_path);
  }

  LoadedSpectrum out;
  out.alphabet = manifest["alphabet"].get<std::string>();
  out.ksize = manifest["ksize"].get<int>();
  out.sequence_lengths =
      manifest["sequence_lengths"].get<std::vector<std::size_t>>();
  const LoadedBounds loaded =
      bounds_from_json(manifest["bounds"], manifest_path);
  out.bounds = loaded.bounds;

  out.embedding.dim = manifest["dim"].get<std::size_t>();
  out.embedding.ids = manifest["ids"].get<std::vector<std::string>>();
  if (out.sequence_lengths.size() != out.embedding.ids.size()) {
    throw ParseError("sequence_lengths does not match ids in " +
                     manifest_path);
  }

  std::unordered_map<std::string, std::size_t> row_of;
  row_of.reserve(out.embedding.ids.size());
  out.embedding.rows.resize(out.embedding.ids.size());
  for (std::size_t i = 0; i < out.embedding.ids.size(); ++i) {
    row_of[out.embedding.ids[i]] = i;
    out.embedding.rows[i].counts.assign(out.embedding.dim, 0);
    out.embedding.rows[i].k = out.ksize;
    out.embedding.rows[i].sequence_length = out.sequence_lengths[i];
  }

  const std::vector<std::string> lines = split_lines(read_text_file(csv_path));
  if (lines.empty() || lines[0] != "signal_id,kmer_index,count") {
    throw ParseError("expected header signal_id,kmer_index,count in " +
                     csv_path, 1, 1);
  }
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    const std::vector<std::string> fields = split_fields(lines[li]);
    if (fields.size() != 3) {
      throw ParseError("expected signal_id,kmer_index,count", line_no, 1);
    }
    const auto it = row_of.find(fields[0]);
    if (it == row_of.end()) {
      throw ParseError("signal id \"" + fields[0] + "\" is not in the manifest",
                       line_no, 1);
    }
    const std::int64_t index = parse_int_field(fields[1], line_no, 2);
    if (index < 0 || static_cast<std::size_t>(index) >= out.embedding.dim) {
      throw ParseError("kmer index out of range", line_no, 2);
    }
    const std::int64_t count = parse_int_field(fields[2], line_no, 3);
    out.embedding.rows[it->second].counts[static_cast<std::size_t>(index)] =
        count;
  }
  return out;
}

void save_report(const EvalReport& report, const std::string& path) {
  ordered_json doc;
  doc["repetitions"] = report.repetitions;
  doc["base_seed"] = report.base_seed;
  doc["class_index"] = report.class_index;
  ordered_json classifiers = ordered_json::array();
  for (const ClassifierReport& summary : report.classifiers) {
    ordered_json entry;
    entry["name"] = summary.name;
    ordered_json metrics_obj;
    for (std::size_t m = 0; m < kMetricNames.size(); ++m) {
      ordered_json cell;
      cell["mean"] = summary.stats[m].mean;
      cell["sd"] = summary.stats[m].sd;
      metrics_obj[std::string(kMetricNames[m])] = cell;
    }
    entry["metrics"] = metrics_obj;
    classifiers.push_back(entry);
  }
  doc["classifiers"] = classifiers;
  write_text_file(path, doc.dump(2) + "\n");
}

void save_runs_csv(const EvalReport& report, const std::string& path) {
  std::string out = "run,classifier,metric,value\n";
  for (const RunRecord& record : report.runs) {
    out += std::to_string(record.run);
    out += ',';
    out += record.classifier;
    out += ',';
    out += record.metric;
    out += ',';
    out += format_double(record.value);
    out += '\n';
  }
  write_text_file(path, out);
}

std::vector<double> load_metric_series(const std::string& path,
                                       const std::string& classifier,
                                       const std::string& metric) {
  const std::vector<std::string> lines = split_lines(read_text_file(path));
  if (lines.empty() || lines[0] != "run,classifier,metric,value") {
    throw ParseError("expected header run,classifier,metric,value in " + path,
                     1, 1);
  }
  std::vector<double> values;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    const std::vector<std::string> fields = split_fields(lines[li]);
    if (fields.size() != 4) {
      throw ParseError("expected run,classifier,metric,value", line_no, 1);
    }
    if (fields[1] != classifier || fields[2] != metric) continue;
    values.push_back(parse_double_field(fields[3], line_no, 4));
  }
  if (values.empty()) {
    throw ValidationError("no rows in " + path + " match classifier \"" +
                          classifier + "\" and metric \"" + metric + "\"");
  }
  return values;
}

}  // namespace symseq
