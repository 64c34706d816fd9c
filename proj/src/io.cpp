#include "gik/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gik/error.hpp"

namespace gik {

namespace {

Rational json_rational(const nlohmann::json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  fail(Errc::bad_rational, "rationals must be strings or integers");
}

}  // namespace

Instance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("weights") || !doc.contains("capacities") ||
      !doc.contains("profits")) {
    fail(Errc::dimension_mismatch, "instance needs weights, capacities and profits");
  }
  const auto& jw = doc.at("weights");
  const auto& jc = doc.at("capacities");
  const auto& jp = doc.at("profits");
  if (!jw.is_array() || !jc.is_array() || !jp.is_array()) {
    fail(Errc::dimension_mismatch, "instance fields must be arrays");
  }
  VectorR weights(jw.size());
  for (std::size_t i = 0; i < jw.size(); ++i) weights(i) = json_rational(jw[i]);
  VectorR caps(jc.size());
  for (std::size_t t = 0; t < jc.size(); ++t) caps(t) = json_rational(jc[t]);
  MatrixR profits(jw.size(), jc.size());
  if (jp.size() != jw.size()) fail(Errc::dimension_mismatch, "profit rows must match items");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    if (!jp[i].is_array() || jp[i].size() != jc.size()) {
      fail(Errc::dimension_mismatch, "profit columns must match periods");
    }
    for (std::size_t t = 0; t < jc.size(); ++t) profits(i, t) = json_rational(jp[i][t]);
  }
  std::vector<std::string> labels;
  if (doc.contains("item_ids")) {
    for (const auto& id : doc.at("item_ids")) labels.push_back(id.get<std::string>());
  }
  return validate_instance(std::move(weights), std::move(caps), std::move(profits),
                           std::move(labels));
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json doc;
  doc["weights"] = nlohmann::json::array();
  doc["capacities"] = nlohmann::json::array();
  doc["profits"] = nlohmann::json::array();
  for (int i : inst.items) doc["weights"].push_back(to_string(inst.weight(i)));
  for (int t = 1; t <= inst.periods(); ++t) {
    doc["capacities"].push_back(to_string(inst.capacities(t - 1)));
  }
  for (int i : inst.items) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 1; t <= inst.periods(); ++t) row.push_back(to_string(inst.profit(i, t)));
    doc["profits"].push_back(std::move(row));
  }
  nlohmann::json ids = nlohmann::json::array();
  bool default_ids = true;
  for (std::size_t pos = 0; pos < inst.items.size(); ++pos) {
    const std::string& label = inst.data->labels[inst.items[pos]];
    if (label != std::to_string(pos)) default_ids = false;
    ids.push_back(label);
  }
  if (!default_ids) doc["item_ids"] = std::move(ids);
  return doc;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_params, "cannot open instance file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& err) {
    fail(Errc::bad_params, std::string("malformed instance JSON: ") + err.what());
  }
  return instance_from_json(doc);
}

nlohmann::json chain_to_json(const Chain& chain) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& s : chain.sets) doc.push_back(s);
  return doc;
}

Chain chain_from_json(const Instance& inst, const nlohmann::json& doc) {
  Chain chain;
  for (const auto& s : doc) chain.sets.push_back(s.get<std::vector<int>>());
  validate_chain(inst, chain);
  return chain;
}

nlohmann::json perm_to_json(const Permutation& perm) { return nlohmann::json(perm.order); }

bool RunRecord::operator==(const RunRecord& other) const {
  return instance_id == other.instance_id && family == other.family && n == other.n &&
         T == other.T && seed == other.seed && algorithm == other.algorithm &&
         epsilon == other.epsilon && profit == other.profit &&
         oracle_profit == other.oracle_profit && ratio == other.ratio &&
         wall_ms == other.wall_ms && certified == other.certified;
}

namespace {

std::string opt_str(const std::optional<Rational>& value) {
  return value ? to_string(*value) : std::string();
}

double approx(const Rational& value) {
  return numerator(value).convert_to<double>() / denominator(value).convert_to<double>();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

void write_csv(std::ostream& out, std::vector<RunRecord> records, bool float_view) {
  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    return a.algorithm < b.algorithm;
  });
  out << kCsvHeader;
  if (float_view) out << ",profit_float,ratio_float";
  out << "\n";
  for (const auto& r : records) {
    out << r.instance_id << ',' << r.family << ',' << r.n << ',' << r.T << ',' << r.seed << ','
        << r.algorithm << ',' << to_string(r.epsilon) << ',' << to_string(r.profit) << ','
        << opt_str(r.oracle_profit) << ',' << opt_str(r.ratio) << ',' << r.wall_ms << ','
        << (r.certified ? "true" : "false");
    if (float_view) {
      out << ',' << approx(r.profit) << ',' << (r.ratio ? std::to_string(approx(*r.ratio)) : "");
    }
    out << "\n";
  }
  // Min/mean ratio per algorithm over rows where the oracle produced a ratio.
  std::vector<std::string> algorithms;
  for (const auto& r : records) {
    if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end()) {
      algorithms.push_back(r.algorithm);
    }
  }
  std::sort(algorithms.begin(), algorithms.end());
  for (const auto& algo : algorithms) {
    std::optional<Rational> min_ratio;
    Rational sum = 0;
    int count = 0;
    for (const auto& r : records) {
      if (r.algorithm != algo || !r.ratio) continue;
      if (!min_ratio || *r.ratio < *min_ratio) min_ratio = *r.ratio;
      sum += *r.ratio;
      ++count;
    }
    if (count == 0) continue;
    out << "summary:min,,,,," << algo << ",,,," << to_string(*min_ratio) << ",,\n";
    out << "summary:mean,,,,," << algo << ",,,," << to_string(sum / count) << ",,\n";
  }
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      continue;  // header
    }
    if (line.empty() || line.rfind("summary:", 0) == 0) continue;
    const auto fields = split_csv_line(line);
    require(fields.size() >= 12, Errc::bad_params, "short CSV row");
    RunRecord r;
    r.instance_id = fields[0];
    r.family = fields[1];
    r.n = std::stoi(fields[2]);
    r.T = std::stoi(fields[3]);
    r.seed = std::stoull(fields[4]);
    r.algorithm = fields[5];
    r.epsilon = parse_rational(fields[6]);
    r.profit = parse_rational(fields[7]);
    if (!fields[8].empty()) r.oracle_profit = parse_rational(fields[8]);
    if (!fields[9].empty()) r.ratio = parse_rational(fields[9]);
    r.wall_ms = std::stoll(fields[10]);
    r.certified = fields[11] == "true";
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace gik
