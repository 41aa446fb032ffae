#include "qprove/state_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qprove {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("state spec: " + message);
}

std::int64_t get_int(const json& j, const char* key, std::int64_t min_value) {
  if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer()) {
    fail(std::string("field '") + key + "' must be an integer");
  }
  std::int64_t value = v.get<std::int64_t>();
  if (value < min_value) {
    fail(std::string("field '") + key + "' must be >= " +
         std::to_string(min_value));
  }
  return value;
}

double get_double(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) fail(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

json outcome_to_json(const BigInt& m) {
  if (fits_uint64(m) && m <= BigInt(9007199254740992ULL)) {
    return json(m.convert_to<std::uint64_t>());
  }
  // past 2^53 a JSON number would not round trip; emit the exact decimal
  return json(m.str());
}

}  // namespace

StateSpec parse_state_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    fail("missing string field 'kind'");
  }
  std::string kind = j.at("kind").get<std::string>();
  int modes = static_cast<int>(get_int(j, "k", 1));
  if (modes > 64) fail("field 'k' too large");
  std::uint64_t cutoff = static_cast<std::uint64_t>(get_int(j, "cutoff", 1));

  if (kind == "uniform") {
    return UniformBoxSpec{modes, cutoff};
  }
  if (kind == "coherent") {
    if (!j.contains("alpha") || !j.at("alpha").is_array()) {
      fail("coherent spec needs an array field 'alpha'");
    }
    CoherentSpec spec{modes, cutoff, {}};
    for (const json& entry : j.at("alpha")) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        fail("each alpha entry must be [re, im]");
      }
      spec.alpha.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    if (spec.alpha.size() != static_cast<std::size_t>(modes)) {
      fail("'alpha' must have one entry per mode");
    }
    return spec;
  }
  if (kind == "random") {
    std::uint64_t seed = 0;
    if (j.contains("seed")) {
      const json& v = j.at("seed");
      if (v.is_number_unsigned()) {
        seed = v.get<std::uint64_t>();
      } else if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        seed = static_cast<std::uint64_t>(v.get<std::int64_t>());
      } else {
        fail("field 'seed' must be a nonnegative integer");
      }
    }
    return RandomGaussianSpec{modes, cutoff, seed};
  }
  if (kind == "explicit") {
    if (!j.contains("amplitudes") || !j.at("amplitudes").is_array()) {
      fail("explicit spec needs an array field 'amplitudes'");
    }
    ExplicitSpec spec{modes, cutoff, {}};
    for (const json& entry : j.at("amplitudes")) {
      if (!entry.is_object()) fail("each amplitude must be an object");
      if (!entry.contains("n") || !entry.at("n").is_array()) {
        fail("amplitude needs an array field 'n'");
      }
      Tuple n;
      for (const json& v : entry.at("n")) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
          fail("occupations must be nonnegative integers");
        }
        n.push_back(v.get<std::uint64_t>());
      }
      double re = get_double(entry, "re");
      double im = get_double(entry, "im");
      spec.amplitudes.emplace_back(std::move(n), Complex(re, im));
    }
    return spec;
  }
  fail("unknown kind '" + kind + "'");
}

StateSpec load_state_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read state file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_spec(buffer.str());
}

void write_histogram_tsv(std::ostream& out, const TrialReport& report) {
  for (const auto& [m, p] : report.theoretical.probabilities()) {
    auto it = report.empirical.find(m);
    std::uint64_t count = it == report.empirical.end() ? 0 : it->second;
    out << m << '\t' << json(p).dump() << '\t' << count << '\n';
  }
}

std::string record_to_json(const MeasurementRecord& record) {
  json j;
  j["m"] = outcome_to_json(record.theorem);
  j["proof"] = record.proof;
  j["p"] = record.probability;
  j["seed"] = record.seed;
  j["trial"] = record.trial;
  return j.dump();
}

void write_records_jsonl(std::ostream& out, const TrialReport& report) {
  for (const MeasurementRecord& rec : report.records) {
    out << record_to_json(rec) << '\n';
  }
}

std::string report_to_json(const TrialReport& report,
                           const std::string& records_path) {
  json j;
  j["label"] = report.label;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["total_variation"] = report.total_variation;
  j["outcomes"] = json::array();
  for (const auto& [m, p] : report.theoretical.probabilities()) {
    auto it = report.empirical.find(m);
    std::uint64_t count = it == report.empirical.end() ? 0 : it->second;
    json o;
    o["m"] = outcome_to_json(m);
    o["p"] = p;
    o["count"] = count;
    j["outcomes"].push_back(std::move(o));
  }
  j["records_path"] = records_path;
  return j.dump(2);
}

}  // namespace qprove
