#include "cvergo/state_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cvergo/errors.hpp"

namespace cvergo {

namespace {

using ordered_json = nlohmann::ordered_json;

Family family_from_string(const std::string& name) {
  if (name == "bloch_messiah") return Family::BlochMessiah;
  if (name == "tms") return Family::TMS;
  if (name == "photon_subtracted_tms") return Family::PhotonSubtractedTMS;
  if (name == "fock_superposition") return Family::FockSuperposition;
  if (name == "bell_mixture") return Family::BellMixture;
  if (name == "raw") return Family::Raw;
  throw InvalidParamsError("state file: unknown family \"" + name + "\"");
}

LoadedState parse_state(const ordered_json& j) {
  if (!j.is_object()) {
    throw InvalidParamsError("state file: top level must be a JSON object");
  }
  for (const char* field : {"ordering", "omega_a", "omega_b", "cm"}) {
    if (!j.contains(field)) {
      throw InvalidParamsError(std::string("state file: missing field \"") +
                               field + "\"");
    }
  }
  const std::string ordering = j.at("ordering").get<std::string>();
  // xxpp files are ingested by permuting rows/columns to xpxp.
  std::array<int, 4> perm{0, 1, 2, 3};
  if (ordering == "xxpp") {
    perm = {0, 2, 1, 3}; // xpxp index i comes from xxpp index perm[i]
  } else if (ordering != "xpxp") {
    throw InvalidParamsError("state file: ordering must be \"xpxp\" or \"xxpp\", got \"" +
                             ordering + "\"");
  }
  const auto& cm = j.at("cm");
  if (!cm.is_array() || cm.size() != 16) {
    throw InvalidParamsError("state file: cm must be an array of 16 numbers (row-major)");
  }
  Mat4 raw;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const auto& v = cm.at(static_cast<std::size_t>(4 * r + c));
      if (!v.is_number()) {
        throw InvalidParamsError("state file: cm entries must be numbers");
      }
      raw(r, c) = v.get<double>();
    }
  }
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      m(r, c) = raw(perm[static_cast<std::size_t>(r)],
                    perm[static_cast<std::size_t>(c)]);
    }
  }

  LoadedState out{
      StateRecord{CovarianceMatrix(m), Family::Raw, true, {}, std::nullopt},
      ModePair(j.at("omega_a").get<double>(), j.at("omega_b").get<double>()),
      {}};
  if (j.contains("family")) {
    out.record.family = family_from_string(j.at("family").get<std::string>());
  }
  if (j.contains("gaussian")) {
    out.record.gaussian = j.at("gaussian").get<bool>();
  }
  if (j.contains("params")) {
    const auto& params = j.at("params");
    if (!params.is_object()) {
      throw InvalidParamsError("state file: params must be an object of numbers");
    }
    for (const auto& [key, value] : params.items()) {
      if (!value.is_number()) {
        throw InvalidParamsError("state file: params values must be numbers");
      }
      out.record.params[key] = value.get<double>();
    }
  }
  if (j.contains("seed")) {
    out.record.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("displacement")) {
    out.warnings.push_back(
        "displacement entry dropped: first moments are removable by local "
        "unitaries and do not affect any computed quantity");
  }
  return out;
}

} // namespace

LoadedState parse_state_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParamsError(std::string("state file: JSON parse error: ") +
                             e.what());
  }
  try {
    return parse_state(j);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParamsError(std::string("state file: ") + e.what());
  }
}

LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidParamsError("state file: cannot open \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str());
}

std::string state_to_json(const StateRecord& record, const ModePair& modes) {
  ordered_json j;
  j["ordering"] = "xpxp";
  j["omega_a"] = modes.omega_a;
  j["omega_b"] = modes.omega_b;
  std::vector<double> cm;
  cm.reserve(16);
  const Mat4& m = record.sigma.matrix();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      cm.push_back(m(r, c));
    }
  }
  j["cm"] = cm;
  j["family"] = to_string(record.family);
  if (!record.params.empty()) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : record.params) {
      params[key] = value;
    }
    j["params"] = params;
  }
  j["gaussian"] = record.gaussian;
  if (record.seed.has_value()) {
    j["seed"] = *record.seed;
  }
  return j.dump(2) + "\n";
}

void save_state_file(const std::string& path, const StateRecord& record,
                     const ModePair& modes) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidParamsError("state file: cannot open \"" + path +
                             "\" for writing");
  }
  out << state_to_json(record, modes);
}

} // namespace cvergo
