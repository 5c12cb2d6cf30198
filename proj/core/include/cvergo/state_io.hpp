#pragma once

// JSON state-file round-tripping. A state file is a self-describing record:
//
//   {
//     "ordering": "xpxp",            // or "xxpp"; converted to xpxp on load
//     "omega_a": 1.0,                // mode frequencies, omega_a <= omega_b
//     "omega_b": 1.0,
//     "cm": [16 numbers],            // covariance matrix, row-major
//     "family": "tms",               // optional, defaults to "raw"
//     "params": {"k": 2.0, "r": 1.0},// optional, family parameters
//     "gaussian": true,              // optional, defaults to true
//     "seed": 7,                     // optional
//     "displacement": [0,0,0,0]      // optional; zeroed on load with warning
//   }
//
// First moments are not propagated: a "displacement" entry is accepted,
// dropped, and reported through LoadedState.warnings (they are removable by
// local unitaries, so no derived quantity here depends on them).

#include <string>
#include <vector>

#include "cvergo/energetics.hpp"
#include "cvergo/states.hpp"

namespace cvergo {

struct LoadedState {
  StateRecord record;
  ModePair modes;
  std::vector<std::string> warnings;
};

/// Parses a state file. Throws InvalidParamsError on malformed JSON, missing
/// or ill-typed required fields, unknown ordering, or frequencies that
/// violate omega_a <= omega_b; throws NonPhysicalError only when a later
/// operation requires physicality (loading itself does not).
LoadedState load_state_file(const std::string& path);

/// Same parser, from an in-memory JSON string.
LoadedState parse_state_json(const std::string& text);

/// Serializes a record to the schema above (always ordering "xpxp").
std::string state_to_json(const StateRecord& record, const ModePair& modes);

/// Writes state_to_json to a file. Throws InvalidParamsError when the file
/// cannot be opened for writing.
void save_state_file(const std::string& path, const StateRecord& record,
                     const ModePair& modes);

} // namespace cvergo
