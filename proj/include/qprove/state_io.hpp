#pragma once

#include <iosfwd>
#include <string>

#include "qprove/fock.hpp"
#include "qprove/prover.hpp"

namespace qprove {

/*
 * State spec JSON:
 *   {"kind":"uniform",  "k":1, "cutoff":4}
 *   {"kind":"coherent", "k":2, "cutoff":6, "alpha":[[1.0,0.0],[0.5,-0.5]]}
 *   {"kind":"random",   "k":1, "cutoff":8, "seed":42}
 *   {"kind":"explicit", "k":1, "cutoff":4,
 *    "amplitudes":[{"n":[0],"re":0.7071,"im":0.0},
 *                  {"n":[3],"re":0.7071,"im":0.0}]}
 * Throws std::invalid_argument on malformed input.
 */
StateSpec parse_state_spec(const std::string& json_text);
StateSpec load_state_spec(const std::string& path);

// One line per theoretical outcome, ascending:
// outcome <TAB> theoretical_p <TAB> empirical_count
void write_histogram_tsv(std::ostream& out, const TrialReport& report);

// One JSON object per record: {"m":..,"proof":[..],"p":..,"seed":..,"trial":..}
void write_records_jsonl(std::ostream& out, const TrialReport& report);

std::string record_to_json(const MeasurementRecord& record);

// Full report document; records_path may be empty when no file was written.
std::string report_to_json(const TrialReport& report,
                           const std::string& records_path);

}  // namespace qprove
