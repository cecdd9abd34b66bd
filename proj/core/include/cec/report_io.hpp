#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cec/mds.hpp"
#include "cec/scenario.hpp"
#include "cec/sim.hpp"

namespace cec {

/// Scenario document plus the execution knobs that ride along with it.
struct ScenarioFile {
  Scenario scenario;
  Fp prime = kDefaultPrime;
  std::uint64_t seed = 0;
};

/// Parses the JSON scenario document (keys: machines, code, timeline, seed).
/// Speeds accept integers and "a/b" strings. Throws std::invalid_argument
/// naming the offending key on malformed input.
ScenarioFile parse_scenario(const std::string& text);
ScenarioFile load_scenario(const std::string& path);

/// Serializes step reports as JSON with all rationals as "a/b" strings.
/// Byte-stable for identical inputs.
std::string report_to_json(const ScenarioFile& sf,
                           const std::vector<StepReport>& steps,
                           bool executed);

/// Assignment table: step,f,alpha,row_start,row_end,cs_indices.
std::string report_to_csv(const std::vector<StepReport>& steps);

/// Round-trips the rationals of a serialized report (used by tests).
std::vector<StepReport> report_from_json(const std::string& text);

/// Whitespace matrix format: "q r" on the first line, then q rows of r
/// integers (reduced mod p at encode time).
FieldMatrix load_matrix(const std::string& path);

/// Deterministic seeded data: X then one w per step, drawn mod p from a
/// single mt19937_64 stream.
FieldMatrix random_matrix(std::uint64_t seed, std::int64_t q, std::int64_t r,
                          Fp p);
std::vector<std::vector<Fp>> random_vectors(std::uint64_t seed, std::size_t count,
                                            std::int64_t r, Fp p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cec
