#pragma once

// JSON state files.
//
// Pure state:
//   {"shape": [d1, d2], "amplitudes": [[re, im], ...]}
// Rank-2 ensemble:
//   {"shape": [d1, d2], "ensemble": {"p1": p, "psi1": [[re, im], ...], "psi2": [...]}}
// A one-element shape [d] describes a single d-level system. An optional
// top-level "normalize": true rescales amplitude vectors to unit norm.
//
// Basis change:
//   {"unitary": [[[re, im], ...], ...]}   (rows of U)

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "trineq/complex_matrix.hpp"
#include "trineq/states.hpp"

namespace trineq::io {

struct StateFile {
  BipartiteShape shape;
  std::optional<PureState> pure;
  std::optional<Rank2Ensemble> ensemble;
};

/// Throws Error(Parse) with the origin, line/column or field path on bad input.
StateFile parse_state(std::string_view text, std::string_view origin = "<input>");
StateFile load_state(const std::filesystem::path& path);

/// Validated unitary to 1e-9 (ErrorKind::Parse otherwise).
ComplexMatrix parse_unitary(std::string_view text, std::string_view origin = "<input>");
ComplexMatrix load_unitary(const std::filesystem::path& path);

nlohmann::json amplitudes_json(std::span<const Complex> amps);
nlohmann::json to_json(const PureState& psi);
nlohmann::json to_json(const Rank2Ensemble& e);
nlohmann::json to_json(const ComplexMatrix& m);

std::string read_file(const std::filesystem::path& path);
/// Writes `contents` in one call; Error(Io) with the path on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace trineq::io
