#include "trineq/state_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "trineq/error.hpp"
#include "trineq/tolerances.hpp"

namespace trineq::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view origin, std::string_view field, std::string_view what) {
  throw Error(ErrorKind::Parse, fmt::format("{}: field '{}': {}", origin, field, what));
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorKind::Parse,
                fmt::format("{}:{}:{}: malformed JSON (parser byte {})", origin, line, col, e.byte));
  }
}

const json& require(const json& obj, const char* key, std::string_view origin,
                    std::string_view path) {
  if (!obj.is_object()) fail(origin, path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    fail(origin, path.empty() ? std::string(key) : fmt::format("{}.{}", path, key), "missing");
  }
  return *it;
}

double number(const json& v, std::string_view origin, std::string_view path) {
  if (!v.is_number()) fail(origin, path, "expected a number");
  return v.get<double>();
}

Complex complex_value(const json& v, std::string_view origin, const std::string& path) {
  if (!v.is_array() || v.size() != 2) fail(origin, path, "expected a [re, im] pair");
  return {number(v[0], origin, path + "[0]"), number(v[1], origin, path + "[1]")};
}

std::vector<Complex> amplitude_list(const json& v, std::size_t dim, std::string_view origin,
                                    const std::string& path) {
  if (!v.is_array()) fail(origin, path, "expected an array of [re, im] pairs");
  if (v.size() != dim) {
    fail(origin, path, fmt::format("expected {} amplitudes, found {}", dim, v.size()));
  }
  std::vector<Complex> out;
  out.reserve(dim);
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(complex_value(v[k], origin, fmt::format("{}[{}]", path, k)));
  }
  return out;
}

std::size_t dimension(const json& v, std::string_view origin, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 1) fail(origin, path, "expected a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

BipartiteShape parse_shape(const json& v, std::string_view origin) {
  if (!v.is_array() || v.empty() || v.size() > 2) fail(origin, "shape", "expected [d] or [d1, d2]");
  try {
    if (v.size() == 1) return BipartiteShape::single(dimension(v[0], origin, "shape[0]"));
    return BipartiteShape::make(dimension(v[0], origin, "shape[0]"),
                                dimension(v[1], origin, "shape[1]"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    fail(origin, "shape", e.what());
  }
}

// Wraps state-construction failures so that the field path is reported.
template <class Fn>
auto with_field(std::string_view origin, std::string_view path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    fail(origin, path, e.what());
  }
}

PureState make_pure(const BipartiteShape& shape, std::vector<Complex> amps, bool normalize,
                    std::string_view origin, std::string_view path) {
  return with_field(origin, path, [&] {
    return normalize ? PureState::normalized(shape, std::move(amps))
                     : PureState(shape, std::move(amps));
  });
}

json shape_json(const BipartiteShape& s) {
  if (s.d2 == 1) return json::array({s.d1});
  return json::array({s.d1, s.d2});
}

}  // namespace

StateFile parse_state(std::string_view text, std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object()) fail(origin, "", "top level must be an object");
  const BipartiteShape shape = parse_shape(require(doc, "shape", origin, ""), origin);
  bool normalize = false;
  if (const auto it = doc.find("normalize"); it != doc.end()) {
    if (!it->is_boolean()) fail(origin, "normalize", "expected true or false");
    normalize = it->get<bool>();
  }
  const bool has_pure = doc.contains("amplitudes");
  const bool has_ens = doc.contains("ensemble");
  if (has_pure == has_ens) fail(origin, "", "exactly one of 'amplitudes' or 'ensemble' is required");

  StateFile out{shape, std::nullopt, std::nullopt};
  if (has_pure) {
    auto amps = amplitude_list(doc["amplitudes"], shape.dim(), origin, "amplitudes");
    out.pure = make_pure(shape, std::move(amps), normalize, origin, "amplitudes");
    return out;
  }
  const json& ens = doc["ensemble"];
  const double p1 = number(require(ens, "p1", origin, "ensemble"), origin, "ensemble.p1");
  double p2 = 1.0 - p1;
  if (const auto it = ens.find("p2"); it != ens.end()) p2 = number(*it, origin, "ensemble.p2");
  PureState psi1 = make_pure(
      shape,
      amplitude_list(require(ens, "psi1", origin, "ensemble"), shape.dim(), origin, "ensemble.psi1"),
      normalize, origin, "ensemble.psi1");
  PureState psi2 = make_pure(
      shape,
      amplitude_list(require(ens, "psi2", origin, "ensemble"), shape.dim(), origin, "ensemble.psi2"),
      normalize, origin, "ensemble.psi2");
  out.ensemble.emplace(with_field(origin, "ensemble", [&] {
    return Rank2Ensemble(p1, p2, std::move(psi1), std::move(psi2));
  }));
  return out;
}

StateFile load_state(const std::filesystem::path& path) {
  return parse_state(read_file(path), path.string());
}

ComplexMatrix parse_unitary(std::string_view text, std::string_view origin) {
  const json doc = parse_json(text, origin);
  const json& rows = require(doc, "unitary", origin, "");
  if (!rows.is_array() || rows.empty()) fail(origin, "unitary", "expected a non-empty array of rows");
  const std::size_t n = rows.size();
  ComplexMatrix u(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = amplitude_list(rows[r], n, origin, fmt::format("unitary[{}]", r));
    for (std::size_t c = 0; c < n; ++c) u(r, c) = row[c];
  }
  const double defect = unitary_defect(u);
  if (!(defect <= tol::kUnitary)) {
    fail(origin, "unitary", fmt::format("max |U^dagger U - I| = {:.3e} exceeds {:.0e}", defect,
                                        tol::kUnitary));
  }
  return u;
}

ComplexMatrix load_unitary(const std::filesystem::path& path) {
  return parse_unitary(read_file(path), path.string());
}

nlohmann::json amplitudes_json(std::span<const Complex> amps) {
  json out = json::array();
  for (const Complex& z : amps) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

nlohmann::json to_json(const PureState& psi) {
  return {{"shape", shape_json(psi.shape())}, {"amplitudes", amplitudes_json(psi.amplitudes())}};
}

nlohmann::json to_json(const Rank2Ensemble& e) {
  return {{"shape", shape_json(e.shape())},
          {"ensemble",
           {{"p1", e.p1()},
            {"psi1", amplitudes_json(e.psi1().amplitudes())},
            {"psi2", amplitudes_json(e.psi2().amplitudes())}}}};
}

nlohmann::json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(amplitudes_json(m.row(r)));
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, fmt::format("{}: cannot open for reading", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, fmt::format("{}: read failed", path.string()));
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, fmt::format("{}: cannot open for writing", path.string()));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw Error(ErrorKind::Io, fmt::format("{}: write failed", path.string()));
}

}  // namespace trineq::io
