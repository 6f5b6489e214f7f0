#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "trineq/campaigns.hpp"
#include "trineq/coherence.hpp"
#include "trineq/concurrence.hpp"
#include "trineq/error.hpp"
#include "trineq/figure.hpp"
#include "trineq/kernels.hpp"
#include "trineq/state_io.hpp"

namespace {

using namespace trineq;
using nlohmann::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TRINEQ_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, fmt::format("TRINEQ_SEED='{}' is not an unsigned integer", env));
    }
  }
  return 1;
}

enum class DimsMode { Bipartite, Coherence };

// "d" means d (x) d for entanglement commands and a single d-level system
// for coherence commands; "d1,d2" is always the bipartite shape.
BipartiteShape parse_dims(const std::string& text, DimsMode mode) {
  const auto comma = text.find(',');
  auto parse_one = [&](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) {
      throw Error(ErrorKind::Parse, fmt::format("--dims '{}': expected d or d1,d2", text));
    }
    return v;
  };
  if (comma == std::string::npos) {
    const std::size_t d = parse_one(text);
    return mode == DimsMode::Bipartite ? BipartiteShape::make(d, d) : BipartiteShape::single(d);
  }
  return BipartiteShape::make(parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1)));
}

struct Common {
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::string dims;
  std::size_t remixes = 100;
  unsigned threads = 0;
  std::string output;
};

void emit(const std::string& output, const std::string& text) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    io::write_file(output, text);
  }
}

int finish_campaign(const campaigns::CampaignResult& r, const std::string& output) {
  std::cout << fmt::format("campaign: {}\n", r.name);
  std::cout << fmt::format("violations: {}/{}\n", r.violations, r.samples);
  if (std::isfinite(r.worst_margin)) {
    std::cout << fmt::format("worst margin: {:.6e}\n", r.worst_margin);
  }
  const std::string report = r.to_json().dump(2) + "\n";
  if (!output.empty()) {
    io::write_file(output, report);
  } else if (!r.ok()) {
    std::cout << report;
  }
  return r.ok() ? 0 : 1;
}

json report_json(const InequalityReport& rep) {
  json j = {{"lower", rep.lower}, {"middle", rep.middle}, {"pass", rep.pass}};
  if (rep.upper) j["upper"] = *rep.upper;
  return j;
}

PureState rotate(const PureState& psi, const std::optional<ComplexMatrix>& u) {
  if (!u) return psi;
  if (u->rows() != psi.shape().dim()) {
    throw Error(ErrorKind::ShapeMismatch,
                fmt::format("basis is {}x{} but the state has dimension {}", u->rows(), u->cols(),
                            psi.shape().dim()));
  }
  const auto v = u->adjoint() * std::vector<Complex>(psi.amplitudes().begin(), psi.amplitudes().end());
  return PureState::normalized(psi.shape(), v, psi.weight());
}

json eval_state(const io::StateFile& file, const std::optional<ComplexMatrix>& basis,
                std::size_t remixes, std::uint64_t seed) {
  const BipartiteShape& shape = file.shape;
  const bool entangled = shape.d2 > 1;
  json out;
  out["shape"] = entangled ? json::array({shape.d1, shape.d2}) : json::array({shape.d1});
  out["basis"] = basis ? "file" : "computational";
  if (file.pure) {
    out["kind"] = "pure";
    out["concurrence"] = entangled ? json(concurrence::pure_concurrence(*file.pure)) : json(nullptr);
    out["l1_coherence"] = coherence::l1_coherence(rotate(*file.pure, basis));
    return out;
  }
  const Rank2Ensemble& e = *file.ensemble;
  const DensityMatrix rho = density_from_ensemble(e);
  out["kind"] = "rank2_ensemble";
  out["p1"] = e.p1();
  out["p2"] = e.p2();
  if (entangled) {
    out["pure_concurrences"] = {concurrence::pure_concurrence(e.weighted(0)),
                                concurrence::pure_concurrence(e.weighted(1))};
    if (shape.is_two_qubit()) {
      out["concurrence"] = concurrence::wootters_concurrence(rho);
      out["concurrence_rank2"] = concurrence::rank2_concurrence_2qubit(e);
    } else {
      out["concurrence"] = nullptr;
      out["concurrence_lower_bound"] = concurrence::highdim_lower_bound(e);
    }
    out["concurrence_triangle"] = report_json(concurrence::triangle_check_concurrence(e));
    out["coa_estimate"] = concurrence::coa_estimate(e, remixes, seed);
  } else {
    out["concurrence"] = nullptr;
  }
  const Rank2Ensemble er =
      basis ? Rank2Ensemble(e.p1(), e.p2(), rotate(e.psi1(), basis), rotate(e.psi2(), basis)) : e;
  const DensityMatrix rho_b = basis ? rho.in_basis(*basis) : rho;
  out["l1_coherence"] = coherence::l1_coherence(rho_b);
  const auto chain = coherence::triangle_check_convex_roof_l1(er, remixes, seed);
  out["convex_roof_l1_estimate"] = chain.triangle.middle;
  out["l1_roof_chain"] = {{"lower", chain.triangle.lower},
                          {"l1_rho", chain.l1_rho},
                          {"estimate", chain.triangle.middle},
                          {"upper", *chain.triangle.upper},
                          {"pass", chain.pass}};
  out["remixes"] = remixes;
  out["seed"] = seed;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle-inequality verification for concurrence and l1 coherence"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "trineq 1.0");

  Common c;
  std::size_t grid = 101;
  std::string format = "csv";
  std::string state_path, basis_path;
  bool show_kernels = false;
  app.add_flag("--kernels", show_kernels, "Print the active SIMD kernel table to stderr");

  auto add_common = [&](CLI::App* sub, std::size_t default_samples, bool dims, bool remixes) {
    c.samples = default_samples;
    sub->add_option("--samples", c.samples, "Number of random samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--seed", c.seed, "64-bit seed (default: $TRINEQ_SEED, else 1)");
    sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
    sub->add_option("--output", c.output, "Write the JSON campaign report here");
    if (dims) {
      sub->add_option("--dims", c.dims, "Shape: d or d1,d2");
    }
    if (remixes) {
      sub->add_option("--remixes", c.remixes, "Sampled decompositions per ensemble")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    }
  };

  auto* lemma = app.add_subcommand(
      "verify-lemma1",
      "| |x1| - |x2| | <= sigma1 - sigma2 on random 2x2 complex symmetric matrices");
  add_common(lemma, 100000, false, false);

  auto* tri_c = app.add_subcommand(
      "verify-triangle-concurrence",
      "|C(Psi1) - C(Psi2)| <= C(rho) <= C(Psi1) + C(Psi2) on random rank-2 ensembles; for shapes "
      "other than 2,2 the middle term is the generator lower bound, checked against sampled "
      "decompositions. --dims d means d x d (default 2)");
  add_common(tri_c, 100000, true, true);

  auto* tri_l1 = app.add_subcommand(
      "verify-triangle-l1",
      "l1-coherence triangle on random pure/mixed pairs. --dims d means one d-level system "
      "(default 2)");
  add_common(tri_l1, 100000, true, false);

  auto* roof = app.add_subcommand(
      "verify-roof-sandwich",
      "lower <= C_l1(rho) <= convex-roof estimate <= upper on random rank-2 ensembles. --dims d "
      "means one d-level system (default 2)");
  add_common(roof, 100000, true, true);

  auto add_figure = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    c.samples = 200;
    sub->add_option("--samples", c.samples, "Decompositions per grid point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--grid", grid, "Grid points on [0.01, 0.99]")
        ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 20))
        ->capture_default_str();
    sub->add_option("--seed", c.seed, "64-bit seed (default: $TRINEQ_SEED, else 1)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", c.output,
                    "Output file (default figure-N.csv / .json); CSV also writes "
                    "<stem>_summary.csv next to it");
    return sub;
  };
  auto* fig1 = add_figure("figure-1", "Sum of weighted pure concurrences vs C(rho) over P");
  auto* fig2 = add_figure("figure-2", "Difference of weighted pure concurrences vs C(rho) over P");

  auto* eval = app.add_subcommand("eval", "Evaluate measures on a JSON state file");
  eval->add_option("--state", state_path, "State file")->required();
  eval->add_option("--basis", basis_path, "Basis-change file with a unitary matrix");
  eval->add_option("--remixes", c.remixes, "Decompositions for the roof and COA estimates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--seed", c.seed, "64-bit seed (default: $TRINEQ_SEED, else 1)");
  eval->add_option("--output", c.output, "Write the JSON report here instead of stdout");

  try {
    c.seed = default_seed();
    CLI11_PARSE(app, argc, argv);
    if (show_kernels) std::cerr << "kernels: " << kernels::active().name << "\n";
    // Subcommand defaults were assigned in declaration order; restore the
    // default of the chosen one unless --samples was given.
    auto samples_given = [](CLI::App* sub) { return sub->count("--samples") > 0; };
    campaigns::Options opt{c.samples, c.seed, c.remixes, c.threads};

    if (lemma->parsed()) {
      if (!samples_given(lemma)) opt.samples = 100000;
      return finish_campaign(campaigns::lemma1(opt), c.output);
    }
    if (tri_c->parsed()) {
      if (!samples_given(tri_c)) opt.samples = 100000;
      const auto shape = parse_dims(c.dims.empty() ? "2" : c.dims, DimsMode::Bipartite);
      return finish_campaign(campaigns::triangle_concurrence(shape, opt), c.output);
    }
    if (tri_l1->parsed()) {
      if (!samples_given(tri_l1)) opt.samples = 100000;
      const auto shape = parse_dims(c.dims.empty() ? "2" : c.dims, DimsMode::Coherence);
      return finish_campaign(campaigns::triangle_l1(shape, opt), c.output);
    }
    if (roof->parsed()) {
      if (!samples_given(roof)) opt.samples = 100000;
      const auto shape = parse_dims(c.dims.empty() ? "2" : c.dims, DimsMode::Coherence);
      return finish_campaign(campaigns::roof_sandwich(shape, opt), c.output);
    }
    for (auto [sub, number] : {std::pair{fig1, 1}, std::pair{fig2, 2}}) {
      if (!sub->parsed()) continue;
      figure::Config cfg;
      cfg.grid_points = grid;
      cfg.decomps_per_p = samples_given(sub) ? c.samples : 200;
      cfg.seed = c.seed;
      const auto data = figure::build(cfg);
      const std::size_t violations = number == 1 ? data.sum_violations : data.diff_violations;
      std::filesystem::path out =
          c.output.empty() ? fmt::format("figure-{}.{}", number, format) : c.output;
      if (format == "json") {
        io::write_file(out, figure::to_json(data, number));
      } else {
        io::write_file(out, figure::samples_csv(data));
        std::filesystem::path summary = out;
        summary.replace_filename(out.stem().string() + "_summary.csv");
        io::write_file(summary, figure::summary_csv(data));
      }
      std::cout << fmt::format("wrote {}\n", out.string());
      std::cout << fmt::format("violations: {}/{}\n", violations, data.points);
      return violations == 0 ? 0 : 1;
    }
    if (eval->parsed()) {
      const auto file = io::load_state(state_path);
      std::optional<ComplexMatrix> basis;
      if (!basis_path.empty()) basis = io::load_unitary(basis_path);
      emit(c.output, eval_state(file, basis, c.remixes, c.seed).dump(2) + "\n");
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
