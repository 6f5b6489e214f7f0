#include "trineq/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/core.h>

#include "trineq/coherence.hpp"
#include "trineq/concurrence.hpp"
#include "trineq/decompositions.hpp"
#include "trineq/kernels.hpp"
#include "trineq/linalg.hpp"
#include "trineq/random.hpp"
#include "trineq/sampling.hpp"
#include "trineq/state_io.hpp"
#include "trineq/tolerances.hpp"

namespace trineq::campaigns {

namespace {

using nlohmann::json;

struct Chunk {
  std::size_t violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double max_abs_error = 0.0;
  std::vector<Violation> recorded;

  void margin(double m) { worst_margin = std::min(worst_margin, m); }

  void violation(std::size_t index, std::string context, json inputs, json margins) {
    ++violations;
    if (recorded.size() < CampaignResult::kMaxRecorded) {
      recorded.push_back({index, std::move(context), std::move(inputs), std::move(margins)});
    }
  }
};

template <class Fn>
CampaignResult run(std::string name, const Options& opt, Fn per_chunk) {
  std::vector<Chunk> chunks(kChunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= kChunks) return;
      const std::size_t begin = opt.samples * c / kChunks;
      const std::size_t end = opt.samples * (c + 1) / kChunks;
      try {
        Rng rng = Rng::stream(opt.seed, c);
        per_chunk(rng, begin, end, chunks[c]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(kChunks);
        return;
      }
    }
  };

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, kChunks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  CampaignResult r;
  r.name = std::move(name);
  r.samples = opt.samples;
  for (auto& ch : chunks) {
    r.violations += ch.violations;
    r.worst_margin = std::min(r.worst_margin, ch.worst_margin);
    r.max_abs_error = std::max(r.max_abs_error, ch.max_abs_error);
    for (auto& v : ch.recorded) {
      if (r.recorded.size() < CampaignResult::kMaxRecorded) r.recorded.push_back(std::move(v));
    }
  }
  return r;
}

json report_json(const InequalityReport& rep) {
  json j = {{"lower", rep.lower}, {"middle", rep.middle}, {"lower_margin", rep.lower_margin}};
  if (rep.upper) {
    j["upper"] = *rep.upper;
    j["upper_margin"] = rep.upper_margin;
  }
  return j;
}

}  // namespace

json CampaignResult::to_json() const {
  json v = json::array();
  for (const auto& x : recorded) {
    v.push_back({{"index", x.index}, {"context", x.context}, {"inputs", x.inputs},
                 {"margins", x.margins}});
  }
  json j = {{"campaign", name}, {"samples", samples}, {"violations", violations},
            {"max_abs_error", max_abs_error}, {"recorded", std::move(v)}};
  j["worst_margin"] = std::isfinite(worst_margin) ? json(worst_margin) : json(nullptr);
  return j;
}

CampaignResult lemma1(const Options& opt) {
  return run("lemma1", opt, [](Rng& rng, std::size_t begin, std::size_t end, Chunk& ch) {
    const std::size_t n = end - begin;
    std::vector<double> x1r(n), x1i(n), x2r(n), x2i(n), yr(n), yi(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex x1 = rng.unit_disc();
      const Complex x2 = rng.unit_disc();
      const Complex y = rng.unit_disc();
      x1r[k] = x1.real(), x1i[k] = x1.imag();
      x2r[k] = x2.real(), x2i[k] = x2.imag();
      yr[k] = y.real(), yi[k] = y.imag();
    }
    std::vector<double> gap(n), s1(n), s2(n);
    kernels::symmetric2_gap({x1r, x1i, x2r, x2i, yr, yi}, {gap, s1, s2});
    for (std::size_t k = 0; k < n; ++k) {
      const Complex x1(x1r[k], x1i[k]), x2(x2r[k], x2i[k]), y(yr[k], yi[k]);
      const auto sv = linalg::singular_values(ComplexMatrix{{x1, y}, {y, x2}});
      const double closed = s1[k] - s2[k] - gap[k];
      const double jacobi = sv[0] - sv[1] - gap[k];
      ch.max_abs_error =
          std::max({ch.max_abs_error, std::abs(s1[k] - sv[0]), std::abs(s2[k] - sv[1])});
      const double m = std::min(closed, jacobi);
      ch.margin(m);
      if (m < -tol::kInequality) {
        ch.violation(begin + k, "| |x1| - |x2| | <= sigma1 - sigma2",
                     {{"x1", {x1.real(), x1.imag()}}, {"x2", {x2.real(), x2.imag()}},
                      {"y", {y.real(), y.imag()}}},
                     {{"closed_form", closed}, {"jacobi", jacobi}});
      }
    }
  });
}

CampaignResult wootters_equivalence(const Options& opt) {
  const BipartiteShape shape{2, 2};
  return run("wootters-equivalence", opt,
             [&](Rng& rng, std::size_t begin, std::size_t end, Chunk& ch) {
               for (std::size_t i = begin; i < end; ++i) {
                 const Rank2Ensemble e = sampling::random_ensemble(shape, rng);
                 const double tau_route = concurrence::rank2_concurrence_2qubit(e);
                 const double w = concurrence::wootters_concurrence(density_from_ensemble(e));
                 const double err = std::abs(tau_route - w);
                 ch.max_abs_error = std::max(ch.max_abs_error, err);
                 ch.margin(tol::kEquality - err);
                 if (err > tol::kEquality) {
                   ch.violation(i, "|rank2 concurrence - Wootters concurrence| <= 1e-8",
                                io::to_json(e),
                                {{"rank2", tau_route}, {"wootters", w}, {"abs_error", err}});
                 }
               }
             });
}

CampaignResult triangle_concurrence(const BipartiteShape& shape, const Options& opt) {
  const bool two_qubit = shape.is_two_qubit();
  return run(
      fmt::format("triangle-concurrence {}", to_string(shape)), opt,
      [&](Rng& rng, std::size_t begin, std::size_t end, Chunk& ch) {
        for (std::size_t i = begin; i < end; ++i) {
          const Rank2Ensemble e = sampling::random_ensemble(shape, rng);
          const InequalityReport rep = concurrence::triangle_check_concurrence(e);
          double m = std::min(rep.lower_margin, rep.upper_margin);
          json margins = report_json(rep);
          if (!two_qubit) {
            Rng remix_rng(rng.next_u64());
            double best = std::numeric_limits<double>::infinity();
            decompositions::for_each_decomposition(e, opt.remixes, remix_rng, [&](const auto& d) {
              best = std::min(best, d.avg_pure_concurrence);
              return true;
            });
            margins["min_sampled_average"] = best;
            margins["bound_to_sampled_margin"] = best - rep.middle;
            m = std::min(rep.lower_margin, best - rep.middle);
          }
          ch.margin(m);
          if (m < -tol::kInequality) {
            ch.violation(i, rep.context, io::to_json(e), std::move(margins));
          }
        }
      });
}

CampaignResult triangle_l1(const BipartiteShape& shape, const Options& opt) {
  const std::size_t n = shape.dim();
  return run(fmt::format("triangle-l1 {}", to_string(shape)), opt,
             [&](Rng& rng, std::size_t begin, std::size_t end, Chunk& ch) {
               for (std::size_t i = begin; i < end; ++i) {
                 const std::size_t rank1 = 1 + rng.next_u64() % n;
                 const std::size_t rank2 = 1 + rng.next_u64() % n;
                 const DensityMatrix rho1 = sampling::random_density(shape, rank1, rng);
                 const DensityMatrix rho2 = sampling::random_density(shape, rank2, rng);
                 const double p1 = rng.uniform_open();
                 const InequalityReport rep = coherence::triangle_check_l1(rho1, rho2, p1);
                 const double m = std::min(rep.lower_margin, rep.upper_margin);
                 ch.margin(m);
                 if (m < -tol::kInequality) {
                   ch.violation(i, rep.context,
                                {{"p1", p1},
                                 {"rho1", io::to_json(rho1.matrix())},
                                 {"rho2", io::to_json(rho2.matrix())}},
                                report_json(rep));
                 }
               }
             });
}

CampaignResult roof_sandwich(const BipartiteShape& shape, const Options& opt) {
  return run(fmt::format("roof-sandwich {}", to_string(shape)), opt,
             [&](Rng& rng, std::size_t begin, std::size_t end, Chunk& ch) {
               for (std::size_t i = begin; i < end; ++i) {
                 const Rank2Ensemble e = sampling::random_ensemble(shape, rng);
                 const std::uint64_t seed = rng.next_u64();
                 const auto rep = coherence::triangle_check_convex_roof_l1(e, opt.remixes, seed);
                 const double m = std::min({rep.lower_to_l1_margin, rep.l1_to_estimate_margin,
                                            rep.triangle.upper_margin});
                 ch.margin(m);
                 if (!rep.pass) {
                   json margins = report_json(rep.triangle);
                   margins["l1_rho"] = rep.l1_rho;
                   margins["lower_to_l1_margin"] = rep.lower_to_l1_margin;
                   margins["l1_to_estimate_margin"] = rep.l1_to_estimate_margin;
                   ch.violation(i, rep.triangle.context,
                                {{"state", io::to_json(e)}, {"remix_seed", seed}},
                                std::move(margins));
                 }
               }
             });
}

}  // namespace trineq::campaigns
