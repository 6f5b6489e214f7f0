#include "trineq/random.hpp"

#include <cmath>
#include <numbers>

namespace trineq {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL)));
}

double Rng::uniform_open() {
  double u = 0.0;
  while (u == 0.0) u = uniform();
  return u;
}

double Rng::normal() {
  const double u1 = uniform_open();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::unit_disc() {
  const double r = std::sqrt(uniform());
  const double angle = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, angle);
}

}  // namespace trineq
