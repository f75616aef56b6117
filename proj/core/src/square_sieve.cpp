#include "pellcount/square_sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace pellcount::sieve {
namespace {

struct SieveModulus {
  std::uint32_t m;
  std::vector<bool> is_square;
};

std::vector<SieveModulus> build_moduli() {
  std::vector<std::uint32_t> ms = {16, 32, 64, 9, 27, 81, 25, 125, 49, 343, 121, 169, 289};
  for (std::uint32_t p : small_primes(3000)) {
    if (p > 2) ms.push_back(p);
  }
  std::vector<SieveModulus> out;
  out.reserve(ms.size());
  for (std::uint32_t m : ms) {
    SieveModulus s{m, std::vector<bool>(m, false)};
    for (std::uint64_t i = 0; i < m; ++i) s.is_square[(i * i) % m] = true;
    out.push_back(std::move(s));
  }
  return out;
}

const std::vector<SieveModulus>& moduli() {
  static const std::vector<SieveModulus> table = build_moduli();
  return table;
}

std::uint64_t mod(const Nat& v, std::uint32_t m) { return mpz_fdiv_ui(v.get_mpz_t(), m); }

void require_unimodular(const LinearRecurrence& rec) {
  if (rec.m00 * rec.m11 - rec.m01 * rec.m10 != 1)
    throw std::invalid_argument("sieve: step matrix must have determinant 1");
}

}  // namespace

std::vector<std::uint32_t> residue_cycle(const LinearRecurrence& rec, std::uint32_t m,
                                         std::uint32_t limit) {
  require_unimodular(rec);
  const std::uint64_t a = mod(rec.m00, m), b = mod(rec.m01, m);
  const std::uint64_t c = mod(rec.m10, m), d = mod(rec.m11, m);
  const std::uint64_t x0 = mod(rec.x0, m), y0 = mod(rec.y0, m);
  std::uint64_t x = x0, y = y0;
  std::vector<std::uint32_t> ys;
  for (std::uint32_t j = 0; j < limit; ++j) {
    ys.push_back(static_cast<std::uint32_t>(y));
    const std::uint64_t nx = (a * x + b * y) % m;
    const std::uint64_t ny = (c * x + d * y) % m;
    x = nx;
    y = ny;
    if (x == x0 && y == y0) return ys;
  }
  return {};
}

std::vector<std::uint32_t> surviving_classes(const LinearRecurrence& rec,
                                             std::span<const std::uint32_t> classes) {
  require_unimodular(rec);
  std::vector<std::uint32_t> alive(classes.begin(), classes.end());
  for (const SieveModulus& sm : moduli()) {
    if (alive.empty()) break;
    const auto cycle = residue_cycle(rec, sm.m, 4 * sm.m + 4);
    const auto period = static_cast<std::uint32_t>(cycle.size());
    if (period == 0 || kIndexModulus % period != 0) continue;
    std::erase_if(alive, [&](std::uint32_t j) { return !sm.is_square[cycle[j % period]]; });
  }
  return alive;
}

bool excludes_all(const LinearRecurrence& rec, std::span<const std::uint32_t> classes) {
  return surviving_classes(rec, classes).empty();
}

}  // namespace pellcount::sieve
