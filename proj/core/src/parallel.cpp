#include "cotlar_lab/parallel.hpp"

#include <cstdlib>
#include <string>

#include <fmt/format.h>

#include "scan.hpp"

namespace cotlab {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("COTLAR_LAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(chunk),
                    static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

namespace detail {

std::string box_universe(RingParam ring, int bound, std::size_t size) {
  return fmt::format("PSL2({}), half-coordinates in [-{}, {}], {} elements", describe(ring),
                     2 * bound, 2 * bound, size);
}

}  // namespace detail
}  // namespace cotlab
