#pragma once

// Internal helpers shared by the verification drivers.

#include <span>
#include <string>
#include <vector>

#include "cotlar_lab/parallel.hpp"
#include "cotlar_lab/psl2.hpp"
#include "cotlar_lab/report.hpp"

namespace cotlab::detail {

inline constexpr std::size_t kChunk = 1024;

/// Partial reports in chunk order folded into one.
inline CheckReport fold(std::string check, std::string universe,
                        const std::vector<CheckReport>& parts, std::size_t max_witnesses) {
  CheckReport out;
  out.check = std::move(check);
  out.universe = std::move(universe);
  for (const auto& p : parts) out.absorb(p, max_witnesses);
  return out;
}

/// Records obs as a violation when obs["ok"] is false.
inline void record(CheckReport& part, std::vector<std::string> inputs, json obs,
                   std::size_t max_witnesses) {
  ++part.total_checked;
  if (!obs.at("ok").get<bool>()) part.add_violation({std::move(inputs), std::move(obs)}, max_witnesses);
}

/// Applies observe(g) to every element in chunks.
template <class Observe>
std::vector<CheckReport> scan_elements(std::span<const ProjMat> elems, const ExecOptions& opts,
                                       Observe&& observe) {
  return map_chunks<CheckReport>(
      chunk_count(elems.size(), kChunk), resolve_threads(opts.threads), [&](std::size_t c) {
        CheckReport part;
        const std::size_t end = std::min(elems.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
          record(part, {format_matrix(elems[i])}, observe(elems[i]), opts.max_witnesses);
        }
        return part;
      });
}

std::string box_universe(RingParam ring, int bound, std::size_t size);

}  // namespace cotlab::detail
