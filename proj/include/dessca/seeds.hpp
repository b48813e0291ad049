#pragma once

#include <cstdint>

namespace dessca {

// Named substreams derived from one master seed. Every random draw in an
// experiment comes from exactly one of these, so runs are reproducible from
// the master seed alone and the streams never alias each other.
enum class Stream : std::uint64_t {
  es_init = 1,          // exploring-starts initial-state sampling
  policy = 2,           // policy-internal randomness
  pso = 3,              // swarm optimizer (indexed per proposal)
  validation_init = 4,  // validation episode initial states (strategy-independent)
  reference_mc = 5,     // Monte Carlo normalization of the reference density
  schedule = 6,         // operating-point schedule for long validation episodes
  generic = 7,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                                 std::uint64_t index = 0) {
  std::uint64_t s = splitmix64(master ^ (0x9e3779b97f4a7c15ULL *
                                         static_cast<std::uint64_t>(stream)));
  return splitmix64(s ^ (0xd1b54a32d192ed03ULL * (index + 1)));
}

}  // namespace dessca
