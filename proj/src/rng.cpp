#include "fiatsim/rng.hpp"

#include <stdexcept>

namespace fiatsim {

std::size_t RngStream::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: empty range");
  const std::uint64_t bound = n;
  // Reject the low 2^64 mod n values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = next();
  while (x < threshold) x = next();
  return static_cast<std::size_t>(x % bound);
}

} // namespace fiatsim
