#include "semhash/rng.hpp"

namespace semhash {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t salted_seed(std::uint64_t base, std::string_view salt) {
  Rng mixer(base ^ fnv1a64(salt));
  return mixer.next_u64();
}

}  // namespace semhash
