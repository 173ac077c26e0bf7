#include "meta_ea/rng.hpp"

namespace meta_ea {

std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> path) noexcept
{
  std::uint64_t s = mix64(parent);
  for (auto idx : path)
    s = mix64(s ^ mix64(idx + 0x632be59bd9b4e019ULL));
  return s;
}

} // namespace meta_ea
