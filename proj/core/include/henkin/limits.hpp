#ifndef HENKIN_LIMITS_HPP
#define HENKIN_LIMITS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace henkin {

  inline constexpr std::uint64_t default_budget = 50'000'000;

  // A search ran out of its node budget. Never conflated with a negative
  // answer.
  class ResourceLimitExceeded : public std::runtime_error {
   public:
    ResourceLimitExceeded(std::string const&           what,
                          std::uint64_t                nodes,
                          std::optional<std::uint32_t> size = std::nullopt)
        : std::runtime_error(what), nodes_(nodes), size_(size) {}

    std::uint64_t nodes() const noexcept { return nodes_; }
    // Domain size being searched when the limit was hit, if known.
    std::optional<std::uint32_t> size() const noexcept { return size_; }

   private:
    std::uint64_t                nodes_;
    std::optional<std::uint32_t> size_;
  };

}  // namespace henkin

#endif  // HENKIN_LIMITS_HPP
