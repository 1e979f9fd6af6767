#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace gisemi {

  // A non-negative integer or Infinite. Finite values are exact; arithmetic
  // that would leave 64 bits throws an overflow Error instead of saturating.
  class Count {
   public:
    constexpr Count() noexcept = default;
    static constexpr Count finite(std::uint64_t n) noexcept {
      Count c;
      c._value = n;
      return c;
    }
    static constexpr Count infinite() noexcept {
      Count c;
      c._value.reset();
      return c;
    }

    constexpr bool is_finite() const noexcept {
      return _value.has_value();
    }
    constexpr bool is_infinite() const noexcept {
      return !_value.has_value();
    }
    // Throws infinite_index if the count is infinite.
    std::uint64_t value() const;

    Count& operator+=(Count const& other);
    friend Count operator+(Count lhs, Count const& rhs) {
      lhs += rhs;
      return lhs;
    }
    // 0 * Infinite = 0.
    friend Count operator*(std::uint64_t k, Count const& c);

    friend bool operator==(Count const&, Count const&) = default;

    std::string to_string() const;

   private:
    std::optional<std::uint64_t> _value = 0;
  };

}  // namespace gisemi
