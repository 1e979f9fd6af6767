#include "gisemi/count.hpp"

#include <limits>

#include "gisemi/error.hpp"

namespace gisemi {

  std::uint64_t Count::value() const {
    if (!_value) {
      throw Error(ErrorKind::infinite_index, "count is infinite");
    }
    return *_value;
  }

  Count& Count::operator+=(Count const& other) {
    if (!_value || !other._value) {
      _value.reset();
      return *this;
    }
    if (*_value > std::numeric_limits<std::uint64_t>::max() - *other._value) {
      throw Error(ErrorKind::overflow, "path count exceeds 64 bits");
    }
    *_value += *other._value;
    return *this;
  }

  Count operator*(std::uint64_t k, Count const& c) {
    if (k == 0) {
      return Count::finite(0);
    }
    if (c.is_infinite()) {
      return c;
    }
    if (*c._value > std::numeric_limits<std::uint64_t>::max() / k) {
      throw Error(ErrorKind::overflow, "path count exceeds 64 bits");
    }
    return Count::finite(k * *c._value);
  }

  std::string Count::to_string() const {
    return _value ? std::to_string(*_value) : std::string("infinite");
  }

}  // namespace gisemi
