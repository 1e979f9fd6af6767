#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gisemi {

  // Categories are stable strings: the CLI prints them and tests match on
  // them.
  enum class ErrorKind {
    composition_undefined,
    vertex_mismatch,
    unknown_vertex,
    unknown_edge,
    duplicate_id,
    not_a_circuit,
    infinite_up_set,
    invalid_subsemigroup,
    wrong_type,
    improper_argument,
    not_a_coset,
    infinite_index,
    overflow,
    parse
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace gisemi
