#include "gisemi/error.hpp"

namespace gisemi {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::composition_undefined:
        return "composition-undefined";
      case ErrorKind::vertex_mismatch:
        return "initial-vertex-mismatch";
      case ErrorKind::unknown_vertex:
        return "unknown-vertex";
      case ErrorKind::unknown_edge:
        return "unknown-edge";
      case ErrorKind::duplicate_id:
        return "duplicate-id";
      case ErrorKind::not_a_circuit:
        return "not-a-circuit";
      case ErrorKind::infinite_up_set:
        return "infinite-up-set";
      case ErrorKind::invalid_subsemigroup:
        return "invalid-subsemigroup";
      case ErrorKind::wrong_type:
        return "wrong-type";
      case ErrorKind::improper_argument:
        return "improper-argument";
      case ErrorKind::not_a_coset:
        return "not-a-coset";
      case ErrorKind::infinite_index:
        return "infinite-index";
      case ErrorKind::overflow:
        return "overflow";
      case ErrorKind::parse:
        return "parse-error";
    }
    return "unknown";
  }

}  // namespace gisemi
