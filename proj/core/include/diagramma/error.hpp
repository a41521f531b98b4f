#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diagramma {

enum class ErrorCode {
  // presentations
  duplicate_letter,
  empty_alphabet,
  empty_word,
  unknown_letter,
  reversed_duplicate_relation,
  duplicate_relation,
  trivial_relation,
  bad_arity,
  empty_subset,
  out_of_range,
  duplicate_subset,
  // graphs
  invalid_graph,
  realization_check_failed,
  // diagrams
  invalid_diagram,
  label_mismatch,
  bad_position,
  bad_permutation,
  interface_mismatch,
  presentation_mismatch,
  // groups and labeled diagrams
  invalid_element,
  overflow,
  // graph products
  identity_element,
  no_theta_context,
  not_in_image,
  // combination
  malformed_gadget,
  // virtual twins
  not_pure,
  index_order,
  oracle_mismatch,
  // text formats
  parse_error,
  limit_exceeded,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally remember the (1-based) line they occurred on;
/// line 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace diagramma
