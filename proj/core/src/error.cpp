#include "diagramma/error.hpp"

namespace diagramma {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_letter: return "DuplicateLetter";
    case ErrorCode::empty_alphabet: return "EmptyAlphabet";
    case ErrorCode::empty_word: return "EmptyWord";
    case ErrorCode::unknown_letter: return "UnknownLetter";
    case ErrorCode::reversed_duplicate_relation: return "ReversedDuplicateRelation";
    case ErrorCode::duplicate_relation: return "DuplicateRelation";
    case ErrorCode::trivial_relation: return "TrivialRelation";
    case ErrorCode::bad_arity: return "BadArity";
    case ErrorCode::empty_subset: return "EmptySubset";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::duplicate_subset: return "DuplicateSubset";
    case ErrorCode::invalid_graph: return "InvalidGraph";
    case ErrorCode::realization_check_failed: return "RealizationCheckFailed";
    case ErrorCode::invalid_diagram: return "InvalidDiagram";
    case ErrorCode::label_mismatch: return "LabelMismatch";
    case ErrorCode::bad_position: return "BadPosition";
    case ErrorCode::bad_permutation: return "BadPermutation";
    case ErrorCode::interface_mismatch: return "InterfaceMismatch";
    case ErrorCode::presentation_mismatch: return "PresentationMismatch";
    case ErrorCode::invalid_element: return "InvalidElement";
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::identity_element: return "IdentityElement";
    case ErrorCode::no_theta_context: return "NoThetaContext";
    case ErrorCode::not_in_image: return "NotInImage";
    case ErrorCode::malformed_gadget: return "MalformedGadget";
    case ErrorCode::not_pure: return "NotPure";
    case ErrorCode::index_order: return "IndexOrder";
    case ErrorCode::oracle_mismatch: return "OracleMismatch";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::limit_exceeded: return "LimitExceeded";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(ErrorCode::parse_error,
            line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace diagramma
