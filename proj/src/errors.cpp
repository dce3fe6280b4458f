#include "equichrome/errors.hpp"

namespace equichrome {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_lengths: return "EmptyLengths";
    case Errc::not_simple: return "NotSimple";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::too_large: return "TooLarge";
    case Errc::map_verification_failed: return "MapVerificationFailed";
    case Errc::partial_coloring: return "PartialColoring";
    case Errc::color_out_of_range: return "ColorOutOfRange";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::no_color_available: return "NoColorAvailable";
    case Errc::search_limit_exceeded: return "SearchLimitExceeded";
    case Errc::unsupported_k: return "UnsupportedK";
    case Errc::unsupported_shape: return "UnsupportedShape";
    case Errc::internal_lemma_violation: return "InternalLemmaViolation";
    case Errc::too_many_assignments: return "TooManyAssignments";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::malformed_input: return "MalformedInput";
  }
  return "UnknownError";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace equichrome
