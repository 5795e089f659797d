#include "ccc/error.hpp"

namespace ccc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::not_normal: return "NotNormal";
    case Errc::quotient_not_cyclic: return "QuotientNotCyclic";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::not_prime_index: return "NotPrimeIndex";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::too_large: return "TooLarge";
    case Errc::not_prime: return "NotPrime";
    case Errc::even_field: return "EvenField";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::non_central_universal_class: return "NonCentralUniversalClass";
    case Errc::matching_incomplete: return "MatchingIncomplete";
    case Errc::partition_defect: return "PartitionDefect";
    case Errc::crosscheck_failure: return "CrosscheckFailure";
    case Errc::scheme_defect: return "SchemeDefect";
    case Errc::equivalence_failure: return "EquivalenceFailure";
  }
  return "Unknown";
}

}  // namespace ccc
