#include "scomult/mutants.hpp"

namespace scomult {

std::string_view mutant_name(Mutant m) {
  switch (m) {
    case Mutant::none: return "none";
    case Mutant::s_prime_universal_s: return "s-prime-universal-s";
    case Mutant::s_second_no_disjointness: return "s-second-no-disjointness";
    case Mutant::localization_no_u_factor: return "localization-no-u-factor";
    case Mutant::lemma_iii_flipped: return "lemma-iii-flipped";
    case Mutant::tm3_no_s_prime_clause: return "tm3-no-s-prime-clause";
  }
  return "unknown";
}

std::optional<Mutant> mutant_from_name(std::string_view name) {
  if (name == "none") return Mutant::none;
  for (Mutant m : kAllMutants)
    if (mutant_name(m) == name) return m;
  return std::nullopt;
}

}  // namespace scomult
