#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace scomult {

/// Deliberately broken predicate variants. Passing anything other than
/// `none` to a predicate that knows the mutant switches it to the broken
/// form; predicates ignore mutants that are not theirs.
enum class Mutant {
  none,
  s_prime_universal_s,       // S-prime with "for all s" instead of "there is s"
  s_second_no_disjointness,  // S-second without ann(N) n S = empty
  localization_no_u_factor,  // (r,s) ~ (r',s') iff s'r = sr'
  lemma_iii_flipped,         // Lemma (iii) with sK in N instead of sN in K
  tm3_no_s_prime_clause,     // T-M3 (ii) without the s' clauses
};

inline constexpr std::array<Mutant, 5> kAllMutants{
    Mutant::s_prime_universal_s, Mutant::s_second_no_disjointness, Mutant::localization_no_u_factor,
    Mutant::lemma_iii_flipped, Mutant::tm3_no_s_prime_clause};

std::string_view mutant_name(Mutant m);
std::optional<Mutant> mutant_from_name(std::string_view name);

}  // namespace scomult
