#ifndef MALCEV_PARSE_HPP
#define MALCEV_PARSE_HPP

#include <string>

#include "malcev/reps.hpp"
#include "malcev/unified.hpp"

namespace malcev {

/// Line-oriented algebra document:
///   field rational | field gf <p>
///   dim <n>
///   basis <name> ...
///   [<name>,<name>] = <linear combination>
/// '#' starts a comment; unlisted pairs are zero; swapped-order duplicates
/// and diagonal brackets are rejected.
MalcevAlgebra parse_algebra(const std::string& text);

/// Datum document: an algebra document extended with
///   space V { basis <name> ... }
///   tl <m> <v> = <M-combination>
///   tr <m> <v> = <V-combination>
///   omega <v> <v> = <M-combination>
///   bv [<v>,<v>] = <V-combination>
ExtendingDatum parse_datum(const std::string& text);

/// Action document, resolved against an existing algebra:
///   space V { basis <name> ... }
///   tr <m> <v> = <V-combination>
ModuleAction parse_action(const MalcevAlgebra& M, const std::string& text);

/// Cocycle document for the twisted split extension, omega: M x M -> V:
///   omega <m> <m> = <V-combination>
Cocycle parse_cocycle(const MalcevAlgebra& M, const std::vector<std::string>& basis_v,
                      const std::string& text);

/// Linear-map document:  D <m> = <M-combination>  (unlisted images are zero).
Matrix parse_dmatrix(const MalcevAlgebra& M, const std::string& text);

std::string serialize_algebra(const MalcevAlgebra& A);
std::string serialize_datum(const ExtendingDatum& d);

/// Reinterprets a rational algebra mod p (denominators must be units).
MalcevAlgebra algebra_mod_p(const MalcevAlgebra& A, std::uint64_t p);

}  // namespace malcev

#endif
