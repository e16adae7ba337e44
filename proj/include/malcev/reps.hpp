#ifndef MALCEV_REPS_HPP
#define MALCEV_REPS_HPP

#include "malcev/algebra.hpp"
#include "malcev/bilinear.hpp"

namespace malcev {

/// Left action of an algebra on a carrier space V, as the tensor of
/// e_i |> v_a in V-coordinates.
struct ModuleAction {
  std::vector<std::string> basis_v;
  BilinearMap act;  // M x V -> V

  int carrier_dim() const { return static_cast<int>(basis_v.size()); }
  static ModuleAction zero(const MalcevAlgebra& A, int dim_v);
  static ModuleAction adjoint(const MalcevAlgebra& A);
};

/// Anti-symmetric bilinear map M x M -> V entering the twisted bracket.
struct Cocycle {
  SkewBilinearMap omega;  // M x M -> V

  static Cocycle zero(const MalcevAlgebra& A, int dim_v);
};

/// Evaluates the left-module identity
///   [x,z] |> (y |> q) = [[x,y],z] |> q - x |> ([y,z] |> q) + z |> (y |> (x |> q))
/// on all basis tuples (x,y,z,q).
VerificationReport check_module(const MalcevAlgebra& A, const ModuleAction& act,
                                int witness_cap = kDefaultWitnessCap);

/// Split extension of A by the carrier of `act`:
/// [(x,u),(y,v)] = ([x,y], x |> v - y |> u).
MalcevAlgebra semidirect(const MalcevAlgebra& A, const ModuleAction& act);

/// Evaluates the 2-cocycle identity for `w` over a valid module; throws
/// ModuleAxiomFailed when `act` does not pass check_module.
VerificationReport check_cocycle(const MalcevAlgebra& A, const ModuleAction& act,
                                 const Cocycle& w,
                                 int witness_cap = kDefaultWitnessCap);

/// Twisted split extension: [(x,u),(y,v)] = ([x,y], x |> v - y |> u + w(x,y)).
MalcevAlgebra cocycle_extension(const MalcevAlgebra& A, const ModuleAction& act,
                                const Cocycle& w);

}  // namespace malcev

#endif
