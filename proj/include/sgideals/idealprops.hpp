#ifndef SGIDEALS_IDEALPROPS_HPP_
#define SGIDEALS_IDEALPROPS_HPP_

#include <span>
#include <vector>

#include "sgideals/semigroup.hpp"

namespace sgideals {

/// Property flags of one interior ideal I. Set-valued properties quantify
/// over the family of all interior ideals of the ambient semigroup:
///
///   semiprime:            A*A <= I implies A <= I
///   completely_semiprime: a^2 in I implies a in I      (over elements)
///   prime:                A*B <= I implies A <= I or B <= I
///   strongly_prime:       (A*B) & (B*A) <= I implies A <= I or B <= I
///   irreducible:          A & B == I implies A == I or B == I
///   strongly_irreducible: A & B <= I implies A <= I or B <= I
///   minimal:              no interior ideal is strictly contained in I
///   idempotent:           I*I == I
struct IdealProfile {
  ElemSet elements;
  bool proper = false;  // I != S
  bool semiprime = false;
  bool completely_semiprime = false;
  bool prime = false;
  bool strongly_prime = false;
  bool irreducible = false;
  bool strongly_irreducible = false;
  bool minimal = false;
  bool idempotent = false;
};

/// Profiles the interior ideal I. Throws std::invalid_argument when I is not
/// an interior ideal of s.
IdealProfile profile(Semigroup const& s, ElemSet const& ideal);

/// As above but quantifies over a caller-supplied family, which must be the
/// full interior-ideal family of s.
IdealProfile profile(Semigroup const& s, ElemSet const& ideal,
                     std::span<const ElemSet> interior_family);

/// An irreducible interior ideal containing `ideal` and avoiding `excluded`.
/// Scans the family {J interior : ideal <= J, excluded not in J}, keeps the
/// inclusion-maximal members, and returns the least bit-vector among them;
/// the result is re-checked for irreducibility before being returned.
/// Preconditions: `ideal` is interior and `excluded` lies outside it.
ElemSet irreducible_witness(Semigroup const& s, ElemSet const& ideal,
                            Elem excluded);

struct IrreducibleDecomposition {
  std::vector<ElemSet> components;  // ascending bit-vector order
  ElemSet intersection;
};

/// All proper irreducible interior ideals containing the proper interior
/// ideal `ideal`, together with their intersection.
IrreducibleDecomposition decompose_into_irreducibles(Semigroup const& s,
                                                     ElemSet const& ideal);

}  // namespace sgideals

#endif  // SGIDEALS_IDEALPROPS_HPP_
