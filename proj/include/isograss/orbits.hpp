#pragma once

#include "isograss/form_space.hpp"
#include "isograss/invariants.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace isograss {

/// Everything known about one H-orbit. Dimensions are real dimensions for
/// RealOrthogonal, Unitary and Symplectic, and k-dimensions (complex
/// dimensions) for ComplexOrthogonal.
struct OrbitInfo {
  OrbitParams params;
  std::int64_t dim_h = 0;
  std::int64_t dim_stab = 0;
  std::int64_t dim_orbit = 0;
  bool is_open = false;
  int component_count = 1;
};

/// A closed-form stabilizer dimension; exposed as a type so that the
/// verification harness can be pointed at an alternative formula.
using StabilizerFormula =
    std::function<std::int64_t(CaseTag, const GroupParams&, const OrbitParams&)>;

/// Largest isotropic dimension: min(p, q), floor(n/2) or n.
int max_isotropic_dim(CaseTag c, const GroupParams& g);

/// dim H = dim G1 + dim G2.
std::int64_t dim_group(CaseTag c, const GroupParams& g);

/// dim H_S for S in the orbit of t. Throws InvalidArgument for invalid t and
/// ConsistencyError if the closed form does not evaluate to an integer in
/// [0, dim H].
std::int64_t dim_stabilizer(CaseTag c, const GroupParams& g, const OrbitParams& t);

/// The unitary stabilizer dimension exactly as printed in the source
/// literature, evaluated as a rational and returned doubled (2 * value) so
/// half-integers survive. Kept only as a known-bad fixture.
std::int64_t unitary_stabilizer_dim_published_doubled(const GroupParams& g, const OrbitParams& t);

/// StabilizerFormula wrapper around the published unitary form (other cases
/// fall through to `dim_stabilizer`). Throws ConsistencyError on a
/// half-integer value.
std::int64_t unitary_stabilizer_dim_published(CaseTag c, const GroupParams& g,
                                              const OrbitParams& t);

/// All valid tuples with entry sum r, in lexicographic order.
std::vector<OrbitParams> valid_tuples(CaseTag c, const GroupParams& g, int r);

/// Every orbit in Gr_G(r), sorted lexicographically, fully populated.
/// Throws InvalidArgument if r is out of range, ConsistencyError if the
/// closed-form open set disagrees with the dimension argmax.
std::vector<OrbitInfo> enumerate_orbits(CaseTag c, const GroupParams& g, int r);

OrbitInfo orbit_info(CaseTag c, const GroupParams& g, const OrbitParams& t);

/// Canonical isotropic representative of the orbit of t.
Subspace canonical_rep(const SpacePtr& space, const OrbitParams& t);

/// Open orbits from the case's closed-form theorem, cross-checked against
/// the argmax of orbit dimension (ConsistencyError on disagreement).
std::vector<OrbitParams> open_orbits(CaseTag c, const GroupParams& g, int r);
/// The closed form alone.
std::vector<OrbitParams> open_orbits_closed_form(CaseTag c, const GroupParams& g, int r);
/// The argmax of dim_group - formula over the valid tuples.
std::vector<OrbitParams> open_orbits_by_argmax(CaseTag c, const GroupParams& g, int r,
                                               const StabilizerFormula& formula = dim_stabilizer);

/// Number N of (H ∩ G_0)-orbits in the H-orbit of t, from the component
/// tables: RealOrthogonal table rows, ComplexOrthogonal "r + a = n/2",
/// 1 for the connected cases.
int component_count(CaseTag c, const GroupParams& g, const OrbitParams& t);

/// The subgroup of H/(H∩G_0) generated by the cosets that the three
/// constructive claims (unused positive vector, unused negative vector,
/// sign pair on a used vector) show H_S meets. Cosets are encoded as bit
/// masks: bit 0 = sign on positive vectors, bit 1 = sign on negative
/// vectors (RealOrthogonal); bit 0 = determinant sign (ComplexOrthogonal).
std::vector<int> predicted_stabilizer_cosets(CaseTag c, const GroupParams& g,
                                             const OrbitParams& t);

/// An element (h1, h2) of H = G1 x G2.
struct IsometryElement {
  Matrix h1;
  Matrix h2;
  /// h1 (+) h2 acting on all of V.
  Matrix full() const { return Matrix::direct_sum(h1, h2); }
  static IsometryElement identity(const FormSpace& s);
  IsometryElement compose(const IsometryElement& other) const {  // this ∘ other
    return {h1 * other.h1, h2 * other.h2};
  }
};

/// True when h1 and h2 preserve their factor Gram matrices.
bool is_in_group(const FormSpace& s, const IsometryElement& h);

/// The image h·S.
Subspace apply(const IsometryElement& h, const Subspace& s);

/// True iff (h1 (+) h2)·S = S. Throws InvalidArgument on shape mismatch.
bool is_in_stabilizer(const IsometryElement& h, const Subspace& s);

}  // namespace isograss
