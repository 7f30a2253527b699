#pragma once

#include "isograss/form_space.hpp"
#include "isograss/orbits.hpp"

namespace isograss {

/// Witt extension on one factor of the space (U or W): a full isometry g of
/// that factor with domain * g^T = image. Rows are in factor coordinates.
Matrix witt_extend_factor(const FormSpace& space, bool factor_u, const Matrix& domain,
                          const Matrix& image);

/// An element (g1, g2) of H with (g1 (+) g2)·S = S2.
///
/// Builds matched decompositions of both subspaces into S∩U, S∩W, a
/// complement of those inside the pull-back of Rad(proj_U S), and a
/// nondegenerate part whose restricted forms are matched by an explicit
/// congruence; the resulting partial isometries on each factor are then
/// Witt-extended. Throws PreconditionError if the two tuples differ and
/// WitnessUnavailable if the nondegenerate parts are not congruent over the
/// exact field (possible for rational forms that are only isometric over R).
IsometryElement orbit_witness(const Subspace& s, const Subspace& s2);

}  // namespace isograss
