#pragma once

#include "isograss/form_space.hpp"
#include "isograss/invariants.hpp"
#include "isograss/orbits.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace isograss {

/// Deterministic pseudo-random source: std::mt19937_64 (a fixed, documented
/// state transition). Ranges are mapped by plain modulo reduction, so the
/// output stream depends only on the seed, never on the standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Integer in [lo, hi].
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  /// num/den with |num| <= magnitude and 1 <= den <= magnitude.
  mpq_class rational(long magnitude) {
    mpq_class q(uniform(-magnitude, magnitude), uniform(1, magnitude));
    q.canonicalize();
    return q;
  }

private:
  std::mt19937_64 engine_;
};

/// Derive an independent seed for sub-task `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

enum class Factor { U, W };

/// Gram matrix and dimension of one factor of H.
Matrix factor_gram(const FormSpace& space, Factor f);
/// Closed-form dimension of the isometry group of one factor (real
/// dimension; k-dimension for ComplexOrthogonal).
std::int64_t factor_group_dim(const FormSpace& space, Factor f);

/// A basis of {A : conj(A)^T G + G A = 0} for one factor. Over Q for
/// RealOrthogonal and Symplectic, over Q (realified: Re/Im unknowns) for
/// Unitary, over Q(i) for ComplexOrthogonal.
struct LieAlgebraBasis {
  CaseTag case_tag = CaseTag::RealOrthogonal;
  Factor factor = Factor::U;
  std::vector<Matrix> basis;
};

/// Solves the defining linear system. Throws ConsistencyError if the basis
/// size differs from factor_group_dim.
LieAlgebraBasis lie_algebra(const FormSpace& space, Factor f);

/// Rank of A -> (A s_1, ..., A s_r) mod S over the Lie algebra of H, i.e.
/// the dimension of the H-orbit through S. Throws PreconditionError if S is
/// not isotropic.
std::int64_t tangent_orbit_dim(const Subspace& s);

/// (I - A)(I + A)^{-1} for a random element A of the factor's Lie algebra
/// (coefficients num/den bounded by `magnitude`; magnitude 0 gives A = 0 and
/// so the identity). Deterministic in `seed`.
/// Resamples a bounded number of times if I + A is singular.
Matrix cayley_sample(const FormSpace& space, Factor f, std::uint64_t seed, long magnitude = 2);

/// Cayley samples on both factors.
IsometryElement cayley_element(const FormSpace& space, std::uint64_t seed, long magnitude = 2);

/// A diagonal +-1 isometry together with its component label.
struct SignElement {
  IsometryElement element;
  /// RealOrthogonal: (t1, t2, t3, t4) = signs on the (U+, U-, W+, W-)
  /// parts, as in the labelling H^{t1 t2}_{t3 t4}. ComplexOrthogonal:
  /// (det on U, det on W, +1, +1). Unitary/Symplectic: all +1.
  std::array<int, 4> label{1, 1, 1, 1};
  /// Coset of H ∩ G_0 in H as a bit mask (see predicted_stabilizer_cosets).
  int coset = 0;
};

/// Negate exactly the listed ambient basis vectors (0-based indices).
/// Throws InvalidArgument on an index out of range or if the result is not
/// an isometry (a Symplectic e_i flipped without its f_i).
SignElement sign_element(const FormSpace& space, const std::vector<std::size_t>& flips);

/// One sign representative per connected component of H: 16 for
/// RealOrthogonal, 4 for ComplexOrthogonal, 1 otherwise. Deterministic order.
std::vector<SignElement> component_representatives(const FormSpace& space);

/// Cosets (bit masks) of H ∩ G_0 met by the diagonal sign isometries that
/// stabilize S, found by exhaustive search over all sign patterns.
std::vector<int> stabilizer_sign_cosets(const Subspace& s);

/// A random r-dimensional isotropic subspace of a symplectic space, built one
/// random small-integer vector of S^perp at a time.
Subspace random_symplectic_isotropic(const SpacePtr& space, int r, std::uint64_t seed);

/// A random subspace in the orbit of t: h·canonical_rep(t) for a random
/// h = Cayley sample composed with a random component representative.
Subspace random_in_orbit(const SpacePtr& space, const OrbitParams& t, std::uint64_t seed,
                         long magnitude = 2);

}  // namespace isograss
