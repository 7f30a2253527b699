#pragma once

#include "isograss/form_space.hpp"

#include <compare>
#include <string>
#include <vector>

namespace isograss {

/// The orbit invariant. Signed cases use (r_U, r_W, a, a_U, a_W); the
/// field-agnostic cases use (r_U, r_W, a, b). Unused members stay zero.
struct OrbitParams {
  CaseTag case_tag = CaseTag::RealOrthogonal;
  int r_u = 0, r_w = 0, a = 0, a_u = 0, a_w = 0, b = 0;

  static OrbitParams signed_tuple(CaseTag c, int r_u, int r_w, int a, int a_u, int a_w) {
    return {c, r_u, r_w, a, a_u, a_w, 0};
  }
  static OrbitParams unsigned_tuple(CaseTag c, int r_u, int r_w, int a, int b) {
    return {c, r_u, r_w, a, 0, 0, b};
  }
  /// Build from the entry list (5 entries for signed cases, 4 otherwise).
  static OrbitParams from_entries(CaseTag c, const std::vector<int>& e);

  std::vector<int> entries() const;
  /// dim S = sum of the entries.
  int total() const;
  /// Number of nondegenerate pairs: a_U + a_W, or b.
  int k() const { return is_signed_case(case_tag) ? a_u + a_w : b; }
  std::string to_string() const;

  friend bool operator==(const OrbitParams& x, const OrbitParams& y) {
    return x.case_tag == y.case_tag && x.entries() == y.entries();
  }
  friend std::strong_ordering operator<=>(const OrbitParams& x, const OrbitParams& y) {
    return x.entries() <=> y.entries();
  }
};

/// The constraint system of the case; false on any violation or negative entry.
bool validate_params(CaseTag c, const GroupParams& g, const OrbitParams& t);

/// The orbit tuple of an isotropic subspace, recomputed from both sides of
/// the split. Throws PreconditionError if S is not isotropic, and
/// ConsistencyError if the U-side and W-side values disagree or the result
/// violates the constraint system.
OrbitParams classify(const Subspace& s);

/// Same tuple computed from explicit Subspace objects (S∩U, proj_U S,
/// Rad(proj_U S), ...) exactly as the definitions read. Slower; used to
/// cross-check `classify`.
OrbitParams classify_by_definition(const Subspace& s);

/// The G-orbit parameter (s, s+, s-) of any subspace of a signed space.
IsometryType isometry_type(const Subspace& s);

}  // namespace isograss
