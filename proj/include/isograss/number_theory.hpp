#pragma once

#include "isograss/gaussint.hpp"
#include "isograss/scalar.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace isograss::nt {

inline constexpr unsigned long kDefaultRhoBudget = 1ul << 22;

/// Prime factorization of |n| (n != 0): trial division, then Pollard-Brent
/// rho with GMP's probabilistic primality test. Factors are returned in
/// increasing order. Throws WitnessUnavailable if a composite cofactor
/// resists the iteration budget (iterations per rho polynomial; a budget
/// below the default also tries fewer polynomials).
std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n,
                                                   unsigned long rho_budget = kDefaultRhoBudget);

/// While alive, caps the rho budget of every factorization on this thread,
/// including those made inside the conic solvers. Nested scopes keep the
/// smaller cap.
class ScopedFactorBudget {
public:
  explicit ScopedFactorBudget(unsigned long budget);
  ~ScopedFactorBudget();
  ScopedFactorBudget(const ScopedFactorBudget&) = delete;
  ScopedFactorBudget& operator=(const ScopedFactorBudget&) = delete;

private:
  unsigned long saved_;
};

/// r with r^2 = a (mod p), p an odd prime; false if a is a non-residue.
bool sqrt_mod_prime(const mpz_class& a, const mpz_class& p, mpz_class& r);

/// n = core * root^2 with core squarefree and carrying the sign of n.
void squarefree_split(const mpz_class& n, mpz_class& core, mpz_class& root);

/// A Gaussian prime with its multiplicity.
struct GaussPrime {
  GaussInt prime;
  unsigned exp = 0;
};

/// alpha = unit * prod(prime^exp). alpha != 0.
std::vector<GaussPrime> factor_gaussian(const GaussInt& alpha, GaussInt& unit);

/// alpha = core * root^2 with core squarefree in Z[i] and its unit part
/// reduced to 1 or i (since -1 = i^2 is a square).
void squarefree_split(const GaussInt& alpha, GaussInt& core, GaussInt& root);

/// Extended Euclid in Z[i]: x a + y b = g.
GaussInt ext_gcd(const GaussInt& a, const GaussInt& b, GaussInt& x, GaussInt& y);

/// A nontrivial rational solution of a x^2 + b y^2 = z^2 (a, b nonzero), or
/// nullopt if none exists. Legendre descent.
std::optional<std::array<mpq_class, 3>> solve_conic(const mpq_class& a, const mpq_class& b);

/// A nontrivial solution over Q(i) of a x^2 + b y^2 = z^2 (a, b nonzero),
/// or nullopt if none exists. Legendre descent in the Euclidean ring Z[i].
std::optional<std::array<Scalar, 3>> solve_conic_gaussian(const Scalar& a, const Scalar& b);

}  // namespace isograss::nt
