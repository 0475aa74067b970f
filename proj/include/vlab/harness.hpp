#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vlab/functionals.hpp"
#include "vlab/pyramids.hpp"

namespace vlab {

/// Reproducible budget for a randomized check. Identical budgets generate
/// identical trials; trial streams are seeded independently per trial index,
/// so results do not depend on evaluation order.
struct TrialBudget {
    long trials = 100;
    int dimension = 2;
    long coefficient_bound = 4;
    std::uint64_t seed = 0;
};

/// The transformation laws a valuation can be tested against.
enum class EquivarianceMode {
    invariant,            // mu(phi P) = mu(P),                 det phi = 1
    sl_covariant,         // mu(phi P) = phi mu(P),             det phi = 1
    sl_contravariant,     // mu(phi P) = phi^{-t} mu(P),        det phi = 1
    vl_covariant,         // mu(phi P) = phi mu(P),             det phi = +-1
    vl_signum_covariant,  // mu(phi P) = (det phi) phi mu(P),   det phi = +-1
    gl_covariant,         // mu(phi P) = |det phi| phi mu(P) phi^t
    gl_contravariant,     // mu(phi P) = |det phi|^-1 phi^-t mu(P) phi^-1
};

const char* equivariance_mode_name(EquivarianceMode mode);
EquivarianceMode equivariance_mode_from_string(const std::string& name);

/// The exact right-hand side of the mode's law for a given map and value.
Value expected_equivariant_value(EquivarianceMode mode, const LinearMap& phi, const Value& value);

/// Everything needed to replay a failed trial.
struct Counterexample {
    std::string law;
    long trial = -1;
    std::vector<std::pair<std::string, Polytope>> polytopes;
    std::vector<std::pair<std::string, Rational>> scalars;
    std::vector<std::pair<std::string, Vector>> vectors;
    std::optional<LinearMap> map;
    std::optional<Value> lhs;
    std::optional<Value> rhs;
};

struct CheckReport {
    bool passed = true;
    long trials = 0;
    std::uint64_t seed = 0;
    std::optional<Counterexample> counterexample;
};

/// Deterministic per-trial random stream.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, long trial);

    std::uint64_t next_u64();
    long uniform_int(long lo, long hi); // inclusive bounds
    Rational rational(long bound);          // numerator in [-bound, bound], denominator in [1, bound]
    Rational positive_rational(long bound); // numerator, denominator in [1, bound]
    Rational unit_fraction();               // p/q with 2 <= q <= 4, 0 < p < q
    Vector point(int dim, long bound);

private:
    std::mt19937_64 eng_;
};

/// Random hull with the origin strictly inside, mixed 1:4 with structured
/// families (scaled cubes, cross-polytopes, straight double pyramids).
/// GeneratorExhausted after 100 failed attempts.
Polytope random_polytope(TrialRng& rng, int dim, long bound, long trial);
Polytope random_polytope(const TrialBudget& budget, long trial);

/// Product of up to six elementary shears and signed permutations with exact
/// determinant equal to det_sign (+1 or -1; 0 picks a sign at random).
LinearMap random_unimodular(TrialRng& rng, int dim, int det_sign);
LinearMap random_unimodular(const TrialBudget& budget, int det_sign);

/// Unimodular times a rational diagonal with entries in [1/3, 3].
LinearMap random_gl(TrialRng& rng, int dim);

/// Slab split of p along a random integer direction; both pieces and their
/// overlap keep the origin interior.
std::pair<Polytope, Polytope> random_slab_split(TrialRng& rng, const Polytope& p);

/// mu(K u L) + mu(K n L) = mu(K) + mu(L) on random slab-split pairs, exact.
CheckReport check_valuation_identity(const ValuationHandle& mu, const TrialBudget& budget);

/// mu(phi P) against the mode's law on random polytopes and maps, exact.
CheckReport check_equivariance(const ValuationHandle& mu, EquivarianceMode mode,
                               const TrialBudget& budget);

/// mu(r P) = r^q mu(P) for random rational r > 0; integer q only.
CheckReport check_homogeneity(const ValuationHandle& mu, const Rational& q,
                              const TrialBudget& budget);

/// Overlapping double-pyramid caps over a common base:
/// K = [base, -c(x,1), t(y,1)], L = [base, -s(y,1), d(y,1)] with
/// 0 < t <= d, 0 < s <= c. Union and intersection are verified exactly to be
/// [base, -c(x,1), d(y,1)] and [base, -s(y,1), t(y,1)]; InvalidConfiguration
/// otherwise.
std::pair<Polytope, Polytope> gen_pyramid_cap_pair(const Polytope& base, const Rational& c,
                                                   const Rational& d, const Rational& s,
                                                   const Rational& t, const Vector& x,
                                                   const Vector& y);

/// Re-evaluates a stored counterexample; true when the violation reproduces.
bool replay_counterexample(const ValuationHandle& mu, const Counterexample& cex);

} // namespace vlab
