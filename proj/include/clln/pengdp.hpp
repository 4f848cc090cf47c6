#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "clln/credal.hpp"

namespace clln {

struct LatticeOptions {
    double merge_tol = 1e-9;          // reachable sums closer than this are one state
    std::size_t max_states = 200000;  // hard per-step cap; overflow is an error
};

/// Reachable values of the partial sums S_0, ..., S_n when every step adds
/// one union-support point. Level k+1 is the deduplicated Minkowski sum of
/// level k with the support; merging keeps the smaller representative.
class SumLattice {
public:
    static SumLattice build(const CredalSet& cs, std::size_t n,
                            const LatticeOptions& opt = {});

    std::size_t steps() const noexcept { return levels_.size() - 1; }
    const std::vector<double>& level(std::size_t k) const { return levels_[k]; }

private:
    std::vector<std::vector<double>> levels_;
};

/// Peng sub-linear expectation E[g(S_n)] of a functional of the sum of n
/// IID-under-E variables, evaluated exactly by backward induction:
///   v_n(s) = g(s),
///   v_k(s) = max over priors P of sum_x P(x) v_{k+1}(s + x),
/// returning v_0(0). At every step nature re-optimizes the prior given the
/// past, which is what the recursive independence definition prescribes.
/// Errors: LatticeOverflow, NonFiniteFunctionValue, InvalidArgument (n = 0).
double peng_upper_sum(const CredalSet& cs, std::size_t n, const RealFn& g,
                      const LatticeOptions& opt = {});

/// Conjugate: -peng_upper_sum(cs, n, -g); the min-prior recursion.
double peng_lower_sum(const CredalSet& cs, std::size_t n, const RealFn& g,
                      const LatticeOptions& opt = {});

using PathFn = std::function<double(std::span<const double>)>;

struct OracleResult {
    double upper = 0.0;
    double lower = 0.0;
};

/// Independent oracle for the recursion: enumerates every strategy tree
/// (a prior index for each history node), computes the induced expectation
/// of phi over all support^n paths, and takes the exact max and min.
/// Exponentially expensive by design; rejects instances needing more than
/// max_evals = support^n * priors^nodes path evaluations.
/// Errors: OracleTooLarge, InvalidArgument.
OracleResult brute_force_strategy_oracle(const CredalSet& cs, std::size_t n,
                                         const PathFn& phi, double max_evals = 1e7);

/// Two-step joint capacities V(X in D, Y in G) and v(X in D, Y in G),
/// evaluated through the nested recursion with phi = I_D * I_G, against the
/// products V(D)V(G) and v(D)v(G).
struct FactorizationReport {
    double joint_upper = 0.0;
    double product_upper = 0.0;
    double joint_lower = 0.0;
    double product_lower = 0.0;
    bool upper_ok = false;
    bool lower_ok = false;
    bool all_ok() const { return upper_ok && lower_ok; }
};

FactorizationReport joint_capacity_factorization(const CredalSet& cs, const Event& D,
                                                 const Event& G, double tol = kExactTol);

struct LlnCurve {
    std::vector<std::pair<std::size_t, double>> points; // (n, E[phi(S_n/n)])
    double target = 0.0; // sup of phi over [mu_lower, mu_upper], 1e-4-step grid
};

/// Exact E[phi(S_n/n)] for each n, plus the limit value the weak law
/// predicts. Errors: LatticeOverflow.
LlnCurve weak_lln_curve(const CredalSet& cs, const RealFn& phi,
                        const std::vector<std::size_t>& ns,
                        const LatticeOptions& opt = {});

/// Exact value of prod_{k=1..n} max_P E_P[exp(lambda (X - mu_upper))] with
/// lambda = m log(1+n)/n. Identical distribution makes every factor equal,
/// so the product is factor^n, accumulated in log space.
double lemma4_value(const CredalSet& cs, double m, std::size_t n);

std::vector<std::pair<std::size_t, double>> lemma4_product_bound(
    const CredalSet& cs, double m, const std::vector<std::size_t>& ns);

/// The Chebyshev-type tail step: compares the exact upper capacity of
/// {S_n/n >= mu_upper + eps} against (1+n)^(-eps m) times the exponential
/// moment product at the same n.
struct ChebyshevReport {
    std::size_t n = 0;
    double eps = 0.0;
    double m = 0.0;
    double lambda = 0.0;
    double lhs = 0.0;          // V(S_n/n >= mu_upper + eps), exact
    double rhs = 0.0;          // (1+n)^(-eps m) * product bound at n
    double product_value = 0.0;
    bool holds = false;        // lhs <= rhs as computed
    bool regime_ok = false;    // eps * m > 1, the summable regime
};

ChebyshevReport chebyshev_capacity_bound(const CredalSet& cs, double eps, double m,
                                         std::size_t n, const LatticeOptions& opt = {});

/// Pointwise sanity predicate for e^x <= 1 + x + |x|^{1+alpha} e^{2|x|}.
/// Not used by any algorithm; checked on a grid by the tests.
bool exp_inequality_holds(double x, double alpha);

/// Smallest n >= 1 with c * n / log(1+n) > max_i |x_i - mu_upper|: from this
/// index on, truncation at that threshold keeps every support point, so the
/// truncation device is inactive for bounded supports.
std::size_t truncation_inactive_from(const CredalSet& cs, double c);

} // namespace clln
