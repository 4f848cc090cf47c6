#pragma once

#include "clln/credal.hpp"

namespace clln {

/// The (E, conjugate) or (V, v) pair for one query.
struct UpperLowerPair {
    double upper = 0.0;
    double lower = 0.0;
};

/// E[f] = max over priors of E_P[f]. Errors: NonFiniteFunctionValue.
double upper_expectation(const CredalSet& cs, const RealFn& f);

/// Conjugate expectation: -E[-f], which equals the min over priors.
double lower_expectation(const CredalSet& cs, const RealFn& f);

UpperLowerPair expectation_pair(const CredalSet& cs, const RealFn& f);

/// V(A) = max_P P(A) and v(A) = min_P P(A). Errors: EventOutsideSupport.
double upper_capacity(const CredalSet& cs, const Event& A);
double lower_capacity(const CredalSet& cs, const Event& A);
UpperLowerPair capacity_pair(const CredalSet& cs, const Event& A);

/// Choquet integral of the identity against V (upper) or v (lower),
/// evaluated in closed form on the finite support: with sorted distinct
/// values x_1 < ... < x_m,
///   C[X] = x_1 + sum_{i>=2} (x_i - x_{i-1}) * Cap(X >= x_i).
double choquet_integral_upper(const CredalSet& cs);
double choquet_integral_lower(const CredalSet& cs);

/// One check of the four defining axioms of a sub-linear expectation.
/// The monotonicity clause is an implication; when f and g are not
/// pointwise ordered on the support it holds vacuously.
struct AxiomsReport {
    bool pointwise_ordered = false; // was f >= g on every support point?
    bool monotonicity = true;
    bool constant_preserving = true;
    bool sub_additivity = true;
    bool positive_homogeneity = true;

    bool all_ok() const {
        return monotonicity && constant_preserving && sub_additivity && positive_homogeneity;
    }
};

/// Verifies, each to 1e-12:
///   (a) f >= g pointwise  =>  E[f] >= E[g]
///   (b) E[c] = c
///   (c) E[f+g] <= E[f] + E[g]
///   (d) E[lambda f] = lambda E[f], lambda >= 0
AxiomsReport axioms_check(const CredalSet& cs, const RealFn& f, const RealFn& g,
                          double lambda, double c);

} // namespace clln
