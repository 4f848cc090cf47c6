#include "clln/sublin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace clln {

double upper_expectation(const CredalSet& cs, const RealFn& f) {
    double best = -std::numeric_limits<double>::infinity();
    for (const FinitePmf& p : cs.priors())
        best = std::max(best, pmf_expectation(p, f));
    return best;
}

double lower_expectation(const CredalSet& cs, const RealFn& f) {
    return -upper_expectation(cs, [&](double x) { return -f(x); });
}

UpperLowerPair expectation_pair(const CredalSet& cs, const RealFn& f) {
    return UpperLowerPair{upper_expectation(cs, f), lower_expectation(cs, f)};
}

namespace {

double event_prob(const FinitePmf& p, const Event& A) {
    double acc = 0.0;
    for (const Atom& a : p.atoms())
        if (A.contains(a.value)) acc += a.prob;
    return acc;
}

} // namespace

double upper_capacity(const CredalSet& cs, const Event& A) {
    validate_event(cs, A);
    double best = 0.0;
    for (const FinitePmf& p : cs.priors()) best = std::max(best, event_prob(p, A));
    return best;
}

double lower_capacity(const CredalSet& cs, const Event& A) {
    validate_event(cs, A);
    double best = 1.0;
    for (const FinitePmf& p : cs.priors()) best = std::min(best, event_prob(p, A));
    return best;
}

UpperLowerPair capacity_pair(const CredalSet& cs, const Event& A) {
    return UpperLowerPair{upper_capacity(cs, A), lower_capacity(cs, A)};
}

namespace {

// Cap(X >= x_i) for every support value, Cap = max or min over priors.
std::vector<double> tail_capacities(const CredalSet& cs, bool upper) {
    const std::vector<double>& support = cs.union_support();
    std::vector<double> caps(support.size(), upper ? 0.0 : 1.0);
    for (const FinitePmf& p : cs.priors()) {
        // suffix mass of this prior against the union support
        std::vector<double> suffix(support.size(), 0.0);
        double acc = 0.0;
        std::size_t ai = p.size();
        for (std::size_t i = support.size(); i-- > 0;) {
            while (ai > 0 && p.value(ai - 1) >= support[i] - kValueMergeTol) {
                acc += p.prob(ai - 1);
                --ai;
            }
            suffix[i] = acc;
        }
        for (std::size_t i = 0; i < support.size(); ++i)
            caps[i] = upper ? std::max(caps[i], suffix[i]) : std::min(caps[i], suffix[i]);
    }
    return caps;
}

double choquet_identity(const CredalSet& cs, bool upper) {
    const std::vector<double>& xs = cs.union_support();
    std::vector<double> caps = tail_capacities(cs, upper);
    double c = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i)
        c += (xs[i] - xs[i - 1]) * caps[i];
    return c;
}

} // namespace

double choquet_integral_upper(const CredalSet& cs) { return choquet_identity(cs, true); }
double choquet_integral_lower(const CredalSet& cs) { return choquet_identity(cs, false); }

AxiomsReport axioms_check(const CredalSet& cs, const RealFn& f, const RealFn& g,
                          double lambda, double c) {
    if (!(lambda >= 0.0)) fail("InvalidArgument", "lambda must be nonnegative");

    AxiomsReport rep;
    const std::vector<double>& support = cs.union_support();

    rep.pointwise_ordered = true;
    for (double x : support)
        if (!(f(x) >= g(x))) {
            rep.pointwise_ordered = false;
            break;
        }

    double ef = upper_expectation(cs, f);
    double eg = upper_expectation(cs, g);

    rep.monotonicity = !rep.pointwise_ordered || ef >= eg - kExactTol;
    rep.constant_preserving =
        std::abs(upper_expectation(cs, [&](double) { return c; }) - c) <= kExactTol;
    double efg = upper_expectation(cs, [&](double x) { return f(x) + g(x); });
    rep.sub_additivity = efg <= ef + eg + kExactTol;
    double elf = upper_expectation(cs, [&](double x) { return lambda * f(x); });
    rep.positive_homogeneity = std::abs(elf - lambda * ef) <= kExactTol;
    return rep;
}

} // namespace clln
