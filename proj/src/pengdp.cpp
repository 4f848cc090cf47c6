#include "clln/pengdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clln/sublin.hpp"

namespace clln {

SumLattice SumLattice::build(const CredalSet& cs, std::size_t n, const LatticeOptions& opt) {
    if (n == 0) fail("InvalidArgument", "lattice needs n >= 1");
    SumLattice lat;
    lat.levels_.reserve(n + 1);
    lat.levels_.push_back({0.0});
    const std::vector<double>& support = cs.union_support();
    for (std::size_t k = 0; k < n; ++k) {
        const std::vector<double>& cur = lat.levels_.back();
        std::vector<double> next;
        next.reserve(cur.size() * support.size());
        for (double s : cur)
            for (double x : support) next.push_back(s + x);
        std::sort(next.begin(), next.end());
        std::vector<double> merged;
        merged.reserve(next.size());
        for (double v : next)
            if (merged.empty() || v - merged.back() > opt.merge_tol) merged.push_back(v);
        if (merged.size() > opt.max_states)
            fail("LatticeOverflow", "sum lattice exceeds " + std::to_string(opt.max_states) +
                                        " states at step " + std::to_string(k + 1));
        lat.levels_.push_back(std::move(merged));
    }
    return lat;
}

namespace {

// Representative of value v inside a merged level. Every child of the
// previous level sits within merge_tol of some representative, by
// construction of the lattice.
std::size_t locate(const std::vector<double>& level, double v, double tol) {
    auto it = std::lower_bound(level.begin(), level.end(), v);
    std::size_t best = static_cast<std::size_t>(-1);
    double best_d = std::numeric_limits<double>::infinity();
    if (it != level.end()) {
        best = static_cast<std::size_t>(it - level.begin());
        best_d = std::abs(*it - v);
    }
    if (it != level.begin()) {
        double d = std::abs(*(it - 1) - v);
        if (d < best_d) {
            best = static_cast<std::size_t>(it - level.begin()) - 1;
            best_d = d;
        }
    }
    if (best == static_cast<std::size_t>(-1) || best_d > 4.0 * tol + 1e-300)
        fail("InvalidArgument", "internal lattice lookup failed");
    return best;
}

// Per-prior atom list resolved against union-support slots.
struct SlotPrior {
    std::vector<std::size_t> slots;
    std::vector<double> probs;
};

std::vector<SlotPrior> slot_priors(const CredalSet& cs) {
    std::vector<SlotPrior> out;
    out.reserve(cs.priors().size());
    for (const FinitePmf& p : cs.priors()) {
        SlotPrior sp;
        for (const Atom& a : p.atoms()) {
            sp.slots.push_back(cs.support_index(a.value));
            sp.probs.push_back(a.prob);
        }
        out.push_back(std::move(sp));
    }
    return out;
}

double peng_extremal_sum(const CredalSet& cs, std::size_t n, const RealFn& g,
                         bool maximize, const LatticeOptions& opt) {
    if (n == 0) fail("InvalidArgument", "peng sum needs n >= 1");
    SumLattice lat = SumLattice::build(cs, n, opt);
    const std::vector<double>& support = cs.union_support();
    std::vector<SlotPrior> priors = slot_priors(cs);

    std::vector<double> vals(lat.level(n).size());
    for (std::size_t j = 0; j < vals.size(); ++j) {
        double y = g(lat.level(n)[j]);
        if (!std::isfinite(y))
            fail("NonFiniteFunctionValue", "functional not finite on reachable sums");
        vals[j] = y;
    }

    std::vector<double> child(support.size());
    for (std::size_t k = n; k-- > 0;) {
        const std::vector<double>& cur = lat.level(k);
        const std::vector<double>& nxt = lat.level(k + 1);
        std::vector<double> out(cur.size());
        for (std::size_t j = 0; j < cur.size(); ++j) {
            for (std::size_t u = 0; u < support.size(); ++u)
                child[u] = vals[locate(nxt, cur[j] + support[u], opt.merge_tol)];
            double best = maximize ? -std::numeric_limits<double>::infinity()
                                   : std::numeric_limits<double>::infinity();
            for (const SlotPrior& sp : priors) {
                double acc = 0.0;
                for (std::size_t a = 0; a < sp.slots.size(); ++a)
                    acc += sp.probs[a] * child[sp.slots[a]];
                best = maximize ? std::max(best, acc) : std::min(best, acc);
            }
            out[j] = best;
        }
        vals = std::move(out);
    }
    return vals[0];
}

} // namespace

double peng_upper_sum(const CredalSet& cs, std::size_t n, const RealFn& g,
                      const LatticeOptions& opt) {
    return peng_extremal_sum(cs, n, g, true, opt);
}

double peng_lower_sum(const CredalSet& cs, std::size_t n, const RealFn& g,
                      const LatticeOptions& opt) {
    return -peng_upper_sum(cs, n, [&](double s) { return -g(s); }, opt);
}

OracleResult brute_force_strategy_oracle(const CredalSet& cs, std::size_t n,
                                         const PathFn& phi, double max_evals) {
    if (n == 0) fail("InvalidArgument", "oracle needs n >= 1");
    if (n > 24) fail("OracleTooLarge", "oracle depth capped well below n = " + std::to_string(n));
    const std::size_t m = cs.union_support().size();
    const std::size_t p = cs.priors().size();

    // History nodes at depths 0..n-1, indexed breadth-first; node_base[k]
    // is the index of the first depth-k node.
    std::vector<std::size_t> node_base(n, 0);
    std::size_t nodes = 0;
    {
        std::size_t width = 1;
        for (std::size_t k = 0; k < n; ++k) {
            node_base[k] = nodes;
            nodes += width;
            if (width > max_evals) fail("OracleTooLarge", "history tree too wide");
            width *= m;
        }
    }
    double evals = std::pow(static_cast<double>(m), static_cast<double>(n)) *
                   std::pow(static_cast<double>(p), static_cast<double>(nodes));
    if (!(evals <= max_evals))
        fail("OracleTooLarge", "strategy enumeration would need about " +
                                   std::to_string(evals) + " path evaluations");

    // Per-prior probabilities per union-support slot (0 when the prior
    // lacks that value).
    std::vector<std::vector<double>> prob(p, std::vector<double>(m, 0.0));
    for (std::size_t q = 0; q < p; ++q)
        for (const Atom& a : cs.priors()[q].atoms())
            prob[q][cs.support_index(a.value)] = a.prob;

    // Enumerate all m^n paths once: their phi values and visited node ids.
    std::size_t paths = 1;
    for (std::size_t k = 0; k < n; ++k) paths *= m;
    std::vector<double> phi_val(paths);
    std::vector<std::size_t> path_nodes(paths * n);
    std::vector<std::size_t> path_syms(paths * n);
    std::vector<double> point(n);
    for (std::size_t pi = 0; pi < paths; ++pi) {
        std::size_t rem = pi;
        std::size_t node = 0; // within depth k the history digits form the offset
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t sym = rem % m;
            rem /= m;
            path_nodes[pi * n + k] = node_base[k] + node;
            path_syms[pi * n + k] = sym;
            point[k] = cs.union_support()[sym];
            node = node * m + sym;
        }
        double y = phi(std::span<const double>(point.data(), n));
        if (!std::isfinite(y)) fail("NonFiniteFunctionValue", "phi not finite on a path");
        phi_val[pi] = y;
    }

    std::vector<std::size_t> assign(nodes, 0);
    OracleResult res{-std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity()};
    while (true) {
        double expect = 0.0;
        for (std::size_t pi = 0; pi < paths; ++pi) {
            double w = phi_val[pi];
            if (w == 0.0) continue;
            double pr = 1.0;
            for (std::size_t k = 0; k < n; ++k)
                pr *= prob[assign[path_nodes[pi * n + k]]][path_syms[pi * n + k]];
            expect += w * pr;
        }
        res.upper = std::max(res.upper, expect);
        res.lower = std::min(res.lower, expect);

        std::size_t pos = 0;
        while (pos < nodes && assign[pos] + 1 == p) assign[pos++] = 0;
        if (pos == nodes) break;
        ++assign[pos];
    }
    return res;
}

namespace {

// E[phi(X, Y)] for two IID-under-E steps, by the recursion: first the
// expectation in Y at each fixed x, then the expectation in X of that.
double peng_upper_two_step(const CredalSet& cs,
                           const std::function<double(double, double)>& phi) {
    return upper_expectation(cs, [&](double x) {
        return upper_expectation(cs, [&](double y) { return phi(x, y); });
    });
}

} // namespace

FactorizationReport joint_capacity_factorization(const CredalSet& cs, const Event& D,
                                                 const Event& G, double tol) {
    validate_event(cs, D);
    validate_event(cs, G);

    auto indicator = [&](double x, double y) {
        return D.contains(x) && G.contains(y) ? 1.0 : 0.0;
    };

    FactorizationReport rep;
    rep.joint_upper = peng_upper_two_step(cs, indicator);
    rep.product_upper = upper_capacity(cs, D) * upper_capacity(cs, G);
    rep.joint_lower = -peng_upper_two_step(
        cs, [&](double x, double y) { return -indicator(x, y); });
    rep.product_lower = lower_capacity(cs, D) * lower_capacity(cs, G);

    rep.upper_ok = std::abs(rep.joint_upper - rep.product_upper) <= tol;
    rep.lower_ok = std::abs(rep.joint_lower - rep.product_lower) <= tol;
    return rep;
}

LlnCurve weak_lln_curve(const CredalSet& cs, const RealFn& phi,
                        const std::vector<std::size_t>& ns, const LatticeOptions& opt) {
    LlnCurve curve;
    for (std::size_t n : ns) {
        double dn = static_cast<double>(n);
        double v = peng_upper_sum(cs, n, [&](double s) { return phi(s / dn); }, opt);
        curve.points.emplace_back(n, v);
    }
    double lo = cs.mu_lower();
    double hi = cs.mu_upper();
    double span = hi - lo;
    std::size_t steps = span > 0.0 ? static_cast<std::size_t>(std::ceil(span / 1e-4)) : 0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j <= steps; ++j) {
        double x = steps == 0 ? lo : lo + span * static_cast<double>(j) / static_cast<double>(steps);
        best = std::max(best, phi(x));
    }
    curve.target = best;
    return curve;
}

double lemma4_value(const CredalSet& cs, double m, std::size_t n) {
    if (n == 0) fail("InvalidArgument", "lemma4 needs n >= 1");
    double lambda = m * std::log1p(static_cast<double>(n)) / static_cast<double>(n);
    double mu = cs.mu_upper();
    double factor = upper_expectation(
        cs, [&](double x) { return std::exp(lambda * (x - mu)); });
    // factor >= exp(lambda * (mean_P - mu)) = 1 at the max-mean prior,
    // so the log is safe; the power is taken in log space.
    return std::exp(static_cast<double>(n) * std::log(factor));
}

std::vector<std::pair<std::size_t, double>> lemma4_product_bound(
    const CredalSet& cs, double m, const std::vector<std::size_t>& ns) {
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(ns.size());
    for (std::size_t n : ns) out.emplace_back(n, lemma4_value(cs, m, n));
    return out;
}

ChebyshevReport chebyshev_capacity_bound(const CredalSet& cs, double eps, double m,
                                         std::size_t n, const LatticeOptions& opt) {
    if (!(eps > 0.0)) fail("InvalidArgument", "eps must be positive");
    ChebyshevReport rep;
    rep.n = n;
    rep.eps = eps;
    rep.m = m;
    rep.lambda = m * std::log1p(static_cast<double>(n)) / static_cast<double>(n);
    double dn = static_cast<double>(n);
    double level = cs.mu_upper() + eps;
    rep.lhs = peng_upper_sum(cs, n, [&](double s) { return s / dn >= level ? 1.0 : 0.0; }, opt);
    rep.product_value = lemma4_value(cs, m, n);
    rep.rhs = std::pow(1.0 + dn, -eps * m) * rep.product_value;
    rep.holds = rep.lhs <= rep.rhs;
    rep.regime_ok = eps * m > 1.0;
    return rep;
}

bool exp_inequality_holds(double x, double alpha) {
    double lhs = std::exp(x);
    double rhs = 1.0 + x + std::pow(std::abs(x), 1.0 + alpha) * std::exp(2.0 * std::abs(x));
    return lhs <= rhs;
}

std::size_t truncation_inactive_from(const CredalSet& cs, double c) {
    if (!(c > 0.0)) fail("InvalidArgument", "truncation constant must be positive");
    double radius = 0.0;
    for (double x : cs.union_support())
        radius = std::max(radius, std::abs(x - cs.mu_upper()));
    auto threshold = [&](std::size_t n) {
        return c * static_cast<double>(n) / std::log1p(static_cast<double>(n));
    };
    // c * n / log(1+n) is increasing in n, so double then bisect.
    std::size_t hi = 1;
    while (threshold(hi) <= radius) {
        if (hi > (static_cast<std::size_t>(1) << 60))
            fail("InvalidArgument", "truncation horizon out of range");
        hi *= 2;
    }
    std::size_t lo = hi / 2 < 1 ? 1 : hi / 2;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (threshold(mid) > radius)
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

} // namespace clln
