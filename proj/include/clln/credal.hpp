#pragma once

#include <functional>
#include <string>
#include <vector>

#include "clln/errors.hpp"

namespace clln {

// Tolerance contract: user input may be off by kProbInputTol and gets
// renormalized; everything the library derives afterwards is held to
// kExactTol. Support values closer than kValueMergeTol are one point.
inline constexpr double kProbInputTol = 1e-9;
inline constexpr double kValueMergeTol = 1e-9;
inline constexpr double kExactTol = 1e-12;

using RealFn = std::function<double(double)>;

struct Atom {
    double value = 0.0;
    double prob = 0.0;
};

/// Finite-support probability mass function; values strictly increasing,
/// probabilities nonnegative and summing to one after construction.
class FinitePmf {
public:
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    double value(std::size_t i) const { return atoms_[i].value; }
    double prob(std::size_t i) const { return atoms_[i].prob; }
    double mean() const noexcept { return mean_; }

    /// Inverse CDF: smallest atom value whose cumulative mass exceeds u.
    /// Pure in (pmf, u); the simulation layer feeds it counter-based
    /// uniforms so paths replay bit-exactly.
    double quantile(double u) const;

    /// Total mass this pmf puts on value x (0 when x is not an atom).
    /// Values within kValueMergeTol of an atom count as that atom.
    double mass_at(double x) const;

private:
    friend FinitePmf make_pmf(const std::vector<double>&, const std::vector<double>&);

    std::vector<Atom> atoms_;
    double mean_ = 0.0;
};

/// Build a pmf from parallel (values, probs) arrays.
/// Probabilities are renormalized when |sum - 1| <= 1e-9, rejected otherwise.
/// Errors: LengthMismatch, NonFiniteValue, NegativeProb, DuplicateValue,
/// NotNormalized.
FinitePmf make_pmf(const std::vector<double>& values, const std::vector<double>& probs);

/// Exact expectation sum f(x_i) * p_i. Errors: NonFiniteFunctionValue.
double pmf_expectation(const FinitePmf& p, const RealFn& f);

/// Nonempty finite set of priors together with derived quantities:
/// the sorted union of supports and the upper/lower first moments.
class CredalSet {
public:
    const std::vector<FinitePmf>& priors() const noexcept { return priors_; }
    const std::vector<double>& union_support() const noexcept { return union_support_; }
    double mu_upper() const noexcept { return mu_upper_; }
    double mu_lower() const noexcept { return mu_lower_; }
    const std::string& id() const noexcept { return id_; }

    std::size_t max_mean_prior() const noexcept { return max_mean_idx_; }
    std::size_t min_mean_prior() const noexcept { return min_mean_idx_; }

    double min_support() const { return union_support_.front(); }
    double max_support() const { return union_support_.back(); }

    /// Index of x in union_support (within kValueMergeTol), or npos.
    std::size_t support_index(double x) const;

private:
    friend CredalSet make_credal(std::vector<FinitePmf>, std::string);

    std::vector<FinitePmf> priors_;
    std::vector<double> union_support_;
    double mu_upper_ = 0.0;
    double mu_lower_ = 0.0;
    std::size_t max_mean_idx_ = 0;
    std::size_t min_mean_idx_ = 0;
    std::string id_;
};

/// Errors: EmptyCredalSet.
CredalSet make_credal(std::vector<FinitePmf> priors, std::string id = "credal");

/// Load a credal set from the JSON document
///   {"priors": [{"values": [...], "probs": [...]}, ...]}
/// Field names are part of the file format. Errors: ConfigParse plus the
/// make_pmf/make_credal errors.
CredalSet load_credal(const std::string& path);
CredalSet parse_credal(const std::string& json_text, std::string id = "credal");

/// A subset of a credal set's union support; the argument of capacities.
class Event {
public:
    Event() = default;
    static Event of(std::vector<double> members);

    const std::vector<double>& members() const noexcept { return members_; }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(double x) const;

    /// Complement within cs's union support.
    Event complement_in(const CredalSet& cs) const;

private:
    std::vector<double> members_; // sorted, distinct up to kValueMergeTol
};

/// Throws EventOutsideSupport unless every member of A is a support value of cs.
void validate_event(const CredalSet& cs, const Event& A);

} // namespace clln
