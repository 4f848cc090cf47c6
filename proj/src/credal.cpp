#include "clln/credal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace clln {

namespace {

bool close_values(double a, double b) {
    return std::abs(a - b) <= kValueMergeTol;
}

} // namespace

double FinitePmf::quantile(double u) const {
    double cdf = 0.0;
    for (std::size_t i = 0; i + 1 < atoms_.size(); ++i) {
        cdf += atoms_[i].prob;
        if (u < cdf) return atoms_[i].value;
    }
    return atoms_.back().value;
}

double FinitePmf::mass_at(double x) const {
    for (const Atom& a : atoms_) {
        if (close_values(a.value, x)) return a.prob;
        if (a.value > x + kValueMergeTol) break;
    }
    return 0.0;
}

FinitePmf make_pmf(const std::vector<double>& values, const std::vector<double>& probs) {
    if (values.size() != probs.size())
        fail("LengthMismatch", "values and probs must have equal length");
    for (double v : values)
        if (!std::isfinite(v)) fail("NonFiniteValue", "support values must be finite");
    for (double p : probs)
        if (!(p >= 0.0)) fail("NegativeProb", "probabilities must be nonnegative");

    std::vector<std::size_t> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (close_values(values[order[i]], values[order[i + 1]]))
            fail("DuplicateValue", "support values must be distinct");

    double sum = 0.0;
    for (double p : probs) sum += p;
    if (std::abs(sum - 1.0) > kProbInputTol) {
        std::ostringstream os;
        os << "probabilities sum to " << sum << ", expected 1 within " << kProbInputTol;
        fail("NotNormalized", os.str());
    }

    FinitePmf pmf;
    pmf.atoms_.reserve(order.size());
    for (std::size_t idx : order)
        pmf.atoms_.push_back(Atom{values[idx], probs[idx] / sum});
    double mean = 0.0;
    for (const Atom& a : pmf.atoms_) mean += a.value * a.prob;
    pmf.mean_ = mean;
    return pmf;
}

double pmf_expectation(const FinitePmf& p, const RealFn& f) {
    double acc = 0.0;
    for (const Atom& a : p.atoms()) {
        double y = f(a.value);
        if (!std::isfinite(y))
            fail("NonFiniteFunctionValue", "function not finite on support");
        acc += y * a.prob;
    }
    return acc;
}

CredalSet make_credal(std::vector<FinitePmf> priors, std::string id) {
    if (priors.empty()) fail("EmptyCredalSet", "a credal set needs at least one prior");

    CredalSet cs;
    cs.priors_ = std::move(priors);
    cs.id_ = std::move(id);

    std::vector<double> support;
    for (const FinitePmf& p : cs.priors_)
        for (const Atom& a : p.atoms()) support.push_back(a.value);
    std::sort(support.begin(), support.end());
    for (double v : support) {
        if (cs.union_support_.empty() || !close_values(cs.union_support_.back(), v))
            cs.union_support_.push_back(v);
    }

    cs.mu_upper_ = -std::numeric_limits<double>::infinity();
    cs.mu_lower_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cs.priors_.size(); ++i) {
        double m = cs.priors_[i].mean();
        if (m > cs.mu_upper_) {
            cs.mu_upper_ = m;
            cs.max_mean_idx_ = i;
        }
        if (m < cs.mu_lower_) {
            cs.mu_lower_ = m;
            cs.min_mean_idx_ = i;
        }
    }
    return cs;
}

std::size_t CredalSet::support_index(double x) const {
    auto it = std::lower_bound(union_support_.begin(), union_support_.end(),
                               x - kValueMergeTol);
    if (it != union_support_.end() && close_values(*it, x))
        return static_cast<std::size_t>(it - union_support_.begin());
    return static_cast<std::size_t>(-1);
}

namespace {

CredalSet credal_from_json(const nlohmann::json& doc, std::string id) {
    if (!doc.is_object() || !doc.contains("priors") || !doc["priors"].is_array())
        fail("ConfigParse", "credal document must be an object with a \"priors\" array");
    std::vector<FinitePmf> priors;
    for (const auto& entry : doc["priors"]) {
        if (!entry.is_object() || !entry.contains("values") || !entry.contains("probs"))
            fail("ConfigParse", "each prior needs \"values\" and \"probs\" arrays");
        std::vector<double> values = entry["values"].get<std::vector<double>>();
        std::vector<double> probs = entry["probs"].get<std::vector<double>>();
        priors.push_back(make_pmf(values, probs));
    }
    if (doc.contains("id") && doc["id"].is_string()) id = doc["id"].get<std::string>();
    return make_credal(std::move(priors), std::move(id));
}

} // namespace

CredalSet parse_credal(const std::string& json_text, std::string id) {
    nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) fail("ConfigParse", "credal file is not valid JSON");
    return credal_from_json(doc, std::move(id));
}

CredalSet load_credal(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ConfigParse", "cannot open credal file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string stem = path;
    if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
    return parse_credal(buf.str(), stem.empty() ? "credal" : stem);
}

Event Event::of(std::vector<double> members) {
    std::sort(members.begin(), members.end());
    Event e;
    for (double v : members) {
        if (!std::isfinite(v)) fail("NonFiniteValue", "event members must be finite");
        if (e.members_.empty() || !close_values(e.members_.back(), v))
            e.members_.push_back(v);
    }
    return e;
}

bool Event::contains(double x) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), x - kValueMergeTol);
    return it != members_.end() && close_values(*it, x);
}

Event Event::complement_in(const CredalSet& cs) const {
    std::vector<double> rest;
    for (double v : cs.union_support())
        if (!contains(v)) rest.push_back(v);
    return Event::of(std::move(rest));
}

void validate_event(const CredalSet& cs, const Event& A) {
    for (double v : A.members())
        if (cs.support_index(v) == static_cast<std::size_t>(-1))
            fail("EventOutsideSupport", "event member not in union support");
}

} // namespace clln
