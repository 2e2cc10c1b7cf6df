#include "gfmm/hyperbox.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace gfmm {

void validate_pattern(const IntervalPattern& p) {
    if (p.lower.empty())
        throw std::invalid_argument("pattern has no dimensions");
    if (p.lower.size() != p.upper.size())
        throw std::invalid_argument("pattern bounds have different lengths");
    if (p.label < 0)
        throw std::invalid_argument("pattern label must be >= 0");
    for (std::size_t j = 0; j < p.lower.size(); ++j) {
        if (p.lower[j] > p.upper[j])
            throw std::invalid_argument("pattern lower bound exceeds upper bound in dimension " +
                                        std::to_string(j));
        if (p.lower[j] < 0.0 || p.upper[j] > 1.0)
            throw std::invalid_argument("pattern coordinates outside [0,1] in dimension " +
                                        std::to_string(j));
    }
}

std::vector<double> uniform_gamma(std::size_t n_dims, double value) {
    if (value <= 0.0)
        throw std::invalid_argument("gamma must be positive");
    return std::vector<double>(n_dims, value);
}

void validate_gamma(const std::vector<double>& gamma, std::size_t n_dims) {
    if (gamma.size() != n_dims)
        throw std::invalid_argument("gamma length does not match dimensionality");
    for (double g : gamma)
        if (!(g > 0.0))
            throw std::invalid_argument("gamma entries must be positive");
}

double ramp(double z, double gamma_j) {
    if (!(gamma_j > 0.0))
        throw std::invalid_argument("ramp: gamma must be positive");
    const double zg = z * gamma_j;
    if (zg > 1.0) return 1.0;
    if (zg < 0.0) return 0.0;
    return zg;
}

namespace {

// Unchecked ramp for the hot loops; gamma validated by callers.
inline double ramp_unchecked(double z, double gamma_j) {
    const double zg = z * gamma_j;
    if (zg > 1.0) return 1.0;
    if (zg < 0.0) return 0.0;
    return zg;
}

} // namespace

double membership(const Hyperbox& box, const IntervalPattern& pattern,
                  const std::vector<double>& gamma) {
    const std::size_t n = box.dims();
    if (n == 0 || pattern.dims() != n)
        throw std::invalid_argument("membership: dimension mismatch");
    if (box.is_sentinel())
        throw std::invalid_argument("membership: box holds no pattern yet");
    validate_gamma(gamma, n);

    double grade = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double hi = 1.0 - ramp_unchecked(pattern.upper[j] - box.max_point[j], gamma[j]);
        const double lo = 1.0 - ramp_unchecked(box.min_point[j] - pattern.lower[j], gamma[j]);
        grade = std::min(grade, std::min(hi, lo));
    }
    return grade;
}

Prediction predict(const GfmmModel& model, const IntervalPattern& pattern) {
    if (model.empty())
        throw std::invalid_argument("predict: model has no hyperboxes");

    Prediction out;
    std::map<int, std::size_t> winner_of_class;
    for (std::size_t i = 0; i < model.boxes.size(); ++i) {
        const Hyperbox& b = model.boxes[i];
        if (b.label == 0) continue;   // unlabeled boxes never win
        const double m = membership(b, pattern, model.gamma);
        auto it = out.scores.find(b.label);
        if (it == out.scores.end()) {
            out.scores.emplace(b.label, m);
            winner_of_class[b.label] = i;
        } else if (m > it->second) {
            it->second = m;
            winner_of_class[b.label] = i;
        }
    }
    if (out.scores.empty())
        throw std::invalid_argument("predict: model has no labeled hyperboxes");

    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [cls, score] : out.scores) {
        if (score > best) {    // map iterates in ascending class id, so ties keep the smaller id
            best = score;
            out.label = cls;
        }
    }
    out.winner_box = winner_of_class[out.label];
    return out;
}

double error_rate(const GfmmModel& model,
                  const std::vector<IntervalPattern>& patterns) {
    std::size_t labeled = 0, wrong = 0;
    for (const auto& p : patterns) {
        if (p.label == 0) continue;
        ++labeled;
        if (predict(model, p).label != p.label) ++wrong;
    }
    if (labeled == 0)
        throw std::invalid_argument("error_rate: no labeled patterns");
    return static_cast<double>(wrong) / static_cast<double>(labeled);
}

} // namespace gfmm
