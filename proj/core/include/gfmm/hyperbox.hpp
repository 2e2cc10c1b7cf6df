#ifndef GFMM_HYPERBOX_HPP
#define GFMM_HYPERBOX_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gfmm {

/// An input sample: an axis-aligned interval in the unit cube plus a class
/// label. Crisp points are intervals with lower == upper. Label 0 means
/// "unlabeled".
struct IntervalPattern {
    std::vector<double> lower;
    std::vector<double> upper;
    int label = 0;

    IntervalPattern() = default;
    IntervalPattern(std::vector<double> lo, std::vector<double> hi, int lbl)
        : lower(std::move(lo)), upper(std::move(hi)), label(lbl) {}

    /// Crisp point convenience constructor.
    static IntervalPattern point(std::vector<double> x, int lbl) {
        auto copy = x;
        return IntervalPattern(std::move(x), std::move(copy), lbl);
    }

    std::size_t dims() const { return lower.size(); }
};

/// Throws std::invalid_argument if the pattern violates its invariants
/// (equal-length bounds, lower <= upper, coordinates inside [0,1]).
void validate_pattern(const IntervalPattern& p);

/// A hyperbox: min point V, max point W, class label (0 = unlabeled).
/// A freshly initialized box carries the sentinel state V = 1, W = 0 so that
/// absorbing the first pattern snaps the box exactly onto it.
struct Hyperbox {
    std::vector<double> min_point;
    std::vector<double> max_point;
    int label = 0;

    Hyperbox() = default;
    Hyperbox(std::vector<double> v, std::vector<double> w, int lbl)
        : min_point(std::move(v)), max_point(std::move(w)), label(lbl) {}

    static Hyperbox sentinel(std::size_t n_dims) {
        return Hyperbox(std::vector<double>(n_dims, 1.0),
                        std::vector<double>(n_dims, 0.0), 0);
    }

    static Hyperbox from_pattern(const IntervalPattern& p) {
        return Hyperbox(p.lower, p.upper, p.label);
    }

    std::size_t dims() const { return min_point.size(); }

    bool is_sentinel() const {
        for (std::size_t j = 0; j < min_point.size(); ++j)
            if (min_point[j] <= max_point[j]) return false;
        return !min_point.empty();
    }

    /// Per-dimension span W[j] - V[j].
    double span(std::size_t j) const { return max_point[j] - min_point[j]; }

    bool operator==(const Hyperbox& other) const = default;
};

/// The trained classifier: an ordered list of hyperboxes plus the
/// per-dimension membership sensitivity vector.
struct GfmmModel {
    std::vector<Hyperbox> boxes;
    std::vector<double> gamma;
    std::size_t n_dims = 0;

    GfmmModel() = default;
    GfmmModel(std::size_t dims, std::vector<double> g)
        : gamma(std::move(g)), n_dims(dims) {}

    /// Class ids present among the boxes (0 included if unlabeled boxes exist).
    std::set<int> classes() const {
        std::set<int> out;
        for (const auto& b : boxes) out.insert(b.label);
        return out;
    }

    bool empty() const { return boxes.empty(); }
    std::size_t size() const { return boxes.size(); }

    bool operator==(const GfmmModel& other) const = default;
};

/// Builds a gamma vector of the given dimensionality. Values must be > 0.
std::vector<double> uniform_gamma(std::size_t n_dims, double value = 1.0);

/// Throws if gamma is empty, has the wrong length, or contains a
/// non-positive entry.
void validate_gamma(const std::vector<double>& gamma, std::size_t n_dims);

/// The one-sided ramp used by the membership and similarity functions:
/// 1 when z*gamma > 1, z*gamma when 0 <= z*gamma <= 1, 0 when z*gamma < 0.
double ramp(double z, double gamma_j);

/// Membership grade of a pattern in a box, the min over dimensions of the
/// two-sided ramp distances. Equals 1 exactly when the pattern interval lies
/// inside the box. Throws on dimension mismatch or a sentinel box.
double membership(const Hyperbox& box, const IntervalPattern& pattern,
                  const std::vector<double>& gamma);

/// Result of classifying one pattern.
struct Prediction {
    int label = 0;
    std::map<int, double> scores;   // class id -> max membership, unlabeled boxes excluded
    std::size_t winner_box = 0;     // index of the box that produced the winning score
};

/// Classifies a pattern: per-class score is the max membership over that
/// class's boxes; the predicted class is the argmax, ties broken by the
/// smaller class id. Unlabeled (class-0) boxes never win. Throws if the
/// model has no labeled boxes.
Prediction predict(const GfmmModel& model, const IntervalPattern& pattern);

/// Fraction of labeled patterns misclassified by the model.
double error_rate(const GfmmModel& model,
                  const std::vector<IntervalPattern>& patterns);

} // namespace gfmm

#endif
