#include "gfmm/online.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gfmm {

void validate_online_config(const OnlineConfig& cfg) {
    if (!(cfg.theta > 0.0) || cfg.theta > 1.0)
        throw std::invalid_argument("theta must lie in (0,1]");
    if (cfg.adaptive) {
        if (!(cfg.theta_min > 0.0) || cfg.theta_min > cfg.theta)
            throw std::invalid_argument("theta_min must lie in (0, theta]");
        if (cfg.phi < 0.0 || cfg.phi > 1.0)
            throw std::invalid_argument("phi must lie in [0,1]");
        if (cfg.max_passes < 1)
            throw std::invalid_argument("max_passes must be positive");
    }
}

bool can_expand(const Hyperbox& box, const IntervalPattern& pattern, double theta) {
    const std::size_t n = box.dims();
    if (pattern.dims() != n)
        throw std::invalid_argument("can_expand: dimension mismatch");
    for (std::size_t j = 0; j < n; ++j) {
        const double hi = std::max(box.max_point[j], pattern.upper[j]);
        const double lo = std::min(box.min_point[j], pattern.lower[j]);
        if (hi - lo > theta) return false;
    }
    return true;
}

Hyperbox expand(const Hyperbox& box, const IntervalPattern& pattern) {
    const std::size_t n = box.dims();
    if (pattern.dims() != n)
        throw std::invalid_argument("expand: dimension mismatch");
    Hyperbox out = box;
    for (std::size_t j = 0; j < n; ++j) {
        out.min_point[j] = std::min(out.min_point[j], pattern.lower[j]);
        out.max_point[j] = std::max(out.max_point[j], pattern.upper[j]);
    }
    return out;
}

namespace {

// Per-dimension overlap classification. delta <= 0 means no overlap
// (disjoint or merely touching) in this dimension.
struct DimOverlap {
    int case_id = 0;
    double delta = 0.0;
};

DimOverlap classify_dim(double va, double wa, double vb, double wb) {
    DimOverlap d;
    if (va < vb && vb < wa && wa < wb) {
        d.case_id = 1;
        d.delta = wa - vb;
    } else if (vb < va && va < wb && wb < wa) {
        d.case_id = 2;
        d.delta = wb - va;
    } else if (va <= vb && wb <= wa) {          // b contained in a
        d.case_id = 3;
        d.delta = std::min(wb - va, wa - vb);
    } else if (vb <= va && wa <= wb) {          // a contained in b
        d.case_id = 4;
        d.delta = std::min(wb - va, wa - vb);
    }
    return d;
}

} // namespace

std::optional<OverlapInfo> overlap_test(const Hyperbox& a, const Hyperbox& b) {
    const std::size_t n = a.dims();
    if (b.dims() != n)
        throw std::invalid_argument("overlap_test: dimension mismatch");

    OverlapInfo best;
    bool found = false;
    for (std::size_t j = 0; j < n; ++j) {
        const DimOverlap d = classify_dim(a.min_point[j], a.max_point[j],
                                          b.min_point[j], b.max_point[j]);
        if (d.case_id == 0 || !(d.delta > 0.0))
            return std::nullopt;    // a box intersection needs overlap in every dimension
        if (!found || d.delta < best.delta) {
            best.dim = j;
            best.case_id = d.case_id;
            best.delta = d.delta;
            found = true;
        }
    }
    if (!found) return std::nullopt;
    return best;
}

void contract(Hyperbox& a, Hyperbox& b, const OverlapInfo& info) {
    const std::size_t j = info.dim;
    double& va = a.min_point[j];
    double& wa = a.max_point[j];
    double& vb = b.min_point[j];
    double& wb = b.max_point[j];

    switch (info.case_id) {
        case 1: {
            const double mid = (vb + wa) / 2.0;
            wa = mid;
            vb = mid;
            break;
        }
        case 2: {
            const double mid = (va + wb) / 2.0;
            va = mid;
            wb = mid;
            break;
        }
        case 3:
            // b sits inside a; move the face of a across the cheaper side.
            if (wb - va < wa - vb)
                va = wb;
            else
                wa = vb;
            break;
        case 4:
            if (wb - va < wa - vb)
                wb = va;
            else
                vb = wa;
            break;
        default:
            throw std::invalid_argument("contract: invalid case id");
    }
}

namespace {

struct Candidate {
    double grade;
    std::size_t index;
};

// Resolve any overlap the box at `idx` has with boxes of other classes
// (with every box when it is unlabeled).
void resolve_overlaps(std::vector<Hyperbox>& boxes, std::size_t idx) {
    Hyperbox& changed = boxes[idx];
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        if (k == idx) continue;
        if (changed.label != 0 && boxes[k].label == changed.label) continue;
        if (auto ov = overlap_test(changed, boxes[k]))
            contract(changed, boxes[k], *ov);
    }
}

// Present one pattern to the model: expand the best admissible box or create
// a new one, then restore the no-overlap invariant around the changed box.
void present_pattern(std::vector<Hyperbox>& boxes,
                     std::vector<std::size_t>& oversize,
                     const IntervalPattern& p, double theta,
                     const std::vector<double>& gamma) {
    std::vector<Candidate> candidates;
    candidates.reserve(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const Hyperbox& b = boxes[i];
        if (p.label != 0 && b.label != 0 && b.label != p.label) continue;
        candidates.push_back({membership(b, p, gamma), i});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        if (x.grade != y.grade) return x.grade > y.grade;
        return x.index < y.index;
    });

    for (const Candidate& c : candidates) {
        Hyperbox& b = boxes[c.index];
        if (!can_expand(b, p, theta)) continue;
        b = expand(b, p);
        if (b.label == 0 && p.label != 0) b.label = p.label;
        resolve_overlaps(boxes, c.index);
        return;
    }

    // No box can absorb the pattern: it becomes its own box.
    boxes.push_back(Hyperbox::from_pattern(p));
    bool wide = false;
    for (std::size_t j = 0; j < p.dims(); ++j)
        if (p.upper[j] - p.lower[j] > theta) wide = true;
    if (wide) oversize.push_back(boxes.size() - 1);
    resolve_overlaps(boxes, boxes.size() - 1);
}

void validate_data(const std::vector<IntervalPattern>& data) {
    if (data.empty())
        throw std::invalid_argument("training data is empty");
    const std::size_t n = data.front().dims();
    for (const auto& p : data) {
        validate_pattern(p);
        if (p.dims() != n)
            throw std::invalid_argument("training patterns have mixed dimensionality");
    }
}

} // namespace

OnlineTrainResult train_online(const std::vector<IntervalPattern>& data,
                               const OnlineConfig& config,
                               const std::vector<double>& gamma) {
    validate_online_config(config);
    validate_data(data);
    const std::size_t n = data.front().dims();
    validate_gamma(gamma, n);

    OnlineTrainResult result;
    result.model = GfmmModel(n, gamma);
    result.final_theta = config.theta;
    for (const auto& p : data)
        present_pattern(result.model.boxes, result.oversize_boxes, p, config.theta, gamma);
    return result;
}

OnlineTrainResult train_online_adaptive(const std::vector<IntervalPattern>& data,
                                        const OnlineConfig& config,
                                        const std::vector<double>& gamma) {
    if (!config.adaptive)
        throw std::invalid_argument("train_online_adaptive: config.adaptive is not set");
    validate_online_config(config);
    validate_data(data);
    const std::size_t n = data.front().dims();
    validate_gamma(gamma, n);

    OnlineTrainResult result = train_online(data, config, gamma);
    double theta = config.theta;

    const bool has_labels =
        std::any_of(data.begin(), data.end(), [](const IntervalPattern& p) { return p.label != 0; });

    auto misclassified = [&]() {
        std::vector<IntervalPattern> out;
        for (const auto& p : data) {
            if (p.label == 0) continue;
            if (predict(result.model, p).label != p.label) out.push_back(p);
        }
        return out;
    };

    while (true) {
        std::vector<IntervalPattern> wrong = has_labels ? misclassified() : std::vector<IntervalPattern>{};
        result.train_error =
            has_labels ? static_cast<double>(wrong.size()) /
                             static_cast<double>(std::count_if(data.begin(), data.end(),
                                                               [](const IntervalPattern& p) { return p.label != 0; }))
                       : 0.0;
        if (wrong.empty()) break;
        theta *= config.phi;
        if (theta < config.theta_min) break;
        if (result.passes >= config.max_passes) {
            result.max_passes_reached = true;
            break;
        }
        for (const auto& p : wrong)
            present_pattern(result.model.boxes, result.oversize_boxes, p, theta, gamma);
        ++result.passes;
        result.final_theta = theta;
    }
    return result;
}

} // namespace gfmm
