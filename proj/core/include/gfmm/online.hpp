#ifndef GFMM_ONLINE_HPP
#define GFMM_ONLINE_HPP

#include "gfmm/hyperbox.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gfmm {

/// Settings for incremental training.
struct OnlineConfig {
    double theta = 0.3;      // maximum per-dimension hyperbox span, in (0,1]
    bool adaptive = false;   // decay theta between presentation passes
    double theta_min = 0.01; // stop decaying below this value
    double phi = 0.9;        // decay coefficient, in [0,1]
    int max_passes = 100;    // safety bound for the adaptive loop
};

void validate_online_config(const OnlineConfig& cfg);

/// True when the box could absorb the pattern without its span exceeding
/// theta in any dimension.
bool can_expand(const Hyperbox& box, const IntervalPattern& pattern, double theta);

/// Returns the box enlarged to cover the pattern (component-wise min of the
/// lower bounds, max of the upper bounds). The caller enforces can_expand.
Hyperbox expand(const Hyperbox& box, const IntervalPattern& pattern);

/// Which of the four per-dimension overlap configurations applies.
/// Cases 1/2 are partial overlaps, cases 3/4 containment of b in a / a in b.
struct OverlapInfo {
    std::size_t dim = 0;  // dimension with the smallest positive overlap
    int case_id = 0;      // 1..4
    double delta = 0.0;   // overlap width in that dimension
};

/// Checks two boxes for overlap. Returns nullopt when some dimension has
/// zero overlap (disjoint or touching boxes). Otherwise returns the
/// dimension with the smallest positive overlap width, ties broken by the
/// smaller dimension index.
std::optional<OverlapInfo> overlap_test(const Hyperbox& a, const Hyperbox& b);

/// Removes the overlap between two boxes by adjusting them in the single
/// dimension reported by overlap_test. Afterwards overlap_test(a, b) is
/// empty and both boxes still satisfy V <= W.
void contract(Hyperbox& a, Hyperbox& b, const OverlapInfo& info);

struct OnlineTrainResult {
    GfmmModel model;
    /// Indices of boxes created directly from a pattern wider than theta.
    /// These violate the span bound by necessity; everything else honors it.
    std::vector<std::size_t> oversize_boxes;
    int passes = 1;
    double final_theta = 0.0;
    double train_error = 0.0;       // labeled-pattern error after the last pass (adaptive mode)
    bool max_passes_reached = false;
};

/// One full presentation of the data with a fixed theta. Patterns are
/// absorbed into the best same-class-compatible box that can expand, or
/// spawn a new box; every absorption is followed by the overlap test and
/// contraction against boxes of other classes.
OnlineTrainResult train_online(const std::vector<IntervalPattern>& data,
                               const OnlineConfig& config,
                               const std::vector<double>& gamma);

/// Adaptive variant: after each pass theta is multiplied by phi and only the
/// currently misclassified patterns are re-presented to the existing model.
/// Stops at zero training error, theta < theta_min, or max_passes.
OnlineTrainResult train_online_adaptive(const std::vector<IntervalPattern>& data,
                                        const OnlineConfig& config,
                                        const std::vector<double>& gamma);

} // namespace gfmm

#endif
