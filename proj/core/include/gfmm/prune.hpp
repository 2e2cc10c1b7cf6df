#ifndef GFMM_PRUNE_HPP
#define GFMM_PRUNE_HPP

#include "gfmm/hyperbox.hpp"

#include <vector>

namespace gfmm {

/// Per-box tally over a validation set.
struct BoxStats {
    std::size_t box = 0;
    std::size_t wins = 0;     // validation samples this box decided
    std::size_t correct = 0;  // of those, how many it labeled correctly
};

/// Counts, for every box, how many labeled validation samples it won and how
/// many of those it classified correctly. Unlabeled validation samples are
/// ignored.
std::vector<BoxStats> collect_box_stats(const GfmmModel& model,
                                        const std::vector<IntervalPattern>& validation);

struct PruneResult {
    GfmmModel model;
    bool kept_never_winners = true;  // which never-winner variant was chosen
    bool unchanged = false;          // pruning would have emptied the model
    double validation_error = 0.0;   // of the returned model
};

/// Removes boxes whose validation accuracy is below min_accuracy (strictly).
/// Boxes that never won a prediction are kept or removed as a group,
/// whichever gives the lower validation error; ties favor keeping them.
/// If pruning would empty the model the original is returned unchanged.
PruneResult prune(const GfmmModel& model,
                  const std::vector<IntervalPattern>& validation,
                  double min_accuracy = 0.5);

} // namespace gfmm

#endif
