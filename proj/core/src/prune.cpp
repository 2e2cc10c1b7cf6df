#include "gfmm/prune.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gfmm {

std::vector<BoxStats> collect_box_stats(const GfmmModel& model,
                                        const std::vector<IntervalPattern>& validation) {
    if (model.empty())
        throw std::invalid_argument("collect_box_stats: empty model");
    std::vector<BoxStats> stats(model.size());
    for (std::size_t i = 0; i < stats.size(); ++i) stats[i].box = i;

    bool any_labeled = false;
    for (const auto& p : validation) {
        if (p.label == 0) continue;
        any_labeled = true;
        const Prediction pred = predict(model, p);
        BoxStats& s = stats[pred.winner_box];
        ++s.wins;
        if (pred.label == p.label) ++s.correct;
    }
    if (!any_labeled)
        throw std::invalid_argument("collect_box_stats: validation set has no labeled samples");
    return stats;
}

namespace {

// Validation error of a candidate box subset; infinite when the subset
// cannot classify at all.
double subset_error(const GfmmModel& base, const std::vector<std::size_t>& keep,
                    const std::vector<IntervalPattern>& validation) {
    if (keep.empty()) return std::numeric_limits<double>::infinity();
    GfmmModel m(base.n_dims, base.gamma);
    for (std::size_t i : keep) m.boxes.push_back(base.boxes[i]);
    bool has_labeled_box = false;
    for (const auto& b : m.boxes)
        if (b.label != 0) has_labeled_box = true;
    if (!has_labeled_box) return std::numeric_limits<double>::infinity();
    return error_rate(m, validation);
}

} // namespace

PruneResult prune(const GfmmModel& model,
                  const std::vector<IntervalPattern>& validation,
                  double min_accuracy) {
    if (validation.empty())
        throw std::invalid_argument("prune: validation set is empty");
    const auto stats = collect_box_stats(model, validation);

    std::vector<std::size_t> reliable;       // winners with acceptable accuracy
    std::vector<std::size_t> never_winners;
    for (const auto& s : stats) {
        if (s.wins == 0) {
            never_winners.push_back(s.box);
        } else {
            const double acc = static_cast<double>(s.correct) / static_cast<double>(s.wins);
            if (acc >= min_accuracy) reliable.push_back(s.box);
        }
    }

    std::vector<std::size_t> with_nw = reliable;
    with_nw.insert(with_nw.end(), never_winners.begin(), never_winners.end());
    std::sort(with_nw.begin(), with_nw.end());

    const double err_keep = subset_error(model, with_nw, validation);
    const double err_drop = subset_error(model, reliable, validation);

    PruneResult out;
    if (std::isinf(err_keep) && std::isinf(err_drop)) {
        // Pruning would leave nothing usable; hand back the original model.
        out.model = model;
        out.unchanged = true;
        out.kept_never_winners = true;
        out.validation_error = error_rate(model, validation);
        return out;
    }

    if (err_keep <= err_drop) {   // ties favor retention
        out.kept_never_winners = true;
        out.validation_error = err_keep;
        out.model = GfmmModel(model.n_dims, model.gamma);
        for (std::size_t i : with_nw) out.model.boxes.push_back(model.boxes[i]);
    } else {
        out.kept_never_winners = false;
        out.validation_error = err_drop;
        out.model = GfmmModel(model.n_dims, model.gamma);
        for (std::size_t i : reliable) out.model.boxes.push_back(model.boxes[i]);
    }
    return out;
}

} // namespace gfmm
