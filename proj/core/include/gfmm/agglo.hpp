#ifndef GFMM_AGGLO_HPP
#define GFMM_AGGLO_HPP

#include "gfmm/hyperbox.hpp"

#include <span>
#include <string>
#include <vector>

namespace gfmm {

/// How the similarity of two hyperboxes is computed. The mid variants use
/// the min/max-point gaps (not symmetric before the min/max is taken),
/// shortest uses the smallest gap between the boxes, longest the largest.
enum class SimilarityMeasure { MidMin, MidMax, Shortest, Longest };

const char* to_string(SimilarityMeasure m);
SimilarityMeasure similarity_measure_from_string(const std::string& name);

/// Settings for agglomerative training.
struct AggloConfig {
    double theta = 0.3;                                    // maximum merged span per dimension
    double sigma = 0.0;                                    // minimum similarity for a merge, in [0,1]
    SimilarityMeasure measure = SimilarityMeasure::Longest;
    bool record_certificates = false;                      // keep per-merge evidence for auditing
};

void validate_agglo_config(const AggloConfig& cfg);

/// Similarity of two boxes under the chosen measure, in [0,1].
double similarity(const Hyperbox& a, const Hyperbox& b, SimilarityMeasure measure,
                  const std::vector<double>& gamma);

/// The four admissibility conditions for merging a and b:
///   (a) the merged envelope overlaps no other box of a different non-zero class,
///   (b) the merged span stays within theta in every dimension,
///   (c) similarity(a, b) >= sigma,
///   (d) the labels are equal or at least one box is unlabeled.
bool aggregation_admissible(const Hyperbox& a, const Hyperbox& b,
                            std::span<const Hyperbox> others,
                            const AggloConfig& config,
                            const std::vector<double>& gamma);

/// Evidence captured at merge time so the four conditions can be re-checked
/// afterwards. `foreign` holds the boxes the overlap condition was tested
/// against (those of a different non-zero class at that moment).
struct MergeCertificate {
    Hyperbox first;
    Hyperbox second;
    Hyperbox merged;
    double similarity_value = 0.0;
    std::vector<Hyperbox> foreign;
};

struct AggloTrainResult {
    GfmmModel model;
    std::vector<MergeCertificate> certificates;  // filled when record_certificates is set
    std::size_t merges = 0;
};

/// Re-checks every recorded merge against the four conditions.
bool verify_certificates(const std::vector<MergeCertificate>& certs,
                         const AggloConfig& config,
                         const std::vector<double>& gamma);

/// Full-similarity-matrix agglomeration: repeatedly merge the globally most
/// similar admissible class-compatible pair until nothing can merge.
AggloTrainResult train_agglo_sm(const std::vector<IntervalPattern>& data,
                                const AggloConfig& config,
                                const std::vector<double>& gamma);

/// Accelerated agglomeration: sweep the boxes in index order, merging each
/// with its best admissible partner; repeat sweeps until one performs no
/// merge.
AggloTrainResult train_agglo_2(const std::vector<IntervalPattern>& data,
                               const AggloConfig& config,
                               const std::vector<double>& gamma);

} // namespace gfmm

#endif
