#include "gfmm/agglo.hpp"

#include "gfmm/online.hpp"   // overlap_test

#include <algorithm>
#include <stdexcept>

namespace gfmm {

const char* to_string(SimilarityMeasure m) {
    switch (m) {
        case SimilarityMeasure::MidMin:   return "mid-min";
        case SimilarityMeasure::MidMax:   return "mid-max";
        case SimilarityMeasure::Shortest: return "shortest";
        case SimilarityMeasure::Longest:  return "longest";
    }
    return "?";
}

SimilarityMeasure similarity_measure_from_string(const std::string& name) {
    if (name == "mid-min")   return SimilarityMeasure::MidMin;
    if (name == "mid-max")   return SimilarityMeasure::MidMax;
    if (name == "shortest")  return SimilarityMeasure::Shortest;
    if (name == "longest")   return SimilarityMeasure::Longest;
    throw std::invalid_argument("unknown similarity measure: " + name);
}

void validate_agglo_config(const AggloConfig& cfg) {
    if (!(cfg.theta > 0.0) || cfg.theta > 1.0)
        throw std::invalid_argument("theta must lie in (0,1]");
    if (cfg.sigma < 0.0 || cfg.sigma > 1.0)
        throw std::invalid_argument("sigma must lie in [0,1]");
}

namespace {

inline double ramp_unchecked(double z, double gamma_j) {
    const double zg = z * gamma_j;
    if (zg > 1.0) return 1.0;
    if (zg < 0.0) return 0.0;
    return zg;
}

// Directed mid-distance similarity s(a,b); s(a,b) != s(b,a) in general.
double mid_similarity(const Hyperbox& a, const Hyperbox& b,
                      const std::vector<double>& gamma) {
    double s = 1.0;
    for (std::size_t j = 0; j < a.dims(); ++j) {
        const double hi = 1.0 - ramp_unchecked(b.max_point[j] - a.max_point[j], gamma[j]);
        const double lo = 1.0 - ramp_unchecked(a.min_point[j] - b.min_point[j], gamma[j]);
        s = std::min(s, std::min(hi, lo));
    }
    return s;
}

double shortest_similarity(const Hyperbox& a, const Hyperbox& b,
                           const std::vector<double>& gamma) {
    double s = 1.0;
    for (std::size_t j = 0; j < a.dims(); ++j) {
        const double hi = 1.0 - ramp_unchecked(b.min_point[j] - a.max_point[j], gamma[j]);
        const double lo = 1.0 - ramp_unchecked(a.min_point[j] - b.max_point[j], gamma[j]);
        s = std::min(s, std::min(hi, lo));
    }
    return s;
}

double longest_similarity(const Hyperbox& a, const Hyperbox& b,
                          const std::vector<double>& gamma) {
    double s = 1.0;
    for (std::size_t j = 0; j < a.dims(); ++j) {
        const double hi = 1.0 - ramp_unchecked(b.max_point[j] - a.min_point[j], gamma[j]);
        const double lo = 1.0 - ramp_unchecked(a.max_point[j] - b.min_point[j], gamma[j]);
        s = std::min(s, std::min(hi, lo));
    }
    return s;
}

inline bool class_compatible(int la, int lb) {
    return la == lb || la == 0 || lb == 0;
}

inline int merged_label(int la, int lb) {
    return la != 0 ? la : lb;
}

Hyperbox merged_envelope(const Hyperbox& a, const Hyperbox& b) {
    Hyperbox m = a;
    for (std::size_t j = 0; j < a.dims(); ++j) {
        m.min_point[j] = std::min(a.min_point[j], b.min_point[j]);
        m.max_point[j] = std::max(a.max_point[j], b.max_point[j]);
    }
    m.label = merged_label(a.label, b.label);
    return m;
}

bool within_theta(const Hyperbox& a, const Hyperbox& b, double theta) {
    for (std::size_t j = 0; j < a.dims(); ++j) {
        const double hi = std::max(a.max_point[j], b.max_point[j]);
        const double lo = std::min(a.min_point[j], b.min_point[j]);
        if (hi - lo > theta) return false;
    }
    return true;
}

// Conditions (b)..(d) plus condition (a) evaluated against the boxes the
// callback visits. Used by both trainers and the public predicate.
template <typename ForEachForeign>
bool admissible_impl(const Hyperbox& a, const Hyperbox& b, const AggloConfig& cfg,
                     const std::vector<double>& gamma, double sim,
                     ForEachForeign&& for_each_box) {
    if (!class_compatible(a.label, b.label)) return false;    // (d)
    if (!within_theta(a, b, cfg.theta)) return false;         // (b)
    if (sim < cfg.sigma) return false;                        // (c)

    const Hyperbox merged = merged_envelope(a, b);
    bool clean = true;
    for_each_box([&](const Hyperbox& other) {
        if (!clean) return;
        if (other.label == 0 || other.label == merged.label) return;
        if (overlap_test(merged, other)) clean = false;
    });
    return clean;                                             // (a)
}

} // namespace

double similarity(const Hyperbox& a, const Hyperbox& b, SimilarityMeasure measure,
                  const std::vector<double>& gamma) {
    const std::size_t n = a.dims();
    if (b.dims() != n)
        throw std::invalid_argument("similarity: dimension mismatch");
    if (a.is_sentinel() || b.is_sentinel())
        throw std::invalid_argument("similarity: box holds no pattern yet");
    validate_gamma(gamma, n);

    switch (measure) {
        case SimilarityMeasure::MidMin:
            return std::min(mid_similarity(a, b, gamma), mid_similarity(b, a, gamma));
        case SimilarityMeasure::MidMax:
            return std::max(mid_similarity(a, b, gamma), mid_similarity(b, a, gamma));
        case SimilarityMeasure::Shortest:
            return shortest_similarity(a, b, gamma);
        case SimilarityMeasure::Longest:
            return longest_similarity(a, b, gamma);
    }
    throw std::invalid_argument("similarity: unknown measure");
}

bool aggregation_admissible(const Hyperbox& a, const Hyperbox& b,
                            std::span<const Hyperbox> others,
                            const AggloConfig& config,
                            const std::vector<double>& gamma) {
    validate_agglo_config(config);
    const double sim = similarity(a, b, config.measure, gamma);
    return admissible_impl(a, b, config, gamma, sim, [&](auto&& visit) {
        for (const Hyperbox& o : others) visit(o);
    });
}

bool verify_certificates(const std::vector<MergeCertificate>& certs,
                         const AggloConfig& config,
                         const std::vector<double>& gamma) {
    for (const auto& c : certs) {
        const double sim = similarity(c.first, c.second, config.measure, gamma);
        if (sim != c.similarity_value) return false;
        const bool ok = admissible_impl(c.first, c.second, config, gamma, sim, [&](auto&& visit) {
            for (const Hyperbox& o : c.foreign) visit(o);
        });
        if (!ok) return false;
        if (merged_envelope(c.first, c.second) != c.merged) return false;
    }
    return true;
}

namespace {

struct AggloState {
    std::vector<Hyperbox> boxes;
    std::vector<bool> alive;
    const AggloConfig& cfg;
    const std::vector<double>& gamma;
    AggloTrainResult& result;

    double pair_similarity(std::size_t i, std::size_t h) const {
        return similarity(boxes[i], boxes[h], cfg.measure, gamma);
    }

    // Conditions (a)-(d) for the live pair (i,h) with precomputed similarity.
    bool admissible(std::size_t i, std::size_t h, double sim) const {
        return admissible_impl(boxes[i], boxes[h], cfg, gamma, sim, [&](auto&& visit) {
            for (std::size_t k = 0; k < boxes.size(); ++k)
                if (alive[k] && k != i && k != h) visit(boxes[k]);
        });
    }

    // Merge h into i (the lower index keeps the result) and record evidence.
    void merge(std::size_t i, std::size_t h, double sim) {
        if (cfg.record_certificates) {
            MergeCertificate cert;
            cert.first = boxes[i];
            cert.second = boxes[h];
            cert.similarity_value = sim;
            cert.merged = merged_envelope(boxes[i], boxes[h]);
            for (std::size_t k = 0; k < boxes.size(); ++k)
                if (alive[k] && k != i && k != h && boxes[k].label != 0 &&
                    boxes[k].label != cert.merged.label)
                    cert.foreign.push_back(boxes[k]);
            result.certificates.push_back(std::move(cert));
        }
        boxes[i] = merged_envelope(boxes[i], boxes[h]);
        alive[h] = false;
        ++result.merges;
    }
};

// Seed boxes from the patterns; exact duplicates (same bounds and label)
// collapse to a single box.
std::vector<Hyperbox> initial_boxes(const std::vector<IntervalPattern>& data) {
    std::vector<Hyperbox> boxes;
    boxes.reserve(data.size());
    for (const auto& p : data) {
        Hyperbox candidate = Hyperbox::from_pattern(p);
        bool duplicate = false;
        for (const auto& b : boxes)
            if (b == candidate) { duplicate = true; break; }
        if (!duplicate) boxes.push_back(std::move(candidate));
    }
    return boxes;
}

void validate_input(const std::vector<IntervalPattern>& data) {
    if (data.empty())
        throw std::invalid_argument("training data is empty");
    const std::size_t n = data.front().dims();
    for (const auto& p : data) {
        validate_pattern(p);
        if (p.dims() != n)
            throw std::invalid_argument("training patterns have mixed dimensionality");
    }
}

struct PairEntry {
    double sim;
    std::size_t i, h;   // i < h
    bool failed = false;
};

// Descending similarity; ties by the smaller first index, then second index.
inline bool pair_before(const PairEntry& a, const PairEntry& b) {
    if (a.sim != b.sim) return a.sim > b.sim;
    if (a.i != b.i) return a.i < b.i;
    return a.h < b.h;
}

} // namespace

AggloTrainResult train_agglo_sm(const std::vector<IntervalPattern>& data,
                                const AggloConfig& config,
                                const std::vector<double>& gamma) {
    validate_agglo_config(config);
    validate_input(data);
    const std::size_t n = data.front().dims();
    validate_gamma(gamma, n);

    AggloTrainResult result;
    AggloState st{initial_boxes(data), {}, config, gamma, result};
    st.alive.assign(st.boxes.size(), true);

    std::vector<PairEntry> pairs;
    for (std::size_t i = 0; i < st.boxes.size(); ++i)
        for (std::size_t h = i + 1; h < st.boxes.size(); ++h)
            if (class_compatible(st.boxes[i].label, st.boxes[h].label))
                pairs.push_back({st.pair_similarity(i, h), i, h});
    std::sort(pairs.begin(), pairs.end(), pair_before);

    // Walk the sorted pair list; a successful merge refreshes the entries of
    // the surviving box and restarts the walk from the most similar pair.
    std::size_t pos = 0;
    while (pos < pairs.size()) {
        PairEntry& e = pairs[pos];
        if (e.failed || !st.alive[e.i] || !st.alive[e.h]) { ++pos; continue; }
        if (e.sim < config.sigma) break;    // everything below fails the threshold
        if (!st.admissible(e.i, e.h, e.sim)) {
            e.failed = true;
            ++pos;
            continue;
        }

        const std::size_t keep = e.i;
        const std::size_t gone = e.h;
        st.merge(keep, gone, e.sim);

        // Drop entries touching either partner, then re-insert the surviving
        // box's freshly computed row. (e dangles from here on.)
        std::erase_if(pairs, [&](const PairEntry& p) {
            return p.i == keep || p.h == keep || p.i == gone || p.h == gone ||
                   !st.alive[p.i] || !st.alive[p.h];
        });
        std::vector<PairEntry> row;
        for (std::size_t k = 0; k < st.boxes.size(); ++k) {
            if (!st.alive[k] || k == keep) continue;
            if (!class_compatible(st.boxes[keep].label, st.boxes[k].label)) continue;
            const std::size_t lo = std::min(keep, k), hi = std::max(keep, k);
            row.push_back({st.pair_similarity(lo, hi), lo, hi});
        }
        std::sort(row.begin(), row.end(), pair_before);
        const std::size_t old_size = pairs.size();
        pairs.insert(pairs.end(), row.begin(), row.end());
        std::inplace_merge(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(old_size),
                           pairs.end(), pair_before);
        pos = 0;
    }

    result.model = GfmmModel(n, gamma);
    for (std::size_t i = 0; i < st.boxes.size(); ++i)
        if (st.alive[i]) result.model.boxes.push_back(st.boxes[i]);
    return result;
}

AggloTrainResult train_agglo_2(const std::vector<IntervalPattern>& data,
                               const AggloConfig& config,
                               const std::vector<double>& gamma) {
    validate_agglo_config(config);
    validate_input(data);
    const std::size_t n = data.front().dims();
    validate_gamma(gamma, n);

    AggloTrainResult result;
    AggloState st{initial_boxes(data), {}, config, gamma, result};
    st.alive.assign(st.boxes.size(), true);

    struct Partner {
        double sim;
        std::size_t index;
    };

    bool merged_any = true;
    while (merged_any) {
        merged_any = false;
        for (std::size_t i = 0; i < st.boxes.size(); ++i) {
            if (!st.alive[i]) continue;
            std::vector<Partner> partners;
            for (std::size_t h = 0; h < st.boxes.size(); ++h) {
                if (h == i || !st.alive[h]) continue;
                if (!class_compatible(st.boxes[i].label, st.boxes[h].label)) continue;
                partners.push_back({st.pair_similarity(std::min(i, h), std::max(i, h)), h});
            }
            std::sort(partners.begin(), partners.end(), [](const Partner& a, const Partner& b) {
                if (a.sim != b.sim) return a.sim > b.sim;
                return a.index < b.index;
            });
            for (const Partner& cand : partners) {
                if (cand.sim < config.sigma) break;
                if (!st.admissible(i, cand.index, cand.sim)) continue;
                st.merge(i, cand.index, cand.sim);
                merged_any = true;
                break;    // one aggregation per box per sweep
            }
        }
    }

    result.model = GfmmModel(n, gamma);
    for (std::size_t i = 0; i < st.boxes.size(); ++i)
        if (st.alive[i]) result.model.boxes.push_back(st.boxes[i]);
    return result;
}

} // namespace gfmm
