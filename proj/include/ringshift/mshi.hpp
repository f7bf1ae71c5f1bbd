/**
 * @file mshi.hpp
 * @brief Iterative mean-shift segmentation driver with a pluggable stopping
 *        criterion and per-iteration convergence trace.
 */
#pragma once

#include <vector>

#include "ringshift/gray_image.hpp"
#include "ringshift/mean_shift.hpp"
#include "ringshift/metrics.hpp"

namespace ringshift {

/// Which similarity index stops the outer loop, and its threshold in bits.
struct StoppingCriterion {
    static constexpr double kDefaultNedEpsilon = 0.9;
    static constexpr double kDefaultWeakEntropyEpsilon = 0.01;

    SimilarityKind kind = SimilarityKind::ned;
    double epsilon = kDefaultNedEpsilon;

    static StoppingCriterion ned_default() {
        return {SimilarityKind::ned, kDefaultNedEpsilon};
    }
    static StoppingCriterion weak_entropy_default() {
        return {SimilarityKind::weak_entropy, kDefaultWeakEntropyEpsilon};
    }

    void validate() const;
};

struct MshiConfig {
    FilterConfig filter;
    StoppingCriterion stop;
    int max_outer_iters = 50;

    void validate() const;
};

struct TraceRecord {
    int iteration;           // 1-based outer iteration index
    double criterion_value;  // bits
    double entropy_bits;     // entropy of the image produced by this iteration
};

/// Per-outer-iteration record of the criterion value and image entropy, the
/// raw material for stability analysis.
struct ConvergenceTrace {
    std::vector<TraceRecord> records;
};

struct MshiResult {
    GrayImage segmented;
    ConvergenceTrace trace;
    bool hit_cap = false;  // iteration cap stopped the loop, not the criterion
};

/// Similarity between consecutive iterates under the chosen criterion.
double criterion_value(const StoppingCriterion& stop, const GrayImage& prev,
                       const GrayImage& cur);

/// Repeatedly filters the current image and stops once the criterion between
/// consecutive iterates is <= epsilon, or after max_outer_iters passes.
MshiResult run_mshi(const GrayImage& image, const MshiConfig& cfg);

/// Sum of |v_{k+1} - v_k| over the trace's criterion values; quantifies how
/// unsettled a criterion was across a run. Needs at least two records.
double trace_total_variation(const ConvergenceTrace& trace);

}  // namespace ringshift
