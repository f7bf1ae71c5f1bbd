#include "ringshift/mshi.hpp"

#include <cmath>
#include <utility>

#include "ringshift/entropy.hpp"

namespace ringshift {

void StoppingCriterion::validate() const {
    if (!(epsilon > 0.0)) {
        throw DomainError("stopping threshold epsilon must be positive");
    }
}

void MshiConfig::validate() const {
    filter.validate();
    stop.validate();
    if (max_outer_iters < 1) {
        throw DomainError("outer iteration cap must be >= 1");
    }
}

double criterion_value(const StoppingCriterion& stop, const GrayImage& prev,
                       const GrayImage& cur) {
    return stop.kind == SimilarityKind::ned ? ned(prev, cur).value : we_index(prev, cur).value;
}

MshiResult run_mshi(const GrayImage& image, const MshiConfig& cfg) {
    cfg.validate();
    GrayImage current = image;
    ConvergenceTrace trace;
    bool hit_cap = false;
    for (int k = 1; k <= cfg.max_outer_iters; ++k) {
        GrayImage next = filter_pass(current, cfg.filter);
        const double errabs = criterion_value(cfg.stop, current, next);
        trace.records.push_back({k, errabs, entropy_bits(next)});
        current = std::move(next);
        if (errabs <= cfg.stop.epsilon) {
            break;
        }
        if (k == cfg.max_outer_iters) {
            hit_cap = true;
        }
    }
    return {std::move(current), std::move(trace), hit_cap};
}

double trace_total_variation(const ConvergenceTrace& trace) {
    if (trace.records.size() < 2) {
        throw DomainError("total variation needs at least two trace records");
    }
    double tv = 0.0;
    for (std::size_t i = 1; i < trace.records.size(); ++i) {
        tv += std::abs(trace.records[i].criterion_value - trace.records[i - 1].criterion_value);
    }
    return tv;
}

}  // namespace ringshift
