/**
 * @file mean_shift.cpp
 * @brief Mode seeking and filtering in the joint spatial-range domain.
 */
#include "ringshift/mean_shift.hpp"

#include <cmath>
#include <string>

namespace ringshift {

void FilterConfig::validate() const {
    if (!(spatial_bandwidth >= 1.0)) {
        throw DomainError("spatial bandwidth must be >= 1");
    }
    if (!(range_bandwidth >= 1.0)) {
        throw DomainError("range bandwidth must be >= 1");
    }
    if (!(inner_tolerance > 0.0)) {
        throw DomainError("inner tolerance must be positive");
    }
    if (inner_max_iters < 1) {
        throw DomainError("inner iteration cap must be >= 1");
    }
}

double epanechnikov_profile(double t) {
    if (!(t >= 0.0)) {
        throw DomainError("profile argument must be non-negative");
    }
    return t < 1.0 ? 1.0 - t : 0.0;
}

SpatialOffsets::SpatialOffsets(double spatial_bandwidth) {
    const int reach = static_cast<int>(std::ceil(spatial_bandwidth)) + 1;
    const double radius_sq = spatial_bandwidth * spatial_bandwidth;
    for (int dr = -reach; dr <= reach; ++dr) {
        for (int dc = -reach; dc <= reach; ++dc) {
            // Nearest approach of pixel (dr, dc) to a center anywhere in the
            // unit cell [0,1)^2; offsets that can never reach the disc drop out.
            const double min_dr = dr > 0 ? dr - 1.0 : static_cast<double>(-dr);
            const double min_dc = dc > 0 ? dc - 1.0 : static_cast<double>(-dc);
            if (min_dr * min_dr + min_dc * min_dc <= radius_sq) {
                offsets_.emplace_back(dr, dc);
            }
        }
    }
}

namespace {

void require_in_bounds(const GrayImage& image, const ModeSeekState& state) {
    if (!(state.row >= 0.0) || !(state.row <= image.height() - 1) || !(state.col >= 0.0) ||
        !(state.col <= image.width() - 1)) {
        throw DomainError("mode-seek position outside image bounds");
    }
    if (!std::isfinite(state.value)) {
        throw DomainError("mode-seek value must be finite");
    }
}

ModeSeekState step_unchecked(const GrayImage& image, const ModeSeekState& state,
                             const FilterConfig& cfg, const SpatialOffsets& offsets) {
    const double hs_sq = cfg.spatial_bandwidth * cfg.spatial_bandwidth;
    const double hr = cfg.range_bandwidth;
    const double hr_sq = hr * hr;
    const bool weighted = cfg.profile == KernelProfile::epanechnikov;

    const int anchor_row = static_cast<int>(std::floor(state.row));
    const int anchor_col = static_cast<int>(std::floor(state.col));

    double sum_row = 0.0;
    double sum_col = 0.0;
    double sum_value = 0.0;
    double sum_weight = 0.0;
    for (const auto& [dr, dc] : offsets.candidates()) {
        const int r = anchor_row + dr;
        const int c = anchor_col + dc;
        if (r < 0 || r >= image.height() || c < 0 || c >= image.width()) {
            continue;
        }
        const double drow = r - state.row;
        const double dcol = c - state.col;
        const double spatial_sq = drow * drow + dcol * dcol;
        if (spatial_sq > hs_sq) {
            continue;
        }
        const double gray = image(r, c);
        const double dval = gray - state.value;
        if (std::abs(dval) > hr) {
            continue;
        }
        const double w =
            weighted ? epanechnikov_profile(spatial_sq / hs_sq + dval * dval / hr_sq) : 1.0;
        sum_row += w * r;
        sum_col += w * c;
        sum_value += w * gray;
        sum_weight += w;
    }

    ModeSeekState next = state;
    next.iterations = state.iterations + 1;
    next.converged = false;
    if (sum_weight > 0.0) {
        next.row = sum_row / sum_weight;
        next.col = sum_col / sum_weight;
        next.value = sum_value / sum_weight;
    }
    return next;
}

}  // namespace

ModeSeekState mean_shift_step(const GrayImage& image, const ModeSeekState& state,
                              const FilterConfig& cfg, const SpatialOffsets& offsets) {
    cfg.validate();
    require_in_bounds(image, state);
    return step_unchecked(image, state, cfg, offsets);
}

ModeSeekState mean_shift_step(const GrayImage& image, const ModeSeekState& state,
                              const FilterConfig& cfg) {
    return mean_shift_step(image, state, cfg, SpatialOffsets(cfg.spatial_bandwidth));
}

ModeSeekState mode_seek(const GrayImage& image, int seed_row, int seed_col,
                        const FilterConfig& cfg, const SpatialOffsets& offsets) {
    cfg.validate();
    if (seed_row < 0 || seed_row >= image.height() || seed_col < 0 || seed_col >= image.width()) {
        throw DomainError("seed (" + std::to_string(seed_row) + ", " + std::to_string(seed_col) +
                          ") outside image bounds");
    }
    ModeSeekState state;
    state.row = seed_row;
    state.col = seed_col;
    state.value = image(seed_row, seed_col);
    while (state.iterations < cfg.inner_max_iters) {
        const ModeSeekState next = step_unchecked(image, state, cfg, offsets);
        const double drow = next.row - state.row;
        const double dcol = next.col - state.col;
        const double dval = next.value - state.value;
        const double displacement = std::sqrt(drow * drow + dcol * dcol + dval * dval);
        state = next;
        if (displacement < cfg.inner_tolerance) {
            state.converged = true;
            break;
        }
    }
    return state;
}

ModeSeekState mode_seek(const GrayImage& image, int seed_row, int seed_col,
                        const FilterConfig& cfg) {
    return mode_seek(image, seed_row, seed_col, cfg, SpatialOffsets(cfg.spatial_bandwidth));
}

GrayImage filter_pass(const GrayImage& image, const FilterConfig& cfg) {
    cfg.validate();
    const SpatialOffsets offsets(cfg.spatial_bandwidth);
    const int n = image.modulus();
    std::vector<int> out(static_cast<std::size_t>(image.pixel_count()));
    for (int r = 0; r < image.height(); ++r) {
        for (int c = 0; c < image.width(); ++c) {
            const ModeSeekState mode = mode_seek(image, r, c, cfg, offsets);
            const long long rounded = std::llround(mode.value);
            out[static_cast<std::size_t>(r) * image.width() + c] =
                static_cast<int>(std::clamp(rounded, 0LL, static_cast<long long>(n - 1)));
        }
    }
    return {image.width(), image.height(), std::move(out), n};
}

}  // namespace ringshift
