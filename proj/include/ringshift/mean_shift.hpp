/**
 * @file mean_shift.hpp
 * @brief Joint spatial-range mean-shift filtering of a gray image.
 *
 * Each pixel seeds a mode seek in the joint (row, col, gray) space: the
 * window gathers pixels within the spatial bandwidth of the current position
 * AND within the range bandwidth of the current value, and the state moves to
 * their (weighted) mean until the displacement falls under the inner
 * tolerance. Range distance is linear |a-b| on integers, not cyclic; the ring
 * structure applies to the image-level algebra and NED only.
 */
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ringshift/gray_image.hpp"

namespace ringshift {

enum class KernelProfile { uniform, epanechnikov };

struct FilterConfig {
    double spatial_bandwidth = 15.0;  // h_s, pixels
    double range_bandwidth = 12.0;    // h_r, gray levels
    KernelProfile profile = KernelProfile::uniform;
    double inner_tolerance = 0.5;  // joint-space displacement that ends a seek
    int inner_max_iters = 100;

    /// Throws DomainError unless h_s >= 1, h_r >= 1, tolerance > 0, cap >= 1.
    void validate() const;
};

/// Position and range value of one mode seek.
struct ModeSeekState {
    double row = 0.0;
    double col = 0.0;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Epanechnikov profile k(t) = 1 - t for t < 1, else 0, where t is a squared
/// normalized distance. The kernel's normalization constant cancels in the
/// mean-shift ratio and is omitted. Throws DomainError for negative t.
double epanechnikov_profile(double t);

/// Candidate pixel offsets covering a spatial disc of the given radius around
/// any sub-pixel center. Candidates are kept in row-major order so gathered
/// sums match a row-major full scan bit for bit; each candidate still gets an
/// exact distance test against the real-valued position.
class SpatialOffsets {
public:
    explicit SpatialOffsets(double spatial_bandwidth);

    std::span<const std::pair<int, int>> candidates() const noexcept { return offsets_; }

private:
    std::vector<std::pair<int, int>> offsets_;
};

/// One window gather + move to the weighted mean. The seed pixel qualifies
/// for its own first window, so the gather cannot start empty; if a later
/// window ends up with zero total weight the state is returned unchanged.
ModeSeekState mean_shift_step(const GrayImage& image, const ModeSeekState& state,
                              const FilterConfig& cfg);
ModeSeekState mean_shift_step(const GrayImage& image, const ModeSeekState& state,
                              const FilterConfig& cfg, const SpatialOffsets& offsets);

/// Iterates mean_shift_step from (seed, its gray value) until the Euclidean
/// joint-space displacement drops below cfg.inner_tolerance or the iteration
/// cap is hit; `converged` records which.
ModeSeekState mode_seek(const GrayImage& image, int seed_row, int seed_col,
                        const FilterConfig& cfg);
ModeSeekState mode_seek(const GrayImage& image, int seed_row, int seed_col,
                        const FilterConfig& cfg, const SpatialOffsets& offsets);

/// One smoothing pass: every pixel is replaced by the range value of the mode
/// its seek converges to, rounded half away from zero and clamped to
/// [0, n-1]. Output shares dimensions and modulus with the input.
GrayImage filter_pass(const GrayImage& image, const FilterConfig& cfg);

}  // namespace ringshift
