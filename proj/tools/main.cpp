/**
 * @file main.cpp
 * @brief Command-line interface: entropy, histograms, similarity indices,
 *        ring arithmetic, single-pass filtering and iterative segmentation
 *        of PGM gray images.
 */
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringshift/csv.hpp"
#include "ringshift/entropy.hpp"
#include "ringshift/gray_image.hpp"
#include "ringshift/mean_shift.hpp"
#include "ringshift/metrics.hpp"
#include "ringshift/mshi.hpp"
#include "ringshift/pgm_io.hpp"
#include "ringshift/profile.hpp"

namespace {

using namespace ringshift;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

enum class RingOp { add, sub, neg, mul, sat_add, sat_sub };

// Loads a PGM; a nonzero modulus override rebinds the image into Z_modulus
// (every pixel must already fit, enforced by the GrayImage constructor).
GrayImage load_image(const std::string& path, int modulus_override) {
    GrayImage img = read_pgm(path);
    if (modulus_override != 0 && modulus_override != img.modulus()) {
        std::vector<int> px(img.pixels().begin(), img.pixels().end());
        return {img.width(), img.height(), std::move(px), modulus_override};
    }
    return img;
}

std::string fixed12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", value);
    return buf;
}

void write_table(const CsvTable& table, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        emit_csv(table, std::cout);
    } else {
        emit_csv(table, std::filesystem::path(out_path));
    }
}

struct CliOptions {
    std::string input;
    std::string input_b;
    std::string output;
    std::string out_csv;
    std::string trace_path;
    int modulus = 0;
    double hs = 15.0;
    double hr = 12.0;
    KernelProfile kernel = KernelProfile::uniform;
    SimilarityKind criterion = SimilarityKind::ned;
    double epsilon = 0.0;
    bool epsilon_set = false;
    int max_iter = 50;
    int row = 0;
    RingOp op = RingOp::add;
    int scalar = 0;
    bool scalar_set = false;
};

FilterConfig make_filter_config(const CliOptions& opt) {
    FilterConfig cfg;
    cfg.spatial_bandwidth = opt.hs;
    cfg.range_bandwidth = opt.hr;
    cfg.profile = opt.kernel;
    return cfg;
}

int run_entropy(const CliOptions& opt) {
    const GrayImage img = load_image(opt.input, opt.modulus);
    std::cout << fixed12(entropy_bits(img)) << '\n';
    return kExitOk;
}

int run_histogram(const CliOptions& opt) {
    const GrayImage img = load_image(opt.input, opt.modulus);
    write_table(histogram_table(histogram(img)), opt.out_csv);
    return kExitOk;
}

int run_similarity(const CliOptions& opt, SimilarityKind kind) {
    const GrayImage a = load_image(opt.input, opt.modulus);
    const GrayImage b = load_image(opt.input_b, opt.modulus);
    const SimilarityValue v = kind == SimilarityKind::ned ? ned(a, b) : we_index(a, b);
    std::cout << fixed12(v.value) << '\n';
    return kExitOk;
}

int run_ringop(const CliOptions& opt) {
    const GrayImage img = load_image(opt.input, opt.modulus);
    GrayImage result = [&] {
        if (opt.op == RingOp::neg) {
            return ring_neg(img);
        }
        const ScalarImage s(opt.scalar, img.width(), img.height(), img.modulus());
        switch (opt.op) {
            case RingOp::add: return ring_add(img, s);
            case RingOp::sub: return ring_sub(img, s);
            case RingOp::mul: return ring_mul(img, s);
            case RingOp::sat_add: return saturating_add(img, s);
            case RingOp::sat_sub: return saturating_sub(img, s);
            default: return ring_add(img, s);  // unreachable
        }
    }();
    write_pgm(result, opt.output);
    return kExitOk;
}

int run_filter(const CliOptions& opt) {
    const GrayImage img = load_image(opt.input, opt.modulus);
    write_pgm(filter_pass(img, make_filter_config(opt)), opt.output);
    return kExitOk;
}

int run_segment(const CliOptions& opt) {
    const GrayImage img = load_image(opt.input, opt.modulus);
    MshiConfig cfg;
    cfg.filter = make_filter_config(opt);
    cfg.stop.kind = opt.criterion;
    cfg.stop.epsilon = opt.epsilon_set ? opt.epsilon
                       : opt.criterion == SimilarityKind::ned
                           ? StoppingCriterion::kDefaultNedEpsilon
                           : StoppingCriterion::kDefaultWeakEntropyEpsilon;
    cfg.max_outer_iters = opt.max_iter;

    const MshiResult result = run_mshi(img, cfg);
    write_pgm(result.segmented, opt.output);
    if (!opt.trace_path.empty()) {
        emit_csv(trace_table(result.trace), std::filesystem::path(opt.trace_path));
    }
    const TraceRecord& last = result.trace.records.back();
    std::cout << "iterations=" << last.iteration << " final_criterion="
              << fixed12(last.criterion_value) << " hit_cap=" << (result.hit_cap ? 1 : 0)
              << '\n';
    return kExitOk;
}

int run_profile_cmd(const CliOptions& opt) {
    const GrayImage img = load_image(opt.input, opt.modulus);
    write_table(profile_table(extract_profile(img, opt.row)), opt.out_csv);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"Gray-image mean-shift segmentation with residue-ring similarity metrics"};
    app.require_subcommand(1);

    CliOptions opt;

    const std::map<std::string, KernelProfile> kernel_names{
        {"uniform", KernelProfile::uniform}, {"epanechnikov", KernelProfile::epanechnikov}};
    const std::map<std::string, SimilarityKind> criterion_names{
        {"ned", SimilarityKind::ned}, {"we", SimilarityKind::weak_entropy}};
    const std::map<std::string, RingOp> op_names{
        {"add", RingOp::add},         {"sub", RingOp::sub},     {"neg", RingOp::neg},
        {"mul", RingOp::mul},         {"sat-add", RingOp::sat_add},
        {"sat-sub", RingOp::sat_sub}};

    auto add_modulus_flag = [&](CLI::App* cmd) {
        cmd->add_option("--modulus", opt.modulus,
                        "Interpret pixels in Z_modulus instead of maxval+1")
            ->check(CLI::Range(2, 65536));
    };
    auto add_bandwidth_flags = [&](CLI::App* cmd) {
        cmd->add_option("--hs", opt.hs, "Spatial bandwidth in pixels")
            ->check(CLI::Range(1.0, 1e6))
            ->capture_default_str();
        cmd->add_option("--hr", opt.hr, "Range bandwidth in gray levels")
            ->check(CLI::Range(1.0, 1e6))
            ->capture_default_str();
        cmd->add_option("--profile-kernel", opt.kernel, "Kernel profile")
            ->transform(CLI::CheckedTransformer(kernel_names, CLI::ignore_case))
            ->default_str("uniform");
    };

    CLI::App* entropy_cmd = app.add_subcommand("entropy", "Print image entropy in bits");
    entropy_cmd->add_option("input", opt.input, "Input PGM")->required();
    add_modulus_flag(entropy_cmd);

    CLI::App* histogram_cmd =
        app.add_subcommand("histogram", "Write the gray-level histogram as CSV");
    histogram_cmd->add_option("input", opt.input, "Input PGM")->required();
    histogram_cmd->add_option("--out", opt.out_csv, "Output CSV path (default: stdout)");
    add_modulus_flag(histogram_cmd);

    CLI::App* ned_cmd =
        app.add_subcommand("ned", "Print the natural entropy distance between two images");
    ned_cmd->add_option("input_a", opt.input, "First PGM")->required();
    ned_cmd->add_option("input_b", opt.input_b, "Second PGM")->required();
    add_modulus_flag(ned_cmd);

    CLI::App* we_cmd =
        app.add_subcommand("we", "Print the weak-entropy index between two images");
    we_cmd->add_option("input_a", opt.input, "First PGM")->required();
    we_cmd->add_option("input_b", opt.input_b, "Second PGM")->required();
    add_modulus_flag(we_cmd);

    CLI::App* ringop_cmd =
        app.add_subcommand("ringop", "Apply a ring or saturating operation with a scalar image");
    ringop_cmd->add_option("input", opt.input, "Input PGM")->required();
    ringop_cmd->add_option("output", opt.output, "Output PGM")->required();
    ringop_cmd->add_option("--op", opt.op, "Operation")
        ->transform(CLI::CheckedTransformer(op_names, CLI::ignore_case))
        ->required();
    CLI::Option* scalar_opt =
        ringop_cmd->add_option("--scalar", opt.scalar, "Scalar operand in [0, modulus-1]")
            ->check(CLI::Range(0, 65535));
    add_modulus_flag(ringop_cmd);

    CLI::App* filter_cmd = app.add_subcommand("filter", "One mean-shift filtering pass");
    filter_cmd->add_option("input", opt.input, "Input PGM")->required();
    filter_cmd->add_option("output", opt.output, "Output PGM")->required();
    add_bandwidth_flags(filter_cmd);
    add_modulus_flag(filter_cmd);

    CLI::App* segment_cmd =
        app.add_subcommand("segment", "Iterative mean-shift segmentation (MSHi)");
    segment_cmd->add_option("input", opt.input, "Input PGM")->required();
    segment_cmd->add_option("output", opt.output, "Output PGM")->required();
    add_bandwidth_flags(segment_cmd);
    segment_cmd->add_option("--criterion", opt.criterion, "Stopping criterion")
        ->transform(CLI::CheckedTransformer(criterion_names, CLI::ignore_case))
        ->default_str("ned");
    CLI::Option* epsilon_opt =
        segment_cmd->add_option("--epsilon", opt.epsilon,
                                "Stopping threshold in bits (default: 0.9 ned, 0.01 we)")
            ->check(CLI::PositiveNumber);
    segment_cmd->add_option("--max-iter", opt.max_iter, "Outer iteration cap")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    segment_cmd->add_option("--trace", opt.trace_path, "Write the convergence trace CSV here");
    add_modulus_flag(segment_cmd);

    CLI::App* profile_cmd = app.add_subcommand("profile", "Write one image row as CSV");
    profile_cmd->add_option("input", opt.input, "Input PGM")->required();
    profile_cmd->add_option("--row", opt.row, "0-based row index")->required();
    profile_cmd->add_option("--out", opt.out_csv, "Output CSV path (default: stdout)");
    add_modulus_flag(profile_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    opt.epsilon_set = epsilon_opt->count() > 0;
    opt.scalar_set = scalar_opt->count() > 0;
    if (ringop_cmd->parsed() && opt.op != RingOp::neg && !opt.scalar_set) {
        std::cerr << "ringop: --scalar is required for --op other than neg\n";
        return kExitUsageError;
    }

    try {
        if (entropy_cmd->parsed()) return run_entropy(opt);
        if (histogram_cmd->parsed()) return run_histogram(opt);
        if (ned_cmd->parsed()) return run_similarity(opt, SimilarityKind::ned);
        if (we_cmd->parsed()) return run_similarity(opt, SimilarityKind::weak_entropy);
        if (ringop_cmd->parsed()) return run_ringop(opt);
        if (filter_cmd->parsed()) return run_filter(opt);
        if (segment_cmd->parsed()) return run_segment(opt);
        if (profile_cmd->parsed()) return run_profile_cmd(opt);
    } catch (const ringshift::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitUsageError;  // no subcommand matched; require_subcommand should prevent this
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
}
