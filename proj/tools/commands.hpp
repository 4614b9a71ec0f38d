#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace udc::cli {

/// Encoding failed after the allowed retries (exit code 3).
class EncodeFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EncodeOptions {
    std::string spec;
    std::string out;
    std::size_t count = 1000;
    std::string variant = "unbounded";
    int k_max = 40;
    int max_retries = 1000;
    std::optional<std::uint64_t> seed;
};

struct DecodeOptions {
    std::string in;
    std::string out = "-";
    std::optional<std::string> spec;  // enables the KS self-test
    std::optional<std::uint64_t> seed;
};

struct ExplenOptions {
    std::string spec;
    std::string variant = "unbounded";
    int k_max = 16;
    std::size_t mc_rounds = 0;
    std::optional<std::uint64_t> seed;
};

struct BoundsOptions {
    std::string spec;
    std::size_t samples = 400000;
    std::optional<std::uint64_t> seed;
};

struct ErosionOptions {
    std::string spec;
    std::size_t samples = 400000;
    std::optional<std::uint64_t> seed;
};

struct LbOptions {
    std::string spec;
    std::string variant = "unbounded";
    int k_lo = -20;
    int k_hi = 30;
    int log2_v_max = 20;
    std::optional<int> level;
};

struct BellExperimentOptions {
    double theta_a = 0.0;
    double theta_b = 0.0;
    std::size_t rounds = 100000;
    std::string wire = "two_piece";
    int k_max = 40;
    std::optional<std::uint64_t> seed;
};

struct BellSweepOptions {
    int points = 512;
    int k_max = 17;
    std::string out = "-";
};

struct AtomsOptions {
    std::string spec;
    std::string variant = "unbounded";
    int k_max = 12;
    std::string out = "-";
};

struct FiguresOptions {
    std::string outdir;
    bool quick = false;
};

// Each command writes its JSON summary to `out` and returns the exit code.
int cmd_encode(const EncodeOptions& o, std::ostream& out);
int cmd_decode(const DecodeOptions& o, std::ostream& out);
int cmd_explen(const ExplenOptions& o, std::ostream& out);
int cmd_bounds(const BoundsOptions& o, std::ostream& out);
int cmd_erosion(const ErosionOptions& o, std::ostream& out);
int cmd_lb(const LbOptions& o, std::ostream& out);
int cmd_bell_experiment(const BellExperimentOptions& o, std::ostream& out);
int cmd_bell_sweep(const BellSweepOptions& o, std::ostream& out);
int cmd_atoms(const AtomsOptions& o, std::ostream& out);
int cmd_figures(const FiguresOptions& o, std::ostream& out);

}  // namespace udc::cli
