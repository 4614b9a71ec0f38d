#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "io.hpp"
#include "spec_file.hpp"
#include "udc/dyadic.hpp"
#include "udc/errors.hpp"

namespace {

using namespace udc;
using namespace udc::cli;

constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;
constexpr int kExitIo = 4;
constexpr int kExitDecode = 5;

void add_variant(CLI::App* cmd, std::string& variant) {
    cmd->add_option("--variant", variant, "unbounded | bounded")
        ->check(CLI::IsMember({"unbounded", "bounded"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal dyadic coding of continuous distributions"};
    app.require_subcommand(1);
    int code = 0;

    EncodeOptions enc;
    auto* encode = app.add_subcommand("encode", "Encode samples of a distribution into a stream file");
    encode->add_option("--spec", enc.spec, "distribution spec (JSON)")->required();
    encode->add_option("--out", enc.out, "output stream file")->required();
    encode->add_option("--count", enc.count, "number of codewords")->capture_default_str();
    add_variant(encode, enc.variant);
    encode->add_option("--k-max", enc.k_max, "deepest dyadic level")->capture_default_str();
    encode->add_option("--max-retries", enc.max_retries, "fresh samples after depth exhaustion")
        ->capture_default_str();
    encode->add_option("--seed", enc.seed, "RNG seed (random when omitted)");
    encode->callback([&] { code = cmd_encode(enc, std::cout); });

    DecodeOptions dec;
    auto* decode = app.add_subcommand("decode", "Decode a stream file into CSV samples");
    decode->add_option("--in", dec.in, "input stream file")->required();
    decode->add_option("--out", dec.out, "CSV output, '-' for stdout")->capture_default_str();
    decode->add_option("--spec", dec.spec, "spec of the encoded distribution; adds a KS statistic");
    decode->add_option("--seed", dec.seed, "RNG seed (random when omitted)");
    decode->callback([&] { code = cmd_decode(dec, std::cout); });

    ExplenOptions exl;
    auto* explen = app.add_subcommand("explen", "Expected codeword length by atom enumeration");
    explen->add_option("--spec", exl.spec, "distribution spec (JSON)")->required();
    add_variant(explen, exl.variant);
    explen->add_option("--k-max", exl.k_max, "enumeration depth")->capture_default_str();
    explen->add_option("--mc-rounds", exl.mc_rounds, "additional Monte Carlo encode rounds")->capture_default_str();
    explen->add_option("--seed", exl.seed, "RNG seed (random when omitted)");
    explen->callback([&] { code = cmd_explen(exl, std::cout); });

    BoundsOptions bnd;
    auto* bounds = app.add_subcommand("bounds", "Evaluate the applicable expected-length bounds");
    bounds->add_option("--spec", bnd.spec, "distribution spec (JSON)")->required();
    bounds->add_option("--samples", bnd.samples, "Monte Carlo samples for mean norms")->capture_default_str();
    bounds->add_option("--seed", bnd.seed, "RNG seed (random when omitted)");
    bounds->callback([&] { code = cmd_bounds(bnd, std::cout); });

    ErosionOptions ero;
    auto* erosion = app.add_subcommand("erosion", "Erosion entropy of a region");
    erosion->add_option("--spec", ero.spec, "uniform_region spec (JSON)")->required();
    erosion->add_option("--samples", ero.samples, "Monte Carlo samples for the lemma check")->capture_default_str();
    erosion->add_option("--seed", ero.seed, "RNG seed (random when omitted)");
    erosion->callback([&] { code = cmd_erosion(ero, std::cout); });

    LbOptions lbo;
    auto* lb = app.add_subcommand("lb", "Relative entropy to the truncated implied distribution");
    lb->add_option("--spec", lbo.spec, "distribution spec (JSON)")->required();
    add_variant(lb, lbo.variant);
    lb->add_option("--k-lo", lbo.k_lo, "coarsest table level")->capture_default_str();
    lb->add_option("--k-hi", lbo.k_hi, "finest table level")->capture_default_str();
    lb->add_option("--log2-v-max", lbo.log2_v_max, "table index limit |v| <= 2^this")->capture_default_str();
    lb->add_option("--level", lbo.level, "quadrature level");
    lb->callback([&] { code = cmd_lb(lbo, std::cout); });

    auto* bell = app.add_subcommand("bell", "Bell correlation protocol");
    bell->require_subcommand(1);
    BellExperimentOptions bex;
    auto* experiment = bell->add_subcommand("experiment", "Play rounds at fixed angles");
    experiment->add_option("--theta-a", bex.theta_a, "Alice's angle (radians)")->required();
    experiment->add_option("--theta-b", bex.theta_b, "Bob's angle (radians)")->required();
    experiment->add_option("--rounds", bex.rounds, "number of rounds")->capture_default_str();
    experiment->add_option("--wire", bex.wire, "two_piece | direct")
        ->check(CLI::IsMember({"two_piece", "direct"}))
        ->capture_default_str();
    experiment->add_option("--k-max", bex.k_max, "deepest dyadic level")->capture_default_str();
    experiment->add_option("--seed", bex.seed, "RNG seed (random when omitted)");
    experiment->callback([&] { code = cmd_bell_experiment(bex, std::cout); });

    BellSweepOptions bsw;
    auto* sweep = bell->add_subcommand("sweep", "Expected message length over a phase grid");
    sweep->add_option("--points", bsw.points, "grid size")->capture_default_str();
    sweep->add_option("--k-max", bsw.k_max, "enumeration depth")->capture_default_str();
    sweep->add_option("--out", bsw.out, "CSV output, '-' for stdout")->capture_default_str();
    sweep->callback([&] { code = cmd_bell_sweep(bsw, std::cout); });

    AtomsOptions ato;
    auto* atoms = app.add_subcommand("atoms", "List the decomposition atoms with masses and lengths");
    atoms->add_option("--spec", ato.spec, "distribution spec (JSON)")->required();
    add_variant(atoms, ato.variant);
    atoms->add_option("--k-max", ato.k_max, "enumeration depth")->capture_default_str();
    atoms->add_option("--out", ato.out, "CSV output, '-' for stdout")->capture_default_str();
    atoms->callback([&] { code = cmd_atoms(ato, std::cout); });

    FiguresOptions fig;
    auto* figures = app.add_subcommand("figures", "Regenerate the figure data and a manifest");
    figures->add_option("--outdir", fig.outdir, "output directory")->required();
    figures->add_flag("--quick", fig.quick, "shallow depths for smoke tests");
    figures->callback([&] { code = cmd_figures(fig, std::cout); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DecodeError& e) {
        std::cerr << "error: malformed stream: " << e.what() << "\n";
        return kExitDecode;
    } catch (const std::exception& e) {
        // EncodeFailure, DepthExhausted and numerical failures
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return code;
}
