#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "io.hpp"
#include "spec_file.hpp"
#include "udc/analysis.hpp"
#include "udc/bell.hpp"
#include "udc/bounds.hpp"
#include "udc/codec.hpp"
#include "udc/errors.hpp"
#include "udc/implied.hpp"
#include "udc/numeric.hpp"
#include "udc/statistics.hpp"

namespace udc::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) {
        return *seed;
    }
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed: " << s << "\n";
    return s;
}

Variant variant_arg(const std::string& text) {
    try {
        return parse_variant(text);
    } catch (const DomainError& e) {
        throw SpecError(e.what());
    }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// CSV goes to `path`, or to `out` when path is "-".
void write_csv(const std::string& path, const std::string& csv, std::ostream& out) {
    if (path == "-") {
        out << csv;
    } else {
        write_file(path, csv);
    }
}

json length_json(const LengthReport& r) {
    return {
        {"variant", to_string(r.variant)},
        {"k_max", r.k_max},
        {"mean_length", r.mean_length},
        {"mean_lower", r.mean_length_lower},
        {"mean_upper", r.mean_length_upper},
        {"entropy", r.entropy_hw},
        {"atoms", r.atom_count},
        {"covered_mass", r.covered_mass},
        {"residual_mass", r.residual_mass},
        {"tail_mass", r.tail_mass},
    };
}

bool inside_unit_cube(const AxisBox& box) {
    for (int i = 0; i < box.dimension(); ++i) {
        if (box.lower[i] < 0.0 || box.upper[i] > 1.0) {
            return false;
        }
    }
    return true;
}

double inf_norm(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

// Mode (or centre) used as the reference point of the corollary bounds.
std::vector<double> reference_point(const Density& f) {
    if (const auto* e = dynamic_cast<const ShiftedExponential*>(&f)) {
        return {e->shift()};
    }
    if (const auto* b = dynamic_cast<const BellUnit*>(&f)) {
        return {b->theta()};
    }
    if (const auto* b = dynamic_cast<const BellCosine*>(&f)) {
        return {2.0 * kPi * b->unit().theta()};
    }
    if (const auto* u = dynamic_cast<const UniformOn*>(&f)) {
        if (const auto* e = dynamic_cast<const EllipsoidRegion*>(&u->region())) {
            return e->center();
        }
    }
    return f.support_box().center();
}

// A bound whose formula rejects its inputs is reported as null with the reason.
void try_bound(json& bounds, const std::string& name, const std::function<double()>& eval) {
    try {
        bounds[name] = eval();
    } catch (const DomainError& e) {
        bounds[name] = nullptr;
        bounds[name + "_error"] = e.what();
    }
}

}  // namespace

int cmd_encode(const EncodeOptions& o, std::ostream& out) {
    const auto f = make_density(load_spec(o.spec));
    SchemeConfig cfg;
    cfg.variant = variant_arg(o.variant);
    cfg.n = f->dimension();
    cfg.k_max = o.k_max;
    cfg.max_retries = o.max_retries;
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw SpecError(e.what());
    }
    const std::uint64_t seed = resolve_seed(o.seed);
    Rng rng = make_rng(seed);
    StreamWriter writer({cfg.variant, cfg.n});
    RunningStats lengths;
    std::size_t retries = 0;
    for (std::size_t i = 0; i < o.count; ++i) {
        Encoded e;
        try {
            e = encode_density(*f, cfg, rng);
        } catch (const DepthExhausted& ex) {
            throw EncodeFailure("codeword " + std::to_string(i) + ": " + ex.what());
        } catch (const DomainError& ex) {
            throw EncodeFailure("codeword " + std::to_string(i) + ": " + ex.what());
        } catch (const SamplingFailure& ex) {
            throw EncodeFailure("codeword " + std::to_string(i) + ": " + ex.what());
        }
        writer.append(e.bits);
        lengths.add(static_cast<double>(e.bits.size()));
        retries += static_cast<std::size_t>(e.retries);
    }
    const auto bytes = writer.bytes();
    write_file(o.out, bytes);
    emit(out, {{"command", "encode"},
               {"seed", seed},
               {"variant", to_string(cfg.variant)},
               {"n", cfg.n},
               {"k_max", cfg.k_max},
               {"count", o.count},
               {"mean_length", lengths.count() ? lengths.mean() : 0.0},
               {"stderr", lengths.count() > 1 ? lengths.stderr_of_mean() : 0.0},
               {"retries", retries},
               {"bytes", bytes.size()},
               {"out", o.out}});
    return 0;
}

int cmd_decode(const DecodeOptions& o, std::ostream& out) {
    const auto file = read_binary_file(o.in);
    std::shared_ptr<const Density> f;
    if (o.spec) {
        f = make_density(load_spec(*o.spec));
    }
    StreamReader reader(file);
    const StreamHeader header = reader.header();
    if (f && f->dimension() != header.n) {
        throw SpecError("spec dimension " + std::to_string(f->dimension()) + " differs from the stream's n = " +
                        std::to_string(header.n));
    }
    const std::uint64_t seed = resolve_seed(o.seed);
    Rng rng = make_rng(seed);
    std::ostringstream csv;
    for (int i = 0; i < header.n; ++i) {
        csv << (i ? "," : "") << "x" << (i + 1);
    }
    csv << "\n";
    std::vector<double> first;
    std::size_t count = 0;
    while (true) {
        const std::optional<Cube> cube = reader.next();
        if (!cube) {
            break;
        }
        const auto x = sample_in_cube(*cube, rng);
        for (std::size_t i = 0; i < x.size(); ++i) {
            csv << (i ? "," : "") << format_double(x[i]);
        }
        csv << "\n";
        first.push_back(x[0]);
        ++count;
    }
    write_csv(o.out, csv.str(), out);
    if (o.out == "-") {
        return 0;
    }
    json summary = {{"command", "decode"},
                    {"seed", seed},
                    {"variant", to_string(header.variant)},
                    {"n", header.n},
                    {"count", count},
                    {"out", o.out}};
    if (f && header.n == 1 && count > 0) {
        summary["ks"] = ks_statistic(first, [&](double x) { return cdf_1d(*f, x); });
    }
    emit(out, summary);
    return 0;
}

int cmd_explen(const ExplenOptions& o, std::ostream& out) {
    const DistributionSpec spec = load_spec(o.spec);
    const auto f = make_density(spec);
    const Variant v = variant_arg(o.variant);
    if (v == Variant::Bounded && !inside_unit_cube(f->support_box())) {
        throw SpecError("the bounded variant needs a support inside the unit cube");
    }
    json j = length_json(expected_length(*f, v, o.k_max));
    j["command"] = "explen";
    j["family"] = spec.family;
    if (o.mc_rounds > 0) {
        const std::uint64_t seed = resolve_seed(o.seed);
        Rng rng = make_rng(seed);
        const McLength mc = mc_expected_length(*f, v, o.mc_rounds, rng, o.k_max);
        j["mc"] = {{"mean", mc.mean}, {"stderr", mc.stderr_}, {"rounds", mc.rounds}, {"retries", mc.retries},
                   {"seed", seed}};
    }
    emit(out, j);
    return 0;
}

int cmd_bounds(const BoundsOptions& o, std::ostream& out) {
    const DistributionSpec spec = load_spec(o.spec);
    const auto f = make_density(spec);
    const int n = f->dimension();
    const std::uint64_t seed = resolve_seed(o.seed);
    Rng rng = make_rng(seed);
    json inputs;
    json bounds = json::object();

    const std::vector<double> origin(n, 0.0);
    const std::vector<double> xhat = reference_point(*f);
    const double log_sup = std::log2(f->sup());
    inputs["log_sup"] = log_sup;
    inputs["xhat"] = xhat;
    const LevelEntropy le = level_density_and_entropy(*f);
    inputs["h_z"] = le.h_z;

    if (const auto* u = dynamic_cast<const UniformOn*>(f.get())) {
        const Region& a = u->region();
        const ErosionEntropy h = erosion_entropy(a);
        const MeanEstimate m = mean_inf_norm(a, origin, o.samples, rng);
        const MeanEstimate r = mean_inf_norm(a, xhat, o.samples, rng);
        inputs["erosion_entropy"] = h.value;
        inputs["mean_norm"] = m.mean;
        inputs["r"] = r.mean;
        inputs["volume"] = u->volume();
        try_bound(bounds, "thm1", [&] { return bounds::thm1(n, h.value, m.mean); });
        if (a.orthogonally_convex()) {
            try_bound(bounds, "cor1", [&] { return bounds::cor1(n, r.mean, inf_norm(xhat), u->volume()); });
        }
    } else {
        const LevelErosion ezh = expected_level_erosion_entropy(*f);
        const MeanEstimate m = density_mean_inf_norm(*f, origin, rng, o.samples);
        inputs["expected_level_erosion_entropy"] = ezh.value;
        inputs["mean_norm"] = m.mean;
        try_bound(bounds, "thm2", [&] { return bounds::thm2(n, ezh.value, m.mean); });
    }
    if (f->orthogonally_concave() && !dynamic_cast<const UniformOn*>(f.get())) {
        const MeanEstimate r = density_mean_inf_norm(*f, xhat, rng, o.samples);
        inputs["r"] = r.mean;
        try_bound(bounds, "cor2_h_z", [&] { return bounds::cor2(n, r.mean, inf_norm(xhat), le.h_z); });
        try_bound(bounds, "cor2_log_sup", [&] { return bounds::cor2(n, r.mean, inf_norm(xhat), log_sup); });
    }
    if (const auto* e = dynamic_cast<const ShiftedExponential*>(f.get())) {
        bounds["app2"] = bounds::app2(e->shift());
    }
    if (inside_unit_cube(f->support_box())) {
        if (f->orthogonally_concave()) {
            try_bound(bounds, "thm3_h_z", [&] { return bounds::thm3(n, le.h_z); });
            try_bound(bounds, "thm3_log_sup", [&] { return bounds::thm3(n, log_sup); });
        } else {
            // support split into two concave pieces, one extra bit
            try_bound(bounds, "thm3_two_piece", [&] { return bounds::thm3(n, log_sup) + 1.0; });
        }
    }
    emit(out, {{"command", "bounds"}, {"family", spec.family}, {"n", n}, {"seed", seed}, {"inputs", inputs},
               {"bounds", bounds}});
    return 0;
}

int cmd_erosion(const ErosionOptions& o, std::ostream& out) {
    const DistributionSpec spec = load_spec(o.spec);
    if (!spec.region) {
        throw SpecError("spec field 'region': erosion needs a uniform_region spec");
    }
    const auto region = make_region(*spec.region);
    const std::uint64_t seed = resolve_seed(o.seed);
    Rng rng = make_rng(seed);
    const ErosionEntropy h = erosion_entropy(*region);
    json j = {{"command", "erosion"}, {"seed", seed}, {"h", h.value}, {"error", h.error},
              {"volume", volume(*region).value}};
    if (region->orthogonally_convex()) {
        const Lemma1Check l = lemma1_check(*region, rng, o.samples);
        j["lemma1"] = {{"lhs", l.lhs}, {"rhs", l.rhs}, {"tolerance", l.tolerance}, {"holds", l.holds}};
    }
    emit(out, j);
    return 0;
}

int cmd_lb(const LbOptions& o, std::ostream& out) {
    const DistributionSpec spec = load_spec(o.spec);
    const auto f = make_density(spec);
    if (o.log2_v_max < 0 || o.log2_v_max > 61) {
        throw SpecError("--log2-v-max must lie in [0, 61]");
    }
    ImpliedTable table = [&] {
        try {
            return ImpliedTable(variant_arg(o.variant), f->dimension(), o.k_lo, o.k_hi,
                                std::int64_t{1} << o.log2_v_max);
        } catch (const DomainError& e) {
            throw SpecError(e.what());
        }
    }();
    const RelativeEntropy d = relative_entropy_lb(*f, table, o.level);
    emit(out, {{"command", "lb"},
               {"family", spec.family},
               {"variant", o.variant},
               {"k_lo", o.k_lo},
               {"k_hi", o.k_hi},
               {"v_max", std::int64_t{1} << o.log2_v_max},
               {"D", d.divergence},
               {"kraft_bound", d.kraft_bound},
               {"error", d.error},
               {"leakage", d.leakage},
               {"normalizer", d.normalizer},
               {"quadrature_level", d.quadrature_level}});
    return 0;
}

int cmd_bell_experiment(const BellExperimentOptions& o, std::ostream& out) {
    bell::Config cfg;
    cfg.k_max = o.k_max;
    if (o.wire == "two_piece") {
        cfg.wire = bell::Wire::TwoPiece;
    } else if (o.wire == "direct") {
        cfg.wire = bell::Wire::Direct;
    } else {
        throw SpecError("--wire must be two_piece or direct");
    }
    const std::uint64_t seed = resolve_seed(o.seed);
    Rng rng = make_rng(seed);
    const bell::Correlation c = bell::correlation_experiment(o.theta_a, o.theta_b, o.rounds, cfg, rng);
    emit(out, {{"command", "bell_experiment"},
               {"seed", seed},
               {"theta_a", o.theta_a},
               {"theta_b", o.theta_b},
               {"wire", o.wire},
               {"rounds", c.rounds},
               {"estimate", c.estimate},
               {"stderr", c.stderr_},
               {"target", -std::cos(o.theta_a - o.theta_b)},
               {"p_ya_plus", c.p_ya_plus},
               {"p_yb_plus", c.p_yb_plus},
               {"mean_bits", c.mean_bits},
               {"max_bits", c.max_bits},
               {"retries", c.retries}});
    return 0;
}

std::string sweep_csv(const bell::Sweep& s) {
    std::ostringstream csv;
    csv << "theta,wraps,mean_length,mean_length_lower,mean_length_upper,residual,two_piece_mean,two_piece_upper\n";
    for (const auto& p : s.points) {
        csv << format_double(p.theta) << "," << (p.wraps ? 1 : 0) << "," << format_double(p.mean_length) << ","
            << format_double(p.mean_length_lower) << "," << format_double(p.mean_length_upper) << ","
            << format_double(p.residual) << "," << format_double(p.two_piece_mean) << ","
            << format_double(p.two_piece_upper) << "\n";
    }
    return csv.str();
}

json sweep_json(const bell::Sweep& s, int k_max, const std::string& csv_path) {
    return {{"command", "bell_sweep"},
            {"points", s.points.size()},
            {"k_max", k_max},
            {"max_mean", s.max_mean},
            {"argmax_theta", s.argmax_theta},
            {"max_upper", s.max_upper},
            {"max_two_piece", s.max_two_piece},
            {"bound", bounds::thm3(1, std::log2(kPi)) + 1.0},
            {"out", csv_path}};
}

int cmd_bell_sweep(const BellSweepOptions& o, std::ostream& out) {
    if (o.points < 1) {
        throw SpecError("--points must be positive");
    }
    const auto grid = bell::uniform_theta_grid(o.points);
    const bell::Sweep s = bell::length_sweep(grid, o.k_max);
    write_csv(o.out, sweep_csv(s), out);
    if (o.out != "-") {
        emit(out, sweep_json(s, o.k_max, o.out));
    }
    return 0;
}

int cmd_atoms(const AtomsOptions& o, std::ostream& out) {
    const auto f = make_density(load_spec(o.spec));
    SchemeConfig cfg;
    cfg.variant = variant_arg(o.variant);
    cfg.n = f->dimension();
    cfg.k_max = o.k_max;
    if (cfg.variant == Variant::Bounded && !inside_unit_cube(f->support_box())) {
        throw SpecError("the bounded variant needs a support inside the unit cube");
    }
    std::ostringstream csv;
    csv << "k";
    for (int i = 0; i < cfg.n; ++i) {
        csv << ",v" << (i + 1);
    }
    csv << ",mass,length\n";
    const EnumerationSummary s = enumerate_density(*f, cfg.limits(), [&](const Cube& c, double m) {
        csv << c.k;
        for (auto v : c.v) {
            csv << "," << v;
        }
        csv << "," << format_double(m) << "," << codeword_length(c, cfg.variant) << "\n";
    });
    write_csv(o.out, csv.str(), out);
    if (o.out != "-") {
        emit(out, {{"command", "atoms"},
                   {"atoms", s.atom_count},
                   {"total_mass", s.total_mass},
                   {"residual", s.residual},
                   {"k_max", o.k_max},
                   {"out", o.out}});
    }
    return 0;
}

int cmd_figures(const FiguresOptions& o, std::ostream& out) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(o.outdir, ec);
    if (ec) {
        throw IoError("cannot create '" + o.outdir + "': " + ec.message());
    }
    const int ellipse_depth = o.quick ? 10 : 16;
    const int gaussian_depth = o.quick ? 12 : 20;
    const int sweep_points = o.quick ? 64 : 512;
    const int sweep_depth = o.quick ? 12 : 17;
    json files = json::array();
    const auto put = [&](const std::string& name, const std::string& contents, const std::string& what) {
        write_file((fs::path(o.outdir) / name).string(), contents);
        files.push_back({{"path", name}, {"description", what}});
    };

    std::ostringstream grid;
    grid << "k,v1,v2,codeword\n";
    const std::vector<Cube> figure = {
        {0, {-1, 0}}, {0, {0, 0}}, {0, {-1, -1}}, {0, {0, -1}}, {1, {0, 1}}, {1, {1, 1}},
        {1, {0, 0}},  {1, {1, 0}}, {2, {2, 3}},   {2, {3, 3}},  {2, {2, 2}}, {2, {3, 2}},
    };
    for (const Cube& c : figure) {
        grid << c.k << "," << c.v[0] << "," << c.v[1] << "," << serialize_unbounded(c).to_string() << "\n";
    }
    put("grid_codewords.csv", grid.str(), "unbounded codewords of the labelled two-dimensional grid cubes");

    const std::vector<double> k = {4.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0, 4.0 / 3.0};
    json ellipse = length_json(expected_length(EllipsoidRegion(k), Variant::Unbounded, ellipse_depth));
    ellipse["region"] = "ellipse K = [[4/3, -2/3], [-2/3, 4/3]] centred at the origin";
    put("ellipse_length.json", ellipse.dump(2) + "\n", "expected length and H(W) of the uniform ellipse");

    json gauss = length_json(expected_length(Gaussian1d(), Variant::Unbounded, gaussian_depth));
    gauss["density"] = "gaussian1d";
    put("gaussian_length.json", gauss.dump(2) + "\n", "expected length of the standard Gaussian");

    const auto thetas = bell::uniform_theta_grid(sweep_points);
    const bell::Sweep sweep = bell::length_sweep(thetas, sweep_depth);
    put("bell_sweep.csv", sweep_csv(sweep), "bounded-scheme expected length of bell_unit(theta) over a theta grid");
    put("bell_sweep.json", sweep_json(sweep, sweep_depth, "bell_sweep.csv").dump(2) + "\n",
        "maximum of the Bell sweep and the analytic bound");

    const LevelEntropy le = level_density_and_entropy(BellUnit(0.5));
    const json bell_bounds = {
        {"thm3_log_sup", bounds::thm3(1, std::log2(kPi))},
        {"thm3_log_sup_two_piece", bounds::thm3(1, std::log2(kPi)) + 1.0},
        {"h_z_bell_unit_0.5", le.h_z},
        {"thm3_h_z", bounds::thm3(1, le.h_z)},
        {"app2_a0", bounds::app2(0.0)},
        {"app2_a1", bounds::app2(1.0)},
    };
    put("bounds.json", bell_bounds.dump(2) + "\n", "closed-form bounds for the Bell densities and the shifted exponential");

    const json manifest = {{"command", "figures"}, {"quick", o.quick}, {"files", files}};
    write_file((fs::path(o.outdir) / "manifest.json").string(), manifest.dump(2) + "\n");
    emit(out, manifest);
    return 0;
}

}  // namespace udc::cli
