#include "udc/dyadic.hpp"

#include <cmath>
#include <string>

#include "udc/errors.hpp"
#include "udc/numeric.hpp"

namespace udc {

namespace {

std::string describe(const Cube& c) {
    std::string s = "(" + std::to_string(c.k) + ", (";
    for (std::size_t i = 0; i < c.v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(c.v[i]);
    }
    return s + "))";
}

Cube cube_at(std::span<const double> x, int k) {
    Cube c{k, std::vector<std::int64_t>(x.size())};
    for (std::size_t i = 0; i < x.size(); ++i) {
        c.v[i] = dyadic_index(x[i], k);
    }
    return c;
}

int root_level_for(const AxisBox& bb, const DecompositionLimits& limits) {
    return limits.root_level.value_or(start_level(bb));
}

}  // namespace

DepthExhausted::DepthExhausted(Cube deepest)
    : std::runtime_error("decomposition depth exhausted at cube " + describe(deepest)), cube_(std::move(deepest)) {}

bool in_decomposition(const Cube& c, const Region& region) {
    return region.classify(cube_box(c)) == Containment::Inside &&
           region.classify(cube_box(c.parent())) != Containment::Inside;
}

Cube locate(std::span<const double> x, const Region& region, const DecompositionLimits& limits) {
    if (static_cast<int>(x.size()) != region.dimension()) {
        throw DomainError("point dimension does not match the region");
    }
    const int k0 = root_level_for(region.bounding_box(), limits);
    if (limits.k_max < k0) {
        throw DomainError("k_max is below the root level");
    }
    Cube c = cube_at(x, k0);
    Containment cls = region.classify(cube_box(c));
    if (cls == Containment::Inside) {
        if (limits.root_level) {
            return c;
        }
        // Only possible for sets with unbounded tails: climb while the parent is inside.
        for (int step = 0; step < 64; ++step) {
            Cube p = c.parent();
            if (region.classify(cube_box(p)) != Containment::Inside) {
                return c;
            }
            c = std::move(p);
        }
        throw DomainError("no maximal decomposition cube above the root level");
    }
    for (int k = k0; ; ++k) {
        if (k > k0) {
            c = cube_at(x, k);
            cls = region.classify(cube_box(c));
        }
        if (cls == Containment::Inside) {
            return c;
        }
        if (cls == Containment::Outside) {
            throw DomainError("point lies outside the region at cube " + describe(c));
        }
        if (k >= limits.k_max) {
            throw DepthExhausted(c);
        }
    }
}

namespace {

struct UniformWalk {
    const Region& region;
    int k_max;
    double inv_volume;
    const AtomVisitor& visit;
    CompensatedSum total;
    CompensatedSum frontier;
    std::size_t atoms = 0;
    std::size_t frontier_cubes = 0;

    void run(const Cube& c) {
        const AxisBox box = cube_box(c);
        switch (region.classify(box)) {
            case Containment::Outside:
                return;
            case Containment::Inside: {
                const double m = box.volume() * inv_volume;
                total += m;
                ++atoms;
                visit(c, m);
                return;
            }
            case Containment::Straddles:
                break;
        }
        if (c.k >= k_max) {
            frontier += box.volume() * inv_volume;
            ++frontier_cubes;
            return;
        }
        for (unsigned mask = 0; mask < (1u << c.dimension()); ++mask) {
            run(c.child(mask));
        }
    }
};

struct DensityWalk {
    const Density& f;
    int k_max;
    const AtomVisitor& visit;
    CompensatedSum total;
    CompensatedSum frontier;
    CompensatedSum frontier_bound;
    std::size_t atoms = 0;
    std::size_t frontier_cubes = 0;

    void run(const Cube& c, double parent_inf) {
        const AxisBox box = cube_box(c);
        const double vol = box.volume();
        const double inf = std::max(f.cube_inf(box), parent_inf);
        const double sup = f.cube_sup(box);
        const double m = vol * (inf - parent_inf);
        if (m > 0.0) {
            total += m;
            ++atoms;
            visit(c, m);
        }
        if (sup <= inf) {
            return;  // f is constant on c: nothing left below it
        }
        if (c.k >= k_max) {
            ++frontier_cubes;
            frontier_bound += vol * (sup - inf);
            if (f.exact_box_mass()) {
                frontier += f.box_mass(box) - vol * inf;
            }
            return;
        }
        for (unsigned mask = 0; mask < (1u << c.dimension()); ++mask) {
            run(c.child(mask), inf);
        }
    }
};

}  // namespace

EnumerationSummary enumerate_uniform(const Region& region, const DecompositionLimits& limits,
                                     const AtomVisitor& visit) {
    const AxisBox bb = region.bounding_box();
    const double vol = volume(region).value;
    if (!(vol > 0.0) || !std::isfinite(vol)) {
        throw DomainError("uniform enumeration needs positive finite volume");
    }
    const int k0 = root_level_for(bb, limits);
    UniformWalk walk{region, limits.k_max, 1.0 / vol, visit, {}, {}, 0, 0};
    for (const Cube& c : covering_cubes(bb, k0)) {
        walk.run(c);
    }
    EnumerationSummary s;
    s.atom_count = walk.atoms;
    s.total_mass = walk.total.value();
    s.residual = 1.0 - s.total_mass;
    s.residual_accounted = walk.frontier.value();
    s.residual_exact = false;  // straddling cubes are charged their whole volume
    s.frontier_bound = walk.frontier.value();
    s.frontier_cubes = walk.frontier_cubes;
    s.root_level = k0;
    s.k_max = limits.k_max;
    return s;
}

EnumerationSummary enumerate_density(const Density& f, const DecompositionLimits& limits,
                                     const AtomVisitor& visit) {
    const AxisBox bb = f.support_box();
    const int k0 = root_level_for(bb, limits);
    if (limits.root_level && k0 == 0) {
        const AxisBox unit = AxisBox::unit(f.dimension());
        if (!unit.contains(bb)) {
            throw DomainError("bounded decomposition needs support inside the unit cube");
        }
    }
    DensityWalk walk{f, limits.k_max, visit, {}, {}, {}, 0, 0};
    CompensatedSum coarse;
    CompensatedSum roots_mass;
    for (const Cube& c : covering_cubes(bb, k0)) {
        const AxisBox box = cube_box(c);
        // With a fixed root level no coarser cube exists, so nothing sits below the root.
        const double parent_inf = limits.root_level ? 0.0 : f.cube_inf(cube_box(c.parent()));
        coarse += box.volume() * std::min(parent_inf, f.cube_sup(box));
        if (f.exact_box_mass()) {
            roots_mass += f.box_mass(box);
        }
        walk.run(c, std::min(parent_inf, f.cube_sup(box)));
    }
    EnumerationSummary s;
    s.atom_count = walk.atoms;
    s.total_mass = walk.total.value();
    s.residual = 1.0 - s.total_mass;
    s.residual_exact = f.exact_box_mass();
    if (s.residual_exact) {
        s.residual_accounted = walk.frontier.value() + coarse.value() + (1.0 - roots_mass.value());
    }
    s.frontier_bound = walk.frontier_bound.value();
    s.frontier_cubes = walk.frontier_cubes;
    s.root_level = k0;
    s.k_max = limits.k_max;
    return s;
}

std::vector<MassAtom> collect_atoms(const Density& f, const DecompositionLimits& limits,
                                    EnumerationSummary* summary) {
    std::vector<MassAtom> atoms;
    const auto s = enumerate_density(f, limits, [&](const Cube& c, double m) { atoms.push_back({c, m}); });
    if (summary) {
        *summary = s;
    }
    return atoms;
}

}  // namespace udc
