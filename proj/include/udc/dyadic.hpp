#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "udc/densities.hpp"
#include "udc/geometry.hpp"
#include "udc/regions.hpp"

namespace udc {

inline constexpr int kDefaultLocateDepth = 40;

/// Traversal limits for a decomposition.
struct DecompositionLimits {
    int k_max = kDefaultLocateDepth;
    /// Coarsest admissible level. Unset: derived from the bounding box and no
    /// lower limit for locate. The bounded scheme fixes it at 0 (root [0,1]^n).
    std::optional<int> root_level;
};

/// locate() reached k_max while the cube containing x still straddled the boundary.
class DepthExhausted : public std::runtime_error {
public:
    explicit DepthExhausted(Cube deepest);
    const Cube& cube() const noexcept { return cube_; }

private:
    Cube cube_;
};

struct MassAtom {
    Cube cube;
    double mass = 0.0;
};

/// C_{k,v} is Inside A and its parent is not.
bool in_decomposition(const Cube& c, const Region& region);

/// The decomposition cube whose half-open version contains x.
Cube locate(std::span<const double> x, const Region& region, const DecompositionLimits& limits = {});

struct EnumerationSummary {
    std::size_t atom_count = 0;
    double total_mass = 0.0;
    /// 1 - total_mass: probability of cubes deeper than k_max or outside the roots.
    double residual = 0.0;
    /// Independent accounting of the same residual from box masses (frontier at
    /// k_max + mass below coarser ancestors + mass outside the root cubes);
    /// only meaningful when `residual_exact`.
    double residual_accounted = 0.0;
    bool residual_exact = false;
    /// sum over the frontier of vol * (sup - inf): an upper bound for the frontier share.
    double frontier_bound = 0.0;
    std::size_t frontier_cubes = 0;
    int root_level = 0;
    int k_max = 0;
};

using AtomVisitor = std::function<void(const Cube& cube, double mass)>;

/// Atoms of the decomposition of A with mass 2^{-nk}/V(A), depth first.
EnumerationSummary enumerate_uniform(const Region& region, const DecompositionLimits& limits,
                                     const AtomVisitor& visit);

/// Atoms with mass 2^{-nk} (inf_c f - inf_parent f): the probability that the
/// superlevel scheme selects c.
EnumerationSummary enumerate_density(const Density& f, const DecompositionLimits& limits,
                                     const AtomVisitor& visit);

std::vector<MassAtom> collect_atoms(const Density& f, const DecompositionLimits& limits,
                                    EnumerationSummary* summary = nullptr);

}  // namespace udc
