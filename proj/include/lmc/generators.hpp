#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "lmc/instance.hpp"
#include "lmc/lifting.hpp"

namespace lmc {

// Pixel grid instance: one node per pixel (row-major ids), E = 4-neighbor
// pairs, per-edge cut probability = mean of the two incident pixel values,
// then geodesic lifting with the given parameters.
lmp_instance make_grid_instance(std::size_t width, std::size_t height,
                                std::span<const double> pixel_probs,
                                const lifting_params& params);

struct random_instance_params {
    std::size_t nodes = 8;
    double edge_density = 0.5;  // in (0,1]; fraction of all node pairs
    double lift_fraction = 0.2; // fraction of distance-2..3 pairs lifted
    double cost_min = -1.0;
    double cost_max = 1.0;
    std::uint64_t seed = 1;
};

// Connected random instance: a random spanning tree plus extra edges up to
// the requested density, uniform costs, lifted edges sampled among pairs at
// hop distance 2..3. Deterministic for a fixed seed.
lmp_instance make_random_instance(const random_instance_params& params);

} // namespace lmc
