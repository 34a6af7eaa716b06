#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lmc/partition.hpp"

namespace lmc {

enum class step_kind : std::uint8_t {
    contract,      // GAEC: join of two neighboring components
    move_nodes,    // KLj: best prefix of node moves between two components
    join,          // KLj: complete join of two components
    new_component, // KLj: nodes moved out into a fresh component
};

const char* to_string(step_kind k);

struct solve_step {
    step_kind kind;
    double delta; // exact objective change of the executed step
};

struct solve_report {
    partition result;
    double objective = 0.0;
    std::vector<solve_step> trace;
    std::size_t iterations = 0;
    double seconds = 0.0;
    bool reached_iteration_cap = false;
};

} // namespace lmc
