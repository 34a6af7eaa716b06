#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmc/instance.hpp"
#include "lmc/partition.hpp"
#include "lmc/solve_report.hpp"

namespace lmc {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    // message used verbatim
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Instance text format, one record per line, '#' starts a comment:
//   LMP 1
//   NODES <n>
//   EDGE <u> <v> <cost>     (per E-edge, u < v)
//   LIFT <u> <v> <cost>     (per F-edge, u < v)
// Serialization is deterministic: E by edge id, then F by edge id; costs
// printed shortest-round-trip, so write-then-parse is the identity.
lmp_instance read_instance(std::istream& in);
void write_instance(std::ostream& out, const lmp_instance& inst);

// Partition format: one "<node_id> <block_id>" line per node, every node
// exactly once. Parsed partitions are canonicalized.
partition read_partition(std::istream& in);
void write_partition(std::ostream& out, const partition& p);

// Labels: one 0/1 per line, in global edge order.
edge_labeling read_labels(std::istream& in);
void write_labels(std::ostream& out, const edge_labeling& y);

// Probability grid: `count` whitespace-separated values in [0,1], row-major.
std::vector<double> read_probability_grid(std::istream& in, std::size_t count);

// Trace CSV: header "step,kind,delta", one row per executed step.
void write_trace_csv(std::ostream& out, const solve_report& report);

// File-path convenience wrappers; parse errors are annotated with the path.
lmp_instance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const lmp_instance& inst);
partition read_partition_file(const std::filesystem::path& path);
void write_partition_file(const std::filesystem::path& path, const partition& p);
edge_labeling read_labels_file(const std::filesystem::path& path);
void write_labels_file(const std::filesystem::path& path, const edge_labeling& y);
std::vector<double> read_probability_grid_file(const std::filesystem::path& path,
                                               std::size_t count);
void write_trace_csv_file(const std::filesystem::path& path, const solve_report& report);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

} // namespace lmc
