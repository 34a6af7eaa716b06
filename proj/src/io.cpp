#include "lmc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lmc {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
    auto line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos)
        line.resize(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
    std::size_t value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw parse_error(line_no, "expected a non-negative integer, got '" + token + "'");
    return value;
}

double parse_cost(const std::string& token, std::size_t line_no) {
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw parse_error(line_no, "expected a decimal cost, got '" + token + "'");
    if (!std::isfinite(value))
        throw parse_error(line_no, "cost must be finite");
    return value;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token)
        tokens.push_back(token);
    return tokens;
}

} // namespace

lmp_instance read_instance(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool saw_magic = false, saw_nodes = false;
    std::size_t node_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges, lifted;
    std::vector<double> edge_costs, lifted_costs;

    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = clean_line(raw);
        if (line.empty())
            continue;
        const auto tokens = split_tokens(line);

        if (!saw_magic) {
            if (tokens.size() != 2 || tokens[0] != "LMP" || tokens[1] != "1")
                throw parse_error(line_no, "expected magic 'LMP 1'");
            saw_magic = true;
            continue;
        }
        if (!saw_nodes) {
            if (tokens.size() != 2 || tokens[0] != "NODES")
                throw parse_error(line_no, "expected 'NODES <n>'");
            node_count = parse_index(tokens[1], line_no);
            saw_nodes = true;
            continue;
        }
        if (tokens.size() != 4 || (tokens[0] != "EDGE" && tokens[0] != "LIFT"))
            throw parse_error(line_no, "expected 'EDGE u v cost' or 'LIFT u v cost'");
        const auto u = parse_index(tokens[1], line_no);
        const auto v = parse_index(tokens[2], line_no);
        const auto cost = parse_cost(tokens[3], line_no);
        if (u >= node_count || v >= node_count)
            throw parse_error(line_no, "node id out of range");
        if (u >= v)
            throw parse_error(line_no, "endpoints must satisfy u < v");
        if (tokens[0] == "EDGE") {
            edges.emplace_back(u, v);
            edge_costs.push_back(cost);
        } else {
            lifted.emplace_back(u, v);
            lifted_costs.push_back(cost);
        }
    }
    if (!saw_magic)
        throw parse_error(line_no, "missing magic 'LMP 1'");
    if (!saw_nodes)
        throw parse_error(line_no, "missing 'NODES <n>'");

    edge_costs.insert(edge_costs.end(), lifted_costs.begin(), lifted_costs.end());
    try {
        return lmp_instance(graph(node_count, edges), std::move(lifted),
                            std::move(edge_costs));
    } catch (const std::invalid_argument& e) {
        throw parse_error(line_no, e.what());
    }
}

void write_instance(std::ostream& out, const lmp_instance& inst) {
    out << "LMP 1\n";
    out << "NODES " << inst.node_count() << "\n";
    for (std::size_t e = 0; e < inst.base_edge_count(); ++e) {
        const auto [u, v] = inst.base_graph().edge_endpoints(e);
        out << "EDGE " << u << " " << v << " " << format_double(inst.cost(e)) << "\n";
    }
    for (std::size_t i = 0; i < inst.lifted_edge_count(); ++i) {
        const auto [u, v] = inst.lifted_edges()[i];
        out << "LIFT " << u << " " << v << " "
            << format_double(inst.cost(inst.base_edge_count() + i)) << "\n";
    }
}

partition read_partition(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    std::size_t max_node = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = clean_line(raw);
        if (line.empty())
            continue;
        const auto tokens = split_tokens(line);
        if (tokens.size() != 2)
            throw parse_error(line_no, "expected '<node_id> <block_id>'");
        const auto node = parse_index(tokens[0], line_no);
        const auto block = parse_index(tokens[1], line_no);
        entries.emplace_back(node, block);
        max_node = std::max(max_node, node);
    }
    if (entries.empty())
        return partition{};

    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> labels(max_node + 1, unset);
    for (const auto& [node, block] : entries) {
        if (labels[node] != unset)
            throw parse_error(line_no, "node " + std::to_string(node) + " listed twice");
        labels[node] = block;
    }
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] == unset)
            throw parse_error(line_no, "node " + std::to_string(v) + " missing");
    return partition(std::move(labels));
}

void write_partition(std::ostream& out, const partition& p) {
    for (std::size_t v = 0; v < p.size(); ++v)
        out << v << " " << p.block_of(v) << "\n";
}

edge_labeling read_labels(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    edge_labeling y;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = clean_line(raw);
        if (line.empty())
            continue;
        if (line == "0")
            y.push_back(0);
        else if (line == "1")
            y.push_back(1);
        else
            throw parse_error(line_no, "expected '0' or '1', got '" + line + "'");
    }
    return y;
}

void write_labels(std::ostream& out, const edge_labeling& y) {
    for (const auto v : y)
        out << static_cast<int>(v) << "\n";
}

std::vector<double> read_probability_grid(std::istream& in, std::size_t count) {
    std::vector<double> values;
    values.reserve(count);
    std::string token;
    while (in >> token) {
        double v = 0.0;
        const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
        if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
            throw parse_error(values.size() + 1, "expected a probability, got '" + token + "'");
        if (!(v >= 0.0 && v <= 1.0))
            throw parse_error(values.size() + 1, "probability outside [0,1]");
        values.push_back(v);
        if (values.size() > count)
            throw parse_error(values.size(), "more than " + std::to_string(count) + " values");
    }
    if (values.size() != count)
        throw parse_error(values.size(), "expected " + std::to_string(count) +
                                             " values, got " + std::to_string(values.size()));
    return values;
}

void write_trace_csv(std::ostream& out, const solve_report& report) {
    out << "step,kind,delta\n";
    for (std::size_t i = 0; i < report.trace.size(); ++i)
        out << i << "," << to_string(report.trace[i].kind) << ","
            << format_double(report.trace[i].delta) << "\n";
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error(0, "cannot open '" + path.string() + "'");
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

template <class Fn>
auto with_path_context(const std::filesystem::path& path, Fn&& fn) {
    try {
        return fn();
    } catch (const parse_error& e) {
        throw parse_error(path.string() + ": " + e.what(), e.line());
    }
}

} // namespace

lmp_instance read_instance_file(const std::filesystem::path& path) {
    return with_path_context(path, [&] {
        auto in = open_input(path);
        return read_instance(in);
    });
}

void write_instance_file(const std::filesystem::path& path, const lmp_instance& inst) {
    auto out = open_output(path);
    write_instance(out, inst);
}

partition read_partition_file(const std::filesystem::path& path) {
    return with_path_context(path, [&] {
        auto in = open_input(path);
        return read_partition(in);
    });
}

void write_partition_file(const std::filesystem::path& path, const partition& p) {
    auto out = open_output(path);
    write_partition(out, p);
}

edge_labeling read_labels_file(const std::filesystem::path& path) {
    return with_path_context(path, [&] {
        auto in = open_input(path);
        return read_labels(in);
    });
}

void write_labels_file(const std::filesystem::path& path, const edge_labeling& y) {
    auto out = open_output(path);
    write_labels(out, y);
}

std::vector<double> read_probability_grid_file(const std::filesystem::path& path,
                                               std::size_t count) {
    return with_path_context(path, [&] {
        auto in = open_input(path);
        return read_probability_grid(in, count);
    });
}

void write_trace_csv_file(const std::filesystem::path& path, const solve_report& report) {
    auto out = open_output(path);
    write_trace_csv(out, report);
}

} // namespace lmc
