#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ltikit/dt.hpp"
#include "ltikit/sequence.hpp"

namespace ltikit {

enum class NodeKind { input, output, delay, gain, sum };

struct Node {
    std::string id;
    NodeKind kind = NodeKind::gain;
    double factor = 1.0;  // gain nodes only
};

struct Edge {
    std::string from;
    std::string to;
    int sign = +1;  // meaningful on edges into sum nodes
};

/// Directed single-input single-output graph of unit delays, gains, and
/// signed summations. Construction validates connectivity, per-kind arities,
/// and that every cycle passes through a delay.
class BlockGraph {
public:
    BlockGraph(std::vector<Node> nodes, std::vector<Edge> edges);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t input_index() const { return input_; }
    std::size_t output_index() const { return output_; }
    /// Combinational evaluation order (delay outputs act as sources).
    const std::vector<std::size_t>& topo_order() const { return topo_; }
    /// Edges into each node, in declaration (port) order.
    const std::vector<std::vector<std::size_t>>& incoming() const { return incoming_; }

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::size_t input_ = 0;
    std::size_t output_ = 0;
    std::vector<std::size_t> topo_;
    std::vector<std::vector<std::size_t>> incoming_;
};

enum class Architecture { fir_differentiator, moving_sum, accumulator, oscillator };

/// The four canonical first-order architectures:
///   fir_differentiator(z_z): 1 - z_z z^-1      moving_sum(z_z): 1 + z_z z^-1
///   accumulator(z_p): 1/(1 - z_p z^-1)         oscillator(z_p): 1/(1 + z_p z^-1)
BlockGraph canonical(Architecture arch, double parameter);

/// Per-sample evaluation with zero-initialized delays; matches
/// simulate(flatten(g), input) sample for sample.
Sequence simulate_graph(const BlockGraph& g, const Sequence& input, std::size_t n);

/// Reduces the graph to its difference equation by eliminating the delay
/// feedback loops.
DifferenceEquation flatten(const BlockGraph& g);

BlockGraph compose_series(const std::vector<BlockGraph>& graphs);
BlockGraph compose_parallel(const std::vector<BlockGraph>& graphs, const std::vector<int>& signs);

/// Line-oriented netlist: "node <id> <kind> [param]" / "edge <from> <to> [sign]".
BlockGraph parse_netlist(std::istream& in);
BlockGraph parse_netlist_string(const std::string& text);
std::string write_netlist(const BlockGraph& g);

}  // namespace ltikit
