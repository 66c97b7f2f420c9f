#include "ltikit/blocks.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "ltikit/errors.hpp"
#include "ltikit/rational.hpp"

namespace ltikit {

namespace {

const char* kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::input: return "input";
        case NodeKind::output: return "output";
        case NodeKind::delay: return "delay";
        case NodeKind::gain: return "gain";
        case NodeKind::sum: return "sum";
    }
    return "?";
}

}  // namespace

BlockGraph::BlockGraph(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!index.emplace(nodes_[i].id, i).second)
            throw std::invalid_argument("duplicate node id: " + nodes_[i].id);
    }

    std::size_t inputs = 0, outputs = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].kind == NodeKind::input) {
            input_ = i;
            ++inputs;
        } else if (nodes_[i].kind == NodeKind::output) {
            output_ = i;
            ++outputs;
        }
    }
    if (inputs != 1 || outputs != 1)
        throw std::invalid_argument("graph needs exactly one input and one output node");

    incoming_.assign(nodes_.size(), {});
    std::vector<std::size_t> out_degree(nodes_.size(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto from = index.find(edges_[e].from);
        const auto to = index.find(edges_[e].to);
        if (from == index.end() || to == index.end())
            throw std::invalid_argument("edge references unknown node id");
        if (edges_[e].sign != 1 && edges_[e].sign != -1)
            throw std::invalid_argument("edge sign must be +1 or -1");
        incoming_[to->second].push_back(e);
        ++out_degree[from->second];
    }

    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const std::size_t fan_in = incoming_[i].size();
        switch (nodes_[i].kind) {
            case NodeKind::input:
                if (fan_in != 0) throw std::invalid_argument("input node cannot have incoming edges");
                break;
            case NodeKind::output:
            case NodeKind::delay:
            case NodeKind::gain:
                if (fan_in != 1)
                    throw std::invalid_argument(std::string(kind_name(nodes_[i].kind)) +
                                                " node needs exactly one incoming edge");
                break;
            case NodeKind::sum:
                if (fan_in < 1) throw std::invalid_argument("sum node needs at least one incoming edge");
                break;
        }
    }
    if (out_degree[output_] != 0) throw std::invalid_argument("output node cannot feed other nodes");

    // reachability input -> output over all edges
    {
        std::vector<bool> seen(nodes_.size(), false);
        std::vector<std::size_t> stack{input_};
        seen[input_] = true;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (index[edges_[e].from] != u) continue;
                const std::size_t v = index[edges_[e].to];
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        if (!seen[output_]) throw std::invalid_argument("output is not reachable from the input");
    }

    // combinational order: a node waits for its predecessors unless they are
    // delays, whose outputs are previous-step state
    std::vector<std::size_t> pending(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        for (const std::size_t e : incoming_[i])
            if (nodes_[index[edges_[e].from]].kind != NodeKind::delay) ++pending[i];

    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (pending[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
        const std::size_t u = ready.back();
        ready.pop_back();
        topo_.push_back(u);
        if (nodes_[u].kind == NodeKind::delay) continue;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (index[edges_[e].from] != u) continue;
            const std::size_t v = index[edges_[e].to];
            if (--pending[v] == 0) ready.push_back(v);
        }
    }
    if (topo_.size() != nodes_.size())
        throw DelayFreeLoop("graph contains a cycle without a delay element");
}

BlockGraph canonical(Architecture arch, double parameter) {
    if (!(parameter >= 0.0 && parameter <= 1.0))
        throw BadParameter("architecture parameter must lie in [0, 1]");
    const bool fir =
        arch == Architecture::fir_differentiator || arch == Architecture::moving_sum;
    const int feedback_sign =
        (arch == Architecture::fir_differentiator || arch == Architecture::oscillator) ? -1 : +1;

    std::vector<Node> nodes{{"in", NodeKind::input, 1.0},
                            {"s", NodeKind::sum, 1.0},
                            {"d", NodeKind::delay, 1.0},
                            {"g", NodeKind::gain, parameter},
                            {"out", NodeKind::output, 1.0}};
    std::vector<Edge> edges;
    edges.push_back({"in", "s", +1});
    if (fir) {
        edges.push_back({"in", "d", +1});
    } else {
        edges.push_back({"s", "d", +1});
    }
    edges.push_back({"d", "g", +1});
    edges.push_back({"g", "s", feedback_sign});
    edges.push_back({"s", "out", +1});
    return BlockGraph(std::move(nodes), std::move(edges));
}

Sequence simulate_graph(const BlockGraph& g, const Sequence& input, std::size_t n) {
    const auto& nodes = g.nodes();
    const auto& edges = g.edges();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i].id] = i;

    std::vector<double> value(nodes.size(), 0.0);
    std::vector<double> state(nodes.size(), 0.0);  // delay registers
    std::vector<double> y(n, 0.0);

    for (std::size_t step = 0; step < n; ++step) {
        // sources first: delay outputs are previous-step state
        for (std::size_t u = 0; u < nodes.size(); ++u)
            if (nodes[u].kind == NodeKind::delay) value[u] = state[u];
        for (const std::size_t u : g.topo_order()) {
            switch (nodes[u].kind) {
                case NodeKind::input:
                    value[u] = step < input.size() ? input.samples[step] : 0.0;
                    break;
                case NodeKind::delay:
                    break;
                case NodeKind::gain:
                    value[u] = nodes[u].factor * value[index[edges[g.incoming()[u][0]].from]];
                    break;
                case NodeKind::sum: {
                    double acc = 0.0;
                    for (const std::size_t e : g.incoming()[u])
                        acc += static_cast<double>(edges[e].sign) * value[index[edges[e].from]];
                    value[u] = acc;
                    break;
                }
                case NodeKind::output:
                    value[u] = value[index[edges[g.incoming()[u][0]].from]];
                    break;
            }
        }
        y[step] = value[g.output_index()];
        for (std::size_t u = 0; u < nodes.size(); ++u)
            if (nodes[u].kind == NodeKind::delay)
                state[u] = value[index[edges[g.incoming()[u][0]].from]];
    }
    return Sequence(std::move(y), input.sample_rate, input.origin);
}

DifferenceEquation flatten(const BlockGraph& g) {
    const auto& nodes = g.nodes();
    const auto& edges = g.edges();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i].id] = i;

    std::vector<std::size_t> delays;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].kind == NodeKind::delay) delays.push_back(i);
    const std::size_t r = delays.size();

    // real coefficients of each node value over the sources {input, delay_1..delay_r};
    // sources are seeded up front since their values do not depend on the sweep
    std::vector<std::vector<double>> coef(nodes.size(), std::vector<double>(r + 1, 0.0));
    for (std::size_t i = 0; i < r; ++i) coef[delays[i]][i + 1] = 1.0;
    for (const std::size_t u : g.topo_order()) {
        switch (nodes[u].kind) {
            case NodeKind::input:
                coef[u][0] = 1.0;
                break;
            case NodeKind::delay:
                break;
            case NodeKind::gain: {
                const auto& src = coef[index[edges[g.incoming()[u][0]].from]];
                for (std::size_t j = 0; j <= r; ++j) coef[u][j] = nodes[u].factor * src[j];
                break;
            }
            case NodeKind::sum: {
                for (const std::size_t e : g.incoming()[u]) {
                    const auto& src = coef[index[edges[e].from]];
                    const double s = static_cast<double>(edges[e].sign);
                    for (std::size_t j = 0; j <= r; ++j) coef[u][j] += s * src[j];
                }
                break;
            }
            case NodeKind::output:
                coef[u] = coef[index[edges[g.incoming()[u][0]].from]];
                break;
        }
    }

    // D_i = w * (alpha_i0 X + sum_j B_ij D_j): with M = I - w B,
    //   H = gamma_0 + w * gamma' adj(M) alpha / det(M)
    // so det(M) is the one true denominator and no spurious factors appear.
    std::vector<std::vector<Polynomial>> m(r, std::vector<Polynomial>(r));
    std::vector<Polynomial> alpha(r);
    for (std::size_t i = 0; i < r; ++i) {
        const auto& row = coef[index[edges[g.incoming()[delays[i]][0]].from]];
        for (std::size_t j = 0; j < r; ++j)
            m[i][j] = Polynomial{i == j ? 1.0 : 0.0, -row[j + 1]};
        alpha[i] = Polynomial{row[0]};
    }

    // det(M) and cof[i] = (adj(M) * alpha)_i via cofactor expansion; r is the
    // delay count of the diagram, small by construction
    std::vector<std::size_t> all(r);
    for (std::size_t i = 0; i < r; ++i) all[i] = i;

    std::function<Polynomial(std::vector<std::size_t>, std::vector<std::size_t>)> det_of =
        [&](std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> Polynomial {
        if (rows.empty()) return Polynomial{1.0};
        Polynomial acc;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const Polynomial& pivot = m[rows[0]][cols[k]];
            if (pivot.is_zero()) continue;
            std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
            std::vector<std::size_t> sub_cols;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != k) sub_cols.push_back(cols[j]);
            const Polynomial sub = det_of(sub_rows, sub_cols);
            acc = (k % 2 == 0) ? acc + pivot * sub : acc - pivot * sub;
        }
        return acc;
    };

    const Polynomial det = det_of(all, all);
    if (det.coeffs()[0] == 0.0)
        throw UnsupportedTopology("flattened system has no causal normalization");

    const auto& gamma = coef[g.output_index()];
    // numerator: gamma_0 det + w * sum_ij gamma_i adj_ij alpha_j, where
    // adj_ij = (-1)^{i+j} minor_ji (Cramer on column replacements)
    Polynomial numerator = Polynomial{gamma[0]} * det;
    for (std::size_t j = 0; j < r; ++j) {
        if (alpha[j].is_zero()) continue;
        for (std::size_t i = 0; i < r; ++i) {
            if (gamma[i + 1] == 0.0) continue;
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < r; ++k) {
                if (k != j) rows.push_back(k);
                if (k != i) cols.push_back(k);
            }
            const Polynomial minor = det_of(rows, cols);
            if (minor.is_zero()) continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            numerator = numerator +
                        Polynomial{0.0, sign * gamma[i + 1]} * alpha[j] * minor;
        }
    }
    return DifferenceEquation(numerator.coeffs(), det.coeffs());
}

namespace {

void relabel_as_stage(const BlockGraph& g, const std::string& prefix,
                      std::vector<Node>& nodes, std::vector<Edge>& edges,
                      std::string& stage_in, std::string& stage_out) {
    for (const auto& node : g.nodes()) {
        Node copy = node;
        copy.id = prefix + node.id;
        // boundary nodes become unity pass-through gains
        if (node.kind == NodeKind::input) {
            copy.kind = NodeKind::gain;
            copy.factor = 1.0;
            stage_in = copy.id;
        } else if (node.kind == NodeKind::output) {
            copy.kind = NodeKind::gain;
            copy.factor = 1.0;
            stage_out = copy.id;
        }
        nodes.push_back(std::move(copy));
    }
    for (const auto& edge : g.edges()) edges.push_back({prefix + edge.from, prefix + edge.to, edge.sign});
}

}  // namespace

BlockGraph compose_series(const std::vector<BlockGraph>& graphs) {
    if (graphs.empty()) throw std::invalid_argument("series composition of zero graphs");
    if (graphs.size() == 1) return graphs.front();

    std::vector<Node> nodes{{"in", NodeKind::input, 1.0}, {"out", NodeKind::output, 1.0}};
    std::vector<Edge> edges;
    std::string previous = "in";
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        std::string stage_in, stage_out;
        relabel_as_stage(graphs[k], "s" + std::to_string(k) + ".", nodes, edges, stage_in, stage_out);
        edges.push_back({previous, stage_in, +1});
        previous = stage_out;
    }
    edges.push_back({previous, "out", +1});
    return BlockGraph(std::move(nodes), std::move(edges));
}

BlockGraph compose_parallel(const std::vector<BlockGraph>& graphs, const std::vector<int>& signs) {
    if (graphs.empty()) throw std::invalid_argument("parallel composition of zero graphs");
    if (signs.size() != graphs.size())
        throw std::invalid_argument("parallel composition needs one sign per branch");

    std::vector<Node> nodes{{"in", NodeKind::input, 1.0},
                            {"psum", NodeKind::sum, 1.0},
                            {"out", NodeKind::output, 1.0}};
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        std::string stage_in, stage_out;
        relabel_as_stage(graphs[k], "p" + std::to_string(k) + ".", nodes, edges, stage_in, stage_out);
        edges.push_back({"in", stage_in, +1});
        edges.push_back({stage_out, "psum", signs[k]});
    }
    edges.push_back({"psum", "out", +1});
    return BlockGraph(std::move(nodes), std::move(edges));
}

BlockGraph parse_netlist(std::istream& in) {
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        const std::string at = " (line " + std::to_string(line_no) + ")";
        if (word == "node") {
            std::string id, kind;
            if (!(ls >> id >> kind)) throw NetlistParse("node needs <id> <kind>" + at);
            Node node;
            node.id = id;
            if (kind == "input") node.kind = NodeKind::input;
            else if (kind == "output") node.kind = NodeKind::output;
            else if (kind == "delay") node.kind = NodeKind::delay;
            else if (kind == "sum") node.kind = NodeKind::sum;
            else if (kind == "gain") {
                node.kind = NodeKind::gain;
                if (!(ls >> node.factor)) throw NetlistParse("gain node needs a factor" + at);
            } else {
                throw NetlistParse("unknown node kind '" + kind + "'" + at);
            }
            nodes.push_back(std::move(node));
        } else if (word == "edge") {
            Edge edge;
            if (!(ls >> edge.from >> edge.to)) throw NetlistParse("edge needs <from> <to>" + at);
            std::string sign;
            if (ls >> sign) {
                if (sign == "+" || sign == "+1" || sign == "1") edge.sign = +1;
                else if (sign == "-" || sign == "-1") edge.sign = -1;
                else throw NetlistParse("edge sign must be + or -" + at);
            }
            edges.push_back(std::move(edge));
        } else {
            throw NetlistParse("unknown directive '" + word + "'" + at);
        }
    }
    try {
        return BlockGraph(std::move(nodes), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw NetlistParse(std::string("invalid graph: ") + e.what());
    }
}

BlockGraph parse_netlist_string(const std::string& text) {
    std::istringstream in(text);
    return parse_netlist(in);
}

std::string write_netlist(const BlockGraph& g) {
    std::ostringstream out;
    for (const auto& node : g.nodes()) {
        out << "node " << node.id << ' ' << kind_name(node.kind);
        if (node.kind == NodeKind::gain) out << ' ' << node.factor;
        out << '\n';
    }
    for (const auto& edge : g.edges()) {
        out << "edge " << edge.from << ' ' << edge.to;
        if (edge.sign < 0) out << " -";
        out << '\n';
    }
    return out.str();
}

}  // namespace ltikit
