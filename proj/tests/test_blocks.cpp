#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ltikit/blocks.hpp"
#include "ltikit/discretize.hpp"
#include "ltikit/errors.hpp"
#include "ltikit/rational.hpp"

using namespace ltikit;

TEST_CASE("canonical architectures flatten to their transfer functions") {
    const auto diff = flatten(canonical(Architecture::fir_differentiator, 1.0));
    CHECK(diff.b == std::vector<double>{1.0, -1.0});
    CHECK(diff.a == std::vector<double>{1.0});

    const auto sum = flatten(canonical(Architecture::moving_sum, 1.0));
    CHECK(sum.b == std::vector<double>{1.0, 1.0});
    CHECK(sum.a == std::vector<double>{1.0});

    const auto acc = flatten(canonical(Architecture::accumulator, 1.0));
    CHECK(acc.b == std::vector<double>{1.0});
    CHECK(acc.a == std::vector<double>{1.0, -1.0});

    const auto leaky = flatten(canonical(Architecture::accumulator, 0.6));
    CHECK(leaky.b == std::vector<double>{1.0});
    CHECK(leaky.a == std::vector<double>{1.0, -0.6});

    const auto osc = flatten(canonical(Architecture::oscillator, 1.0));
    CHECK(osc.b == std::vector<double>{1.0});
    CHECK(osc.a == std::vector<double>{1.0, 1.0});

    CHECK_THROWS_AS(canonical(Architecture::accumulator, 1.5), BadParameter);
    CHECK_THROWS_AS(canonical(Architecture::moving_sum, -0.1), BadParameter);
}

TEST_CASE("graph simulation of the canonical systems") {
    const auto acc = canonical(Architecture::accumulator, 1.0);
    CHECK(simulate_graph(acc, unit_impulse(5), 5).samples ==
          std::vector<double>{1.0, 1.0, 1.0, 1.0, 1.0});

    const auto sum = canonical(Architecture::moving_sum, 1.0);
    CHECK(simulate_graph(sum, unit_impulse(3), 3).samples == std::vector<double>{1.0, 1.0, 0.0});

    const auto osc = canonical(Architecture::oscillator, 1.0);
    CHECK(simulate_graph(osc, unit_impulse(4), 4).samples ==
          std::vector<double>{1.0, -1.0, 1.0, -1.0});

    const Sequence zero(std::vector<double>(8, 0.0), 1.0);
    for (double v : simulate_graph(acc, zero, 8).samples) CHECK(v == 0.0);
}

TEST_CASE("a single gain node flattens to a constant") {
    BlockGraph g({{"in", NodeKind::input, 1.0},
                  {"k", NodeKind::gain, 3.5},
                  {"out", NodeKind::output, 1.0}},
                 {{"in", "k", +1}, {"k", "out", +1}});
    const auto de = flatten(g);
    CHECK(de.b == std::vector<double>{3.5});
    CHECK(de.a == std::vector<double>{1.0});
}

TEST_CASE("series of differentiator and accumulator is the discrete high-pass") {
    const auto hp = compose_series({canonical(Architecture::fir_differentiator, 1.0),
                                    canonical(Architecture::accumulator, 0.6)});
    const auto de = flatten(hp);
    CHECK(de.b == std::vector<double>{1.0, -1.0});
    CHECK(de.a == std::vector<double>{1.0, -0.6});

    // bit-for-bit against the direct recurrence over 64 samples
    const auto reference = dt_hpf(0.6);
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::vector<double> x(64);
    for (double& v : x) v = amp(rng);
    const Sequence input(x, 1.0);
    const auto graph_out = simulate_graph(hp, input, 64);
    const auto de_out = simulate(reference, input, 64);
    for (std::size_t n = 0; n < 64; ++n) CHECK(graph_out.samples[n] == de_out.samples[n]);
}

TEST_CASE("series of two accumulators ramps quadratically") {
    const auto twice = compose_series({canonical(Architecture::accumulator, 1.0),
                                       canonical(Architecture::accumulator, 1.0)});
    const auto step = simulate_graph(twice, unit_step(6), 6);
    CHECK(step.samples == std::vector<double>{1.0, 3.0, 6.0, 10.0, 15.0, 21.0});

    const auto de = flatten(twice);
    const auto pzg = to_pzg(to_tf(de));
    REQUIRE(pzg.poles.size() == 1);
    CHECK(pzg.poles[0].multiplicity == 2);
    CHECK(pzg.poles[0].value.real() == doctest::Approx(1.0));
}

TEST_CASE("parallel identity-minus-low-pass behaves as a high-pass") {
    BlockGraph identity({{"in", NodeKind::input, 1.0},
                         {"g", NodeKind::gain, 1.0},
                         {"out", NodeKind::output, 1.0}},
                        {{"in", "g", +1}, {"g", "out", +1}});

    // leaky integrator scaled to unit DC gain: (1-zp)/(1 - zp z^-1)
    BlockGraph lowpass({{"in", NodeKind::input, 1.0},
                        {"pre", NodeKind::gain, 0.4},
                        {"s", NodeKind::sum, 1.0},
                        {"d", NodeKind::delay, 1.0},
                        {"fb", NodeKind::gain, 0.6},
                        {"out", NodeKind::output, 1.0}},
                       {{"in", "pre", +1},
                        {"pre", "s", +1},
                        {"s", "d", +1},
                        {"d", "fb", +1},
                        {"fb", "s", +1},
                        {"s", "out", +1}});

    const auto hp = compose_parallel({identity, lowpass}, {+1, -1});
    const auto de = flatten(hp);
    // zero response at DC, as in the identity-minus-low-pass decomposition
    CHECK(std::abs(evaluate(de, Complex{1.0, 0.0})) < 1e-15);
    CHECK(std::abs(evaluate(de, Complex{-1.0, 0.0})) > 1.0);
}

TEST_CASE("singleton series composition returns the graph unchanged") {
    const auto g = canonical(Architecture::accumulator, 0.3);
    const auto same = compose_series({g});
    CHECK(same.nodes().size() == g.nodes().size());
    const auto a = flatten(g);
    const auto b = flatten(same);
    CHECK(a.b == b.b);
    CHECK(a.a == b.a);
}

TEST_CASE("series composition unions pole and zero multisets") {
    const auto combined = compose_series({canonical(Architecture::accumulator, 0.5),
                                          canonical(Architecture::oscillator, 0.25)});
    const auto pzg = to_pzg(to_tf(flatten(combined)));
    bool found_pos = false, found_neg = false;
    for (const auto& p : pzg.poles) {
        if (std::abs(p.value - Complex{0.5, 0.0}) < 1e-9) found_pos = true;
        if (std::abs(p.value - Complex{-0.25, 0.0}) < 1e-9) found_neg = true;
    }
    CHECK(found_pos);
    CHECK(found_neg);
}

TEST_CASE("graph and flattened recurrence agree bit for bit on the canonical set") {
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> param(0.0, 1.0);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    const Architecture archs[] = {Architecture::fir_differentiator, Architecture::moving_sum,
                                  Architecture::accumulator, Architecture::oscillator};
    for (int trial = 0; trial < 100; ++trial) {
        const auto arch = archs[static_cast<std::size_t>(trial) % 4];
        const double p = arch == Architecture::oscillator ? 0.98 * param(rng) : param(rng);
        const auto g = canonical(arch, p);
        const auto de = flatten(g);

        std::vector<double> x(64);
        for (double& v : x) v = amp(rng);
        const Sequence input(x, 1.0);
        const auto ya = simulate_graph(g, input, 64);
        const auto yb = simulate(de, input, 64);
        for (std::size_t n = 0; n < 64; ++n) CHECK(ya.samples[n] == yb.samples[n]);
    }
}

TEST_CASE("graph validation") {
    // cycle without a delay
    CHECK_THROWS_AS(BlockGraph({{"in", NodeKind::input, 1.0},
                                {"s", NodeKind::sum, 1.0},
                                {"g", NodeKind::gain, 0.5},
                                {"out", NodeKind::output, 1.0}},
                               {{"in", "s", +1}, {"s", "g", +1}, {"g", "s", +1}, {"s", "out", +1}}),
                    DelayFreeLoop);

    // two inputs
    CHECK_THROWS_AS(BlockGraph({{"a", NodeKind::input, 1.0},
                                {"b", NodeKind::input, 1.0},
                                {"out", NodeKind::output, 1.0}},
                               {{"a", "out", +1}}),
                    std::invalid_argument);

    // disconnected output
    CHECK_THROWS_AS(BlockGraph({{"in", NodeKind::input, 1.0},
                                {"g", NodeKind::gain, 1.0},
                                {"out", NodeKind::output, 1.0}},
                               {{"g", "g2", +1}}),
                    std::invalid_argument);

    // gain with two feeds
    CHECK_THROWS_AS(BlockGraph({{"in", NodeKind::input, 1.0},
                                {"g", NodeKind::gain, 1.0},
                                {"out", NodeKind::output, 1.0}},
                               {{"in", "g", +1}, {"in", "g", +1}, {"g", "out", +1}}),
                    std::invalid_argument);
}

TEST_CASE("netlist parsing and round trip") {
    const std::string text =
        "# leaky accumulator\n"
        "node in input\n"
        "node s sum\n"
        "node d delay\n"
        "node g gain 0.6\n"
        "node out output\n"
        "edge in s\n"
        "edge s d\n"
        "edge d g\n"
        "edge g s +\n"
        "edge s out\n";
    const BlockGraph g = parse_netlist_string(text);
    const auto de = flatten(g);
    CHECK(de.b == std::vector<double>{1.0});
    CHECK(de.a == std::vector<double>{1.0, -0.6});

    // write/parse round trip preserves the flattened system
    const BlockGraph again = parse_netlist_string(write_netlist(g));
    const auto de2 = flatten(again);
    CHECK(de2.b == de.b);
    CHECK(de2.a == de.a);

    CHECK_THROWS_AS(parse_netlist_string("node x resistor\n"), NetlistParse);
    CHECK_THROWS_AS(parse_netlist_string("node g gain\n"), NetlistParse);
    CHECK_THROWS_AS(parse_netlist_string("edge a\n"), NetlistParse);
    CHECK_THROWS_AS(parse_netlist_string("wire a b\n"), NetlistParse);
    CHECK_THROWS_AS(parse_netlist_string("node in input\nedge in out\n"), NetlistParse);
}
