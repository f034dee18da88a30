#include "rdom/interval.hpp"

#include "layered_dp.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rdom {

IntervalModel parse_interval_model(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::vector<std::pair<long long, std::pair<Interval, int>>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        long long v, l, r;
        std::string extra;
        if (! (ls >> v >> l >> r) || (ls >> extra))
            throw ParseError(ParseErrorKind::malformed, line_no, "expected \"v left right\"");
        if (l > r)
            throw ParseError(ParseErrorKind::invalid_structure, line_no, "left endpoint exceeds right endpoint");
        if (l < -1'000'000'000 || r > 1'000'000'000)
            throw ParseError(ParseErrorKind::out_of_range, line_no, "endpoint out of range");
        rows.push_back({v, {Interval{static_cast<int>(l), static_cast<int>(r)}, line_no}});
    }
    IntervalModel model;
    model.intervals.resize(rows.size());
    std::vector<bool> seen(rows.size(), false);
    for (auto & [v, rest] : rows) {
        if (v < 0 || v >= static_cast<long long>(rows.size()))
            throw ParseError(ParseErrorKind::out_of_range, rest.second, "vertex index out of range");
        if (seen[v])
            throw ParseError(ParseErrorKind::repeated_item, rest.second, "vertex listed twice");
        seen[v] = true;
        model.intervals[v] = rest.first;
    }
    return model;
}

std::string render_interval_model(const IntervalModel & model)
{
    std::ostringstream out;
    for (int v = 0; v < model.order(); ++v)
        out << v << ' ' << model.intervals[v].left << ' ' << model.intervals[v].right << '\n';
    return out.str();
}

Graph interval_model_to_graph(const IntervalModel & model)
{
    std::vector<Edge> edges;
    const auto & iv = model.intervals;
    for (int u = 0; u < model.order(); ++u)
        for (int v = u + 1; v < model.order(); ++v)
            if (std::max(iv[u].left, iv[v].left) <= std::min(iv[u].right, iv[v].right))
                edges.emplace_back(u, v);
    return Graph(model.order(), edges);
}

CliqueArrangement build_arrangement(const IntervalModel & model)
{
    const int n = model.order();
    struct Event {
        int at;
        bool right;
        Vertex v;
    };
    std::vector<Event> events;
    for (Vertex v = 0; v < n; ++v) {
        events.push_back({model.intervals[v].left, false, v});
        events.push_back({model.intervals[v].right, true, v});
    }
    // Closed intervals: at equal coordinates, openings come first.
    std::sort(events.begin(), events.end(), [](const Event & a, const Event & b) {
        if (a.at != b.at)
            return a.at < b.at;
        if (a.right != b.right)
            return ! a.right;
        return a.v < b.v;
    });

    CliqueArrangement arr;
    arr.first.assign(static_cast<std::size_t>(n), -1);
    arr.last.assign(static_cast<std::size_t>(n), -1);
    std::vector<bool> open(static_cast<std::size_t>(n), false);
    bool after_left = false;
    for (const auto & e : events) {
        if (! e.right) {
            open[e.v] = true;
            after_left = true;
            continue;
        }
        if (after_left) {
            const int index = static_cast<int>(arr.cliques.size());
            VertexSet clique;
            for (Vertex v = 0; v < n; ++v)
                if (open[v]) {
                    clique.push_back(v);
                    if (arr.first[v] < 0)
                        arr.first[v] = index;
                    if (arr.last[v] >= 0 && arr.last[v] != index - 1)
                        throw std::logic_error("build_arrangement: cliques of a vertex are not consecutive");
                    arr.last[v] = index;
                }
            arr.cliques.push_back(std::move(clique));
            after_left = false;
        }
        open[e.v] = false;
    }
    for (Vertex v = 0; v < n; ++v)
        if (arr.first[v] < 0)
            throw std::logic_error("build_arrangement: vertex outside every clique");
    return arr;
}

IntervalModel compact_model(const CliqueArrangement & arrangement)
{
    IntervalModel model;
    for (int v = 0; v < arrangement.order(); ++v)
        model.intervals.push_back({arrangement.first[v], arrangement.last[v]});
    return model;
}

Graph arrangement_to_graph(const CliqueArrangement & arrangement) { return interval_model_to_graph(compact_model(arrangement)); }

namespace {

constexpr int none = -1;

std::vector<Vertex> sweep_order(const CliqueArrangement & arr)
{
    std::vector<Vertex> order(static_cast<std::size_t>(arr.order()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (arr.first[a] != arr.first[b])
            return arr.first[a] < arr.first[b];
        if (arr.last[a] != arr.last[b])
            return arr.last[a] < arr.last[b];
        return a < b;
    });
    return order;
}

// Weak {2} state. `cover` holds the live nonzero vertices with the latest last
// cliques, cut off once their weights reach 2: only that prefix can matter to a
// later zero vertex. need1/need2 are the earliest deadlines (last clique) among
// unsatisfied zero vertices still missing 1 or 2 units.
struct WeakState {
    std::array<std::pair<int, int>, 2> cover{{{none, 0}, {none, 0}}};
    int need1 = none;
    int need2 = none;

    bool operator==(const WeakState &) const = default;
    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : {cover[0].first, cover[0].second, cover[1].first, cover[1].second, need1, need2})
            h = (h ^ static_cast<std::size_t>(x + 7)) * 1099511628211ull;
        return h;
    }
};

int min_deadline(int a, int b) { return a == none ? b : (b == none ? a : std::min(a, b)); }

} // namespace

IntervalWeightResult weak2_interval(const CliqueArrangement & arr)
{
    IntervalWeightResult out;
    const int n = arr.order();
    out.witness = WeightFunction(2, n);
    auto order = sweep_order(arr);
    detail::Layers<WeakState> dp;
    dp.start({});
    for (Vertex u : order) {
        const int fi = arr.first[u], la = arr.last[u];
        dp.advance(
            [&](const WeakState & s, auto emit) {
                if ((s.need1 != none && s.need1 < fi) || (s.need2 != none && s.need2 < fi))
                    return;
                WeakState base = s;
                int help = 0;
                for (auto & c : base.cover) {
                    if (c.first != none && c.first < fi)
                        c = {none, 0};
                    help += c.second;
                }
                for (int w = 0; w <= 2; ++w) {
                    WeakState next = base;
                    if (w == 0) {
                        const int need = 2 - std::min(2, help);
                        if (need == 1)
                            next.need1 = min_deadline(next.need1, la);
                        else if (need == 2)
                            next.need2 = min_deadline(next.need2, la);
                        if (next.need1 != none && next.need2 != none && next.need2 <= next.need1)
                            next.need1 = none;
                    } else {
                        next.need1 = w == 2 ? none : next.need2;
                        next.need2 = none;
                        std::array<std::pair<int, int>, 3> all{{next.cover[0], next.cover[1], {la, w}}};
                        std::sort(all.begin(), all.end(), [](auto a, auto b) {
                            if (a.first != b.first)
                                return a.first > b.first;
                            return a.second > b.second;
                        });
                        next.cover = {{{none, 0}, {none, 0}}};
                        int sum = 0;
                        for (std::size_t i = 0, j = 0; i < all.size() && sum < 2; ++i)
                            if (all[i].first != none) {
                                next.cover[j++] = all[i];
                                sum += all[i].second;
                            }
                    }
                    emit(next, w, w);
                }
            },
            out.stats);
        for (const auto & e : dp.layers.back()) {
            int twos = 0, ones = 0;
            for (auto c : e.state.cover) {
                twos += c.second == 2;
                ones += c.second == 1;
            }
            out.stats.max_twos = std::max(out.stats.max_twos, twos);
            out.stats.max_ones = std::max(out.stats.max_ones, ones);
        }
    }
    auto best = dp.best([](const WeakState & s) { return s.need1 == none && s.need2 == none; });
    if (! best)
        throw std::logic_error("weak2_interval: no feasible final state");
    out.value = best->first;
    for (std::size_t i = 0; i < order.size(); ++i)
        out.witness.weights[order[i]] = best->second[i];
    return out;
}

namespace {

// Per colour: latest last clique among carriers, earliest deadline among empty
// vertices still missing the colour.
struct LabelState {
    std::array<int, 2> carrier{none, none};
    std::array<int, 2> missing{none, none};

    bool operator==(const LabelState &) const = default;
    std::size_t hash() const
    {
        return static_cast<std::size_t>(((carrier[0] + 2) * 131 + carrier[1] + 2) * 131 + missing[0] + 2) * 131
            + static_cast<std::size_t>(missing[1] + 2);
    }
};

} // namespace

IntervalRainbowResult rainbow2_interval_direct(const CliqueArrangement & arr)
{
    IntervalRainbowResult out;
    const int n = arr.order();
    out.witness = RainbowFunction(2, n);
    auto order = sweep_order(arr);
    detail::Layers<LabelState> dp;
    dp.start({});
    for (Vertex u : order) {
        const int fi = arr.first[u], la = arr.last[u];
        dp.advance(
            [&](const LabelState & s, auto emit) {
                LabelState base = s;
                for (int c = 0; c < 2; ++c) {
                    if (base.missing[c] != none && base.missing[c] < fi)
                        return;
                    if (base.carrier[c] != none && base.carrier[c] < fi)
                        base.carrier[c] = none;
                }
                for (ColorSet label = 0; label < 4; ++label) {
                    LabelState next = base;
                    for (int c = 0; c < 2; ++c) {
                        if (label >> c & 1) {
                            next.missing[c] = none;
                            next.carrier[c] = std::max(next.carrier[c], la);
                        } else if (label == 0 && base.carrier[c] == none) {
                            next.missing[c] = min_deadline(next.missing[c], la);
                        }
                    }
                    emit(next, color_count(label), static_cast<int>(label));
                }
            },
            out.stats);
    }
    auto best = dp.best([](const LabelState & s) { return s.missing[0] == none && s.missing[1] == none; });
    if (! best)
        throw std::logic_error("rainbow2_interval_direct: no feasible final state");
    out.value = best->first;
    for (std::size_t i = 0; i < order.size(); ++i)
        out.witness.labels[order[i]] = static_cast<ColorSet>(best->second[i]);
    return out;
}

IntervalRainbowResult rainbow2_interval(const CliqueArrangement & arr)
{
    auto weak = weak2_interval(arr);
    IntervalRainbowResult out;
    out.value = weak.value;
    out.stats = weak.stats;
    const int n = arr.order();
    out.witness = RainbowFunction(2, n);
    auto order = sweep_order(arr);
    auto g = arrangement_to_graph(arr);

    // Weight 2 becomes {1,2}; weight-1 vertices take the colour rarer among
    // their already coloured neighbours.
    for (Vertex v = 0; v < n; ++v)
        if (weak.witness.weights[v] == 2)
            out.witness.labels[v] = 0b11;
    for (Vertex u : order) {
        if (weak.witness.weights[u] != 1)
            continue;
        int seen[2] = {0, 0};
        for (Vertex w : g.neighbors(u))
            for (int c = 0; c < 2; ++c)
                seen[c] += out.witness.labels[w] >> c & 1;
        out.witness.labels[u] = seen[1] < seen[0] ? 0b10 : 0b01;
    }
    if (! is_rainbow(g, out.witness).ok) {
        auto direct = rainbow2_interval_direct(arr);
        if (direct.value != out.value)
            throw std::logic_error("rainbow2_interval: weak and rainbow sweeps disagree");
        out.witness = direct.witness;
        out.repaired_by_fallback = true;
    }
    return out;
}

} // namespace rdom
