#include "rdom/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rdom {

bool is_split_partition(const Graph & g, const SplitPartition & part)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < 2; ++s)
        for (Vertex v : s == 0 ? part.clique : part.independent) {
            if (v < 0 || v >= g.order() || side[v] != -1)
                return false;
            side[v] = s;
        }
    if (std::count(side.begin(), side.end(), -1) != 0)
        return false;
    return is_clique(g, part.clique) && is_independent(g, part.independent);
}

bool is_maximal_clique_side(const Graph & g, const SplitPartition & part)
{
    for (Vertex v : part.independent)
        if (g.degree(v) >= static_cast<int>(part.clique.size())
            && std::all_of(part.clique.begin(), part.clique.end(), [&](Vertex c) { return g.adjacent(v, c); }))
            return false;
    return true;
}

std::optional<SplitPartition> split_partition(const Graph & g)
{
    const int n = g.order();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i)
            m = i + 1;
    SplitPartition part;
    part.clique.assign(order.begin(), order.begin() + m);
    part.independent.assign(order.begin() + m, order.end());
    if (! is_split_partition(g, part))
        return std::nullopt;
    // Grow C: an I vertex adjacent to all of C can join it (at most one can).
    for (std::size_t i = 0; i < part.independent.size(); ++i) {
        const Vertex v = part.independent[i];
        if (std::all_of(part.clique.begin(), part.clique.end(), [&](Vertex c) { return g.adjacent(v, c); })) {
            part.clique.push_back(v);
            part.independent.erase(part.independent.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    std::sort(part.clique.begin(), part.clique.end());
    std::sort(part.independent.begin(), part.independent.end());
    return part;
}

SplitPartition parse_split_partition(std::string_view text, int n)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
        lines.push_back(line);
    while (lines.size() < 2)
        lines.emplace_back();
    if (lines.size() > 2 && std::any_of(lines.begin() + 2, lines.end(), [](const std::string & l) {
            return l.find_first_not_of(" \t\r") != std::string::npos;
        }))
        throw ParseError(ParseErrorKind::malformed, 3, "expected two lines (C then I)");
    SplitPartition part;
    std::vector<bool> seen(static_cast<std::size_t>(std::max(n, 0)), false);
    for (int s = 0; s < 2; ++s) {
        std::istringstream ls(lines[s]);
        std::string token;
        while (ls >> token) {
            std::size_t used = 0;
            long long v = -1;
            try {
                v = std::stoll(token, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != token.size())
                throw ParseError(ParseErrorKind::malformed, s + 1, "non-integer vertex \"" + token + "\"");
            if (v < 0 || v >= n)
                throw ParseError(ParseErrorKind::out_of_range, s + 1, "vertex out of range");
            if (seen[v])
                throw ParseError(ParseErrorKind::repeated_item, s + 1, "vertex listed twice");
            seen[v] = true;
            (s == 0 ? part.clique : part.independent).push_back(static_cast<Vertex>(v));
        }
    }
    if (std::count(seen.begin(), seen.end(), false) != 0)
        throw ParseError(ParseErrorKind::missing_item, 2, "partition does not cover every vertex");
    return part;
}

std::string render_split_partition(const SplitPartition & part)
{
    std::ostringstream out;
    for (const auto * side : {&part.clique, &part.independent}) {
        for (std::size_t i = 0; i < side->size(); ++i)
            out << (i ? " " : "") << (*side)[i];
        out << '\n';
    }
    return out.str();
}

PendantGadget pendant_gadget(const Graph & g, const SplitPartition & part, int k)
{
    require_valid_k(k);
    if (! is_split_partition(g, part))
        throw std::invalid_argument("pendant_gadget: not a split partition of the graph");
    PendantGadget out;
    out.k = k;
    out.original_order = g.order();
    out.pendants.resize(static_cast<std::size_t>(g.order()));
    auto edges = g.edges();
    Vertex next = g.order();
    out.partition = part;
    for (Vertex c : part.clique)
        for (int i = 0; i < k - 1; ++i) {
            edges.emplace_back(c, next);
            out.attached_to.push_back(c);
            out.pendants[c].push_back(next);
            out.partition.independent.push_back(next);
            ++next;
        }
    out.graph = Graph(next, edges);
    return out;
}

RainbowFunction normalize_pendant_labels(const PendantGadget & gadget, const RainbowFunction & f)
{
    RainbowFunction out = f;
    for (std::size_t i = 0; i < gadget.attached_to.size(); ++i) {
        const Vertex p = gadget.original_order + static_cast<Vertex>(i);
        const ColorSet label = out.labels[p];
        if (color_count(label) < 2)
            continue;
        const ColorSet keep = label & (~label + 1);
        out.labels[p] = keep;
        out.labels[gadget.attached_to[i]] |= label & ~keep;
    }
    return out;
}

WeightFunction normalize_pendant_weights(const PendantGadget & gadget, const WeightFunction & w)
{
    WeightFunction out = w;
    for (std::size_t i = 0; i < gadget.attached_to.size(); ++i) {
        const Vertex p = gadget.original_order + static_cast<Vertex>(i);
        if (out.weights[p] < 2)
            continue;
        int & host = out.weights[gadget.attached_to[i]];
        host = std::min(out.k, host + out.weights[p] - 1);
        out.weights[p] = 1;
    }
    return out;
}

VertexSet decode_dominating_set(const PendantGadget & gadget, const RainbowFunction & f)
{
    VertexSet d;
    for (Vertex v = 0; v < gadget.original_order; ++v)
        if (f.labels[v] != 0)
            d.push_back(v);
    return d;
}

VertexSet decode_dominating_set(const PendantGadget & gadget, const WeightFunction & w)
{
    VertexSet d;
    for (Vertex v = 0; v < gadget.original_order; ++v)
        if (w.weights[v] > 0)
            d.push_back(v);
    return d;
}

namespace {

bool dominates(const Graph & g, const VertexSet & d)
{
    std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : d) {
        hit[v] = true;
        for (Vertex w : g.neighbors(v))
            hit[w] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

} // namespace

GadgetReport verify_gadget_identities(const Graph & g, const SplitPartition & part, int k, const OracleConfig & config)
{
    auto gadget = pendant_gadget(g, part, k);
    GadgetReport r;
    r.k = k;
    r.domination = exact_domination(g, config).value;
    r.clique_size = static_cast<int>(part.clique.size());
    r.expected = r.domination + r.clique_size * (k - 1);

    auto rainbow = exact_rainbow(gadget.graph, k, config);
    r.rainbow = rainbow.value;
    auto f = normalize_pendant_labels(gadget, rainbow.witness);
    auto d = decode_dominating_set(gadget, f);
    r.rainbow_decodes = is_rainbow(gadget.graph, f).ok && rainbow_cost(f) <= r.rainbow && dominates(g, d)
        && static_cast<int>(d.size()) <= r.rainbow - r.clique_size * (k - 1);

    auto weak = exact_weight_variant(gadget.graph, WeightVariant::weak_k(), k, config);
    r.weak = weak->value;
    auto w = normalize_pendant_weights(gadget, weak->witness);
    auto dw = decode_dominating_set(gadget, w);
    r.weak_decodes = is_weak_k(gadget.graph, w).ok && weight_cost(w) <= r.weak && dominates(g, dw)
        && static_cast<int>(dw.size()) <= r.weak - r.clique_size * (k - 1);
    return r;
}

} // namespace rdom
