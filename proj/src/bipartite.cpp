#include "rdom/bipartite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rdom {

void validate_bipartite(const BipartiteInstance & inst)
{
    require_valid_k(inst.k);
    if (inst.n1 < 0 || inst.n2 < 0)
        throw std::invalid_argument("bipartite side sizes must be non-negative");
    if (static_cast<int>(inst.b1.size()) != inst.n1 || static_cast<int>(inst.b2.size()) != inst.n2)
        throw std::invalid_argument("bipartite label count does not match side size");
    for (const auto * side : {&inst.b1, &inst.b2})
        for (int b : *side)
            if (b < 0 || b > inst.k)
                throw std::invalid_argument("bipartite label outside 0..k");
}

BipartiteInstance parse_bipartite(std::string_view text)
{
    std::istringstream in{std::string(text)};
    BipartiteInstance inst;
    long long n1, n2, k;
    if (! (in >> n1 >> n2 >> k))
        throw ParseError(ParseErrorKind::malformed, 1, "expected \"n1 n2 k\"");
    if (n1 < 0 || n2 < 0 || n1 > 10'000'000 || n2 > 10'000'000 || k < 1 || k > 31)
        throw ParseError(ParseErrorKind::out_of_range, 1, "sizes or k out of range");
    inst.n1 = static_cast<int>(n1);
    inst.n2 = static_cast<int>(n2);
    inst.k = static_cast<int>(k);
    for (auto * side : {&inst.b1, &inst.b2}) {
        const long long want = side == &inst.b1 ? n1 : n2;
        for (long long i = 0; i < want; ++i) {
            long long b;
            if (! (in >> b))
                throw ParseError(ParseErrorKind::missing_item, 0, "too few labels");
            if (b < 0 || b > k)
                throw ParseError(ParseErrorKind::out_of_range, 0, "label outside 0..k");
            side->push_back(static_cast<int>(b));
        }
    }
    std::string extra;
    if (in >> extra)
        throw ParseError(ParseErrorKind::malformed, 0, "trailing input after labels");
    return inst;
}

std::string render_bipartite(const BipartiteInstance & inst)
{
    std::ostringstream out;
    out << inst.n1 << ' ' << inst.n2 << ' ' << inst.k << '\n';
    for (const auto * side : {&inst.b1, &inst.b2}) {
        for (std::size_t i = 0; i < side->size(); ++i)
            out << (i ? " " : "") << (*side)[i];
        out << '\n';
    }
    return out.str();
}

Graph bipartite_graph(const BipartiteInstance & inst)
{
    std::vector<Edge> edges;
    for (int u = 0; u < inst.n1; ++u)
        for (int v = 0; v < inst.n2; ++v)
            edges.emplace_back(u, inst.n1 + v);
    return Graph(inst.n1 + inst.n2, edges);
}

std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_sides(const Graph & g)
{
    std::pair<VertexSet, VertexSet> sides;
    if (g.order() == 0)
        return sides;
    for (Vertex v = 0; v < g.order(); ++v)
        (v == 0 || ! g.adjacent(0, v) ? sides.first : sides.second).push_back(v);
    const auto n1 = sides.first.size(), n2 = sides.second.size();
    if (g.order() > 1 && n2 == 0)
        return std::nullopt;
    if (g.size() != n1 * n2)
        return std::nullopt;
    for (Vertex u : sides.first)
        for (Vertex v : sides.second)
            if (! g.adjacent(u, v))
                return std::nullopt;
    return sides;
}

KAssignment bipartite_assignment(const BipartiteInstance & inst)
{
    KAssignment labels(inst.k, inst.n1 + inst.n2);
    for (int u = 0; u < inst.n1; ++u)
        labels.labels[u] = {0, inst.b1[u]};
    for (int v = 0; v < inst.n2; ++v)
        labels.labels[inst.n1 + v] = {0, inst.b2[v]};
    return labels;
}

BipartiteInstance bipartite_instance(int n1, int n2, const KAssignment & labels)
{
    if (static_cast<int>(labels.labels.size()) != n1 + n2)
        throw std::invalid_argument("assignment size does not match n1 + n2");
    BipartiteInstance inst{n1, n2, labels.k, {}, {}};
    for (int v = 0; v < n1 + n2; ++v) {
        if (labels.labels[v].a != 0)
            throw std::invalid_argument("complete bipartite solver requires all a-labels to be zero");
        (v < n1 ? inst.b1 : inst.b2).push_back(labels.labels[v].b);
    }
    return inst;
}

namespace {

std::vector<int> by_label(const std::vector<int> & b)
{
    std::vector<int> order(b.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return b[x] > b[y]; });
    return order;
}

} // namespace

BipartiteWeightResult weakL_complete_bipartite(const BipartiteInstance & inst)
{
    validate_bipartite(inst);
    const int n1 = inst.n1, n2 = inst.n2, k = inst.k;
    auto o1 = by_label(inst.b1), o2 = by_label(inst.b2);
    // Sorted labels with a zero sentinel past the end of each side.
    auto b = [&](int i) { return i < n1 ? inst.b1[o1[i]] : 0; };
    auto bp = [&](int i) { return i < n2 ? inst.b2[o2[i]] : 0; };

    // Weight x on V (unit weights first, any excess piled on one vertex) must cover
    // every zero vertex of V', and symmetrically. x never needs to exceed max(n1, k).
    const int x_max = n1 == 0 ? 0 : std::max(n1, k);
    BipartiteWeightResult out;
    out.value = -1;
    int y2 = n2; // smallest y with b'(y+1) <= x; non-increasing as x grows
    for (int x = 0; x <= x_max; ++x) {
        while (y2 > 0 && bp(y2 - 1) <= x)
            --y2;
        const int y1 = b(x);
        const int y = std::max(y1, y2);
        if (n2 == 0 && y > 0)
            continue;
        if (out.value < 0 || x + y < out.value) {
            out.value = x + y;
            out.x = x;
            out.y = y;
        }
    }
    if (out.value < 0)
        throw std::logic_error("weakL_complete_bipartite: no feasible split");

    out.witness = WeightFunction(k, n1 + n2);
    auto place = [&](const std::vector<int> & order, int offset, int size, int total) {
        for (int i = 0; i < size && i < total; ++i)
            out.witness.weights[offset + order[i]] = 1;
        if (total > size)
            out.witness.weights[offset + order[0]] += total - size;
    };
    place(o1, 0, n1, out.x);
    place(o2, n1, n2, out.y);
    return out;
}

} // namespace rdom
