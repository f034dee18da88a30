#include "rdom/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace rdom {

std::string_view to_string(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::malformed: return "malformed";
    case ParseErrorKind::out_of_range: return "out-of-range";
    case ParseErrorKind::duplicate_edge: return "duplicate-edge";
    case ParseErrorKind::self_loop: return "self-loop";
    case ParseErrorKind::repeated_item: return "repeated-item";
    case ParseErrorKind::missing_item: return "missing-item";
    case ParseErrorKind::invalid_structure: return "invalid-structure";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string & what)
    : std::runtime_error(std::string(to_string(kind)) + (line > 0 ? " at line " + std::to_string(line) : std::string()) + ": " + what),
      kind_(kind), line_(line)
{
}

Graph::Graph(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop");
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto & list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("parallel edge");
    }
    edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

namespace {

std::vector<std::string> split_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        }
        else if (c != '\r')
            current.push_back(c);
    }
    if (! current.empty())
        lines.push_back(current);
    return lines;
}

bool read_ints(const std::string & line, std::vector<long long> & out)
{
    std::istringstream in(line);
    out.clear();
    long long x;
    while (in >> x)
        out.push_back(x);
    if (! in.eof())
        return false;
    return true;
}

bool blank(const std::string & line)
{
    return line.find_first_not_of(" \t") == std::string::npos;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    auto lines = split_lines(text);
    std::size_t pos = 0;
    while (pos < lines.size() && blank(lines[pos]))
        ++pos;
    if (pos == lines.size())
        throw ParseError(ParseErrorKind::malformed, 1, "missing header line \"n m\"");

    std::vector<long long> nums;
    if (! read_ints(lines[pos], nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
        throw ParseError(ParseErrorKind::malformed, static_cast<int>(pos + 1), "header must be \"n m\"");
    const auto n = nums[0];
    const auto m = nums[1];
    if (n > 100'000'000)
        throw ParseError(ParseErrorKind::out_of_range, static_cast<int>(pos + 1), "vertex count too large");

    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> seen;
    ++pos;
    for (long long i = 0; i < m; ++i, ++pos) {
        if (pos >= lines.size())
            throw ParseError(ParseErrorKind::malformed, static_cast<int>(pos + 1), "expected " + std::to_string(m) + " edge lines");
        const int line_no = static_cast<int>(pos + 1);
        if (! read_ints(lines[pos], nums) || nums.size() != 2)
            throw ParseError(ParseErrorKind::malformed, line_no, "edge line must be \"u v\"");
        auto u = nums[0], v = nums[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(ParseErrorKind::out_of_range, line_no, "vertex outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw ParseError(ParseErrorKind::self_loop, line_no, "self-loop on vertex " + std::to_string(u));
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        seen.emplace_back(e, line_no);
        edges.push_back(e);
    }
    for (; pos < lines.size(); ++pos)
        if (! blank(lines[pos]))
            throw ParseError(ParseErrorKind::malformed, static_cast<int>(pos + 1), "trailing content after edge list");

    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first)
            throw ParseError(ParseErrorKind::duplicate_edge, std::max(seen[i].second, seen[i - 1].second),
                "duplicate edge " + std::to_string(seen[i].first.first) + " " + std::to_string(seen[i].first.second));

    return Graph(static_cast<int>(n), edges);
}

std::string render_graph(const Graph & g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

VertexSet closed_neighborhood(const Graph & g, Vertex v)
{
    auto nb = g.neighbors(v);
    VertexSet out(nb.begin(), nb.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

Graph cartesian_product_complete(const Graph & g, int k)
{
    if (k < 1)
        throw std::invalid_argument("cartesian_product_complete: k must be >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v)
        for (int c = 0; c < k; ++c)
            for (int d = c + 1; d < k; ++d)
                edges.emplace_back(v * k + c, v * k + d);
    for (auto [u, v] : g.edges())
        for (int c = 0; c < k; ++c)
            edges.emplace_back(u * k + c, v * k + c);
    return Graph(g.order() * k, edges);
}

Graph complement(const Graph & g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto nb = g.neighbors(u);
        auto it = nb.begin();
        for (Vertex v = u + 1; v < g.order(); ++v) {
            while (it != nb.end() && *it < v)
                ++it;
            if (it == nb.end() || *it != v)
                edges.emplace_back(u, v);
        }
    }
    return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph & a, const Graph & b)
{
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), edges);
}

Graph join(const Graph & a, const Graph & b)
{
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < b.order(); ++v)
            edges.emplace_back(u, v + a.order());
    return Graph(a.order() + b.order(), edges);
}

Graph induced_subgraph(const Graph & g, std::span<const Vertex> vertices)
{
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                edges.emplace_back(static_cast<int>(i), j);
        }
    return Graph(static_cast<int>(vertices.size()), edges);
}

std::vector<VertexSet> connected_components(const Graph & g)
{
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<std::size_t>(s)] = id;
        stack.push_back(s);
        while (! stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_clique(const Graph & g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (! g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_independent(const Graph & g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

Graph relabel(const Graph & g, std::span<const Vertex> perm)
{
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.order(), edges);
}

namespace {

struct Canonicalizer {
    int n;
    std::vector<std::vector<bool>> adj;
    std::string best;

    // Colour refinement with isomorphism-invariant colour numbering.
    std::vector<int> refine(std::vector<int> colour) const
    {
        int classes = 1 + *std::max_element(colour.begin(), colour.end());
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> keys(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                std::vector<int> key(static_cast<std::size_t>(classes + 1), 0);
                key[0] = colour[static_cast<std::size_t>(v)];
                for (int w = 0; w < n; ++w)
                    if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
                        ++key[static_cast<std::size_t>(1 + colour[static_cast<std::size_t>(w)])];
                keys[static_cast<std::size_t>(v)] = {std::move(key), v};
            }
            std::vector<std::vector<int>> distinct;
            for (auto & kv : keys)
                distinct.push_back(kv.first);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            std::vector<int> next(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                next[static_cast<std::size_t>(v)] = static_cast<int>(
                    std::lower_bound(distinct.begin(), distinct.end(), keys[static_cast<std::size_t>(v)].first) - distinct.begin());
            const int new_classes = static_cast<int>(distinct.size());
            colour = std::move(next);
            if (new_classes == classes)
                return colour;
            classes = new_classes;
        }
    }

    void search(const std::vector<int> & colour)
    {
        const int classes = 1 + *std::max_element(colour.begin(), colour.end());
        if (classes == n) {
            std::vector<int> order(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                order[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])] = v;
            std::string code;
            code.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    code.push_back(adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
                                      [static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ? '1' : '0');
            if (code > best)
                best = std::move(code);
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(classes), 0);
        for (int c : colour)
            ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] == 1)
            ++target;
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] != target)
                continue;
            std::vector<int> split(colour);
            for (int u = 0; u < n; ++u)
                split[static_cast<std::size_t>(u)] = 2 * colour[static_cast<std::size_t>(u)] + (colour[static_cast<std::size_t>(u)] == target && u != v ? 1 : 0);
            search(refine(split));
        }
    }
};

} // namespace

std::string canonical_form(const Graph & g)
{
    const int n = g.order();
    if (n > 11)
        throw std::invalid_argument("canonical_form supports at most 11 vertices");
    if (n == 0)
        return "0:";
    Canonicalizer c{n, std::vector<std::vector<bool>>(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false)), {}};
    for (auto [u, v] : g.edges())
        c.adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = c.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    c.search(c.refine(std::vector<int>(static_cast<std::size_t>(n), 0)));
    return std::to_string(n) + ":" + c.best;
}

} // namespace rdom
