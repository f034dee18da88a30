#include "rdom/semantics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rdom {

RainbowFunction::RainbowFunction(int k, int n) : k(k), labels(static_cast<std::size_t>(n), 0) {}

WeightFunction::WeightFunction(int k, int n) : k(k), weights(static_cast<std::size_t>(n), 0) {}

KAssignment::KAssignment(int k, int n, Label fill) : k(k), labels(static_cast<std::size_t>(n), fill) {}

void require_valid_k(int k)
{
    if (k < 1 || k > max_colors)
        throw std::invalid_argument("k must lie in [1, " + std::to_string(max_colors) + "], got " + std::to_string(k));
}

int rainbow_cost(const RainbowFunction & f)
{
    int total = 0;
    for (ColorSet s : f.labels)
        total += color_count(s);
    return total;
}

int weight_cost(const WeightFunction & w)
{
    int total = 0;
    for (int x : w.weights)
        total += x;
    return total;
}

namespace {

void require_order(const Graph & g, std::size_t n, const char * what)
{
    if (n != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument(std::string(what) + " is not defined on every vertex of the graph");
}

int open_sum(const Graph & g, const WeightFunction & w, Vertex x)
{
    int s = 0;
    for (Vertex y : g.neighbors(x))
        s += w.weights[y];
    return s;
}

} // namespace

Verdict is_rainbow(const Graph & g, const RainbowFunction & f)
{
    require_order(g, f.labels.size(), "rainbow function");
    const ColorSet all = full_colors(f.k);
    for (Vertex x = 0; x < g.order(); ++x) {
        if (f.labels[x] & ~all)
            return Verdict::fail(x);
        if (f.labels[x] != 0)
            continue;
        ColorSet seen = 0;
        for (Vertex y : g.neighbors(x))
            seen |= f.labels[y];
        if (seen != all)
            return Verdict::fail(x);
    }
    return Verdict::pass();
}

Verdict is_weak_k(const Graph & g, const WeightFunction & w)
{
    require_order(g, w.weights.size(), "weight function");
    for (Vertex x = 0; x < g.order(); ++x) {
        const int wx = w.weights[x];
        if (wx < 0 || wx > w.k)
            return Verdict::fail(x);
        if (wx == 0 && open_sum(g, w, x) < w.k)
            return Verdict::fail(x);
    }
    return Verdict::pass();
}

Verdict is_k_dom(const Graph & g, const WeightFunction & w)
{
    require_order(g, w.weights.size(), "weight function");
    for (Vertex x = 0; x < g.order(); ++x) {
        const int wx = w.weights[x];
        if (wx < 0 || wx > w.k || wx + open_sum(g, w, x) < w.k)
            return Verdict::fail(x);
    }
    return Verdict::pass();
}

Verdict is_jk_dom(const Graph & g, const WeightFunction & w, int j)
{
    require_order(g, w.weights.size(), "weight function");
    if (j < 1 || j > w.k)
        throw std::invalid_argument("is_jk_dom: j must lie in [1, k]");
    for (Vertex x = 0; x < g.order(); ++x) {
        const int wx = w.weights[x];
        if (wx < 0 || wx > j || wx + open_sum(g, w, x) < w.k)
            return Verdict::fail(x);
    }
    return Verdict::pass();
}

Verdict is_weak_kL(const Graph & g, const WeightFunction & w, const KAssignment & labels)
{
    require_order(g, w.weights.size(), "weight function");
    require_order(g, labels.labels.size(), "assignment");
    for (Vertex x = 0; x < g.order(); ++x) {
        const int wx = w.weights[x];
        const auto [a, b] = labels.labels[x];
        if (wx < 0 || wx > w.k || wx < a)
            return Verdict::fail(x);
        if (wx == 0 && open_sum(g, w, x) < b)
            return Verdict::fail(x);
    }
    return Verdict::pass();
}

WeightFunction rainbow_to_weight(const RainbowFunction & f)
{
    WeightFunction w(f.k, static_cast<int>(f.labels.size()));
    for (std::size_t v = 0; v < f.labels.size(); ++v)
        w.weights[v] = color_count(f.labels[v]);
    return w;
}

std::string render_rainbow(const RainbowFunction & f)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < f.labels.size(); ++v) {
        out << v << ": {";
        bool first = true;
        for (int c = 1; c <= f.k; ++c)
            if (f.labels[v] >> (c - 1) & 1) {
                out << (first ? "" : ",") << c;
                first = false;
            }
        out << "}\n";
    }
    return out.str();
}

std::string render_weights(const WeightFunction & w)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < w.weights.size(); ++v)
        out << v << ": " << w.weights[v] << '\n';
    return out.str();
}

namespace {

struct LineCursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 0;

    bool next(std::string & out)
    {
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            out.assign(text.substr(pos, end - pos));
            pos = end + 1;
            ++line;
            if (! out.empty() && out.back() == '\r')
                out.pop_back();
            if (out.find_first_not_of(" \t") != std::string::npos)
                return true;
        }
        return false;
    }
};

// Splits "v: rest" and returns v; throws on malformed prefix.
long long split_vertex_prefix(const std::string & line, int line_no, std::string & rest)
{
    auto colon = line.find(':');
    if (colon == std::string::npos)
        throw ParseError(ParseErrorKind::malformed, line_no, "expected \"v: ...\"");
    std::istringstream head(line.substr(0, colon));
    long long v;
    std::string extra;
    if (! (head >> v) || (head >> extra))
        throw ParseError(ParseErrorKind::malformed, line_no, "bad vertex index");
    rest = line.substr(colon + 1);
    return v;
}

template <class Entry>
std::vector<Entry> place_by_vertex(std::vector<std::pair<long long, std::pair<Entry, int>>> & rows)
{
    const auto n = static_cast<long long>(rows.size());
    std::vector<Entry> out(rows.size());
    std::vector<bool> have(rows.size(), false);
    for (auto & [v, entry] : rows) {
        if (v < 0 || v >= n)
            throw ParseError(ParseErrorKind::out_of_range, entry.second, "vertex index outside [0, " + std::to_string(n) + ")");
        if (have[v])
            throw ParseError(ParseErrorKind::repeated_item, entry.second, "vertex " + std::to_string(v) + " listed twice");
        have[v] = true;
        out[v] = entry.first;
    }
    return out;
}

} // namespace

RainbowFunction parse_rainbow(std::string_view text, int k)
{
    require_valid_k(k);
    std::vector<std::pair<long long, std::pair<ColorSet, int>>> rows;
    LineCursor cur{text};
    std::string line, rest;
    while (cur.next(line)) {
        auto v = split_vertex_prefix(line, cur.line, rest);
        auto open = rest.find('{'), close = rest.find('}');
        if (open == std::string::npos || close == std::string::npos || close < open
            || rest.find_first_not_of(" \t", close + 1) != std::string::npos
            || rest.substr(0, open).find_first_not_of(" \t") != std::string::npos)
            throw ParseError(ParseErrorKind::malformed, cur.line, "expected \"{c1,c2,...}\"");
        std::string body = rest.substr(open + 1, close - open - 1);
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        ColorSet s = 0;
        long long c;
        while (in >> c) {
            if (c < 1 || c > k)
                throw ParseError(ParseErrorKind::out_of_range, cur.line, "colour " + std::to_string(c) + " outside [1, k]");
            if (s >> (c - 1) & 1)
                throw ParseError(ParseErrorKind::repeated_item, cur.line, "colour listed twice");
            s |= ColorSet{1} << (c - 1);
        }
        if (! in.eof())
            throw ParseError(ParseErrorKind::malformed, cur.line, "non-integer colour");
        rows.push_back({v, {s, cur.line}});
    }
    RainbowFunction f;
    f.k = k;
    f.labels = place_by_vertex(rows);
    return f;
}

WeightFunction parse_weights(std::string_view text, int k)
{
    require_valid_k(k);
    std::vector<std::pair<long long, std::pair<int, int>>> rows;
    LineCursor cur{text};
    std::string line, rest;
    while (cur.next(line)) {
        auto v = split_vertex_prefix(line, cur.line, rest);
        std::istringstream in(rest);
        long long w;
        std::string extra;
        if (! (in >> w) || (in >> extra))
            throw ParseError(ParseErrorKind::malformed, cur.line, "expected a single weight");
        if (w < 0 || w > k)
            throw ParseError(ParseErrorKind::out_of_range, cur.line, "weight outside [0, k]");
        rows.push_back({v, {static_cast<int>(w), cur.line}});
    }
    WeightFunction out;
    out.k = k;
    out.weights = place_by_vertex(rows);
    return out;
}

KAssignment parse_assignment(std::string_view text, int k)
{
    require_valid_k(k);
    std::vector<std::pair<long long, std::pair<Label, int>>> rows;
    LineCursor cur{text};
    std::string line;
    while (cur.next(line)) {
        std::istringstream in(line);
        long long v, a, b;
        std::string extra;
        if (! (in >> v >> a >> b) || (in >> extra))
            throw ParseError(ParseErrorKind::malformed, cur.line, "expected \"v a b\"");
        if (a < 0 || a > k || b < 0 || b > k)
            throw ParseError(ParseErrorKind::out_of_range, cur.line, "label outside [0, k]");
        rows.push_back({v, {Label{static_cast<int>(a), static_cast<int>(b)}, cur.line}});
    }
    KAssignment out;
    out.k = k;
    out.labels = place_by_vertex(rows);
    return out;
}

std::string render_assignment(const KAssignment & labels)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < labels.labels.size(); ++v)
        out << v << ' ' << labels.labels[v].a << ' ' << labels.labels[v].b << '\n';
    return out.str();
}

} // namespace rdom
