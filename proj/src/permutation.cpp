#include "rdom/permutation.hpp"

#include "layered_dp.hpp"

#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rdom {

void validate_diagram(const PermutationDiagram & d)
{
    std::vector<bool> seen(d.image.size(), false);
    for (int p : d.image) {
        if (p < 0 || p >= d.order())
            throw std::invalid_argument("permutation image out of range");
        if (seen[p])
            throw std::invalid_argument("permutation image repeated");
        seen[p] = true;
    }
}

PermutationDiagram parse_permutation(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    PermutationDiagram d;
    bool found = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (found)
            throw ParseError(ParseErrorKind::malformed, line_no, "expected a single line of images");
        found = true;
        std::istringstream ls(line);
        std::string token;
        while (ls >> token) {
            std::size_t used = 0;
            long long p = 0;
            try {
                p = std::stoll(token, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size() || used == 0)
                throw ParseError(ParseErrorKind::malformed, line_no, "non-integer image \"" + token + "\"");
            if (p < 1 || p > 1'000'000)
                throw ParseError(ParseErrorKind::out_of_range, line_no, "image out of range");
            d.image.push_back(static_cast<int>(p - 1));
        }
    }
    std::vector<bool> seen(d.image.size(), false);
    for (int p : d.image) {
        if (p >= d.order())
            throw ParseError(ParseErrorKind::out_of_range, line_no, "image exceeds n");
        if (seen[p])
            throw ParseError(ParseErrorKind::repeated_item, line_no, "image repeated");
        seen[p] = true;
    }
    return d;
}

std::string render_permutation(const PermutationDiagram & d)
{
    std::ostringstream out;
    for (int i = 0; i < d.order(); ++i)
        out << (i ? " " : "") << d.image[i] + 1;
    out << '\n';
    return out.str();
}

Graph diagram_to_graph(const PermutationDiagram & d)
{
    validate_diagram(d);
    std::vector<Edge> edges;
    for (int i = 0; i < d.order(); ++i)
        for (int j = i + 1; j < d.order(); ++j)
            if (d.image[i] > d.image[j])
                edges.emplace_back(i, j);
    return Graph(d.order(), edges);
}

PermutationDiagram reverse_diagram(const PermutationDiagram & d)
{
    const int n = d.order();
    PermutationDiagram r;
    for (int i = n - 1; i >= 0; --i)
        r.image.push_back(n - 1 - d.image[i]);
    return r;
}

PermutationDiagram inverse_diagram(const PermutationDiagram & d)
{
    PermutationDiagram r;
    r.image.resize(d.image.size());
    for (int i = 0; i < d.order(); ++i)
        r.image[d.image[i]] = i;
    return r;
}

namespace {

// Segments are processed by top position. A processed segment s meets a later
// segment t iff pi(t) < pi(s), so every stored bottom position is kept as the
// number of still unprocessed bottom positions below it. Zero means it can no
// longer meet anything.
constexpr int none = -1;

struct Frame {
    int rank; ///< unprocessed bottom positions below the current segment

    bool above(int count) const { return count > rank; }
    int shift(int count) const { return count > rank ? count - 1 : count; }
};

std::vector<int> ranks_in_sweep(const PermutationDiagram & d)
{
    // rank[i]: positions pi(j) < pi(i) with j >= i. Quadratic is fine at sweep sizes.
    std::vector<int> rank(d.image.size(), 0);
    for (int i = 0; i < d.order(); ++i)
        for (int j = i + 1; j < d.order(); ++j)
            rank[i] += d.image[j] < d.image[i];
    return rank;
}

// Per colour: the highest reach among carriers, and the lowest reach among
// empty segments still missing the colour (none when there is no such segment).
struct LabelState {
    std::array<int, 2> carrier{0, 0};
    std::array<int, 2> missing{none, none};

    bool operator==(const LabelState &) const = default;
    std::size_t hash() const
    {
        return static_cast<std::size_t>(((carrier[0] * 67 + carrier[1]) * 67 + missing[0] + 1) * 67 + missing[1] + 1);
    }
};

// Weight summary: best reach of a weight-2 carrier, the two best reaches of
// weight-1 carriers, and the lowest reach among empty segments still short by
// one and by two units. need1 is dropped when need2 reaches no further.
struct WeakState {
    int two = 0;
    std::array<int, 2> ones{0, 0};
    int need1 = none;
    int need2 = none;

    bool operator==(const WeakState &) const = default;
    std::size_t hash() const
    {
        return static_cast<std::size_t>((((two * 67 + ones[0]) * 67 + ones[1]) * 67 + need1 + 1) * 67 + need2 + 1);
    }
};

int lower(int a, int b) { return a == none ? b : (b == none ? a : std::min(a, b)); }

} // namespace

PermutationRainbowResult rainbow2_permutation(const PermutationDiagram & d)
{
    validate_diagram(d);
    PermutationRainbowResult out;
    out.witness = RainbowFunction(2, d.order());
    auto rank = ranks_in_sweep(d);
    detail::Layers<LabelState> dp;
    dp.start({});
    for (int u = 0; u < d.order(); ++u) {
        const Frame f{rank[u]};
        dp.advance(
            [&](const LabelState & s, auto emit) {
                for (ColorSet label = 0; label < 4; ++label) {
                    LabelState next;
                    bool dead = false;
                    for (int c = 0; c < 2; ++c) {
                        int carrier = f.shift(s.carrier[c]);
                        int missing = s.missing[c] == none ? none : f.shift(s.missing[c]);
                        if (label >> c & 1) {
                            if (s.missing[c] != none && f.above(s.missing[c]))
                                missing = none;
                            carrier = std::max(carrier, f.rank);
                        } else if (label == 0 && ! f.above(s.carrier[c])) {
                            missing = lower(missing, f.rank);
                        }
                        dead = dead || missing == 0;
                        next.carrier[c] = carrier;
                        next.missing[c] = missing;
                    }
                    if (! dead)
                        emit(next, color_count(label), static_cast<int>(label));
                }
            },
            out.stats);
    }
    auto best = dp.best([](const LabelState & s) { return s.missing[0] == none && s.missing[1] == none; });
    if (! best)
        throw std::logic_error("rainbow2_permutation: no feasible final state");
    out.value = best->first;
    for (int u = 0; u < d.order(); ++u)
        out.witness.labels[u] = static_cast<ColorSet>(best->second[u]);
    return out;
}

PermutationWeightResult weak2_permutation(const PermutationDiagram & d)
{
    validate_diagram(d);
    PermutationWeightResult out;
    out.witness = WeightFunction(2, d.order());
    auto rank = ranks_in_sweep(d);
    detail::Layers<WeakState> dp;
    dp.start({});
    for (int u = 0; u < d.order(); ++u) {
        const Frame f{rank[u]};
        dp.advance(
            [&](const WeakState & s, auto emit) {
                for (int w = 0; w <= 2; ++w) {
                    WeakState next;
                    next.two = f.shift(s.two);
                    next.ones = {f.shift(s.ones[0]), f.shift(s.ones[1])};
                    next.need1 = s.need1 == none ? none : f.shift(s.need1);
                    next.need2 = s.need2 == none ? none : f.shift(s.need2);
                    if (w == 0) {
                        int help = f.above(s.two) || f.above(s.ones[1]) ? 2 : (f.above(s.ones[0]) ? 1 : 0);
                        if (help == 1)
                            next.need1 = lower(next.need1, f.rank);
                        else if (help == 0)
                            next.need2 = lower(next.need2, f.rank);
                    } else {
                        const bool hits1 = s.need1 != none && f.above(s.need1);
                        const bool hits2 = s.need2 != none && f.above(s.need2);
                        if (hits2) {
                            const int rest = hits1 ? none : next.need1;
                            next.need1 = w == 2 ? rest : lower(rest, next.need2);
                            next.need2 = none;
                        } else if (hits1) {
                            next.need1 = none;
                        }
                        if (w == 2)
                            next.two = std::max(next.two, f.rank);
                        else {
                            std::array<int, 3> all{next.ones[0], next.ones[1], f.rank};
                            std::sort(all.begin(), all.end(), std::greater<>());
                            next.ones = {all[0], all[1]};
                        }
                    }
                    // Entries reaching no further than a weight-2 carrier add nothing.
                    for (int & o : next.ones)
                        if (o <= next.two)
                            o = 0;
                    if (next.need1 != none && next.need2 != none && next.need2 <= next.need1)
                        next.need1 = none;
                    if (next.need1 == 0 || next.need2 == 0)
                        continue;
                    int twos = next.two > 0, ones = (next.ones[0] > 0) + (next.ones[1] > 0);
                    out.stats.max_twos = std::max(out.stats.max_twos, twos);
                    out.stats.max_ones = std::max(out.stats.max_ones, ones);
                    emit(next, w, w);
                }
            },
            out.stats);
    }
    auto best = dp.best([](const WeakState & s) { return s.need1 == none && s.need2 == none; });
    if (! best)
        throw std::logic_error("weak2_permutation: no feasible final state");
    out.value = best->first;
    for (int u = 0; u < d.order(); ++u)
        out.witness.weights[u] = best->second[u];
    return out;
}

} // namespace rdom
