#include <algorithm>

#include <fmt/format.h>

#include "errcode/graph.hpp"

namespace errcode {

namespace {

// Colour refinement: colours are ranks of label-free signatures, so the
// resulting cell order is an isomorphism invariant.
std::vector<int> refine_colours(const Graph& g) {
    const int n = g.n();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (static_cast<int>(sorted.size()) == classes) break;
        classes = static_cast<int>(sorted.size());
    }
    return colour;
}

// Bits are laid out column by column over the upper triangle, so placing the
// vertex at position j fixes exactly the next j bits and prefixes compare
// like the final encodings.
struct Search {
    const Graph& g;
    std::vector<int> slot_cell;            // cell id required at each position
    std::vector<std::vector<Vertex>> cells;
    std::vector<Vertex> placed;
    std::vector<char> used;
    std::vector<char> cur_bits, best_bits;
    bool have_best = false;

    void run(int pos) {
        const int n = g.n();
        if (pos == n) {
            if (!have_best || cur_bits < best_bits) {
                best_bits = cur_bits;
                have_best = true;
            }
            return;
        }
        for (Vertex v : cells[slot_cell[pos]]) {
            if (used[v]) continue;
            const std::size_t base = cur_bits.size();
            for (int i = 0; i < pos; ++i) cur_bits.push_back(g.adjacent(placed[i], v) ? 1 : 0);
            bool prune = false;
            if (have_best) {
                auto cmp = std::lexicographical_compare_three_way(cur_bits.begin(), cur_bits.end(), best_bits.begin(),
                                                                  best_bits.begin() + static_cast<long>(cur_bits.size()));
                prune = cmp > 0;
            }
            if (!prune) {
                used[v] = 1;
                placed.push_back(v);
                run(pos + 1);
                placed.pop_back();
                used[v] = 0;
            }
            cur_bits.resize(base);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.n();
    if (n > kCanonicalCap)
        throw GraphError(fmt::format("canonical_form: n = {} exceeds cap {}", n, kCanonicalCap));
    auto colour = refine_colours(g);
    int ncells = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;

    Search s{g, {}, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(ncells)), {}, {}, {}, {}, false};
    for (Vertex v = 0; v < n; ++v) s.cells[colour[v]].push_back(v);
    for (int c = 0; c < ncells; ++c)
        for (std::size_t i = 0; i < s.cells[c].size(); ++i) s.slot_cell.push_back(c);
    s.used.assign(static_cast<std::size_t>(n), 0);
    s.run(0);

    CanonicalForm cf;
    cf.bytes.push_back(static_cast<std::uint8_t>(n));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (char b : s.best_bits) {
        acc = static_cast<std::uint8_t>((acc << 1) | (b ? 1 : 0));
        if (++nbits == 8) {
            cf.bytes.push_back(acc);
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits > 0) cf.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return cf;
}

Graph from_canonical_form(const CanonicalForm& cf) {
    if (cf.bytes.empty()) throw GraphError("empty canonical form");
    const int n = cf.bytes[0];
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t byte = 1 + bit / 8;
            if (byte >= cf.bytes.size()) throw GraphError("truncated canonical form");
            if ((cf.bytes[byte] >> (7 - bit % 8)) & 1) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

std::string CanonicalForm::hex() const {
    std::string out;
    for (auto b : bytes) out += fmt::format("{:02x}", b);
    return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw GraphError("canonical form hex has odd length");
    CanonicalForm cf;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        unsigned v = 0;
        for (std::size_t k = i; k < i + 2; ++k) {
            char c = hex[k];
            v <<= 4;
            if (c >= '0' && c <= '9') v |= static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') v |= static_cast<unsigned>(c - 'a' + 10);
            else throw GraphError(fmt::format("bad hex digit '{}' in canonical form", c));
        }
        cf.bytes.push_back(static_cast<std::uint8_t>(v));
    }
    return cf;
}

}  // namespace errcode
