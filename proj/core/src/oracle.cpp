#include <bit>
#include <cstdint>
#include <numeric>

#include <fmt/format.h>

#include "errcode/solver.hpp"

namespace errcode {

std::string_view to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::oracle: return "oracle";
        case SolveMethod::branch_and_bound: return "branch_and_bound";
        case SolveMethod::complement_search: return "complement_search";
    }
    return "?";
}

std::optional<OptimalCode> min_errcode_oracle(const Graph& g, int max_n) {
    const int n = g.n();
    if (n > max_n || n > 64) throw BudgetExceeded(fmt::format("oracle: n = {} exceeds cap {}", n, max_n), 0, -1);

    std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = std::uint64_t{1} << v;
        for (Vertex w : g.neighbors(v)) closed[v] |= std::uint64_t{1} << w;
    }
    auto valid = [&](std::uint64_t s) {
        for (Vertex v = 0; v < n; ++v)
            if (std::popcount(closed[v] & s) < 3) return false;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (std::popcount((closed[u] ^ closed[v]) & s) < 3) return false;
        return true;
    };

    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::int64_t nodes = 1;
    if (!valid(all)) return std::nullopt;

    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::uint64_t s = 0;
            for (int i : idx) s |= std::uint64_t{1} << i;
            ++nodes;
            if (valid(s)) {
                OptimalCode out;
                out.detectors.assign(idx.begin(), idx.end());
                out.size = k;
                out.method = SolveMethod::oracle;
                out.nodes_explored = nodes;
                return out;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace errcode
