#pragma once

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mbposd/bit_matrix.hpp"

namespace mbposd {

/// Raised for unreadable or inconsistent code files.
struct AlistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bipartite adjacency of H with a flat edge numbering (row-major over H).
struct TannerGraph {
    int n_vars = 0;
    int n_checks = 0;
    std::vector<std::vector<int>> var_adj;  ///< A_i: checks adjacent to variable i
    std::vector<std::vector<int>> chk_adj;  ///< B_j: variables adjacent to check j
    std::vector<std::vector<int>> var_edges;
    std::vector<std::vector<int>> chk_edges;
    int n_edges = 0;

    static TannerGraph from_pcm(const BitMatrix& pcm) {
        TannerGraph g;
        g.n_vars = static_cast<int>(pcm.cols());
        g.n_checks = static_cast<int>(pcm.rows());
        g.var_adj.resize(g.n_vars);
        g.chk_adj.resize(g.n_checks);
        g.var_edges.resize(g.n_vars);
        g.chk_edges.resize(g.n_checks);
        int e = 0;
        for (int j = 0; j < g.n_checks; ++j) {
            for (int i = 0; i < g.n_vars; ++i) {
                if (!pcm.get(j, i)) continue;
                g.var_adj[i].push_back(j);
                g.chk_adj[j].push_back(i);
                g.var_edges[i].push_back(e);
                g.chk_edges[j].push_back(e);
                ++e;
            }
        }
        g.n_edges = e;
        return g;
    }
};

/// Shortest cycle length of the Tanner graph, or nullopt when acyclic.
/// BFS from every variable node; the arrival edge is excluded so the only
/// way to revisit a node is around a cycle. Cycle lengths in a bipartite
/// graph are even and at least 4.
inline std::optional<int> compute_girth(const TannerGraph& g) {
    const int nv = g.n_vars, nc = g.n_checks;
    const int total = nv + nc;
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(total), parent_edge(total);
    std::deque<int> queue;

    auto neighbors = [&](int u, auto&& visit) {
        if (u < nv) {
            const auto& adj = g.var_adj[u];
            const auto& eid = g.var_edges[u];
            for (std::size_t t = 0; t < adj.size(); ++t) visit(nv + adj[t], eid[t]);
        } else {
            const auto& adj = g.chk_adj[u - nv];
            const auto& eid = g.chk_edges[u - nv];
            for (std::size_t t = 0; t < adj.size(); ++t) visit(adj[t], eid[t]);
        }
    };

    for (int root = 0; root < nv; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent_edge[root] = -1;
        queue.clear();
        queue.push_back(root);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= best) continue;
            neighbors(u, [&](int w, int eid) {
                if (eid == parent_edge[u]) return;
                if (dist[w] >= 0) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                } else {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = eid;
                    queue.push_back(w);
                }
            });
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

/// Nullspace basis of a full-row-rank pcm: one generator row per free column
/// of the RREF, free columns taken in ascending order so the result is a
/// deterministic function of the pcm.
inline BitMatrix derive_generator(const BitMatrix& pcm) {
    const std::size_t n = pcm.cols();
    BitMatrix r = pcm;
    std::vector<int> pivots = gf2_rref(r);
    if (pivots.size() != pcm.rows())
        throw std::invalid_argument("derive_generator: parity-check matrix is rank deficient");
    std::vector<char> is_pivot(n, 0);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;

    const std::size_t k = n - pivots.size();
    BitMatrix gen(k, n);
    std::size_t gi = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        gen.set(gi, f, true);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            if (r.get(pr, f)) gen.set(gi, static_cast<std::size_t>(pivots[pr]), true);
        ++gi;
    }
    return gen;
}

/// word * pcm^T over GF(2); all-zero exactly when word is a codeword.
inline BitVec syndrome(const BitMatrix& pcm, const BitVec& word) {
    if (word.size() != pcm.cols())
        throw std::invalid_argument("syndrome: word length does not match code length");
    BitVec s(pcm.rows());
    const auto ww = word.words();
    for (std::size_t j = 0; j < pcm.rows(); ++j) {
        const auto rw = pcm.row(j);
        uint64_t acc = 0;
        for (std::size_t t = 0; t < rw.size(); ++t) acc ^= rw[t] & ww[t];
        if (std::popcount(acc) & 1) s.set(j, true);
    }
    return s;
}

inline BitVec encode(const BitMatrix& gen, const BitVec& message) {
    if (message.size() != gen.rows())
        throw std::invalid_argument("encode: message length does not match k");
    BitVec cw(gen.cols());
    for (std::size_t r = 0; r < gen.rows(); ++r)
        if (message.get(r)) cw.xor_words(gen.row(r));
    return cw;
}

/// An (N,K) binary linear code plus the derived structure every decoder needs.
/// Immutable after construction; share freely across decode workers.
struct CodeSpec {
    std::string name;
    int n = 0;
    int k = 0;
    BitMatrix gen;   ///< K x N
    BitMatrix pcm;   ///< (N-K) x N
    TannerGraph graph;
    std::optional<int> girth;         ///< nullopt = acyclic Tanner graph
    std::optional<int> min_distance;  ///< set only when computed explicitly
};

/// Builds the full CodeSpec from a parity-check matrix and validates it.
inline CodeSpec make_code_spec(BitMatrix pcm, std::string name = "") {
    CodeSpec cs;
    cs.name = std::move(name);
    cs.n = static_cast<int>(pcm.cols());
    const std::size_t m = pcm.rows();
    if (gf2_rank(pcm) != m)
        throw AlistError("code '" + cs.name + "': parity-check matrix is not full rank");
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t deg = 0;
        for (auto w : pcm.row(j)) deg += std::popcount(w);
        if (deg <= 1)
            throw AlistError("code '" + cs.name + "': check node " + std::to_string(j + 1) +
                             " has degree " + std::to_string(deg));
    }
    cs.k = cs.n - static_cast<int>(m);
    cs.gen = derive_generator(pcm);
    cs.pcm = std::move(pcm);
    cs.graph = TannerGraph::from_pcm(cs.pcm);
    cs.girth = compute_girth(cs.graph);

    for (std::size_t r = 0; r < cs.gen.rows(); ++r)
        if (syndrome(cs.pcm, cs.gen.row_vec(r)).any())
            throw AlistError("code '" + cs.name + "': generator row fails parity check");
    if (gf2_rank(cs.gen) != static_cast<std::size_t>(cs.k))
        throw AlistError("code '" + cs.name + "': generator rank below k");
    return cs;
}

inline constexpr int kMinDistanceMaxK = 24;

/// Minimum Hamming weight over all nonzero codewords, by Gray-code walk of
/// the 2^K - 1 messages. Guarded to K <= 24.
inline int min_distance_bruteforce(const CodeSpec& code) {
    if (code.k > kMinDistanceMaxK)
        throw std::invalid_argument(
            "min_distance_bruteforce: k = " + std::to_string(code.k) + " exceeds the enumeration guard (" +
            std::to_string(kMinDistanceMaxK) + "); skip the distance computation for this code");
    BitVec cw(code.n);
    std::size_t best = static_cast<std::size_t>(code.n);
    const uint64_t count = uint64_t{1} << code.k;
    for (uint64_t i = 1; i < count; ++i) {
        cw.xor_words(code.gen.row(static_cast<std::size_t>(std::countr_zero(i))));
        best = std::min(best, cw.popcount());
    }
    return static_cast<int>(best);
}

namespace detail {

struct AlistTokens {
    std::vector<long> values;
    std::vector<int> lines;  // source line per token
    std::size_t pos = 0;

    long next(const char* what) {
        if (pos >= values.size())
            throw AlistError(std::string("alist: unexpected end of file while reading ") + what);
        return values[pos++];
    }
    int line() const { return pos < lines.size() ? lines[pos] : (lines.empty() ? 0 : lines.back()); }
};

inline AlistTokens tokenize_alist(std::istream& in) {
    AlistTokens t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long v;
        while (ls >> v) {
            t.values.push_back(v);
            t.lines.push_back(lineno);
        }
        if (!ls.eof()) {
            std::string bad;
            ls.clear();
            ls >> bad;
            if (!bad.empty())
                throw AlistError("alist line " + std::to_string(lineno) + ": non-numeric token '" + bad + "'");
        }
    }
    return t;
}

}  // namespace detail

/// Parses the alist interchange format (1-based indices, zero padding in the
/// fixed-width adjacency lists) and builds the code. The column lists define
/// H; the row lists are cross-checked against it.
inline CodeSpec load_alist(std::istream& in, std::string name = "") {
    auto tok = detail::tokenize_alist(in);
    const long n = tok.next("the header");
    const long m = tok.next("the header");
    if (n <= 0 || m <= 0 || m >= n)
        throw AlistError("alist line 1: bad header N=" + std::to_string(n) + " M=" + std::to_string(m));
    const long cmax = tok.next("the maximum degrees");
    const long rmax = tok.next("the maximum degrees");
    if (cmax <= 0 || rmax <= 0 || cmax > m || rmax > n)
        throw AlistError("alist line " + std::to_string(tok.line()) + ": bad maximum degrees");

    std::vector<long> col_deg(n), row_deg(m);
    for (long i = 0; i < n; ++i) {
        col_deg[i] = tok.next("column degrees");
        if (col_deg[i] < 0 || col_deg[i] > cmax)
            throw AlistError("alist: column " + std::to_string(i + 1) + " degree " +
                             std::to_string(col_deg[i]) + " out of range");
    }
    for (long j = 0; j < m; ++j) {
        row_deg[j] = tok.next("row degrees");
        if (row_deg[j] < 0 || row_deg[j] > rmax)
            throw AlistError("alist: row " + std::to_string(j + 1) + " degree " +
                             std::to_string(row_deg[j]) + " out of range");
    }

    BitMatrix pcm(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        long listed = 0;
        for (long t = 0; t < cmax; ++t) {
            const int line = tok.line();
            const long j = tok.next("a column adjacency list");
            if (j == 0) continue;  // padding
            if (j < 1 || j > m)
                throw AlistError("alist line " + std::to_string(line) + ": column " + std::to_string(i + 1) +
                                 " lists check index " + std::to_string(j) + " out of range");
            if (pcm.get(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i)))
                throw AlistError("alist line " + std::to_string(line) + ": column " + std::to_string(i + 1) +
                                 " lists check " + std::to_string(j) + " twice");
            pcm.set(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i), true);
            ++listed;
        }
        if (listed != col_deg[i])
            throw AlistError("alist: column " + std::to_string(i + 1) + " declares degree " +
                             std::to_string(col_deg[i]) + " but lists " + std::to_string(listed) +
                             " neighbors");
    }

    BitMatrix from_rows(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long j = 0; j < m; ++j) {
        long listed = 0;
        for (long t = 0; t < rmax; ++t) {
            const int line = tok.line();
            const long i = tok.next("a row adjacency list");
            if (i == 0) continue;
            if (i < 1 || i > n)
                throw AlistError("alist line " + std::to_string(line) + ": row " + std::to_string(j + 1) +
                                 " lists variable index " + std::to_string(i) + " out of range");
            from_rows.set(static_cast<std::size_t>(j), static_cast<std::size_t>(i - 1), true);
            ++listed;
        }
        if (listed != row_deg[j])
            throw AlistError("alist: row " + std::to_string(j + 1) + " declares degree " +
                             std::to_string(row_deg[j]) + " but lists " + std::to_string(listed) +
                             " neighbors");
    }
    for (long j = 0; j < m; ++j)
        if (!std::ranges::equal(pcm.row(static_cast<std::size_t>(j)), from_rows.row(static_cast<std::size_t>(j))))
            throw AlistError("alist: row " + std::to_string(j + 1) +
                             " adjacency list disagrees with the column lists");

    return make_code_spec(std::move(pcm), std::move(name));
}

inline CodeSpec load_alist(const std::string& text, std::string name = "") {
    std::istringstream in(text);
    return load_alist(in, std::move(name));
}

}  // namespace mbposd
