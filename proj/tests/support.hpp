#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "toricdm/io.hpp"

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(TORICDM_DATA_DIR) + "/" + name; }

inline toricdm::StackyFan fan(const std::string& name) { return toricdm::build_fan(toricdm::read_document(data(name))); }

inline toricdm::SubdivisionPair pair(const std::string& name) {
    return toricdm::build_pair(toricdm::read_document(data(name)));
}

inline const std::vector<std::string>& complete_fans() {
    static const std::vector<std::string> names{"gale-two-rays.json", "z3-beta1.json", "z3-beta2.json", "mbar11.json",
                                                "p121.json",        "f2.json",       "line-3-2.json"};
    return names;
}

inline const std::vector<std::string>& subdivision_pairs() {
    static const std::vector<std::string> names{"p121-f2.json", "p112-resolution.json", "p123-resolution.json",
                                                "p1113-resolution.json"};
    return names;
}

/// Every bundled complete fan, including both sides of each subdivision pair.
inline std::vector<std::pair<std::string, toricdm::StackyFan>> all_fans() {
    std::vector<std::pair<std::string, toricdm::StackyFan>> out;
    for (const auto& n : complete_fans()) out.emplace_back(n, fan(n));
    for (const auto& n : subdivision_pairs()) {
        auto p = pair(n);
        out.emplace_back(n + " coarse", p.coarse);
        out.emplace_back(n + " fine", p.fine);
    }
    return out;
}

inline toricdm::IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    toricdm::IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

// Plain cofactor expansion; only for the small matrices used as oracles.
inline long long det_oracle(const std::vector<std::vector<long long>>& a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    long long total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<long long>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(row);
        }
        long long c = a[0][j] * det_oracle(minor);
        total += (j % 2 ? -c : c);
    }
    return total;
}

inline std::vector<std::vector<long long>> to_ll(const toricdm::IntegerMatrix& m) {
    std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_si();
    return a;
}

inline const std::vector<toricdm::IntegerVector> torsion_choices{{}, {2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 4}, {2, 6}, {3, 3}, {3, 6}};

/// Random beta whose cokernel is finite or (with finite = false) infinite.
inline toricdm::GroupHomomorphism random_beta(std::mt19937& rng, bool finite) {
    std::uniform_int_distribution<std::size_t> rank_d(finite ? 0 : 1, 3), pick(0, torsion_choices.size() - 1);
    std::uniform_int_distribution<long> entry(-4, 4);
    while (true) {
        std::size_t d = rank_d(rng);
        std::uniform_int_distribution<std::size_t> count(std::max<std::size_t>(d, 1), 4);
        std::size_t n = count(rng);
        toricdm::FgAbelianGroup G(d, torsion_choices[pick(rng)]);
        toricdm::GroupHomomorphism beta{G, {}};
        for (std::size_t k = 0; k < n; ++k) {
            toricdm::IntegerVector f(d), t;
            for (auto& x : f) x = entry(rng);
            if (!finite) f[d - 1] = 0;
            for (const auto& q : G.torsion()) t.push_back(toricdm::mod(toricdm::Integer(entry(rng)), q));
            beta.images.push_back(G.element(f, t));
        }
        if (toricdm::cokernel_is_finite(beta) == finite) return beta;
    }
}

/// Order of Z^m / (column span of M) via the gcd of maximal minors; 0 when infinite.
inline long long cokernel_order_oracle(const toricdm::IntegerMatrix& M) {
    std::size_t m = M.rows(), n = M.cols();
    if (m == 0) return 1;
    if (n < m) return 0;
    auto a = to_ll(M);
    long long g = 0;
    std::vector<std::size_t> pick(m);
    for (std::size_t k = 0; k < m; ++k) pick[k] = k;
    while (true) {
        std::vector<std::vector<long long>> sq(m, std::vector<long long>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) sq[i][k] = a[i][pick[k]];
        long long d = det_oracle(sq);
        g = std::gcd(g, d < 0 ? -d : d);
        std::size_t k = m;
        while (k > 0 && pick[k - 1] == n - m + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t t = k; t < m; ++t) pick[t] = pick[t - 1] + 1;
    }
    return g;
}

}  // namespace fixtures
