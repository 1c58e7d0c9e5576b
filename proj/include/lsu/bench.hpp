#pragma once

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "lsu/lsu.hpp"
#include "lsu/randmat.hpp"

namespace lsu {

struct BenchRow {
    std::size_t n = 0;
    MulStrategy strategy = MulStrategy::schoolbook;
    OpCounter counts;
    double wall_ms = 0.0;
};

inline const char* strategy_name(MulStrategy s) {
    return s == MulStrategy::schoolbook ? "schoolbook" : "strassen";
}

/// Factors one seeded random integer matrix per size 2..2^pmax with both
/// multiplication strategies, tallying ring operations. The same matrix is
/// used for both strategies at a given size.
inline std::vector<BenchRow> run_bench(unsigned pmax, std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (unsigned p = 1; p <= pmax; ++p) {
        const std::size_t n = std::size_t{1} << p;
        Rng rng(seed + n);
        const auto a = random_matrix<Zint>(n, n, rng);
        for (MulStrategy st : {MulStrategy::schoolbook, MulStrategy::strassen}) {
            BenchRow row;
            row.n = n;
            row.strategy = st;
            MulCtx ctx{st, &row.counts};
            const auto t0 = std::chrono::steady_clock::now();
            (void)lsu_factor(a, Zint(1), ctx);
            const auto t1 = std::chrono::steady_clock::now();
            row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "n,strategy,mul_count,add_count,div_count,wall_ms\n";
    for (const auto& r : rows)
        out << r.n << ',' << strategy_name(r.strategy) << ',' << r.counts.mul_count << ','
            << r.counts.add_count << ',' << r.counts.div_count << ',' << r.wall_ms << '\n';
    return out.str();
}

} // namespace lsu
