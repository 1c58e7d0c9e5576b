// Command-line front end: factor / verify / rank / det / pinv / solve /
// minors / bench over the int, rational and polyq rings.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or format error,
// 3 precondition violation (singular det, inconsistent solve, bad call).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lsu/bench.hpp"
#include "lsu/io.hpp"
#include "lsu/linalg.hpp"
#include "lsu/lsu.hpp"
#include "lsu/oracle.hpp"
#include "lsu/poly.hpp"

namespace {

using namespace lsu;
using io::json;

struct Options {
    std::string ring = "int";
    std::string mul = "schoolbook";
    std::uint64_t seed = 1;
    bool verify = false;
    bool dense_s = false;
    std::string out;
    std::string input;
    std::string second;   // factors file (verify) or b file (solve)
    unsigned pmax = 5;
};

MulStrategy strategy_of(const Options& opt) {
    if (opt.mul == "schoolbook") return MulStrategy::schoolbook;
    if (opt.mul == "strassen") return MulStrategy::strassen;
    throw ParseError("unknown --mul strategy '" + opt.mul + "'");
}

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

template <Domain R>
DMatrix<R> load_matrix(const std::string& path) {
    const std::string text = io::read_file(path);
    if constexpr (std::is_same_v<R, Zint>) {
        if (ends_with(path, ".csv")) return io::matrix_from_csv(text);
    }
    return io::matrix_from_json<R>(io::parse_json(text));
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty())
        std::cout << text << "\n";
    else
        io::write_file(opt.out, text + "\n");
}

template <Domain R>
int cmd_factor(const Options& opt) {
    const auto a = load_matrix<R>(opt.input);
    MulCtx ctx{strategy_of(opt), nullptr};
    const auto pf = lsu_factor_any(a, ctx);
    if (opt.verify) {
        const auto padded = pad_to_pow2(a).first;
        const auto rep = oracle::verify_bundle(padded, pf.factors);
        if (!rep.all_pass()) {
            std::cerr << "verification failed:\n" << io::report_to_json(rep).dump(2) << "\n";
            return 1;
        }
    }
    emit(opt, io::factors_to_json(pf, opt.dense_s).dump(2));
    return 0;
}

template <Domain R>
int cmd_verify(const Options& opt) {
    const auto a = load_matrix<R>(opt.input);
    const auto pf = io::factors_from_json<R>(io::parse_json(io::read_file(opt.second)));
    if (pf.dims.rows != a.rows() || pf.dims.cols != a.cols()) {
        std::cerr << "factor bundle was made for a " << pf.dims.rows << "x" << pf.dims.cols
                  << " matrix, input is " << a.rows() << "x" << a.cols() << "\n";
        return 1;
    }
    const auto padded = pad_to_pow2(a).first;
    const auto rep = oracle::verify_bundle(padded, pf.factors);
    std::cout << io::report_to_json(rep).dump(2) << "\n";
    if (!rep.all_pass()) {
        for (const auto& c : rep.checks)
            if (!c.pass) std::cerr << "failed check: " << c.name << "\n";
        return 1;
    }
    return 0;
}

template <Domain R>
int cmd_rank(const Options& opt) {
    const auto a = load_matrix<R>(opt.input);
    const auto pf = lsu_factor_any<R>(a, {strategy_of(opt), nullptr});
    emit(opt, std::to_string(rank_of(pf.factors)));
    return 0;
}

template <Domain R>
int cmd_det(const Options& opt) {
    const auto a = load_matrix<R>(opt.input);
    if (a.rows() != a.cols()) {
        std::cerr << "det needs a square matrix\n";
        return 3;
    }
    const auto pf = lsu_factor_any<R>(a, {strategy_of(opt), nullptr});
    if (pf.factors.rank != a.rows()) {
        std::cerr << "matrix is singular (rank " << pf.factors.rank << " of " << a.rows()
                  << "); det is 0 but det_of is defined for full rank only\n";
        return 3;
    }
    // alpha_r equals det(A) up to sign; see README
    emit(opt, to_text(det_of(pf.factors)));
    return 0;
}

template <Domain R>
int cmd_pinv(const Options& opt) {
    const auto a = load_matrix<R>(opt.input);
    const auto pf = lsu_factor_any<R>(a, {strategy_of(opt), nullptr});
    auto P = pseudo_inverse(pf.factors).P;
    // crop to the transposed original shape
    DMatrix<Fraction<R>> out(pf.dims.cols, pf.dims.rows);
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = P(i, j);
    emit(opt, io::frac_matrix_to_json(out).dump(2));
    return 0;
}

template <Domain R>
int cmd_solve(const Options& opt) {
    const auto a = load_matrix<R>(opt.input);
    const auto b = load_matrix<R>(opt.second);
    if (b.rows() != a.rows()) {
        std::cerr << "b has " << b.rows() << " rows, A has " << a.rows() << "\n";
        return 3;
    }
    const auto pf = lsu_factor_any<R>(a, {strategy_of(opt), nullptr});
    const std::size_t n = pf.factors.n;
    DMatrix<Fraction<R>> bp(n, b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) bp(i, j) = Fraction<R>(b(i, j));
    const auto x = solve(pf.factors, bp);
    if (!x) {
        std::cerr << "no solution: b is not in the column space of A\n";
        return 3;
    }
    DMatrix<Fraction<R>> out(pf.dims.cols, b.cols());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = (*x)(i, j);
    emit(opt, io::frac_matrix_to_json(out).dump(2));
    return 0;
}

template <Domain R>
int cmd_minors(const Options& opt) {
    const auto a = load_matrix<R>(opt.input);
    const auto pf = lsu_factor_any<R>(a, {strategy_of(opt), nullptr});
    const auto minors = recover_minors(pf.factors);
    json arr = json::array();
    for (const auto& m : minors) arr.push_back(io::RingCodec<R>::encode(m));
    emit(opt, arr.dump(2));
    return 0;
}

int cmd_bench(const Options& opt) {
    const auto rows = run_bench(opt.pmax, opt.seed);
    std::string csv = bench_csv(rows);
    if (opt.out.empty())
        std::cout << csv;
    else
        io::write_file(opt.out, csv);
    return 0;
}

template <Domain R>
int dispatch(const std::string& cmd, const Options& opt) {
    if (cmd == "factor") return cmd_factor<R>(opt);
    if (cmd == "verify") return cmd_verify<R>(opt);
    if (cmd == "rank") return cmd_rank<R>(opt);
    if (cmd == "det") return cmd_det<R>(opt);
    if (cmd == "pinv") return cmd_pinv<R>(opt);
    if (cmd == "solve") return cmd_solve<R>(opt);
    if (cmd == "minors") return cmd_minors<R>(opt);
    throw Error("unknown command " + cmd);
}

int dispatch_ring(const std::string& cmd, const Options& opt) {
    if (opt.ring == "int") return dispatch<Zint>(cmd, opt);
    if (opt.ring == "rational") return dispatch<Rat>(cmd, opt);
    if (opt.ring == "polyq") return dispatch<PolyQ>(cmd, opt);
    throw ParseError("unknown --ring '" + opt.ring + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact LSU factorization toolkit"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_input) {
        sub->add_option("--ring", opt.ring, "element ring: int|rational|polyq")
            ->check(CLI::IsMember({"int", "rational", "polyq"}));
        sub->add_option("--mul", opt.mul, "multiplication strategy: schoolbook|strassen")
            ->check(CLI::IsMember({"schoolbook", "strassen"}));
        sub->add_option("--out", opt.out, "write output to this path instead of stdout");
        if (needs_input) sub->add_option("input", opt.input, "input matrix file")->required();
    };

    auto* factor = app.add_subcommand("factor", "compute the LSU factor bundle");
    add_common(factor, true);
    factor->add_flag("--verify", opt.verify, "verify the bundle before emitting");
    factor->add_flag("--dense-s", opt.dense_s, "serialize S and Shat densely");

    auto* verify = app.add_subcommand("verify", "check a factor bundle against its matrix");
    add_common(verify, true);
    verify->add_option("factors", opt.second, "factor bundle file")->required();

    auto* rank = app.add_subcommand("rank", "rank via factorization");
    add_common(rank, true);
    auto* det = app.add_subcommand("det", "determinant (up to sign) of a full-rank matrix");
    add_common(det, true);
    auto* pinv = app.add_subcommand("pinv", "pseudoinverse P = W S M / alpha_r^2");
    add_common(pinv, true);

    auto* solve = app.add_subcommand("solve", "exact solve A x = b");
    add_common(solve, true);
    solve->add_option("b", opt.second, "right-hand side matrix file")->required();

    auto* minors = app.add_subcommand("minors", "recover the nested minor chain");
    add_common(minors, true);

    auto* bench = app.add_subcommand("bench", "operation-count scaling data (CSV)");
    bench->add_option("--pmax", opt.pmax, "largest size is 2^pmax");
    bench->add_option("--seed", opt.seed, "random seed");
    bench->add_option("--out", opt.out, "write CSV to this path");

    CLI11_PARSE(app, argc, argv);

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "bench") return cmd_bench(opt);
        return dispatch_ring(cmd, opt);
    } catch (const lsu::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const lsu::NotFullRank& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 3;
    } catch (const lsu::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
