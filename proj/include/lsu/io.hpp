#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>

#include <json.hpp>

#include "lsu/lsu.hpp"
#include "lsu/oracle.hpp"
#include "lsu/poly.hpp"

namespace lsu {
namespace io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Ring tags and element encodings
// ---------------------------------------------------------------------------

template <Domain R>
struct RingCodec;

template <>
struct RingCodec<Zint> {
    static constexpr const char* name = "int";
    static json encode(const Zint& v) { return to_text(v); }
    static Zint decode(const json& j) {
        if (j.is_number_integer()) return Zint(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return Zint(j.get<std::string>());
        throw ParseError("integer entry must be a number or decimal string");
    }
};

template <>
struct RingCodec<Rat> {
    static constexpr const char* name = "rational";
    static json encode(const Rat& v) { return to_text(v); }
    static Rat decode(const json& j) {
        if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return Rat(j.get<std::string>());
        throw ParseError("rational entry must be a number or 'p/q' string");
    }
};

template <>
struct RingCodec<PolyQ> {
    static constexpr const char* name = "polyq";
    static json encode(const PolyQ& v) {
        json arr = json::array();
        for (const auto& c : v.coefficients()) arr.push_back(to_text(c));
        return arr;
    }
    static PolyQ decode(const json& j) {
        if (!j.is_array()) throw ParseError("polynomial entry must be a coefficient array");
        std::vector<Rat> c;
        c.reserve(j.size());
        for (const auto& e : j) c.push_back(RingCodec<Rat>::decode(e));
        return PolyQ(std::move(c));
    }
};

// Fractions over the three rings. For int the encoding is "p/q"; fractions of
// rationals collapse to a single rational; polynomial fractions keep an
// explicit num/den pair unless the denominator is one.
template <Domain R>
json frac_encode(const Fraction<R>& f) {
    if (f.den_is_one()) return RingCodec<R>::encode(f.num());
    json o;
    o["num"] = RingCodec<R>::encode(f.num());
    o["den"] = RingCodec<R>::encode(f.den());
    return o;
}

inline json frac_encode(const Fraction<Zint>& f) { return to_text(f); }

inline json frac_encode(const Fraction<Rat>& f) {
    return to_text(exact_div(f.num(), f.den()));
}

template <Domain R>
Fraction<R> frac_decode(const json& j) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den"))
            throw ParseError("fraction object needs 'num' and 'den'");
        return Fraction<R>(RingCodec<R>::decode(j.at("num")), RingCodec<R>::decode(j.at("den")));
    }
    return Fraction<R>(RingCodec<R>::decode(j));
}

template <>
inline Fraction<Zint> frac_decode<Zint>(const json& j) {
    if (j.is_number_integer()) return Fraction<Zint>(Zint(static_cast<long>(j.get<long long>())));
    if (!j.is_string()) throw ParseError("int fraction must be a 'p/q' string");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Fraction<Zint>(Zint(s));
    return Fraction<Zint>(Zint(s.substr(0, slash)), Zint(s.substr(slash + 1)));
}

template <>
inline Fraction<Rat> frac_decode<Rat>(const json& j) {
    return Fraction<Rat>(RingCodec<Rat>::decode(j));
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

template <Domain R>
json matrix_to_json(const DMatrix<R>& a) {
    json doc;
    doc["ring"] = RingCodec<R>::name;
    doc["rows"] = a.rows();
    doc["cols"] = a.cols();
    json data = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(RingCodec<R>::encode(a(i, j)));
        data.push_back(std::move(row));
    }
    doc["data"] = std::move(data);
    return doc;
}

// Fraction matrices over Z and Q are rational matrices; polynomial fractions
// get their own tag since entries may carry explicit num/den pairs.
template <Domain R>
constexpr const char* frac_ring_name() {
    if constexpr (std::is_same_v<R, PolyQ>)
        return "polyq_fraction";
    else
        return "rational";
}

template <Domain R>
json frac_matrix_to_json(const DMatrix<Fraction<R>>& a) {
    json doc;
    doc["ring"] = frac_ring_name<R>();
    doc["rows"] = a.rows();
    doc["cols"] = a.cols();
    json data = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(frac_encode(a(i, j)));
        data.push_back(std::move(row));
    }
    doc["data"] = std::move(data);
    return doc;
}

template <Domain R>
DMatrix<R> matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("data"))
        throw ParseError("matrix document needs rows, cols, data");
    if (doc.contains("ring") && doc.at("ring").get<std::string>() != RingCodec<R>::name)
        throw ParseError("matrix ring is '" + doc.at("ring").get<std::string>() + "', expected '" +
                         RingCodec<R>::name + "'");
    const auto rows = doc.at("rows").get<std::size_t>();
    const auto cols = doc.at("cols").get<std::size_t>();
    const auto& data = doc.at("data");
    if (!data.is_array() || data.size() != rows) throw ParseError("data row count mismatch");
    DMatrix<R> a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = data.at(i);
        if (!row.is_array() || row.size() != cols) throw ParseError("data column count mismatch");
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = RingCodec<R>::decode(row.at(j));
    }
    return a;
}

/// CSV (integer ring only): one row per line, comma-separated decimals.
inline DMatrix<Zint> matrix_from_csv(const std::string& text) {
    std::vector<std::vector<Zint>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Zint> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            const auto b = cell.find_first_not_of(" \t\r");
            const auto e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw ParseError("empty CSV cell");
            row.push_back(Zint(cell.substr(b, e - b + 1)));
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("ragged CSV rows");
        rows.push_back(std::move(row));
    }
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    DMatrix<Zint> a(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = rows[i][j];
    return a;
}

// ---------------------------------------------------------------------------
// Weighted permutations
// ---------------------------------------------------------------------------

template <Domain R>
json wperm_to_json(const WPerm<R>& s) {
    json doc;
    doc["n"] = s.size();
    json piv = json::array();
    for (const auto& p : s.pivots()) {
        json e;
        e["row"] = p.row;
        e["col"] = p.col;
        e["value"] = frac_encode(p.value);
        piv.push_back(std::move(e));
    }
    doc["pivots"] = std::move(piv);
    return doc;
}

template <Domain R>
WPerm<R> wperm_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("pivots"))
        throw ParseError("weighted permutation document needs n and pivots");
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<typename WPerm<R>::Pivot> piv;
    for (const auto& e : doc.at("pivots"))
        piv.push_back({e.at("row").get<std::size_t>(), e.at("col").get<std::size_t>(),
                       frac_decode<R>(e.at("value"))});
    return WPerm<R>(n, std::move(piv));
}

/// Dense rendering variant (--dense-s): a 2D array of fraction encodings.
template <Domain R>
json wperm_to_json_dense(const WPerm<R>& s) {
    json doc;
    doc["n"] = s.size();
    json data = json::array();
    const auto d = s.dense();
    for (std::size_t i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.size(); ++j) row.push_back(frac_encode(d(i, j)));
        data.push_back(std::move(row));
    }
    doc["dense"] = std::move(data);
    return doc;
}

template <Domain R>
WPerm<R> wperm_from_json_any(const json& doc) {
    if (doc.is_object() && doc.contains("dense")) {
        const auto n = doc.at("n").get<std::size_t>();
        std::vector<typename WPerm<R>::Pivot> piv;
        const auto& data = doc.at("dense");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto v = frac_decode<R>(data.at(i).at(j));
                if (!v.is_zero()) piv.push_back({i, j, std::move(v)});
            }
        return WPerm<R>(n, std::move(piv));
    }
    return wperm_from_json<R>(doc);
}

// ---------------------------------------------------------------------------
// Factor bundles
// ---------------------------------------------------------------------------

template <Domain R>
json factors_to_json(const PaddedFactors<R>& pf, bool dense_s = false) {
    const auto& f = pf.factors;
    json doc;
    doc["ring"] = RingCodec<R>::name;
    doc["n"] = f.n;
    doc["orig_rows"] = pf.dims.rows;
    doc["orig_cols"] = pf.dims.cols;
    doc["alpha"] = RingCodec<R>::encode(f.alpha_in);
    doc["alpha_r"] = RingCodec<R>::encode(f.alpha_r);
    doc["rank"] = f.rank;
    json po = json::array();
    for (const auto& [r, c] : f.pivot_order) po.push_back(json::array({r, c}));
    doc["pivot_order"] = std::move(po);
    auto dense = [](const DMatrix<R>& m) {
        json data = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(RingCodec<R>::encode(m(i, j)));
            data.push_back(std::move(row));
        }
        return data;
    };
    doc["L"] = dense(f.L);
    doc["U"] = dense(f.U);
    doc["M"] = dense(f.M);
    doc["W"] = dense(f.W);
    doc["S"] = dense_s ? wperm_to_json_dense(f.S) : wperm_to_json(f.S);
    doc["Shat"] = dense_s ? wperm_to_json_dense(f.Shat) : wperm_to_json(f.Shat);
    return doc;
}

template <Domain R>
PaddedFactors<R> factors_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n")) throw ParseError("not a factor bundle document");
    if (doc.contains("ring") && doc.at("ring").get<std::string>() != RingCodec<R>::name)
        throw ParseError("factor bundle ring mismatch");
    PaddedFactors<R> pf;
    auto& f = pf.factors;
    f.n = doc.at("n").get<std::size_t>();
    pf.dims.rows = doc.value("orig_rows", f.n);
    pf.dims.cols = doc.value("orig_cols", f.n);
    f.alpha_in = RingCodec<R>::decode(doc.at("alpha"));
    f.alpha_r = RingCodec<R>::decode(doc.at("alpha_r"));
    f.rank = doc.at("rank").get<std::size_t>();
    for (const auto& e : doc.at("pivot_order"))
        f.pivot_order.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    auto dense = [&](const json& data) {
        if (!data.is_array() || data.size() != f.n) throw ParseError("bad dense factor block");
        DMatrix<R> m(f.n, f.n);
        for (std::size_t i = 0; i < f.n; ++i)
            for (std::size_t j = 0; j < f.n; ++j) m(i, j) = RingCodec<R>::decode(data.at(i).at(j));
        return m;
    };
    f.L = dense(doc.at("L"));
    f.U = dense(doc.at("U"));
    f.M = dense(doc.at("M"));
    f.W = dense(doc.at("W"));
    f.S = wperm_from_json_any<R>(doc.at("S"));
    f.Shat = wperm_from_json_any<R>(doc.at("Shat"));
    return pf;
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

inline json report_to_json(const oracle::VerifyReport& rep) {
    json doc;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    doc["checks"] = std::move(checks);
    doc["all_pass"] = rep.all_pass();
    return doc;
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace io
} // namespace lsu
