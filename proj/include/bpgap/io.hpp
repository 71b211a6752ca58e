#pragma once

// Plain-text formats. Vertices are 1-based on disk and 0-based in memory.
//
//   graph        p edge N M            then M lines  e u v
//   system       p bicliques N t K     then K lines  b u1 u2 ... : w1 w2 ...
//   charvec      p charvec n m         then m lines  v <n symbols from 0 1 *>
//   instance     p clis m E R C        then E lines  e u v, R lines  clique ...,
//                                      C lines  indep ..., R lines  row <C digits>
//   matrix       one line of 0/1 digits per row (no header)
//   certificate  certificate <claim> / param k v / verdict pass|fail / witness k v / end
//
// Lines starting with 'c ' (DIMACS comment) or '#' and blank lines are skipped,
// except inside a certificate. Every reader reports the offending line number.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bpgap/certificate.hpp"
#include "bpgap/clis.hpp"
#include "bpgap/graph.hpp"
#include "bpgap/oracles.hpp"

namespace bpgap::io {

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line split into tokens.
    std::optional<std::vector<std::string>> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            for (std::string tok; ss >> tok;) tokens.push_back(tok);
            if (tokens.empty() || tokens[0] == "c" || tokens[0][0] == '#') continue;
            return tokens;
        }
        ++line_;
        return std::nullopt;
    }

    // Next raw line, blank lines included.
    std::optional<std::string> raw() {
        std::string line;
        if (!std::getline(in_, line)) {
            ++line_;
            return std::nullopt;
        }
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    }

    std::vector<std::string> expect(const std::string& what) {
        auto t = next();
        if (!t) throw ParseError(line_, "unexpected end of input, expected " + what);
        return *t;
    }

    void expect_end() {
        if (next()) throw ParseError(line_, "trailing content");
    }

    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

inline std::size_t parse_count(const std::string& s, std::size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
        throw ParseError(line, "expected a non-negative integer, got '" + s + "'");
    return std::stoull(s);
}

inline Vertex parse_vertex(const std::string& s, std::size_t order, std::size_t line) {
    const std::size_t v = parse_count(s, line);
    if (v < 1 || v > order) throw ParseError(line, "vertex " + s + " out of range 1.." + std::to_string(order));
    return static_cast<Vertex>(v - 1);
}

inline void expect_header(const std::vector<std::string>& t, const std::string& kind, std::size_t fields,
                          std::size_t line) {
    if (t.size() != fields + 2 || t[0] != "p" || t[1] != kind)
        throw ParseError(line, "expected header 'p " + kind + "' with " + std::to_string(fields) + " fields");
}

inline void write_set(std::ostream& out, const VertexSet& s) {
    for (Vertex v : s) out << ' ' << v + 1;
}

inline VertexSet parse_set(const std::vector<std::string>& t, std::size_t from, std::size_t to, std::size_t order,
                           std::size_t line) {
    VertexSet s;
    for (std::size_t i = from; i < to; ++i) s.push_back(parse_vertex(t[i], order, line));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError(line, "repeated vertex");
    return s;
}

inline void read_edges(LineReader& r, Graph& g, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        const auto t = r.expect("edge line " + std::to_string(i + 1) + " of " + std::to_string(count));
        if (t.size() != 3 || t[0] != "e") throw ParseError(r.line(), "expected 'e u v'");
        const Vertex u = parse_vertex(t[1], g.order(), r.line());
        const Vertex v = parse_vertex(t[2], g.order(), r.line());
        if (u == v) throw ParseError(r.line(), "self-loop");
        if (g.adjacent(u, v)) throw ParseError(r.line(), "repeated edge");
        g.add_edge(u, v);
    }
}

} // namespace detail

inline void write_graph(std::ostream& out, const Graph& g) {
    const auto edges = g.edges();
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline Graph read_graph(std::istream& in) {
    detail::LineReader r(in);
    const auto h = r.expect("'p edge N M' header");
    detail::expect_header(h, "edge", 2, r.line());
    Graph g(detail::parse_count(h[2], r.line()));
    detail::read_edges(r, g, detail::parse_count(h[3], r.line()));
    r.expect_end();
    return g;
}

inline void write_system(std::ostream& out, const BicliqueSystem& sys) {
    out << "p bicliques " << sys.host_order << ' ' << sys.multiplicity_bound << ' ' << sys.parts.size() << '\n';
    for (const auto& b : sys.parts) {
        out << 'b';
        detail::write_set(out, b.left());
        out << " :";
        detail::write_set(out, b.right());
        out << '\n';
    }
}

inline BicliqueSystem read_system(std::istream& in) {
    detail::LineReader r(in);
    const auto h = r.expect("'p bicliques N t K' header");
    detail::expect_header(h, "bicliques", 3, r.line());
    BicliqueSystem sys{detail::parse_count(h[2], r.line()), {}, detail::parse_count(h[3], r.line())};
    const std::size_t count = detail::parse_count(h[4], r.line());
    for (std::size_t i = 0; i < count; ++i) {
        const auto t = r.expect("biclique line " + std::to_string(i + 1) + " of " + std::to_string(count));
        if (t[0] != "b") throw ParseError(r.line(), "expected 'b u... : w...'");
        const auto colon = std::find(t.begin(), t.end(), ":");
        if (colon == t.end()) throw ParseError(r.line(), "missing ':' between sides");
        const std::size_t mid = static_cast<std::size_t>(colon - t.begin());
        try {
            sys.parts.emplace_back(detail::parse_set(t, 1, mid, sys.host_order, r.line()),
                                   detail::parse_set(t, mid + 1, t.size(), sys.host_order, r.line()));
        } catch (const InvalidInput& e) {
            throw ParseError(r.line(), e.what());
        }
    }
    r.expect_end();
    return sys;
}

inline void write_charvecs(std::ostream& out, const std::vector<CharVector>& vecs, std::size_t n) {
    out << "p charvec " << n << ' ' << vecs.size() << '\n';
    for (const auto& v : vecs) {
        if (v.size() != n) throw InvalidInput("write_charvecs: vector length differs from n");
        out << "v " << v.entries << '\n';
    }
}

inline std::vector<CharVector> read_charvecs(std::istream& in) {
    detail::LineReader r(in);
    const auto h = r.expect("'p charvec n m' header");
    detail::expect_header(h, "charvec", 2, r.line());
    const std::size_t n = detail::parse_count(h[2], r.line());
    const std::size_t m = detail::parse_count(h[3], r.line());
    std::vector<CharVector> out;
    for (std::size_t i = 0; i < m; ++i) {
        const auto t = r.expect("vector line");
        const std::string body = t.size() == 2 ? t[1] : "";
        if (t[0] != "v" || t.size() > 2 || body.size() != n ||
            body.find_first_not_of("01*") != std::string::npos)
            throw ParseError(r.line(), "expected 'v' and " + std::to_string(n) + " symbols from 0 1 *");
        out.push_back(CharVector{body});
    }
    r.expect_end();
    return out;
}

inline void write_matrix(std::ostream& out, const BoolMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << static_cast<char>('0' + m.at(r, c));
        out << '\n';
    }
}

namespace detail {
inline std::vector<std::uint8_t> parse_row(const std::string& s, std::size_t line) {
    if (s.find_first_not_of("01") != std::string::npos) throw ParseError(line, "matrix rows hold only 0 and 1");
    std::vector<std::uint8_t> row;
    for (char ch : s) row.push_back(static_cast<std::uint8_t>(ch - '0'));
    return row;
}

inline BoolMatrix assemble(const std::vector<std::vector<std::uint8_t>>& rows, std::size_t cols) {
    BoolMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    return m;
}
} // namespace detail

// A 0-row matrix reads back as 0 × 0.
inline BoolMatrix read_matrix(std::istream& in) {
    detail::LineReader r(in);
    std::vector<std::vector<std::uint8_t>> rows;
    while (auto t = r.next()) {
        if (t->size() != 1) throw ParseError(r.line(), "expected one token of 0/1 digits");
        rows.push_back(detail::parse_row((*t)[0], r.line()));
        if (rows.back().size() != rows.front().size()) throw ParseError(r.line(), "ragged matrix row");
    }
    return detail::assemble(rows, rows.empty() ? 0 : rows.front().size());
}

inline void write_instance(std::ostream& out, const CLISInstance& inst) {
    const auto edges = inst.gamma.edges();
    out << "p clis " << inst.gamma.order() << ' ' << edges.size() << ' ' << inst.cliques.size() << ' '
        << inst.independents.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    for (const auto& c : inst.cliques) {
        out << "clique";
        detail::write_set(out, c);
        out << '\n';
    }
    for (const auto& i : inst.independents) {
        out << "indep";
        detail::write_set(out, i);
        out << '\n';
    }
    for (std::size_t r = 0; r < inst.matrix.rows(); ++r) {
        out << "row ";
        for (std::size_t c = 0; c < inst.matrix.cols(); ++c) out << static_cast<char>('0' + inst.matrix.at(r, c));
        out << '\n';
    }
}

inline CLISInstance read_instance(std::istream& in) {
    detail::LineReader r(in);
    const auto h = r.expect("'p clis m E R C' header");
    detail::expect_header(h, "clis", 4, r.line());
    CLISInstance inst;
    inst.gamma = Graph(detail::parse_count(h[2], r.line()));
    detail::read_edges(r, inst.gamma, detail::parse_count(h[3], r.line()));
    const std::size_t rows = detail::parse_count(h[4], r.line());
    const std::size_t cols = detail::parse_count(h[5], r.line());
    auto family = [&](const char* key, std::size_t count, std::vector<VertexSet>& dst) {
        for (std::size_t i = 0; i < count; ++i) {
            const auto t = r.expect(std::string(key) + " line");
            if (t[0] != key) throw ParseError(r.line(), std::string("expected '") + key + "'");
            dst.push_back(detail::parse_set(t, 1, t.size(), inst.gamma.order(), r.line()));
        }
    };
    family("clique", rows, inst.cliques);
    family("indep", cols, inst.independents);
    std::vector<std::vector<std::uint8_t>> entries;
    for (std::size_t i = 0; i < rows; ++i) {
        const auto t = r.expect("matrix row");
        const std::string body = t.size() == 2 ? t[1] : "";
        if (t[0] != "row" || t.size() > 2 || body.size() != cols)
            throw ParseError(r.line(), "expected 'row' and " + std::to_string(cols) + " digits");
        entries.push_back(detail::parse_row(body, r.line()));
    }
    r.expect_end();
    inst.matrix = detail::assemble(entries, cols);
    return inst;
}

namespace detail {
inline void check_field(const std::string& s, bool allow_space) {
    if (s.find('\n') != std::string::npos || (!allow_space && (s.empty() || s.find(' ') != std::string::npos)))
        throw InvalidInput("certificate field '" + s + "' cannot be serialized");
}
} // namespace detail

inline void write_certificate(std::ostream& out, const Certificate& cert) {
    detail::check_field(cert.claim, false);
    out << "certificate " << cert.claim << '\n';
    for (const auto& [k, v] : cert.parameters) {
        detail::check_field(k, false);
        detail::check_field(v, true);
        out << "param " << k << ' ' << v << '\n';
    }
    out << "verdict " << (cert.pass ? "pass" : "fail") << '\n';
    for (const auto& [k, v] : cert.witness) {
        detail::check_field(k, false);
        detail::check_field(v, true);
        out << "witness " << k << ' ' << v << '\n';
    }
    out << "end\n";
}

namespace detail {
inline std::optional<Certificate> read_one_certificate(LineReader& r) {
    std::optional<std::string> line;
    while ((line = r.raw()) && line->rfind("certificate ", 0) != 0) {
    }
    if (!line) return std::nullopt;
    Certificate cert;
    cert.claim = line->substr(12);
    bool verdict = false;
    auto split = [&](const std::string& rest) {
        const auto sp = rest.find(' ');
        if (sp == std::string::npos || sp == 0) throw ParseError(r.line(), "expected key and value");
        return std::make_pair(rest.substr(0, sp), rest.substr(sp + 1));
    };
    while (true) {
        line = r.raw();
        if (!line) throw ParseError(r.line(), "certificate not terminated by 'end'");
        if (*line == "end") break;
        if (line->rfind("param ", 0) == 0 && !verdict) {
            auto [k, v] = split(line->substr(6));
            cert.param(k, v);
        } else if (*line == "verdict pass" || *line == "verdict fail") {
            if (verdict) throw ParseError(r.line(), "duplicate verdict");
            verdict = true;
            cert.pass = *line == "verdict pass";
        } else if (line->rfind("witness ", 0) == 0 && verdict) {
            auto [k, v] = split(line->substr(8));
            cert.note(k, v);
        } else {
            throw ParseError(r.line(), "unexpected certificate line '" + *line + "'");
        }
    }
    if (!verdict) throw ParseError(r.line(), "certificate without verdict");
    return cert;
}
} // namespace detail

inline Certificate read_certificate(std::istream& in) {
    detail::LineReader r(in);
    auto cert = detail::read_one_certificate(r);
    if (!cert) throw ParseError(r.line(), "no certificate found");
    return *cert;
}

// Every certificate embedded in a report, in order; other lines are ignored.
inline std::vector<Certificate> read_certificates(std::istream& in) {
    detail::LineReader r(in);
    std::vector<Certificate> out;
    while (auto c = detail::read_one_certificate(r)) out.push_back(std::move(*c));
    return out;
}

template <typename T, typename Writer>
std::string to_text(const T& value, Writer write) {
    std::ostringstream out;
    write(out, value);
    return out.str();
}

template <typename Reader>
auto from_text(const std::string& text, Reader read) {
    std::istringstream in(text);
    return read(in);
}

template <typename Reader>
auto load(const std::string& path, Reader read) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read(in);
}

inline void save(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

} // namespace bpgap::io
