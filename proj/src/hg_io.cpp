#include "turan/hg_io.hpp"

#include <fstream>
#include <sstream>

namespace turan {

namespace {

bool parse_int(const std::string& tok, long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stol(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

std::vector<std::string> split_fields(const std::string& line, int lineno) {
    // Single spaces only; leading/trailing or doubled spaces are format errors.
    if (!line.empty() && (line.front() == ' ' || line.back() == ' '))
        throw ParseError(lineno, "leading or trailing whitespace");
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '\t' || c == '\r')
            throw ParseError(lineno, "only single spaces may separate fields");
        if (c == ' ') {
            if (cur.empty()) throw ParseError(lineno, "doubled space");
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = 0, r = 0, m = 0;
    bool have_header = false;
    std::vector<VertexSet> edges;
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (line.empty()) throw ParseError(lineno, "blank line");
        auto fields = split_fields(line, lineno);
        if (!have_header) {
            if (fields.size() != 3) throw ParseError(lineno, "header must be \"n r m\"");
            if (!parse_int(fields[0], n) || !parse_int(fields[1], r) ||
                !parse_int(fields[2], m))
                throw ParseError(lineno, "header fields must be integers");
            if (n < 0 || n > VertexSet::kMaxUniverse)
                throw ParseError(lineno, "n must be in [0,128]");
            if (r < 1) throw ParseError(lineno, "r must be >= 1");
            if (m < 0) throw ParseError(lineno, "m must be >= 0");
            have_header = true;
            continue;
        }
        if (seen == m) throw ParseError(lineno, "more than m edge lines");
        if (static_cast<long>(fields.size()) != r)
            throw ParseError(lineno, "expected " + std::to_string(r) + " vertices, got " +
                                         std::to_string(fields.size()));
        VertexSet e(static_cast<int>(n));
        long prev = 0;
        for (const std::string& tok : fields) {
            long v;
            if (!parse_int(tok, v)) throw ParseError(lineno, "bad vertex \"" + tok + "\"");
            if (v < 1 || v > n)
                throw ParseError(lineno, "vertex " + std::to_string(v) +
                                             " outside [1," + std::to_string(n) + "]");
            if (v <= prev) throw ParseError(lineno, "vertices must be strictly increasing");
            prev = v;
            e.add(static_cast<int>(v - 1));
        }
        for (const VertexSet& other : edges)
            if (other == e)
                throw ParseError(lineno, "duplicate edge");
        edges.push_back(e);
        ++seen;
    }
    if (!have_header) throw ParseError(0, "missing header line");
    if (seen != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, got " +
                                     std::to_string(seen));
    return Hypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

Hypergraph read_hg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h) {
    out << h.vertex_count() << ' ' << h.uniformity() << ' ' << h.size() << '\n';
    for (const VertexSet& e : h.edges()) {
        bool first = true;
        for (int v = e.first(); v >= 0; v = e.next(v)) {
            if (!first) out << ' ';
            out << (v + 1);
            first = false;
        }
        out << '\n';
    }
}

std::string to_hg_string(const Hypergraph& h) {
    std::ostringstream os;
    write_hg(os, h);
    return os.str();
}

void write_hg_file(const std::string& path, const Hypergraph& h) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write_hg(out, h);
}

}  // namespace turan
