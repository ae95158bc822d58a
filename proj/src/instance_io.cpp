#include "kcross/instance_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace kcross {

ParseError::ParseError(int line_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}

namespace {

struct Token {
    std::string text;
    int line;
};

std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> toks;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string t;
        while (ls >> t) toks.push_back({t, line});
    }
    return toks;
}

struct Cursor {
    const std::vector<Token>& toks;
    std::size_t pos = 0;
    int last_line = 0;

    bool at_end() const { return pos == toks.size(); }

    const Token& peek(const std::string& what) {
        if (pos >= toks.size())
            throw ParseError(last_line, "unexpected end of file, expected " + what);
        return toks[pos];
    }

    const Token& take(const std::string& what) {
        const Token& t = peek(what);
        last_line = t.line;
        ++pos;
        return t;
    }

    void keyword(const std::string& kw) {
        const Token& t = take("'" + kw + "'");
        if (t.text != kw)
            throw ParseError(t.line, "expected '" + kw + "', got '" + t.text + "'");
    }

    BigInt integer(const std::string& what) {
        const Token& t = take(what);
        const std::string& s = t.text;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        bool ok = i < s.size();
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) ok = false;
        if (!ok)
            throw ParseError(t.line, what + " must be an integer, got '" + s + "'");
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    }

    long long small(const std::string& what) {
        BigInt v = integer(what);
        if (v < -(BigInt(1) << 40) || v > (BigInt(1) << 40))
            throw ParseError(last_line, what + " out of range");
        return v.convert_to<long long>();
    }
};

} // namespace

Instance parse_instance(std::istream& in) {
    std::vector<Token> toks = tokenize(in);
    Cursor cur{toks};
    cur.keyword("kcross");
    cur.keyword("instance");
    cur.keyword("1");

    cur.keyword("k");
    long long k = cur.small("number of colors");
    if (k < 1) throw ParseError(cur.last_line, "number of colors must be positive");
    cur.keyword("n");
    long long n = cur.small("number of points");
    if (n < 1) throw ParseError(cur.last_line, "number of points must be positive");
    std::size_t un = static_cast<std::size_t>(n);

    Instance inst;
    cur.keyword("points");
    inst.points.pts.resize(un);
    for (std::size_t i = 0; i < un; ++i) {
        inst.points.pts[i].x = cur.integer("x coordinate");
        inst.points.pts[i].y = cur.integer("y coordinate");
    }

    cur.keyword("colors");
    inst.coloring = EdgeColoring(static_cast<int>(k), un);
    for (std::size_t idx = 0; idx < inst.coloring.color.size(); ++idx) {
        long long c = cur.small("edge color");
        if (c < 1 || c > k)
            throw ParseError(cur.last_line, "edge color out of range");
        inst.coloring.color[idx] = static_cast<int>(c);
    }

    const Token& section = cur.peek("'matching', 'details' or 'end'");
    if (section.text == "matching") {
        cur.keyword("matching");
        int section_line = cur.last_line;
        Matching m;
        m.target.resize(un);
        for (std::size_t p = 0; p < un; ++p) {
            long long q = cur.small("matching target");
            if (q < 0 || q >= n)
                throw ParseError(cur.last_line, "matching target out of range");
            m.target[p] = static_cast<std::size_t>(q);
        }
        try {
            m.validate(un);
        } catch (const std::invalid_argument& e) {
            throw ParseError(section_line, e.what());
        }
        inst.matching = std::move(m);
    }

    const Token& section2 = cur.peek("'details' or 'end'");
    if (section2.text == "details") {
        cur.keyword("details");
        std::vector<VertexDetails> det(un);
        for (std::size_t p = 0; p < un; ++p) {
            long long c = cur.small("sibling color");
            if (c < 1 || c > k)
                throw ParseError(cur.last_line, "sibling color out of range");
            det[p].c_prime = static_cast<int>(c);
            const Token& t1 = cur.take("first child target (L, R or S)");
            if (t1.text == "L") det[p].m1 = M1::Left;
            else if (t1.text == "R") det[p].m1 = M1::Right;
            else if (t1.text == "S") det[p].m1 = M1::Sibling;
            else throw ParseError(t1.line, "first child target must be L, R or S");
            const Token& t2 = cur.take("second child target (L or R)");
            if (t2.text == "L") det[p].m2 = M2::Left;
            else if (t2.text == "R") det[p].m2 = M2::Right;
            else throw ParseError(t2.line, "second child target must be L or R");
        }
        inst.details = std::move(det);
    }

    cur.keyword("end");
    if (!cur.at_end())
        throw ParseError(cur.peek("").line, "trailing content after 'end'");
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    return parse_instance(f);
}

void serialize_instance(const Instance& inst, std::ostream& out) {
    std::size_t n = inst.points.size();
    out << "kcross instance 1\n";
    out << "k " << inst.coloring.k << "\n";
    out << "n " << n << "\n";
    out << "points\n";
    for (const Point& p : inst.points.pts) out << p.x << " " << p.y << "\n";
    out << "colors\n";
    for (std::size_t i = 0; i < inst.coloring.color.size(); ++i) {
        out << inst.coloring.color[i];
        out << (i % 16 == 15 || i + 1 == inst.coloring.color.size() ? '\n' : ' ');
    }
    if (inst.matching) {
        out << "matching\n";
        for (std::size_t p = 0; p < n; ++p) {
            out << inst.matching->target[p];
            out << (p % 16 == 15 || p + 1 == n ? '\n' : ' ');
        }
    }
    if (inst.details) {
        out << "details\n";
        for (const VertexDetails& d : *inst.details) {
            out << d.c_prime << ' ';
            out << (d.m1 == M1::Left ? "L" : d.m1 == M1::Right ? "R" : "S");
            out << ' ' << (d.m2 == M2::Left ? "L" : "R") << "\n";
        }
    }
    out << "end\n";
}

void save_instance(const Instance& inst, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        serialize_instance(inst, f);
        f.flush();
        if (!f) {
            std::remove(tmp.c_str());
            throw std::runtime_error("write to '" + tmp + "' failed");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

} // namespace kcross
