#include "codedist/codefile.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "codedist/errors.hpp"

namespace codedist {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line l{number, {}};
        for (std::string t; ss >> t;) l.tokens.push_back(t);
        if (!l.tokens.empty()) out.push_back(std::move(l));
    }
    return out;
}

std::uint64_t to_uint(const Line& l, std::size_t idx, const char* what) {
    if (idx >= l.tokens.size()) throw ParseError(l.number, std::string("missing ") + what);
    const std::string& t = l.tokens[idx];
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9)
        throw ParseError(l.number, std::string("expected a non-negative integer for ") + what + ", got '" + t + "'");
    return std::stoull(t);
}

void expect_count(const Line& l, std::size_t n) {
    if (l.tokens.size() != n) throw ParseError(l.number, "unexpected trailing tokens");
}

}  // namespace

CodeFile parse_code(std::istream& in) {
    const auto lines = tokenize(in);
    std::size_t at = 0;
    auto next = [&](const char* keyword) -> const Line& {
        if (at >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number + 1, std::string("expected '") + keyword + "'");
        const Line& l = lines[at++];
        if (l.tokens[0] != keyword) throw ParseError(l.number, std::string("expected '") + keyword + "', got '" + l.tokens[0] + "'");
        return l;
    };

    const Line& metric_line = next("metric");
    if (metric_line.tokens.size() < 2) throw ParseError(metric_line.number, "missing metric name");
    const std::string metric = metric_line.tokens[1];
    std::vector<Block> blocks;
    if (metric == "hamming") {
        expect_count(metric_line, 3);
        blocks.push_back({1, static_cast<std::size_t>(to_uint(metric_line, 2, "n"))});
    } else if (metric == "rank") {
        expect_count(metric_line, 4);
        blocks.push_back({static_cast<std::size_t>(to_uint(metric_line, 2, "m")),
                          static_cast<std::size_t>(to_uint(metric_line, 3, "n"))});
    } else if (metric == "sumrank") {
        if (metric_line.tokens.size() < 4 || metric_line.tokens.size() % 2 != 0)
            throw ParseError(metric_line.number, "sumrank needs pairs m n");
        for (std::size_t t = 2; t < metric_line.tokens.size(); t += 2)
            blocks.push_back({static_cast<std::size_t>(to_uint(metric_line, t, "m")),
                              static_cast<std::size_t>(to_uint(metric_line, t + 1, "n"))});
    } else {
        throw ParseError(metric_line.number, "unknown metric '" + metric + "'");
    }
    for (const auto& b : blocks)
        if (b.m == 0 || b.n == 0) throw ParseError(metric_line.number, "block dimensions must be positive");

    const Line& field_line = next("field");
    expect_count(field_line, 3);
    const auto p = to_uint(field_line, 1, "p"), e = to_uint(field_line, 2, "e");
    FieldPtr field;
    try {
        field = Field::get(static_cast<unsigned>(p), static_cast<unsigned>(e));
    } catch (const Error& err) {
        throw ParseError(field_line.number, err.what());
    }

    std::optional<unsigned> ext_degree;
    FieldPtr entry_field = field;
    std::size_t width = 0;
    if (at < lines.size() && lines[at].tokens[0] == "linear") {
        const Line& l = lines[at++];
        expect_count(l, 3);
        if (l.tokens[1] != "extension") throw ParseError(l.number, "expected 'linear extension m'");
        const auto m = to_uint(l, 2, "m");
        if (metric != "rank") throw ParseError(l.number, "linear extension requires the rank metric");
        if (m != blocks[0].m) throw ParseError(l.number, "extension degree must equal the matrix row count m");
        if (e != 1) throw ParseError(l.number, "linear extension requires a prime base field");
        try {
            entry_field = Field::get(static_cast<unsigned>(p), static_cast<unsigned>(m));
        } catch (const Error& err) {
            throw ParseError(l.number, err.what());
        }
        ext_degree = static_cast<unsigned>(m);
        width = blocks[0].n;
    }

    Ambient ambient = [&] {
        if (metric == "hamming") return Ambient::hamming(field, blocks[0].n);
        if (metric == "rank") return Ambient::rank(field, blocks[0].m, blocks[0].n);
        return Ambient::sum_rank(field, blocks);
    }();
    if (!ext_degree) width = ambient.dim();

    const Line& gen_line = next("generator");
    expect_count(gen_line, 1);
    Matrix entries(entry_field, 0, width);
    std::vector<Elem> row(width);
    for (; at < lines.size(); ++at) {
        const Line& l = lines[at];
        if (l.tokens.size() != width)
            throw ParseError(l.number, "row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(width));
        for (std::size_t j = 0; j < width; ++j) {
            const auto v = to_uint(l, j, "field element");
            if (v >= entry_field->q()) throw ParseError(l.number, "entry " + l.tokens[j] + " is outside the field");
            row[j] = static_cast<Elem>(v);
        }
        entries.append_row(row);
    }

    if (ext_degree) return CodeFile{LinearCode::from_extension(field, entry_field, entries), entries, ext_degree};
    return CodeFile{LinearCode(ambient, entries), entries, std::nullopt};
}

CodeFile parse_code_text(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

CodeFile read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_code(in);
}

std::string format_code(const LinearCode& code) {
    std::ostringstream out;
    const auto& f = *code.field();
    out << "metric " << code.ambient().describe() << "\n";
    out << "field " << f.p() << " " << f.e() << "\n";
    const Matrix* g = &code.generator();
    if (const auto& ext = code.extension_view()) {
        out << "linear extension " << ext->degree << "\n";
        g = &ext->generator;
    }
    out << "generator\n";
    for (std::size_t r = 0; r < g->rows(); ++r) {
        for (std::size_t c = 0; c < g->cols(); ++c) out << (c ? " " : "") << (*g)(r, c);
        out << "\n";
    }
    return out.str();
}

void write_code_file(const LinearCode& code, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::invalid_argument, "cannot write " + path);
    out << format_code(code);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace codedist
