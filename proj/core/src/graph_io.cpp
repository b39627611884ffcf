#include "mdl/graph_io.hpp"

#include <charconv>

#include "mdl/error.hpp"

namespace mdl {

std::string encode_graph6(const SimpleGraph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bits = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | ((g.neighbors(j) >> i) & 1);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

SimpleGraph decode_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");

    const int n = text[0] - 63;
    if (n == 63) throw SizeOverflow("graph6 sizes above 62 are not supported");
    if (n == 0) throw ParseError("graph6 for the empty graph has no representation here");
    if (n > kMaxVertices) throw SizeOverflow("graph6 graph has " + std::to_string(n) + " vertices (max 32)");

    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t expected = (pairs + 5) / 6;
    if (text.size() - 1 != expected)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(expected) + " data bytes, got " +
                         std::to_string(text.size() - 1));

    SimpleGraph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    for (; k < expected * 6; ++k) {
        int byte = text[1 + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6 padding bits are not zero");
    }
    return g;
}

std::string format_edge_list(const SimpleGraph& g) {
    std::string out = "n=" + std::to_string(g.order()) + ";";
    bool first = true;
    for (const Edge& e : g.edges()) {
        out += first ? " " : ", ";
        out += std::to_string(e.u) + "-" + std::to_string(e.v);
        first = false;
    }
    return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
    return out;
}

int parse_nonneg(std::string_view item, std::string_view context) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0)
        throw ParseError("bad number '" + std::string(item) + "' in " + std::string(context));
    return value;
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (!s.starts_with("n=")) throw ParseError("edge list must start with 'n=<k>;'");
    auto semi = s.find(';');
    const int n = parse_nonneg(std::string_view(s).substr(2, semi == std::string::npos ? std::string::npos : semi - 2),
                               "vertex count");
    if (n < 1) throw ParseError("edge list needs at least one vertex");
    if (n > kMaxVertices) throw SizeOverflow("edge list has more than 32 vertices");
    SimpleGraph g(n);
    if (semi == std::string::npos) return g;

    std::string_view rest = std::string_view(s).substr(semi + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto dash = item.find('-');
        if (dash == std::string_view::npos) throw ParseError("edge '" + std::string(item) + "' lacks '-'");
        int u = parse_nonneg(item.substr(0, dash), "edge endpoint");
        int v = parse_nonneg(item.substr(dash + 1), "edge endpoint");
        if (u >= n || v >= n) throw ParseError("edge " + std::string(item) + " references a missing vertex");
        if (u == v) throw ParseError("self-loop " + std::string(item) + " in a simple graph");
        if (g.has_edge(u, v)) throw ParseError("duplicate edge " + std::string(item));
        g.add_edge(u, v);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) throw ParseError("trailing comma in edge list");
    }
    return g;
}

}  // namespace mdl
