#include "ikcert/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace ikcert {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

int parse_label(std::string_view tok, int line_no)
{
    int value = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw GraphError("line " + std::to_string(line_no) + ": malformed vertex '" + std::string(tok) + "'");
    }
    if (value < 1 || value > Graph::kMaxLabel) {
        throw GraphError("line " + std::to_string(line_no) + ": vertex " + std::to_string(value) +
                         " outside 1.." + std::to_string(Graph::kMaxLabel));
    }
    return value;
}

} // namespace

ParsedGraph parse_edge_list(std::string_view text)
{
    ParsedGraph out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.starts_with("vertices:")) {
            for (auto tok : split_ws(line.substr(9))) {
                out.graph.add_vertex(parse_label(tok, line_no));
            }
            continue;
        }
        const auto toks = split_ws(line);
        if (toks.size() != 2) {
            throw GraphError("line " + std::to_string(line_no) + ": expected two vertices, got '" +
                             std::string(line) + "'");
        }
        const int u = parse_label(toks[0], line_no);
        const int v = parse_label(toks[1], line_no);
        if (u == v) {
            throw GraphError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
        }
        if (!out.graph.add_edge(u, v)) {
            ++out.duplicate_edges;
        }
    }
    return out;
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream os;
    bool isolated = false;
    for (int v : g.vertices()) {
        isolated = isolated || g.degree(v) == 0;
    }
    if (isolated) {
        os << "vertices:";
        for (int v : g.vertices()) {
            os << ' ' << v;
        }
        os << '\n';
    }
    for (const Edge& e : g.edges()) {
        os << e.u << ' ' << e.v << '\n';
    }
    return os.str();
}

Graph parse_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(">>graph6<<")) {
        text.remove_prefix(10);
    }
    if (text.empty()) {
        throw GraphError("graph6: empty input");
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw GraphError("graph6: invalid character");
        }
    }
    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) {
            throw GraphError("graph6: unsupported order encoding");
        }
        n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
        pos = 4;
    }
    if (n > Graph::kMaxLabel) {
        throw GraphError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(Graph::kMaxLabel));
    }
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (text.size() - pos != need) {
        throw GraphError("graph6: expected " + std::to_string(need) + " data bytes");
    }
    Graph g = Graph::edgeless(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                g.add_edge(i + 1, j + 1);
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g)
{
    const auto vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(vs[i], vs[j]) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    }
    return out;
}

bool looks_like_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(">>graph6<<")) {
        return true;
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            return false;
        }
    }
    return true;
}

} // namespace ikcert
