#include "permatch/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace permatch {

namespace {

struct Line {
    std::string text;
    int number;  // 1-based
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::string cur;
    int number = 1;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back({cur, number});
            cur.clear();
            ++number;
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back({cur, number});
    return lines;
}

void check_bytes(const Line& line) {
    for (std::size_t i = 0; i < line.text.size(); ++i) {
        const unsigned char ch = static_cast<unsigned char>(line.text[i]);
        if (ch == '\r')
            throw GraphParseError("carriage return not allowed", line.number,
                                  static_cast<int>(i) + 1);
        if (ch >= 128)
            throw GraphParseError("non-ASCII byte", line.number, static_cast<int>(i) + 1);
    }
}

bool is_comment(const Line& line) { return !line.text.empty() && line.text[0] == '#'; }

int parse_header(const Line& line) {
    if (line.text.empty()) throw GraphParseError("empty line", line.number, 1);
    long value = 0;
    for (std::size_t i = 0; i < line.text.size(); ++i) {
        const char ch = line.text[i];
        if (ch < '0' || ch > '9')
            throw GraphParseError("matrix size must be a positive integer", line.number,
                                  static_cast<int>(i) + 1);
        value = value * 10 + (ch - '0');
        if (value > 1000000)
            throw GraphParseError("matrix size out of range", line.number, 1);
    }
    if (value < 1) throw GraphParseError("matrix size must be a positive integer", line.number, 1);
    return static_cast<int>(value);
}

void parse_row(const Line& line, int n, int row, BipartiteGraph& bg) {
    const std::size_t want = static_cast<std::size_t>(2 * n - 1);
    for (std::size_t i = 0; i < line.text.size(); ++i) {
        const int col = static_cast<int>(i) + 1;
        if (i >= want) throw GraphParseError("extra characters after row entries", line.number, col);
        const char ch = line.text[i];
        if (i % 2 == 0) {
            if (ch != '0' && ch != '1')
                throw GraphParseError("row entry must be 0 or 1", line.number, col);
            bg.set(row, static_cast<int>(i / 2) + 1, ch == '1');
        } else if (ch != ' ') {
            throw GraphParseError("row entries must be separated by single spaces", line.number,
                                  col);
        }
    }
    if (line.text.size() < want)
        throw GraphParseError("row has too few entries", line.number,
                              static_cast<int>(line.text.size()) + 1);
}

}  // namespace

BipartiteGraph parse_graph_text(const std::string& text) {
    const std::vector<Line> lines = split_lines(text);
    int next_line = lines.empty() ? 1 : lines.back().number + 1;

    std::size_t idx = 0;
    auto next_content = [&]() -> const Line* {
        while (idx < lines.size()) {
            const Line& line = lines[idx];
            check_bytes(line);
            if (is_comment(line)) {
                ++idx;
                continue;
            }
            return &line;
        }
        return nullptr;
    };

    const Line* header = next_content();
    if (header == nullptr) throw GraphParseError("missing matrix size header", next_line, 1);
    const int n = parse_header(*header);
    ++idx;

    BipartiteGraph bg(n);
    for (int row = 1; row <= n; ++row) {
        const Line* line = next_content();
        if (line == nullptr)
            throw GraphParseError("expected " + std::to_string(n) + " rows, got " +
                                      std::to_string(row - 1),
                                  next_line, 1);
        if (line->text.empty()) throw GraphParseError("empty line", line->number, 1);
        parse_row(*line, n, row, bg);
        ++idx;
    }
    if (const Line* extra = next_content(); extra != nullptr)
        throw GraphParseError("unexpected content after matrix rows", extra->number, 1);
    return bg;
}

BipartiteGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

std::string write_graph_text(const BipartiteGraph& bg) {
    std::string out = std::to_string(bg.n()) + "\n";
    for (int row = 1; row <= bg.n(); ++row) {
        for (int col = 1; col <= bg.n(); ++col) {
            if (col > 1) out.push_back(' ');
            out.push_back(bg.has(row, col) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace permatch
