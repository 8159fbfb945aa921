#include "qbound/function_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

// Strips comment and trailing CR; returns the significant part of the line.
std::string_view clean_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t") == std::string_view::npos;
}

int parse_header_field(std::string_view token, std::string_view key) {
    if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
        token[key.size()] != '=')
        throw SyntaxError("bad header field '" + std::string(token) + "', expected " +
                          std::string(key) + "=<int>");
    std::string_view digits = token.substr(key.size() + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw SyntaxError("bad integer in header field '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_spaces(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto space = s.find(' ', pos);
        if (space == std::string_view::npos) space = s.size();
        out.push_back(s.substr(pos, space - pos));
        pos = space + 1;
    }
    return out;
}

}  // namespace

PartialFunction parse_function(std::string_view text) {
    std::map<Word, Symbol> table;
    bool have_header = false;
    int n = 0, g = 0, h = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = clean_line(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (is_blank(line)) continue;

        if (!have_header) {
            auto tokens = split_spaces(line);
            if (tokens.size() != 5 || tokens[0] != "qfn" || tokens[1] != "1")
                throw SyntaxError("bad header line '" + std::string(line) +
                                  "', expected 'qfn 1 n=<N> g=<G> h=<H>'");
            n = parse_header_field(tokens[2], "n");
            g = parse_header_field(tokens[3], "g");
            h = parse_header_field(tokens[4], "h");
            if (n < 1) throw SyntaxError("header arity must be >= 1");
            if (g < 1 || g > kMaxAlphabet || h < 1 || h > kMaxAlphabet)
                throw SyntaxError("header alphabet sizes must be in [1, 36]");
            have_header = true;
            continue;
        }

        auto tokens = split_spaces(line);
        if (tokens.size() != 2)
            throw SyntaxError("bad entry line '" + std::string(line) +
                              "', expected '<word> <out>'");
        Word w = word_from_string(tokens[0], n, g);
        if (tokens[1].size() != 1)
            throw SyntaxError("output must be a single symbol in '" + std::string(line) + "'");
        int out = char_to_symbol(tokens[1][0]);
        if (out < 0) throw SyntaxError("bad output character in '" + std::string(line) + "'");
        if (out >= h)
            throw SymbolOutOfRange("output symbol '" + std::string(tokens[1]) +
                                   "' >= alphabet size " + std::to_string(h));
        auto [it, inserted] = table.emplace(std::move(w), static_cast<Symbol>(out));
        if (!inserted)
            throw DuplicateKey("duplicate input word '" + std::string(tokens[0]) + "'");
    }

    if (!have_header) throw SyntaxError("missing header line");
    if (table.empty()) throw EmptyDomain("function file defines no entries");
    return PartialFunction(n, g, h, std::move(table));
}

std::string serialize_function(const PartialFunction& f) {
    std::string out = "qfn 1 n=" + std::to_string(f.arity()) +
                      " g=" + std::to_string(f.input_alphabet()) +
                      " h=" + std::to_string(f.output_alphabet()) + "\n";
    for (const auto& [word, value] : f.table()) {
        out += word_to_string(word);
        out.push_back(' ');
        out.push_back(symbol_to_char(value));
        out.push_back('\n');
    }
    return out;
}

std::string serialize_archive(const std::vector<PartialFunction>& fns) {
    std::string out;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        if (i > 0) out += "---\n";
        out += serialize_function(fns[i]);
    }
    return out;
}

std::vector<PartialFunction> parse_archive(std::string_view text) {
    std::vector<PartialFunction> out;
    std::size_t pos = 0;
    std::string chunk;
    auto flush = [&] {
        if (chunk.find_first_not_of(" \t\r\n") != std::string::npos)
            out.push_back(parse_function(chunk));
        chunk.clear();
    };
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        std::string_view trimmed = line;
        if (!trimmed.empty() && trimmed.back() == '\r') trimmed.remove_suffix(1);
        if (trimmed == "---") {
            flush();
        } else {
            chunk.append(line);
            chunk.push_back('\n');
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    flush();
    return out;
}

PartialFunction read_function_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open function file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_function(buf.str());
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace qbound
