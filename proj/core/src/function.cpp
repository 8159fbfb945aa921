#include "qbound/function.hpp"

#include <algorithm>
#include <set>

#include "qbound/errors.hpp"

namespace qbound {

int char_to_symbol(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

char symbol_to_char(int s) {
    return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10);
}

std::string word_to_string(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(symbol_to_char(s));
    return out;
}

Word word_from_string(std::string_view text, int n, int g) {
    if (static_cast<int>(text.size()) != n)
        throw ArityMismatch("word '" + std::string(text) + "' has length " +
                            std::to_string(text.size()) + ", expected " + std::to_string(n));
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        int s = char_to_symbol(c);
        if (s < 0) throw SyntaxError("bad symbol character '" + std::string(1, c) + "'");
        if (s >= g)
            throw SymbolOutOfRange("symbol '" + std::string(1, c) + "' >= alphabet size " +
                                   std::to_string(g));
        w.push_back(static_cast<Symbol>(s));
    }
    return w;
}

PartialFunction::PartialFunction(int n, int g, int h, std::map<Word, Symbol> table)
    : n_(n), g_(g), h_(h), table_(std::move(table)) {
    if (n_ < 1) throw ParameterOutOfRange("arity must be >= 1");
    if (g_ < 1 || g_ > kMaxAlphabet)
        throw ParameterOutOfRange("input alphabet size out of range [1, 36]");
    if (h_ < 1 || h_ > kMaxAlphabet)
        throw ParameterOutOfRange("output alphabet size out of range [1, 36]");
    if (table_.empty()) throw EmptyDomain("function has an empty domain");
    bool mixed = false;
    Symbol first = table_.begin()->second;
    for (const auto& [word, out] : table_) {
        if (static_cast<int>(word.size()) != n_)
            throw ArityMismatch("table key of wrong length");
        for (Symbol s : word)
            if (s >= g_) throw SymbolOutOfRange("table key symbol >= g");
        if (out >= h_) throw SymbolOutOfRange("table value >= h");
        if (out != first) mixed = true;
    }
    if (!mixed) throw ConstantFunction("constant functions are rejected");
}

bool PartialFunction::is_total() const {
    // g^n with saturation; |S| can never exceed the saturation cap.
    unsigned long long space = 1;
    const unsigned long long cap = 1ULL << 62;
    for (int i = 0; i < n_; ++i) {
        space *= static_cast<unsigned long long>(g_);
        if (space > cap) return false;
    }
    return table_.size() == space;
}

Symbol PartialFunction::value_at(const Word& x) const {
    auto it = table_.find(x);
    if (it == table_.end())
        throw WordNotInDomain("word '" + word_to_string(x) + "' not in domain");
    return it->second;
}

std::vector<int> diff_positions(const Word& x, const Word& y) {
    std::vector<int> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) out.push_back(static_cast<int>(i));
    return out;
}

SensitiveBlockFamily sensitive_blocks(const PartialFunction& f, const Word& x) {
    Symbol fx = f.value_at(x);
    // Every sensitive block arises from some y in S, so one pass over the
    // domain enumerates them all; dedup keeps the lexicographically first y.
    std::map<std::vector<int>, Word> seen;
    for (const auto& [y, fy] : f.table()) {
        if (fy == fx) continue;
        std::vector<int> diff = diff_positions(x, y);
        seen.emplace(std::move(diff), y);
    }
    SensitiveBlockFamily family;
    family.base = x;
    family.blocks.reserve(seen.size());
    for (auto& [indices, witness] : seen)
        family.blocks.push_back({Block{indices}, witness});
    return family;
}

std::vector<Word> inputs_with_output(const PartialFunction& f, int b) {
    if (b < 0 || b >= f.output_alphabet())
        throw SymbolOutOfRange("output symbol " + std::to_string(b) + " >= h");
    std::vector<Word> out;
    for (const auto& [word, value] : f.table())
        if (value == b) out.push_back(word);
    return out;
}

}  // namespace qbound
