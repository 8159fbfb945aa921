#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qbound {

// Input words are fixed-length symbol sequences. std::vector's lexicographic
// ordering is the canonical iteration order used everywhere.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

inline constexpr int kMaxAlphabet = 36;  // symbols rendered as 0-9a-z

/// '0'->0 .. '9'->9, 'a'->10 .. 'z'->35; -1 for anything else.
int char_to_symbol(char c);
char symbol_to_char(int s);

std::string word_to_string(const Word& w);
/// Parses a word of expected length n over alphabet size g.
/// Throws ArityMismatch / SymbolOutOfRange / SyntaxError.
Word word_from_string(std::string_view text, int n, int g);

/// Non-empty set of positions, 0-based internally (reports are 1-based).
struct Block {
    std::vector<int> indices;  // sorted ascending

    auto operator<=>(const Block&) const = default;
};

/// One sensitive block together with a domain word that realizes it.
struct SensitiveBlock {
    Block block;
    Word witness;
};

struct SensitiveBlockFamily {
    Word base;
    std::vector<SensitiveBlock> blocks;  // deduplicated, sorted by index set
};

/// Truth table of a partial function f : S -> H, S subset of G^n.
/// Immutable after construction; construction validates every invariant:
/// keys of length n with symbols < g, values < h, non-empty, non-constant.
class PartialFunction {
public:
    PartialFunction(int n, int g, int h, std::map<Word, Symbol> table);

    int arity() const { return n_; }
    int input_alphabet() const { return g_; }
    int output_alphabet() const { return h_; }
    const std::map<Word, Symbol>& table() const { return table_; }
    std::size_t domain_size() const { return table_.size(); }

    /// |S| = g^n. Robust for arities whose full space overflows 64 bits.
    bool is_total() const;

    bool contains(const Word& x) const { return table_.count(x) != 0; }
    /// Throws WordNotInDomain.
    Symbol value_at(const Word& x) const;

    bool operator==(const PartialFunction& other) const {
        return n_ == other.n_ && g_ == other.g_ && h_ == other.h_ &&
               table_ == other.table_;
    }

private:
    int n_, g_, h_;
    std::map<Word, Symbol> table_;
};

/// All sensitive blocks of x, one witness each: { diff(x,y) : y in S, f(y) != f(x) }.
/// Throws WordNotInDomain.
SensitiveBlockFamily sensitive_blocks(const PartialFunction& f, const Word& x);

/// { x in S : f(x) = b }, in lexicographic order. Throws SymbolOutOfRange.
std::vector<Word> inputs_with_output(const PartialFunction& f, int b);

/// Positions where x and y differ (words must have equal length).
std::vector<int> diff_positions(const Word& x, const Word& y);

}  // namespace qbound
