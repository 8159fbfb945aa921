#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qbound/function.hpp"

namespace qbound {

/// Parses the function file format:
///   - '#' starts a comment to end of line; blank lines are skipped
///   - header line: "qfn 1 n=<N> g=<G> h=<H>" (single spaces, decimal)
///   - entry lines: "<word> <out>", word is N symbols from 0-9a-z, out one symbol
/// LF endings, optional trailing CR per line.
/// Throws SyntaxError, ArityMismatch, SymbolOutOfRange, DuplicateKey,
/// ConstantFunction, EmptyDomain.
PartialFunction parse_function(std::string_view text);

/// Emits header followed by entries in lexicographic word order, LF endings.
/// parse_function(serialize_function(f)) == f.
std::string serialize_function(const PartialFunction& f);

/// Multi-function archive: serialized functions separated by "---" lines.
std::string serialize_archive(const std::vector<PartialFunction>& fns);
std::vector<PartialFunction> parse_archive(std::string_view text);

/// Convenience wrappers. read_function_file throws Error on IO failure too.
PartialFunction read_function_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace qbound
