#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "codedist/code.hpp"

namespace codedist {

/// A parsed code file. `entries` is the generator exactly as written (over the extension field when
/// `linear extension m` is present), kept for partial-distance runs on non-canonical matrices.
struct CodeFile {
    LinearCode code;
    Matrix entries;
    std::optional<unsigned> extension_degree;
};

/// Reads the text code format; ParseError carries the 1-based line number.
CodeFile parse_code(std::istream& in);
CodeFile parse_code_text(const std::string& text);
CodeFile read_code_file(const std::string& path);

/// Canonical text: the RREF generator, or the extension-field generator for extension-view codes.
std::string format_code(const LinearCode& code);
void write_code_file(const LinearCode& code, const std::string& path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);
std::string hash_hex(std::uint64_t h);

}  // namespace codedist
