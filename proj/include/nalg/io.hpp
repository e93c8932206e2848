#ifndef NALG_IO_HPP
#define NALG_IO_HPP

#include "nalg/algebra.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace nalg::io {

/// An algebra file: the algebra plus the optional display names carried by
/// catalog-built files. Reports always use e0..e_{n-1}; names only decorate
/// file output.
struct AlgebraDoc {
    Algebra algebra;
    std::vector<std::string> names; // empty when absent; else one per basis vector
};

/// Strict parser for the UTF-8 JSON schema
///   {"dim": n, "label"?: str, "names"?: [str x n],
///    "products": [{"i": int, "j": int, "coeffs": {"k": "p/q" | "p"}}]}.
/// Unspecified products are zero; duplicate (i, j) entries, indices out of
/// range, non-string coefficient values and "p/0" are rejected with the
/// offending field in the message. `origin` prefixes error messages.
AlgebraDoc parse_algebra_text(const std::string& text, const std::string& origin);

AlgebraDoc read_algebra_file(const std::filesystem::path& path);

/// Canonical serialization: key order dim, label, names, products; products
/// sorted by (i, j) and restricted to nonzero rows; coefficient keys in
/// ascending numeric order; values in lowest terms. Output of the writer
/// re-parses to an equal document and re-serializes to identical bytes.
std::string write_algebra_text(const AlgebraDoc& doc);

void write_algebra_file(const std::filesystem::path& path, const AlgebraDoc& doc);

} // namespace nalg::io

#endif
