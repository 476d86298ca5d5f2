#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Reads the canonical edge-list format: UTF-8 text, `#`-prefixed comments,
/// one edge per line `src<ws>dst<ws>sign` with sign in {1, -1, ?}.
/// Malformed lines, duplicate ordered pairs, and self-loops raise ParseError
/// with the offending line number.
SignedDigraph load_edge_list(std::istream& in);
SignedDigraph load_edge_list_file(const std::filesystem::path& path);

/// Writes the canonical format using original node ids, edges in id order.
void write_edge_list(const SignedDigraph& g, std::ostream& out);
void write_edge_list_file(const SignedDigraph& g, const std::filesystem::path& path);

/// Holdout file: masked edges with their true signs, plus a header comment
/// recording the masking seed and fraction.
struct HoldoutRecord {
  std::int64_t src;
  std::int64_t dst;
  Sign true_sign;
};

struct HoldoutFile {
  double fraction = 0.0;
  std::uint64_t seed = 0;
  std::vector<HoldoutRecord> records;
};

void write_holdout(const SignedDigraph& g, const MaskResult& mask, double fraction,
                   std::uint64_t seed, std::ostream& out);
HoldoutFile read_holdout(std::istream& in);

}  // namespace signet
