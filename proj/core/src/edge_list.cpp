#include "signet/edge_list.hpp"

#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace signet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool next_token(std::string_view& rest, std::string_view& token) {
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
    rest.remove_prefix(1);
  if (rest.empty()) return false;
  std::size_t end = 0;
  while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
  token = rest.substr(0, end);
  rest.remove_prefix(end);
  return true;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::int64_t parse_id(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || ptr != token.end())
    fail(line_no, "expected an integer node id, got '" + std::string(token) + "'");
  return value;
}

Sign parse_sign(std::string_view token, std::size_t line_no) {
  if (token == "1" || token == "+1") return Sign::Positive;
  if (token == "-1") return Sign::Negative;
  if (token == "?") return Sign::Hidden;
  fail(line_no, "expected sign 1, -1 or ?, got '" + std::string(token) + "'");
}

struct ParsedLine {
  std::int64_t src, dst;
  Sign sign;
};

// Returns false for blank and comment lines.
bool parse_edge_line(std::string_view line, std::size_t line_no, ParsedLine& out) {
  std::string_view body = trim(line);
  if (body.empty() || body.front() == '#') return false;
  std::string_view rest = body, a, b, c, extra;
  if (!next_token(rest, a) || !next_token(rest, b) || !next_token(rest, c))
    fail(line_no, "expected 'src dst sign'");
  if (next_token(rest, extra)) fail(line_no, "trailing content after sign");
  out.src = parse_id(a, line_no);
  out.dst = parse_id(b, line_no);
  out.sign = parse_sign(c, line_no);
  return true;
}

}  // namespace

SignedDigraph load_edge_list(std::istream& in) {
  GraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  ParsedLine parsed;
  while (std::getline(in, line)) {
    ++line_no;
    if (!parse_edge_line(line, line_no, parsed)) continue;
    try {
      builder.add_edge(parsed.src, parsed.dst, parsed.sign);
    } catch (const GraphError& e) {
      fail(line_no, e.what());
    }
  }
  return std::move(builder).build();
}

SignedDigraph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return load_edge_list(in);
}

void write_edge_list(const SignedDigraph& g, std::ostream& out) {
  char buf[64];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::int64_t src = g.original_id(g.edge_source(e));
    std::int64_t dst = g.original_id(g.edge_target(e));
    int len = std::snprintf(buf, sizeof buf, "%" PRId64 " %" PRId64 " %s\n", src, dst,
                            to_string(g.edge_sign(e)));
    out.write(buf, len);
  }
}

void write_edge_list_file(const SignedDigraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path.string() + " for writing");
  write_edge_list(g, out);
}

void write_holdout(const SignedDigraph& g, const MaskResult& mask, double fraction,
                   std::uint64_t seed, std::ostream& out) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "# holdout fraction=%.17g seed=%" PRIu64 "\n", fraction, seed);
  out << buf;
  out << "# src dst true_sign\n";
  for (const MaskedEdge& h : mask.holdout) {
    std::int64_t src = g.original_id(g.edge_source(h.edge));
    std::int64_t dst = g.original_id(g.edge_target(h.edge));
    int len = std::snprintf(buf, sizeof buf, "%" PRId64 " %" PRId64 " %s\n", src, dst,
                            to_string(h.true_sign));
    out.write(buf, len);
  }
}

HoldoutFile read_holdout(std::istream& in) {
  HoldoutFile file;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  ParsedLine parsed;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (!header_seen && body.starts_with("# holdout")) {
      std::sscanf(line.c_str(), "# holdout fraction=%lg seed=%" SCNu64, &file.fraction,
                  &file.seed);
      header_seen = true;
      continue;
    }
    if (!parse_edge_line(line, line_no, parsed)) continue;
    if (parsed.sign == Sign::Hidden) fail(line_no, "holdout records must carry the true sign");
    file.records.push_back({parsed.src, parsed.dst, parsed.sign});
  }
  return file;
}

}  // namespace signet
