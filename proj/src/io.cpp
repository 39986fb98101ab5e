// SPDX-License-Identifier: Apache-2.0
#include "cochain/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cochain/error.hpp"

namespace cochain::io {

namespace {

// Non-comment, non-blank lines with their 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    return std::nullopt;
  }

  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::int64_t> parse_integers(const std::string& text,
                                         std::size_t line) {
  std::vector<std::int64_t> values;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::int64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{}) {
      parse_error(line, "expected an integer near '" +
                            std::string(p, std::min<std::size_t>(end - p, 16)) +
                            "'");
    }
    values.push_back(value);
    p = next;
  }
  return values;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for reading");
  }
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  }
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write to '" + path.string() + "' failed");
}

}  // namespace

SimpleGraph parse_edge_list(std::istream& in) {
  LineReader reader(in);
  auto header = reader.next();
  if (!header) parse_error(reader.number(), "missing \"n e\" header");
  const auto counts = parse_integers(*header, reader.number());
  if (counts.size() != 2 || counts[0] < 0 || counts[1] < 0 ||
      counts[0] > std::numeric_limits<VertexId>::max()) {
    parse_error(reader.number(), "header must be two nonnegative integers \"n e\"");
  }
  const auto n = static_cast<VertexId>(counts[0]);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(counts[1]));
  for (std::int64_t i = 0; i < counts[1]; ++i) {
    auto line = reader.next();
    if (!line) {
      parse_error(reader.number(), "expected " + std::to_string(counts[1]) +
                                       " edges, found " + std::to_string(i));
    }
    const auto ends = parse_integers(*line, reader.number());
    if (ends.size() != 2 || ends[0] < 0 || ends[1] < 0 || ends[0] >= counts[0] ||
        ends[1] >= counts[0]) {
      parse_error(reader.number(), "edge must be two vertex ids below " +
                                       std::to_string(n));
    }
    edges.push_back({static_cast<VertexId>(ends[0]), static_cast<VertexId>(ends[1])});
  }
  if (reader.next()) parse_error(reader.number(), "trailing data after edges");
  try {
    return SimpleGraph(n, edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

SimpleGraph read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  try {
    return parse_edge_list(in);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const SimpleGraph& g) {
  auto out = open_output(path);
  write_edge_list(out, g);
  finish_output(out, path);
}

ChainForm parse_chain_form(std::istream& in) {
  LineReader reader(in);
  auto k_line = reader.next();
  if (!k_line) parse_error(reader.number(), "missing k");
  const auto k_values = parse_integers(*k_line, reader.number());
  if (k_values.size() != 1 || k_values[0] < 0) {
    parse_error(reader.number(), "first line must be a single nonnegative k");
  }
  const auto rows = static_cast<std::size_t>(k_values[0]) + 1;

  auto vector_line = [&](std::string_view key) {
    auto line = reader.next();
    if (!line) parse_error(reader.number(), "missing \"" + std::string(key) + ":\" line");
    const auto start = line->find_first_not_of(" \t");
    const std::string prefix = std::string(key) + ":";
    if (line->compare(start, prefix.size(), prefix) != 0) {
      parse_error(reader.number(), "expected line starting with \"" + prefix + "\"");
    }
    auto values = parse_integers(line->substr(start + prefix.size()), reader.number());
    if (values.size() != rows) {
      parse_error(reader.number(), "expected " + std::to_string(rows) +
                                       " multiplicities, found " +
                                       std::to_string(values.size()));
    }
    return values;
  };
  auto m = vector_line("m");
  auto m_prime = vector_line("mp");
  if (reader.next()) parse_error(reader.number(), "trailing data after \"mp:\" line");

  try {
    return ChainForm(std::move(m), std::move(m_prime));
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

ChainForm read_chain_form(const std::filesystem::path& path) {
  auto in = open_input(path);
  try {
    return parse_chain_form(in);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

void write_chain_form(std::ostream& out, const ChainForm& form) {
  out << form.k() << "\nm:";
  for (Count v : form.m()) out << ' ' << v;
  out << "\nmp:";
  for (Count v : form.m_prime()) out << ' ' << v;
  out << '\n';
}

void write_chain_form(const std::filesystem::path& path, const ChainForm& form) {
  auto out = open_output(path);
  write_chain_form(out, form);
  finish_output(out, path);
}

FileFormat sniff_format(const std::filesystem::path& path) {
  auto in = open_input(path);
  LineReader reader(in);
  reader.next();
  auto second = reader.next();
  if (second) {
    const auto start = second->find_first_not_of(" \t");
    if (second->compare(start, 2, "m:") == 0) return FileFormat::ChainForm;
  }
  return FileFormat::EdgeList;
}

}  // namespace cochain::io
