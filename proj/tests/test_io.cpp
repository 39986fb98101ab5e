// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cochain/error.hpp"
#include "cochain/generators.hpp"
#include "cochain/io.hpp"
#include "support.hpp"

using namespace cochain;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalFault;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

SimpleGraph edges_from(const std::string& text) {
  std::istringstream in(text);
  return io::parse_edge_list(in);
}

ChainForm form_from(const std::string& text) {
  std::istringstream in(text);
  return io::parse_chain_form(in);
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("cochain-io-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("edge lists") {
  const SimpleGraph g = edges_from("# a path\n4 3\n0 1\n\n1 2  # middle\n2 3\n");
  CHECK(g == cochain::testing::path(4));

  std::ostringstream out;
  io::write_edge_list(out, g);
  CHECK(out.str() == "4 3\n0 1\n1 2\n2 3\n");
  CHECK(edges_from(out.str()) == g);
  CHECK(edges_from("0 0\n").vertex_count() == 0);
  CHECK(edges_from("3 0\n").edge_count() == 0);

  CHECK(code_of([] { edges_from(""); }) == ErrorCode::Parse);
  CHECK(code_of([] { edges_from("3\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { edges_from("3 2\n0 1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { edges_from("3 1\n0 3\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { edges_from("3 1\n0 1\n1 2\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { edges_from("3 1\n1 1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { edges_from("3 2\n0 1\n1 0\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { edges_from("3 1\n0 x\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { edges_from("-1 0\n"); }) == ErrorCode::Parse);
  CHECK(message_of([] { edges_from("# c\n3 1\n0 9\n"); }).rfind("line 3:", 0) == 0);
}

TEST_CASE("chain forms") {
  const ChainForm f = form_from("8\nm: 1 1 1 10 1 1 1 1 1\nmp: 1 1 1 1 1 10 1 1 1\n");
  CHECK(f == counterexample_instance());

  std::ostringstream out;
  io::write_chain_form(out, ChainForm({2, 1}, {1, 0}));
  CHECK(out.str() == "1\nm: 2 1\nmp: 1 0\n");
  CHECK(form_from(out.str()) == ChainForm({2, 1}, {1, 0}));
  CHECK(form_from("# empty\n0\nm: 0\nmp: 0\n") == ChainForm::empty());

  CHECK(code_of([] { form_from("1\nm: 1 1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { form_from("1\nm: 1\nmp: 1 1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { form_from("1\nmp: 1 1\nm: 1 1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { form_from("1\nm: 1 0\nmp: 1 1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { form_from("1\nm: 1 1\nmp: 0 1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { form_from("-2\nm: 1\nmp: 1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { form_from("0\nm: 1\nmp: 1\n1\n"); }) == ErrorCode::Parse);
  CHECK(message_of([] { form_from("1\nm: 1 1\nmp: 1\n"); }).rfind("line 3:", 0) == 0);
}

TEST_CASE("files and format sniffing") {
  TempDir dir;
  const auto form_path = dir.path / "f.chain";
  const auto graph_path = dir.path / "g.edges";
  const ChainForm f({1, 3, 2}, {2, 1, 1});
  io::write_chain_form(form_path, f);
  io::write_edge_list(graph_path, expand(f));
  CHECK(io::read_chain_form(form_path) == f);
  CHECK(io::read_edge_list(graph_path) == expand(f));
  CHECK(io::sniff_format(form_path) == io::FileFormat::ChainForm);
  CHECK(io::sniff_format(graph_path) == io::FileFormat::EdgeList);

  const auto missing = dir.path / "missing.txt";
  CHECK(code_of([&] { io::read_edge_list(missing); }) == ErrorCode::Io);
  CHECK(code_of([&] { io::sniff_format(missing); }) == ErrorCode::Io);
  CHECK(code_of([&] { io::write_chain_form(dir.path / "no" / "dir.txt", f); }) ==
        ErrorCode::Io);

  std::ofstream(dir.path / "bad.chain") << "1\nm: 1 1\nmp: 1\n";
  const std::string msg = message_of([&] { io::read_chain_form(dir.path / "bad.chain"); });
  CHECK(msg.find("bad.chain") != std::string::npos);
  CHECK(msg.find("line 3") != std::string::npos);
}
