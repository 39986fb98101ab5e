// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>

#include "cochain/chain_form.hpp"

namespace cochain::io {

// Edge list: "n e" then e lines "u v", 0-based. '#' starts a comment.
SimpleGraph parse_edge_list(std::istream& in);
SimpleGraph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const SimpleGraph& g);
void write_edge_list(const std::filesystem::path& path, const SimpleGraph& g);

// Chain form: "k", "m: a_0 ... a_k", "mp: b_0 ... b_k". '#' starts a comment.
ChainForm parse_chain_form(std::istream& in);
ChainForm read_chain_form(const std::filesystem::path& path);
void write_chain_form(std::ostream& out, const ChainForm& form);
void write_chain_form(const std::filesystem::path& path,
                      const ChainForm& form);

enum class FileFormat { EdgeList, ChainForm };

/// Looks at the first two non-comment lines: a line starting with "m:" after
/// a single integer means a chain form.
FileFormat sniff_format(const std::filesystem::path& path);

}  // namespace cochain::io
