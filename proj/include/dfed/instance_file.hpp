#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "dfed/graph.hpp"
#include "dfed/patterns.hpp"
#include "dfed/phase1.hpp"

namespace dfed {

// Instance files are line based:
//
//   c <comment>
//   p dfed <n> <m> <k> <family>
//   e <u> <v>            (m lines, 0-based endpoints < n)
//
// The family token is a comma-separated list of "diamond", "<s>-diamond"
// and "k<t>". Vertex-cover inputs use the header "p vc <n> <m> <k>".

/// Throws ParseError with the offending line and column.
FamilySpec parse_family(std::string_view token);

/// Throws ParseError on malformed input, duplicate edges, self-loops,
/// out-of-range endpoints and edge-count mismatches.
Instance parse_instance(std::string_view text);

/// Vertices are renumbered to 0..n-1 in ascending id order; edges are
/// written in canonical order.
std::string serialize_instance(const Instance& inst);

struct VcInstance {
    Graph graph;
    int k = 0;
};

VcInstance parse_vc_instance(std::string_view text);
std::string serialize_vc_instance(const Graph& g, int k);

/// Relabels a graph onto 0..n-1 in ascending id order.
Graph compacted(const Graph& g);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace dfed
