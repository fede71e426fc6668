#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hardcore/graph.hpp"

namespace hardcore {

// One representative per isomorphism class, sorted by canonical label.
// Internal generation is capped at n = 7; beyond that ingest a graph6 file.
// The result is cached per order and shared, so treat it as read-only.
const std::vector<Graph>& enumerate_graphs(int n);

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter);

// All d-regular graphs on n vertices up to isomorphism (n <= 10), sorted by
// canonical label. Empty when parity forbids any.
std::vector<Graph> enumerate_regular_graphs(int n, int d);

// Newline-delimited graph6 lines; blank lines are skipped.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace hardcore
