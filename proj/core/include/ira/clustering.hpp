#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ira/harness.hpp"

namespace ira {

struct MethodProfile {
  std::string label;
  std::vector<double> values;
};

struct ProfileSet {
  std::vector<MethodProfile> profiles;  ///< ten methods in canonical order, then "K"
  std::size_t dropped_settings = 0;     ///< settings with an undefined mean or K
};

/// Per-setting mean estimates of every method plus the benchmark K.
ProfileSet build_profiles(const std::vector<SettingSummary>& results);

using DistanceMatrix = std::vector<std::vector<double>>;

/// Euclidean distances. Needs >= 2 profiles of equal length (InvalidInput).
DistanceMatrix distance_matrix(const std::vector<MethodProfile>& profiles);

/// One agglomeration step. Leaves are nodes 0..n-1 and the k-th merge creates
/// node n+k.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;
  std::size_t node = 0;
  std::size_t size = 0;  ///< leaves under the new node
};

struct Dendrogram {
  std::vector<std::string> labels;
  std::vector<Merge> merges;
};

/// Average linkage (UPGMA). Among equally close pairs the one with the lowest
/// (row, column) position in the current distance matrix is merged first; a
/// merged cluster takes the row of its lower-positioned member.
Dendrogram agglomerate(const DistanceMatrix& distances, const std::vector<std::string>& labels);

/// Applies the first n - k merges. Groups are ordered by their first leaf and
/// list labels in leaf order. Throws InvalidInput unless 1 <= k <= n.
std::vector<std::vector<std::string>> cut(const Dendrogram& tree, std::size_t k);

/// Newick string with branch lengths equal to height differences.
std::string to_newick(const Dendrogram& tree);

}  // namespace ira
