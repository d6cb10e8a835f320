#include "ira/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ira/error.hpp"
#include "ira/number_format.hpp"

namespace ira {

ProfileSet build_profiles(const std::vector<SettingSummary>& results) {
  ProfileSet set;
  for (const auto m : kAllMethods) set.profiles.push_back({std::string(method_label(m)), {}});
  set.profiles.push_back({"K", {}});
  for (const auto& s : results) {
    const bool complete =
        s.k.has_value() && std::all_of(s.methods.begin(), s.methods.end(), [](const auto& m) { return m.mean.has_value(); });
    if (!complete) {
      ++set.dropped_settings;
      continue;
    }
    for (std::size_t i = 0; i < kMethodCount; ++i) set.profiles[i].values.push_back(*s.methods[i].mean);
    set.profiles[kMethodCount].values.push_back(*s.k);
  }
  return set;
}

DistanceMatrix distance_matrix(const std::vector<MethodProfile>& profiles) {
  if (profiles.size() < 2) throw InvalidInput("clustering needs at least two profiles");
  const std::size_t len = profiles.front().values.size();
  for (const auto& p : profiles) {
    if (p.values.size() != len) throw InvalidInput("profile '" + p.label + "' has a different length");
  }
  const std::size_t n = profiles.size();
  DistanceMatrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double ss = 0.0;
      for (std::size_t s = 0; s < len; ++s) {
        const double diff = profiles[i].values[s] - profiles[j].values[s];
        ss += diff * diff;
      }
      d[i][j] = d[j][i] = std::sqrt(ss);
    }
  }
  return d;
}

Dendrogram agglomerate(const DistanceMatrix& distances, const std::vector<std::string>& labels) {
  const std::size_t n = distances.size();
  if (n == 0 || labels.size() != n) throw InvalidInput("distance matrix and labels disagree in size");
  for (const auto& row : distances) {
    if (row.size() != n) throw InvalidInput("distance matrix is not square");
  }
  Dendrogram tree;
  tree.labels = labels;

  // Active clusters by position; d is kept in sync with `active`.
  DistanceMatrix d = distances;
  std::vector<std::size_t> active(n);
  std::vector<std::size_t> sizes(n, 1);
  std::iota(active.begin(), active.end(), 0);

  double last = 0.0;
  while (active.size() > 1) {
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        if (d[i][j] < d[bi][bj]) {
          bi = i;
          bj = j;
        }
      }
    }
    const double h = d[bi][bj];
    if (h < last - 1e-12 * std::max(1.0, std::abs(last))) {
      throw RuntimeFailure("average linkage produced a non-monotone merge height");
    }
    last = std::max(last, h);

    Merge m;
    m.left = active[bi];
    m.right = active[bj];
    m.height = h;
    m.node = n + tree.merges.size();
    m.size = sizes[bi] + sizes[bj];
    tree.merges.push_back(m);

    const double wi = static_cast<double>(sizes[bi]);
    const double wj = static_cast<double>(sizes[bj]);
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (k == bi || k == bj) continue;
      const double v = (wi * d[bi][k] + wj * d[bj][k]) / (wi + wj);
      d[bi][k] = d[k][bi] = v;
    }
    active[bi] = m.node;
    sizes[bi] = m.size;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
    sizes.erase(sizes.begin() + static_cast<std::ptrdiff_t>(bj));
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(bj));
    for (auto& row : d) row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  return tree;
}

std::vector<std::vector<std::string>> cut(const Dendrogram& tree, std::size_t k) {
  const std::size_t n = tree.labels.size();
  if (k < 1 || k > n) throw InvalidInput("cluster count must lie in [1, " + std::to_string(n) + "]");
  // parent pointers over leaves and internal nodes
  std::vector<std::size_t> parent(2 * n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n - k; ++i) {
    const auto& m = tree.merges[i];
    parent[find(m.left)] = m.node;
    parent[find(m.right)] = m.node;
  }
  std::vector<std::vector<std::string>> groups;
  std::vector<std::size_t> roots;
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    const auto r = find(leaf);
    const auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      groups.push_back({tree.labels[leaf]});
    } else {
      groups[static_cast<std::size_t>(it - roots.begin())].push_back(tree.labels[leaf]);
    }
  }
  return groups;
}

namespace {

void newick_node(const Dendrogram& t, std::size_t node, double parent_height, std::string& out) {
  const std::size_t n = t.labels.size();
  double h = 0.0;
  if (node < n) {
    out += t.labels[node];
  } else {
    const auto& m = t.merges[node - n];
    h = m.height;
    out += '(';
    newick_node(t, m.left, h, out);
    out += ',';
    newick_node(t, m.right, h, out);
    out += ')';
  }
  out += ':' + format_roundtrip(parent_height - h);
}

}  // namespace

std::string to_newick(const Dendrogram& tree) {
  const std::size_t n = tree.labels.size();
  if (n == 0) return ";";
  if (n == 1) return tree.labels[0] + ";";
  const auto& root = tree.merges.back();
  std::string out = "(";
  newick_node(tree, root.left, root.height, out);
  out += ',';
  newick_node(tree, root.right, root.height, out);
  out += ");";
  return out;
}

}  // namespace ira
