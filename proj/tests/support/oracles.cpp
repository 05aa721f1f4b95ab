// Copyright 2026 The callgraph-metrics Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace cgm::oracle {

std::vector<std::vector<bool>> adjacency(const CallGraph& g, bool undirected) {
  const std::size_t n = g.n();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) {
    a[e.source][e.target] = true;
    if (undirected) a[e.target][e.source] = true;
  }
  return a;
}

std::vector<std::vector<int>> distances(const CallGraph& g, bool undirected) {
  const std::size_t n = g.n();
  const auto a = adjacency(g, undirected);
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = kUnreachable;
  return d;
}

namespace {

// Every geodesic from s to t as a vertex list.
std::vector<std::vector<std::size_t>> geodesics(const std::vector<std::vector<bool>>& a,
                                                const std::vector<std::vector<int>>& d,
                                                std::size_t s, std::size_t t) {
  std::vector<std::vector<std::size_t>> paths;
  if (d[s][t] <= 0) return paths;
  std::vector<std::size_t> path{s};
  std::function<void(std::size_t)> walk = [&](std::size_t u) {
    if (u == t) {
      paths.push_back(path);
      return;
    }
    for (std::size_t w = 0; w < a.size(); ++w) {
      if (!a[u][w] || d[w][t] == kUnreachable) continue;
      if (d[s][w] == d[s][u] + 1 && d[w][t] == d[s][t] - d[s][w]) {
        path.push_back(w);
        walk(w);
        path.pop_back();
      }
    }
  };
  walk(s);
  return paths;
}

}  // namespace

std::vector<double> betweenness(const CallGraph& g) {
  const std::size_t n = g.n();
  const auto a = adjacency(g, false);
  const auto d = distances(g, false);
  std::vector<double> b(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      const auto paths = geodesics(a, d, s, t);
      if (paths.empty()) continue;
      std::vector<double> through(n, 0.0);
      for (const auto& p : paths)
        for (std::size_t i = 1; i + 1 < p.size(); ++i) through[p[i]] += 1.0;
      for (std::size_t v = 0; v < n; ++v) b[v] += through[v] / static_cast<double>(paths.size());
    }
  }
  return b;
}

double betweenness_mass(const CallGraph& g) {
  const auto d = distances(g, false);
  double total = 0.0;
  for (std::size_t s = 0; s < g.n(); ++s)
    for (std::size_t t = 0; t < g.n(); ++t)
      if (s != t && d[s][t] > 0) total += d[s][t] - 1;  // every geodesic has d - 1 interior nodes
  return total;
}

std::vector<std::size_t> scc_min_labels(const CallGraph& g) {
  const std::size_t n = g.n();
  const auto d = distances(g, false);
  std::vector<std::size_t> label(n);
  for (std::size_t v = 0; v < n; ++v) {
    label[v] = v;
    for (std::size_t u = 0; u < v; ++u) {
      if (d[u][v] != kUnreachable && d[v][u] != kUnreachable) {
        label[v] = u;
        break;
      }
    }
  }
  return label;
}

std::vector<std::size_t> canonical_partition(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::size_t> first;
  std::vector<std::size_t> out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = first.emplace(labels[v], v);
    out[v] = it->second;
  }
  return out;
}

double zeta_direct(double s, std::uint64_t x_min, std::uint64_t terms) {
  long double sum = 0.0L;
  // Smallest terms first.
  for (std::uint64_t i = terms; i-- > 0;) {
    sum += std::pow(static_cast<long double>(x_min + i), -static_cast<long double>(s));
  }
  const long double edge = static_cast<long double>(x_min + terms) - 0.5L;
  sum += std::pow(edge, 1.0L - s) / (s - 1.0L);
  return static_cast<double>(sum);
}

ZetaTableSampler::ZetaTableSampler(double gamma, std::uint64_t x_min, std::uint64_t table_size)
    : gamma_(gamma), x_min_(x_min), norm_(zeta_direct(gamma, x_min)) {
  cdf_.resize(table_size);
  long double acc = 0.0L;
  for (std::uint64_t i = 0; i < table_size; ++i) {
    acc += std::pow(static_cast<long double>(x_min + i), -static_cast<long double>(gamma));
    cdf_[i] = static_cast<double>(acc / norm_);
  }
}

std::uint64_t ZetaTableSampler::operator()(Rng& rng) const {
  const double u = rng.uniform();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it != cdf_.end()) return x_min_ + static_cast<std::uint64_t>(it - cdf_.begin());
  // Beyond the table: continuous tail P[X > x] ~ x^(1-g) / ((g-1) norm).
  const double tail = 1.0 - u;
  const double x = std::pow(tail * (gamma_ - 1.0) * norm_, 1.0 / (1.0 - gamma_));
  return std::max<std::uint64_t>(x_min_ + cdf_.size(), static_cast<std::uint64_t>(x + 0.5));
}

std::vector<std::uint64_t> power_law_samples(double gamma, std::uint64_t x_min, std::size_t n,
                                             std::uint64_t seed) {
  static thread_local std::map<std::pair<double, std::uint64_t>, ZetaTableSampler> cache;
  auto it = cache.find({gamma, x_min});
  if (it == cache.end()) it = cache.emplace(std::pair{gamma, x_min}, ZetaTableSampler(gamma, x_min)).first;
  Rng rng(seed);
  std::vector<std::uint64_t> out(n);
  for (auto& x : out) x = it->second(rng);
  return out;
}

std::vector<std::uint64_t> geometric_samples(double q, std::uint64_t x_min, std::size_t n,
                                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint64_t> out(n);
  for (auto& x : out) {
    std::uint64_t j = 0;
    while (!rng.bernoulli(q)) ++j;
    x = x_min + j;
  }
  return out;
}

double grid_search_gamma(const std::vector<std::uint64_t>& values, std::uint64_t x_min, double lo,
                         double hi, double step) {
  long double log_sum = 0.0L;
  std::size_t n = 0;
  for (auto x : values) {
    if (x >= x_min) {
      log_sum += std::log(static_cast<long double>(x));
      ++n;
    }
  }
  // Normaliser: explicit terms up to x_min + kTerms, integral beyond.
  constexpr std::size_t kTerms = 2000;
  std::vector<double> logs(kTerms);
  for (std::size_t i = 0; i < kTerms; ++i) logs[i] = std::log(static_cast<double>(x_min + i));
  const double edge_log = std::log(static_cast<double>(x_min + kTerms) - 0.5);
  auto log_zeta = [&](double gamma) {
    double sum = 0.0;
    for (std::size_t i = kTerms; i-- > 0;) sum += std::exp(-gamma * logs[i]);
    sum += std::exp((1.0 - gamma) * edge_log) / (gamma - 1.0);
    return std::log(sum);
  };
  double best = lo;
  long double best_ll = -std::numeric_limits<long double>::infinity();
  const auto steps = static_cast<std::size_t>(std::llround((hi - lo) / step));
  for (std::size_t i = 0; i <= steps; ++i) {
    const double gamma = lo + step * static_cast<double>(i);
    const long double ll = -gamma * log_sum - static_cast<long double>(n) * log_zeta(gamma);
    if (ll > best_ll) {
      best_ll = ll;
      best = gamma;
    }
  }
  return best;
}

double dense_lambda1(const CallGraph& g) {
  const std::size_t n = g.n();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const Edge& e : g.edges()) {
    a(e.source, e.target) = 1.0;
    a(e.target, e.source) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

std::vector<std::optional<double>> local_clustering(const CallGraph& g) {
  const auto a = adjacency(g, true);
  const std::size_t n = g.n();
  std::vector<std::optional<double>> c(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nb;
    for (std::size_t u = 0; u < n; ++u)
      if (a[v][u]) nb.push_back(u);
    const std::size_t k = nb.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (a[nb[i]][nb[j]]) ++links;
    c[v] = static_cast<double>(links) / (static_cast<double>(k * (k - 1)) / 2.0);
  }
  return c;
}

std::optional<double> assortativity(const CallGraph& g, int mode) {
  const auto a = adjacency(g, true);
  auto degree = [&](std::size_t v) -> long double {
    if (mode == 0) return g.in_degree(static_cast<NodeId>(v));
    if (mode == 1) return g.out_degree(static_cast<NodeId>(v));
    return static_cast<long double>(std::count(a[v].begin(), a[v].end(), true));
  };
  long double sjk = 0, shalf = 0, ssq = 0;
  const auto edges = g.edges();
  for (const Edge& e : edges) {
    const long double j = degree(e.source), k = degree(e.target);
    sjk += j * k;
    shalf += 0.5L * (j + k);
    ssq += 0.5L * (j * j + k * k);
  }
  const long double m = static_cast<long double>(edges.size());
  const long double mean = shalf / m;
  const long double den = ssq / m - mean * mean;
  if (std::fabs(den) < 1e-15L) return std::nullopt;
  return static_cast<double>((sjk / m - mean * mean) / den);
}

std::optional<double> harmonic_ell(const CallGraph& g, bool undirected) {
  const auto d = distances(g, undirected);
  const std::size_t n = g.n();
  long double inv = 0.0L;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d[i][j] > 0) inv += 1.0L / d[i][j];
  if (inv == 0.0L) return std::nullopt;
  return static_cast<double>(static_cast<long double>(n * (n - 1)) / inv);
}

CallGraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng.bernoulli(p)) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
  return CallGraph::from_edges(std::move(names), std::move(edges), true);
}

}  // namespace cgm::oracle
