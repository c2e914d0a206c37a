// Copyright 2026 The Newsrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "newsrank/models/random_forest.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <thread>

#include "newsrank/error.h"
#include "newsrank/random.h"
#include "newsrank/stats.h"

namespace newsrank {

// ---------------------------------------------------------------------------
// RegressionTree

RegressionTree::RegressionTree(std::vector<Node> nodes)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw ConfigError("regression tree without nodes");
  const auto count = static_cast<std::int32_t>(nodes_.size());
  for (const Node& n : nodes_) {
    if (!n.is_leaf() && (n.left <= 0 || n.left + 1 >= count)) {
      throw ConfigError("regression tree child index out of range");
    }
  }
}

double RegressionTree::predict(std::span<const double> x) const {
  std::int32_t i = 0;
  while (true) {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    if (n.is_leaf()) return n.value;
    i = x[static_cast<std::size_t>(n.feature)] <= n.value ? n.left : n.left + 1;
  }
}

std::size_t RegressionTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(),
                    [](const Node& n) { return n.is_leaf(); }));
}

int RegressionTree::depth() const {
  std::vector<int> depth(nodes_.size(), 0);
  int deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, depth[i]);
    if (!nodes_[i].is_leaf()) {
      const auto l = static_cast<std::size_t>(nodes_[i].left);
      depth[l] = depth[l + 1] = depth[i] + 1;
    }
  }
  return deepest;
}

namespace {

void write_number(std::ostream& out, double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  out.write(buf, r.ptr - buf);
}

}  // namespace

void RegressionTree::write_json(std::ostream& out) const {
  out << "{\"nodes\":[";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (i > 0) out << ',';
    if (n.is_leaf()) {
      out << "{\"feature\":-1,\"threshold\":null,\"left\":-1,\"right\":-1,"
             "\"leaf_value\":";
      write_number(out, n.value);
    } else {
      out << "{\"feature\":" << n.feature << ",\"threshold\":";
      write_number(out, n.value);
      out << ",\"left\":" << n.left << ",\"right\":" << n.left + 1
          << ",\"leaf_value\":null";
    }
    out << '}';
  }
  out << "]}";
}

RegressionTree RegressionTree::from_json(const nlohmann::ordered_json& j) {
  std::vector<Node> nodes;
  const auto& list = j.at("nodes");
  nodes.reserve(list.size());
  for (const auto& n : list) {
    Node node;
    node.feature = n.at("feature").get<std::int32_t>();
    if (node.is_leaf()) {
      node.value = n.at("leaf_value").get<double>();
    } else {
      node.value = n.at("threshold").get<double>();
      node.left = n.at("left").get<std::int32_t>();
      if (n.at("right").get<std::int32_t>() != node.left + 1) {
        throw ConfigError("regression tree children must be adjacent");
      }
    }
    nodes.push_back(node);
  }
  return RegressionTree(std::move(nodes));
}

// ---------------------------------------------------------------------------
// Tree induction

namespace {

// Per-feature ranks of the sample values into the sorted distinct values.
struct BinnedColumns {
  std::size_t n = 0;
  std::vector<std::vector<double>> uniques;
  std::vector<std::uint32_t> bins;  // feature-major

  std::uint32_t bin(std::size_t feature, std::uint32_t sample) const {
    return bins[feature * n + sample];
  }
};

BinnedColumns bin_columns(const ArDataset& data) {
  BinnedColumns b;
  b.n = data.size();
  b.uniques.resize(data.dim);
  b.bins.resize(data.dim * b.n);
  std::vector<double> column(b.n);
  for (std::size_t f = 0; f < data.dim; ++f) {
    for (std::size_t i = 0; i < b.n; ++i) column[i] = data.x[i * data.dim + f];
    std::vector<double> u = column;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    for (std::size_t i = 0; i < b.n; ++i) {
      b.bins[f * b.n + i] = static_cast<std::uint32_t>(
          std::lower_bound(u.begin(), u.end(), column[i]) - u.begin());
    }
    b.uniques[f] = std::move(u);
  }
  return b;
}

// Threshold between two adjacent distinct values; never equal to the upper
// one, so the lower value always routes left.
double midpoint(double lo, double hi) {
  const double mid = lo + (hi - lo) / 2.0;
  return mid < hi ? mid : lo;
}

class TreeBuilder {
 public:
  TreeBuilder(const ArDataset& data, const BinnedColumns& binned,
              std::size_t max_features, Rng& rng)
      : data_(data), binned_(binned), max_features_(max_features), rng_(rng) {
    features_.resize(data.dim);
    std::size_t widest = 0;
    for (const auto& u : binned.uniques) widest = std::max(widest, u.size());
    bin_count_.assign(widest, 0);
    bin_sum_.assign(widest, 0.0);
  }

  RegressionTree build(std::vector<std::uint32_t> samples) {
    idx_ = std::move(samples);
    centered_.resize(idx_.size());
    std::vector<RegressionTree::Node> nodes(1);
    struct Work {
      std::size_t node, begin, end;
    };
    std::vector<Work> stack{{0, 0, idx_.size()}};
    while (!stack.empty()) {
      const Work w = stack.back();
      stack.pop_back();
      const Split split = find_split(w.begin, w.end);
      if (!split.found) {
        nodes[w.node].feature = -1;
        nodes[w.node].value = leaf_value(w.begin, w.end);
        continue;
      }
      const auto mid = static_cast<std::size_t>(
          std::partition(idx_.begin() + static_cast<std::ptrdiff_t>(w.begin),
                         idx_.begin() + static_cast<std::ptrdiff_t>(w.end),
                         [&](std::uint32_t i) {
                           return value(i, split.feature) <= split.threshold;
                         }) -
          idx_.begin());
      const auto left = static_cast<std::int32_t>(nodes.size());
      nodes[w.node].feature = static_cast<std::int32_t>(split.feature);
      nodes[w.node].value = split.threshold;
      nodes[w.node].left = left;
      nodes.emplace_back();
      nodes.emplace_back();
      stack.push_back({static_cast<std::size_t>(left) + 1, mid, w.end});
      stack.push_back({static_cast<std::size_t>(left), w.begin, mid});
    }
    return RegressionTree(std::move(nodes));
  }

 private:
  struct Split {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0.0;
    double score = -std::numeric_limits<double>::infinity();
  };

  double value(std::uint32_t sample, std::size_t feature) const {
    return data_.x[static_cast<std::size_t>(sample) * data_.dim + feature];
  }

  // Pure nodes return their common target; otherwise the mean is summed in
  // ascending sample order so it does not depend on partition history.
  double leaf_value(std::size_t begin, std::size_t end) {
    const auto first = idx_.begin() + static_cast<std::ptrdiff_t>(begin);
    const auto last = idx_.begin() + static_cast<std::ptrdiff_t>(end);
    std::sort(first, last);
    const double y0 = data_.y[*first];
    if (std::all_of(first, last,
                    [&](std::uint32_t i) { return data_.y[i] == y0; })) {
      return y0;
    }
    double sum = 0.0;
    for (auto it = first; it != last; ++it) sum += data_.y[*it];
    return sum / static_cast<double>(end - begin);
  }

  Split find_split(std::size_t begin, std::size_t end) {
    Split best;
    const std::size_t n = end - begin;
    if (n < 2) return best;
    double sum = 0.0, lo = data_.y[idx_[begin]], hi = lo;
    for (std::size_t p = begin; p < end; ++p) {
      const double y = data_.y[idx_[p]];
      sum += y;
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
    if (lo == hi) return best;
    const double mean = sum / static_cast<double>(n);
    double node_sse = 0.0, total = 0.0;
    for (std::size_t p = begin; p < end; ++p) {
      const double c = data_.y[idx_[p]] - mean;
      centered_[p] = c;
      node_sse += c * c;
      total += c;
    }
    const double tolerance = 1e-10 * node_sse;

    const std::size_t dim = data_.dim;
    std::iota(features_.begin(), features_.end(), std::size_t{0});
    const bool shuffle = max_features_ < dim;
    std::size_t informative = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      if (shuffle) {
        std::uniform_int_distribution<std::size_t> pick(j, dim - 1);
        std::swap(features_[j], features_[pick(rng_)]);
      }
      if (scan_feature(features_[j], begin, end, total, tolerance, best)) {
        ++informative;
      }
      if (informative >= max_features_ && best.found) break;
    }
    return best;
  }

  // Updates `best` with the best threshold of one feature. Returns false when
  // the feature is constant inside the node.
  bool scan_feature(std::size_t f, std::size_t begin, std::size_t end,
                    double total, double tolerance, Split& best) {
    const std::size_t n = end - begin;
    const auto& uniques = binned_.uniques[f];
    const auto consider = [&](std::size_t n_left, double s_left,
                              std::uint32_t bin_lo, std::uint32_t bin_hi) {
      const double s_right = total - s_left;
      const double score =
          s_left * s_left / static_cast<double>(n_left) +
          s_right * s_right / static_cast<double>(n - n_left);
      if (!best.found || score > best.score + tolerance) {
        best.found = true;
        best.score = score;
        best.feature = f;
        best.threshold = midpoint(uniques[bin_lo], uniques[bin_hi]);
      }
    };

    if (uniques.size() <= 4 * n) {
      std::uint32_t bmin = std::numeric_limits<std::uint32_t>::max(), bmax = 0;
      for (std::size_t p = begin; p < end; ++p) {
        const std::uint32_t b = binned_.bin(f, idx_[p]);
        ++bin_count_[b];
        bin_sum_[b] += centered_[p];
        bmin = std::min(bmin, b);
        bmax = std::max(bmax, b);
      }
      const bool varies = bmin != bmax;
      std::size_t n_left = 0;
      double s_left = 0.0;
      std::uint32_t previous = bmin;
      for (std::uint32_t b = bmin; b <= bmax; ++b) {
        if (bin_count_[b] == 0) continue;
        if (varies && n_left > 0) consider(n_left, s_left, previous, b);
        n_left += bin_count_[b];
        s_left += bin_sum_[b];
        previous = b;
        bin_count_[b] = 0;
        bin_sum_[b] = 0.0;
      }
      return varies;
    }

    pairs_.clear();
    for (std::size_t p = begin; p < end; ++p) {
      pairs_.emplace_back(binned_.bin(f, idx_[p]), centered_[p]);
    }
    std::sort(pairs_.begin(), pairs_.end());
    if (pairs_.front().first == pairs_.back().first) return false;
    std::size_t n_left = 0;
    double s_left = 0.0;
    for (std::size_t p = 0; p < pairs_.size();) {
      const std::uint32_t b = pairs_[p].first;
      if (n_left > 0) consider(n_left, s_left, pairs_[p - 1].first, b);
      for (; p < pairs_.size() && pairs_[p].first == b; ++p) {
        ++n_left;
        s_left += pairs_[p].second;
      }
    }
    return true;
  }

  const ArDataset& data_;
  const BinnedColumns& binned_;
  std::size_t max_features_;
  Rng& rng_;

  std::vector<std::uint32_t> idx_;
  std::vector<double> centered_;  // parallel to idx_ within the active node
  std::vector<std::size_t> features_;
  std::vector<std::uint32_t> bin_count_;
  std::vector<double> bin_sum_;
  std::vector<std::pair<std::uint32_t, double>> pairs_;
};

}  // namespace

// ---------------------------------------------------------------------------
// RandomForest

RandomForest::RandomForest(std::size_t dim, std::vector<RegressionTree> trees)
    : dim_(dim), trees_(std::move(trees)) {
  if (trees_.empty()) throw ConfigError("random forest without trees");
}

RandomForest RandomForest::fit(const ArDataset& data,
                               const ForestOptions& options) {
  if (data.size() == 0) throw InputError("random forest fit needs samples");
  if (options.n_estimators < 1) {
    throw ConfigError("random forest needs at least one estimator");
  }
  if (data.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("too many samples for one forest");
  }
  const std::size_t max_features =
      options.max_features == 0
          ? std::max<std::size_t>(1, (data.dim + 2) / 3)
          : std::min(options.max_features, data.dim);
  const BinnedColumns binned = bin_columns(data);
  const auto n = static_cast<std::uint32_t>(data.size());

  std::vector<RegressionTree> trees(
      static_cast<std::size_t>(options.n_estimators));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t t = next++; t < trees.size(); t = next++) {
      Rng rng = substream(options.seed, t);
      std::vector<std::uint32_t> samples(n);
      if (options.bootstrap) {
        std::uniform_int_distribution<std::uint32_t> draw(0, n - 1);
        for (auto& s : samples) s = draw(rng);
      } else {
        std::iota(samples.begin(), samples.end(), 0u);
      }
      TreeBuilder builder(data, binned, max_features, rng);
      trees[t] = builder.build(std::move(samples));
    }
  };
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(trees.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return RandomForest(data.dim, std::move(trees));
}

void RandomForest::check_dim(std::span<const double> x) const {
  if (x.size() != dim_) {
    throw InputError("random forest expects " + std::to_string(dim_) +
                     " inputs, got " + std::to_string(x.size()));
  }
}

double RandomForest::predict(std::span<const double> x) const {
  check_dim(x);
  double sum = 0.0;
  for (const RegressionTree& t : trees_) sum += t.predict(x);
  return sum / static_cast<double>(trees_.size());
}

std::vector<double> RandomForest::predict_per_tree(
    std::span<const double> x) const {
  check_dim(x);
  std::vector<double> out;
  out.reserve(trees_.size());
  for (const RegressionTree& t : trees_) out.push_back(t.predict(x));
  return out;
}

std::pair<double, double> RandomForest::predict_interval(
    std::span<const double> x, double coverage) const {
  if (!(coverage > 0.0 && coverage < 1.0)) {
    throw DomainError("interval coverage must lie in (0, 1)");
  }
  std::vector<double> per_tree = predict_per_tree(x);
  std::sort(per_tree.begin(), per_tree.end());
  const double tail = (1.0 - coverage) / 2.0;
  return {quantile_sorted(per_tree, tail), quantile_sorted(per_tree, 1 - tail)};
}

// ---------------------------------------------------------------------------
// RandomForestArModel

RandomForestArModel::RandomForestArModel(int order, std::size_t static_dim,
                                         RandomForest forest,
                                         ForestOptions options)
    : order_(order),
      static_dim_(static_dim),
      forest_(std::move(forest)),
      options_(options) {
  if (order < 1) throw ConfigError("autoregressive order must be positive");
  if (forest_.dim() != ar_input_dim(order, static_dim)) {
    throw ConfigError("random forest input dimension does not match order " +
                      std::to_string(order) + " with " +
                      std::to_string(static_dim) + " static features");
  }
}

Forecast RandomForestArModel::forecast(std::span<const double> ts,
                                       std::span<const double> statics,
                                       int target_step,
                                       bool with_interval) const {
  check_inputs(ts, statics, target_step);
  Forecast f = predict_recursive(
      [this](std::span<const double> row) { return forest_.predict(row); },
      order_, ts, statics, target_step);
  if (!with_interval || f.values.empty()) return f;

  const std::size_t steps = f.values.size();
  std::vector<std::vector<double>> per_step(steps);
  for (const RegressionTree& tree : forest_.trees()) {
    const Forecast path = predict_recursive(
        [&tree](std::span<const double> row) { return tree.predict(row); },
        order_, ts, statics, target_step);
    for (std::size_t s = 0; s < steps; ++s) {
      per_step[s].push_back(path.values[s]);
    }
  }
  const double tail = (1.0 - coverage) / 2.0;
  for (auto& values : per_step) {
    std::sort(values.begin(), values.end());
    f.intervals.emplace_back(quantile_sorted(values, tail),
                             quantile_sorted(values, 1.0 - tail));
  }
  return f;
}

void RandomForestArModel::write_params(std::ostream& out) const {
  out << "{\"static_dim\":" << static_dim_
      << ",\"n_estimators\":" << forest_.trees().size()
      << ",\"max_features\":" << options_.max_features
      << ",\"bootstrap\":" << (options_.bootstrap ? "true" : "false")
      << ",\"seed\":" << options_.seed << ",\"coverage\":";
  write_number(out, coverage);
  out << ",\"trees\":[";
  for (std::size_t t = 0; t < forest_.trees().size(); ++t) {
    if (t > 0) out << ",\n";
    forest_.trees()[t].write_json(out);
  }
  out << "]}";
}

RandomForestArModel rf_fit(const ArDataset& data, int order,
                           std::size_t static_dim,
                           const ForestOptions& options) {
  if (data.dim != ar_input_dim(order, static_dim)) {
    throw InputError("autoregressive samples do not match the model inputs");
  }
  return RandomForestArModel(order, static_dim,
                             RandomForest::fit(data, options), options);
}

}  // namespace newsrank
