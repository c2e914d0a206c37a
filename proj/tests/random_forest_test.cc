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
#include <random>
#include <sstream>

#include "doctest.h"
#include "newsrank/error.h"
#include "newsrank/stats.h"
#include "oracles/cart_oracle.h"

namespace newsrank {
namespace {

struct Toy {
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  ArDataset data;
};

Toy random_toy(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Toy t;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(dim);
    for (double& v : row) v = u(rng);
    const double y = std::sin(3 * row[0]) + row[1] * row[1] + 0.3 * u(rng);
    t.x.push_back(row);
    t.y.push_back(y);
    t.data.append(ArSample{row, y});
  }
  return t;
}

ForestOptions exact_options() {
  ForestOptions o;
  o.n_estimators = 1;
  o.bootstrap = false;
  o.max_features = 1000;
  o.threads = 1;
  return o;
}

TEST_CASE("one full-feature tree without bootstrap equals the CART oracle") {
  const Toy toy = random_toy(200, 5, 17);
  const RandomForest forest = RandomForest::fit(toy.data, exact_options());
  const oracle::CartOracle cart(toy.x, toy.y);
  CHECK(forest.trees()[0].leaf_count() == cart.leaves());
  for (const auto& row : toy.x) CHECK(forest.predict(row) == cart.predict(row));
  const Toy probe = random_toy(500, 5, 99);
  for (const auto& row : probe.x) {
    CHECK(forest.predict(row) == cart.predict(row));
  }
}

TEST_CASE("fully grown trees memorize distinct inputs") {
  const Toy toy = random_toy(200, 4, 3);
  const RandomForest forest = RandomForest::fit(toy.data, exact_options());
  double mse = 0.0;
  for (std::size_t i = 0; i < toy.x.size(); ++i) {
    const double e = forest.predict(toy.x[i]) - toy.y[i];
    mse += e * e;
  }
  CHECK(mse == 0.0);
}

TEST_CASE("constant targets predict the constant") {
  Toy toy = random_toy(100, 3, 5);
  for (double& y : toy.data.y) y = 4.25;
  ForestOptions o;
  o.n_estimators = 20;
  o.threads = 1;
  const RandomForest forest = RandomForest::fit(toy.data, o);
  for (const auto& row : toy.x) CHECK(forest.predict(row) == 4.25);
  const auto [lo, hi] = forest.predict_interval(toy.x[0]);
  CHECK(lo == 4.25);
  CHECK(hi == 4.25);
}

TEST_CASE("prediction is the arithmetic mean of the trees") {
  const Toy toy = random_toy(300, 6, 8);
  ForestOptions o;
  o.n_estimators = 37;
  o.seed = 4;
  o.threads = 1;
  const RandomForest forest = RandomForest::fit(toy.data, o);
  for (std::size_t i = 0; i < 50; ++i) {
    const auto per_tree = forest.predict_per_tree(toy.x[i]);
    double sum = 0.0;
    for (double v : per_tree) sum += v;
    CHECK(forest.predict(toy.x[i]) == sum / per_tree.size());
  }
}

TEST_CASE("hand-built trees predicting 1, 2, 3 average to 2") {
  std::vector<RegressionTree> trees;
  for (double v : {1.0, 2.0, 3.0}) {
    trees.emplace_back(std::vector<RegressionTree::Node>{{v, -1, -1}});
  }
  const RandomForest forest(2, std::move(trees));
  CHECK(forest.predict(std::vector<double>{0, 0}) == 2.0);
  CHECK_THROWS_AS(forest.predict(std::vector<double>{0}), InputError);
}

TEST_CASE("500-tree interval equals the sort-and-index percentile") {
  const Toy toy = random_toy(400, 5, 21);
  ForestOptions o;
  o.n_estimators = 500;
  o.seed = 2;
  const RandomForest forest = RandomForest::fit(toy.data, o);
  for (std::size_t i = 0; i < 10; ++i) {
    std::vector<double> p = forest.predict_per_tree(toy.x[i]);
    std::sort(p.begin(), p.end());
    // Position (n - 1) q for n = 500.
    const double lo = p[12] + 0.475 * (p[13] - p[12]);
    const double hi = p[486] + 0.525 * (p[487] - p[486]);
    const auto [ilo, ihi] = forest.predict_interval(toy.x[i], 0.95);
    CHECK(ilo == doctest::Approx(lo).epsilon(1e-14));
    CHECK(ihi == doctest::Approx(hi).epsilon(1e-14));
    CHECK(ilo <= ihi);
  }
}

TEST_CASE("fits are reproducible and independent of thread count") {
  const Toy toy = random_toy(300, 6, 12);
  ForestOptions o;
  o.n_estimators = 16;
  o.seed = 77;
  o.threads = 1;
  const RandomForest a = RandomForest::fit(toy.data, o);
  o.threads = 4;
  const RandomForest b = RandomForest::fit(toy.data, o);
  REQUIRE(a.trees().size() == b.trees().size());
  for (std::size_t t = 0; t < a.trees().size(); ++t) {
    std::ostringstream sa, sb;
    a.trees()[t].write_json(sa);
    b.trees()[t].write_json(sb);
    CHECK(sa.str() == sb.str());
  }
  o.seed = 78;
  const RandomForest c = RandomForest::fit(toy.data, o);
  std::ostringstream sa, sc;
  a.trees()[0].write_json(sa);
  c.trees()[0].write_json(sc);
  CHECK(sa.str() != sc.str());
}

TEST_CASE("tree JSON round-trips") {
  const Toy toy = random_toy(100, 3, 1);
  const RandomForest forest = RandomForest::fit(toy.data, exact_options());
  std::ostringstream out;
  forest.trees()[0].write_json(out);
  const RegressionTree back =
      RegressionTree::from_json(nlohmann::ordered_json::parse(out.str()));
  for (const auto& row : toy.x) {
    CHECK(back.predict(row) == forest.trees()[0].predict(row));
  }
}

TEST_CASE("forest AR model forecasts monotone values with intervals") {
  ArDataset data;
  for (int a = 1; a <= 40; ++a) {
    std::vector<std::int64_t> s;
    for (int t = 1; t <= 24; ++t) {
      s.push_back(static_cast<std::int64_t>(a * (1.0 - std::exp(-t / 4.0)) * 10));
    }
    data.append(make_ar_samples(s, 3, std::vector<double>{double(a % 2)}));
  }
  ForestOptions o;
  o.n_estimators = 30;
  o.seed = 3;
  const RandomForestArModel model = rf_fit(data, 3, 1, o);
  const std::vector<double> ts{50, 90, 120};
  const Forecast f = model.forecast(ts, std::vector<double>{1}, 24, true);
  REQUIRE(f.values.size() == 21);
  REQUIRE(f.intervals.size() == 21);
  double prev = ts.back();
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    CHECK(f.values[i] >= prev);
    CHECK(f.intervals[i].first <= f.intervals[i].second);
    prev = f.values[i];
  }
}

}  // namespace
}  // namespace newsrank
