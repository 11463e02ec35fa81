// Copyright 2026 The RWA Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "../oracles/qp_oracle.hpp"
#include "../oracles/svm_fixtures.hpp"
#include "../support/test_support.hpp"

#include "rwa/data/toy.hpp"
#include "rwa/error.hpp"
#include "rwa/linsvm/cross_validation.hpp"
#include "rwa/linsvm/hypothesis.hpp"
#include "rwa/linsvm/model_io.hpp"
#include "rwa/linsvm/svm.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace rwa;

namespace {

Dataset pts(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) x(i, j++) = v;
    ++i;
  }
  return Dataset::from_dense(x);
}

SvmOptions hard(double C = 1e3) {
  SvmOptions o;
  o.C = C;
  o.tolerance = 1e-8;
  o.max_epochs = 100000;
  return o;
}

Dataset blobs(int classes, int per_class, double spread, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXd x(classes * per_class, 2);
  std::vector<int> y;
  for (int c = 0; c < classes; ++c) {
    const double angle = 2.0 * M_PI * c / classes;
    for (int i = 0; i < per_class; ++i) {
      x.row(c * per_class + i) << 10 * std::cos(angle) + spread * g(rng), 10 * std::sin(angle) + spread * g(rng);
      y.push_back(c);
    }
  }
  std::vector<double> values(static_cast<std::size_t>(classes));
  std::iota(values.begin(), values.end(), 0.0);
  return Dataset::from_dense(x).with_labels(y, values);
}

}  // namespace

TEST_SUITE("linsvm") {

TEST_CASE("symmetric separable pair") {
  const auto d = pts({{-1, 0}, {1, 0}});
  const std::vector<int> s{-1, 1};
  SvmOptions o;
  o.C = 10;
  const auto m = train_binary(d, s, o);
  CHECK(m.decision(Eigen::Vector2d(-1, 0)) < 0);
  CHECK(m.decision(Eigen::Vector2d(1, 0)) > 0);
  CHECK(m.weights(0) > 0);
  CHECK(std::abs(m.weights(1)) < 1e-12);
  CHECK(m.support_indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("four corners split by the x axis") {
  const auto d = pts({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}});
  const std::vector<int> s{1, 1, -1, -1};
  const auto m = train_binary(d, s, hard());
  CHECK(std::abs(m.weights(0)) < 1e-3);
  CHECK(std::abs(m.bias) < 1e-3);
  CHECK(m.weights(1) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(geometric_margin(m) == doctest::Approx(1.0).epsilon(1e-3));

  Eigen::MatrixXd x(4, 2);
  x << 1, 1, -1, 1, 1, -1, -1, -1;
  const auto o = oracle::brute_force_svm(x, Eigen::Vector4d(1, 1, -1, -1), 1e3, 1.0);
  CHECK(1.0 / o.w.head(2).norm() == doctest::Approx(geometric_margin(m)).epsilon(1e-3));
}

TEST_CASE("scaling the separable data by c scales the margin by c") {
  for (double c : {2.0, 3.5}) {
    Eigen::MatrixXd x(4, 2);
    x << 1, 1, -1, 1, 1, -1, -1, -1;
    x *= c;
    const std::vector<int> s{1, 1, -1, -1};
    const auto m = train_binary(Dataset::from_dense(x), s, hard());
    const auto o = oracle::brute_force_svm(x, Eigen::Vector4d(1, 1, -1, -1), 1e3, 1.0);
    CHECK(geometric_margin(m) == doctest::Approx(c).epsilon(1e-3));
    CHECK(1.0 / o.w.head(2).norm() == doctest::Approx(c).epsilon(1e-9));
  }
}

TEST_CASE("w = (2, 0) has margin 0.5; zero weights have none") {
  SvmModel m;
  m.weights = Eigen::Vector2d(2, 0);
  CHECK(geometric_margin(m) == 0.5);
  m.weights.setZero();
  CHECK_THROWS_AS(geometric_margin(m), ContractError);
}

TEST_CASE("input contracts") {
  const auto d = pts({{-1}, {1}});
  CHECK_THROWS_AS(train_binary(d, std::vector<int>{1, 1}, {}), ContractError);
  CHECK_THROWS_AS(train_binary(d, std::vector<int>{1, 0}, {}), ContractError);
  CHECK_THROWS_AS(train_binary(d, std::vector<int>{1}, {}), DimensionError);
  SvmOptions o;
  o.C = 0;
  CHECK_THROWS_AS(train_binary(d, std::vector<int>{-1, 1}, o), ContractError);
}

TEST_CASE("oracle equivalence, dual feasibility and primal-dual consistency on small fixtures") {
  int checked = 0;
  for (const auto& f : oracle::small_svm_fixtures(2)) {
    const auto data = f.dataset();
    const auto signs = f.signs();
    SvmOptions o;
    o.C = f.C;
    o.seed = f.id;
    const auto m = train_binary(data, signs, o);
    const double ours = primal_objective(m, data, signs);
    const double best = oracle::brute_force_svm(f.x, f.y, f.C, 1.0).objective;
    CHECK_MESSAGE(std::abs(ours - best) <= 1e-4 * best, "fixture " << f.id << ": " << ours << " vs " << best);
    CHECK((m.dual_coefs.array() >= 0.0).all());
    CHECK((m.dual_coefs.array() <= f.C).all());
    const auto w = weights_from_duals(m, data, signs);
    CHECK((w - m.weights).norm() <= 1e-8 * std::max(1.0, m.weights.norm()));
    std::vector<std::size_t> sv;
    for (Eigen::Index i = 0; i < m.dual_coefs.size(); ++i) {
      if (m.dual_coefs(i) > support_tolerance(f.C)) sv.push_back(static_cast<std::size_t>(i));
    }
    CHECK(sv == m.support_indices);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("training is bit-reproducible for a fixed seed") {
  const auto d = blobs(2, 30, 4.0, 3);
  std::vector<int> s;
  for (int y : d.labels()) s.push_back(y ? 1 : -1);
  SvmOptions o;
  o.seed = 11;
  const auto a = train_binary(d, s, o), b = train_binary(d, s, o);
  CHECK(a.weights == b.weights);
  CHECK(a.bias == b.bias);
  CHECK(a.dual_coefs == b.dual_coefs);
}

TEST_CASE("retraining on the support vectors alone reproduces the decision function") {
  const auto d = blobs(2, 40, 5.0, 9);
  std::vector<int> s;
  for (int y : d.labels()) s.push_back(y ? 1 : -1);
  const auto full = train_binary(d, s, hard(1.0));
  REQUIRE(full.support_indices.size() < d.n_examples());
  std::vector<int> sv_signs;
  for (auto i : full.support_indices) sv_signs.push_back(s[i]);
  const auto reduced = train_binary(d.select(full.support_indices), sv_signs, hard(1.0));
  CHECK((reduced.weights - full.weights).norm() <= 1e-4 * full.weights.norm());
  CHECK(std::abs(reduced.bias - full.bias) <= 1e-4 * std::max(1.0, std::abs(full.bias)));
  for (double gx = -12; gx <= 12; gx += 1.5) {
    for (double gy = -12; gy <= 12; gy += 1.5) {
      const Eigen::Vector2d p(gx, gy);
      const double a = full.decision(p), b = reduced.decision(p);
      CHECK(std::abs(a - b) <= 1e-3 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("a duplicated interior point leaves the weights unchanged") {
  const auto d = pts({{-3, 0}, {-1, 0}, {1, 0}, {3, 0}, {-5, 1}});
  const std::vector<int> s{-1, -1, 1, 1, -1};
  const auto base = train_binary(d, s, hard(10));
  const std::vector<std::size_t> rows{0, 1, 2, 3, 4, 4};
  const auto more = train_binary(d.select(rows), std::vector<int>{-1, -1, 1, 1, -1, -1}, hard(10));
  CHECK(std::find(base.support_indices.begin(), base.support_indices.end(), 4u) == base.support_indices.end());
  CHECK((more.weights - base.weights).norm() <= 1e-6);
  CHECK(std::abs(more.bias - base.bias) <= 1e-6);
}

TEST_CASE("decision scores and argmax") {
  LinearHypothesis zero = LinearHypothesis::zero(3, 2);
  const auto d = pts({{1, -1}, {0.5, 2}});
  CHECK(decision_scores(zero, d).isZero());
  CHECK(predict(zero, d).assignments() == std::vector<int>{0, 0});

  const auto h = LinearHypothesis::from_binary(Eigen::Vector2d(2, 3), 0.5);
  const auto sc = decision_scores(h, pts({{1, -1}}));
  CHECK(sc(0, 1) == doctest::Approx(-0.5));
  CHECK(sc(0, 0) == -sc(0, 1));
  CHECK(predict(h, pts({{1, -1}}))[0] == 0);
  CHECK_THROWS_AS(decision_scores(h, pts({{1, 2, 3}})), DimensionError);

  Eigen::MatrixXd s(2, 2);
  s << 0.3, -0.3, 0, 0;
  CHECK(argmax_labels(s).assignments() == std::vector<int>{0, 0});
  s << -0.1, 0.1, 0.2, 0.2;
  CHECK(argmax_labels(s).assignments() == std::vector<int>{1, 0});
}

TEST_CASE("binary ova agrees with the sign rule of the single model") {
  const auto d = blobs(2, 25, 6.0, 5);
  const auto fit = train_ova_models(d, d.labels(), 2, {});
  REQUIRE(fit.models.size() == 1);
  CHECK(fit.hypothesis.weights().row(0) == -fit.hypothesis.weights().row(1));
  const auto y = predict(fit.hypothesis, d);
  for (std::size_t i = 0; i < d.n_examples(); ++i) {
    const auto r = d.row(i);
    Eigen::Vector2d x = Eigen::Vector2d::Zero();
    for (auto [j, v] : r) x(j) = v;
    CHECK(y[i] == (fit.models[0].decision(x) > 0 ? 1 : 0));
  }
}

TEST_CASE("combine is an entrywise sum") {
  const auto a = LinearHypothesis::from_binary(Eigen::Vector2d(1, -2), 0.5);
  const auto b = LinearHypothesis::from_binary(Eigen::Vector2d(0.25, 3), -1);
  CHECK(combine(a, LinearHypothesis::zero(2, 2)) == a);
  CHECK(combine(a, b) == combine(b, a));
  CHECK((a + b).weights() == a.weights() + b.weights());
  CHECK_THROWS_AS(combine(a, LinearHypothesis::zero(3, 2)), DimensionError);

  const auto d = blobs(3, 10, 8.0, 1);
  const auto h1 = train_ova(d, {});
  const auto h2 = LinearHypothesis(0.5 * h1.weights(), 0.5 * h1.biases());
  const auto sum = combine(h1, h2);
  const auto avg = LinearHypothesis(0.5 * sum.weights(), 0.5 * sum.biases());
  CHECK(predict(sum, d) == predict(avg, d));
}

TEST_CASE("three separated blobs are fitted perfectly") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = blobs(3, 30, 1.0, seed);
    const auto y = predict(train_ova(d, {}), d);
    CHECK(y.assignments() == d.labels());
  }
}

TEST_CASE("relabeling classes permutes the hypothesis rows") {
  const auto d = blobs(3, 20, 3.0, 2);
  const std::vector<int> perm{2, 0, 1};
  std::vector<int> relabeled;
  for (int y : d.labels()) relabeled.push_back(perm[static_cast<std::size_t>(y)]);
  const auto h = train_ova(d, d.labels(), 3, {});
  const auto g = train_ova(d, relabeled, 3, {});
  for (int c = 0; c < 3; ++c) {
    CHECK((g.weights().row(perm[c]) - h.weights().row(c)).norm() <= 1e-9);
    CHECK(std::abs(g.biases()(perm[c]) - h.biases()(c)) <= 1e-9);
  }
}

TEST_CASE("ova needs every class present") {
  const auto d = pts({{0}, {1}, {2}});
  CHECK_THROWS_AS(train_ova(d, std::vector<int>{0, 0, 2}, 3, {}), ContractError);
  CHECK_THROWS_AS(train_ova(d, std::vector<int>{0, 0, 0}, 1, {}), ContractError);
}

TEST_CASE("cross-validation: single value, tie to smallest C, contracts") {
  const auto d = blobs(2, 20, 0.5, 4);
  CvOptions cv;
  cv.grid = {0.3};
  CHECK(cross_validate_c(d, d.labels(), 2, cv).best_c == 0.3);
  cv.grid = default_c_grid();
  const auto r = cross_validate_c(d, d.labels(), 2, cv);
  CHECK(r.best_c == 1e-3);
  CHECK(r.mean_accuracy.front() == 1.0);
  cv.grid.clear();
  CHECK_THROWS_AS(cross_validate_c(d, d.labels(), 2, cv), ContractError);
  cv.grid = {1.0};
  cv.folds = 1;
  CHECK_THROWS_AS(cross_validate_c(d, d.labels(), 2, cv), ContractError);
  cv.folds = 21;
  CHECK_THROWS_AS(cross_validate_c(d, d.labels(), 2, cv), ContractError);
}

TEST_CASE("stratified folds balance every class") {
  std::vector<int> y(23, 0);
  for (int i = 10; i < 23; ++i) y[static_cast<std::size_t>(i)] = 1;
  const auto f = stratified_folds(y, 2, 5, 3);
  for (int c = 0; c < 2; ++c) {
    std::vector<int> per(5, 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == c) ++per[static_cast<std::size_t>(f[i])];
    }
    CHECK(*std::max_element(per.begin(), per.end()) - *std::min_element(per.begin(), per.end()) <= 1);
  }
  CHECK(f == stratified_folds(y, 2, 5, 3));
}

TEST_CASE("default grid finds an accurate C on the rotated-toy source") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto p = RotatedToyParams::trace_setup();
    p.seed = seed;
    const auto toy = generate_rotated_toy(p);
    const auto r = cross_validate_c(toy.source, toy.source.labels(), 2, {});
    CHECK(*std::max_element(r.mean_accuracy.begin(), r.mean_accuracy.end()) >= 0.95);
  }
}

TEST_CASE("model JSON round trip and schema errors") {
  const auto d = blobs(3, 10, 2.0, 8);
  SvmOptions o;
  o.C = 0.5;
  const auto fit = train_ova_models(d, d.labels(), 3, o);
  const auto m = make_source_model(fit, d.class_values(), o, {PreprocessKind::rectify});
  const auto back = source_model_from_json(to_json(m));
  CHECK(back.hypothesis == m.hypothesis);
  CHECK(back.class_values == m.class_values);
  CHECK(back.solver.C == 0.5);
  CHECK(back.preprocess == m.preprocess);
  CHECK(back.binary_models.size() == 3);

  test::TempDir dir;
  save_model(m, dir / "m.json");
  CHECK(load_model(dir / "m.json").hypothesis == m.hypothesis);

  auto doc = to_json(m);
  doc["format"] = "something-else";
  CHECK_THROWS_AS(source_model_from_json(doc), InputError);
  doc = to_json(m);
  doc["weights"][0].erase(0);
  CHECK_THROWS_AS(source_model_from_json(doc), InputError);
  doc = to_json(m);
  doc.erase("biases");
  CHECK_THROWS_AS(source_model_from_json(doc), InputError);
  test::write_file(dir / "bad.json", "{not json");
  CHECK_THROWS_AS(load_model(dir / "bad.json"), InputError);
}

}  // TEST_SUITE
