// Copyright 2026 the dickesim authors
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

#include "dickesim/measurement.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "dickesim/format.hpp"

namespace dickesim {

CascadeTrace sample_cascade(const DickeSpec& spec, int steps, std::uint64_t seed) {
  validate_spec(spec);
  if (steps < 0) throw std::invalid_argument("step count must be non-negative");
  if (steps > spec.n) throw std::invalid_argument("cascade longer than system");

  CascadeTrace trace;
  trace.initial = spec;
  trace.seed = seed;
  trace.records.reserve(static_cast<std::size_t>(steps));

  SplitMix64 rng(seed);
  DickeSpec current = spec;
  for (int step = 0; step < steps; ++step) {
    const double p0 = Rational(current.n - current.k, current.n).value();
    const double p1 = Rational(current.k, current.n).value();
    // One uniform draw per step. u lies in [0, 1), so the deterministic
    // boundaries come out right by themselves: p0 = 1 always takes branch 0
    // and p0 = 0 never does.
    const int outcome = rng.next_double() < p0 ? 0 : 1;

    MeasurementRecord rec;
    rec.qubit = 1;  // by symmetry; every qubit of a Dicke state is equivalent
    rec.outcome = outcome;
    rec.probability = outcome == 0 ? p0 : p1;
    rec.residual_n = current.n - 1;
    rec.residual_is_dicke = true;
    rec.residual_spec = residual_spec(current, outcome);
    current = *rec.residual_spec;
    trace.records.push_back(std::move(rec));
  }
  trace.final_spec = current;
  return trace;
}

std::string cascade_to_json(const CascadeTrace& trace) {
  nlohmann::ordered_json doc;
  doc["initial"] = {{"n", trace.initial.n}, {"k", trace.initial.k}};
  doc["seed"] = trace.seed;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : trace.records) {
    doc["records"].push_back({
        {"qubit", rec.qubit},
        {"outcome", rec.outcome},
        {"probability", decimal17(rec.probability)},
        {"residual", {{"n", rec.residual_spec->n}, {"k", rec.residual_spec->k}}},
    });
  }
  doc["final"] = {{"n", trace.final_spec.n}, {"k", trace.final_spec.k}};
  return doc.dump(2) + "\n";
}

namespace {

void walk_tree(const DickeSpec& node, int remaining, double probability,
               std::string& path, std::vector<TreePath>& out) {
  if (remaining == 0) {
    out.push_back(TreePath{path, probability, node});
    return;
  }
  const double p0 =
      static_cast<double>(node.n - node.k) / static_cast<double>(node.n);
  const double p1 = static_cast<double>(node.k) / static_cast<double>(node.n);
  if (node.k < node.n) {
    path.push_back('0');
    walk_tree(DickeSpec{node.n - 1, node.k}, remaining - 1, probability * p0, path, out);
    path.pop_back();
  }
  if (node.k > 0) {
    path.push_back('1');
    walk_tree(DickeSpec{node.n - 1, node.k - 1}, remaining - 1, probability * p1, path,
              out);
    path.pop_back();
  }
}

}  // namespace

std::vector<TreePath> enumerate_tree(const DickeSpec& spec, int depth) {
  validate_spec(spec);
  if (depth < 0) throw std::invalid_argument("tree depth must be non-negative");
  if (depth > spec.n || depth > kMaxTreeDepth) {
    throw std::invalid_argument("tree too deep");
  }
  std::vector<TreePath> paths;
  std::string scratch;
  walk_tree(spec, depth, 1.0, scratch, paths);
  return paths;
}

}  // namespace dickesim
