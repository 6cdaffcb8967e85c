// Copyright 2026 The Annolog Authors.
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

// Answer-type evaluation against a gold standard.
//
//   predictions  id<TAB>type1,type2,...   (empty list: no prediction)
//   gold         id<TAB>type

#ifndef ANNOLOG_EVAL_H_
#define ANNOLOG_EVAL_H_

#include <array>
#include <string>
#include <vector>

#include "annolog/cas.h"
#include "json.hpp"

namespace annolog {

enum class Verdict { kCorrect = 0, kSupertype, kWrong, kNoPrediction };

const char *VerdictName(Verdict v);

// Correct if gold is predicted; else Supertype if a predicted type strictly
// subsumes gold; else Wrong. Empty predictions give NoPrediction. Throws
// UnknownType.
Verdict ClassifyPrediction(const std::vector<std::string> &predicted,
                           const std::string &gold,
                           const TypeSystem &taxonomy);

struct EvalRow {
  std::string id;
  std::string gold;
  std::vector<std::string> predicted;
  Verdict verdict = Verdict::kNoPrediction;
};

struct EvalReport {
  std::vector<EvalRow> rows;  // gold file order
  std::array<std::size_t, 4> counts{};

  std::size_t total() const { return rows.size(); }
  std::size_t count(Verdict v) const {
    return counts[static_cast<std::size_t>(v)];
  }
  // Correct / total in tenths of a percent, rounded half up.
  std::int64_t accuracy_tenths() const;
  // "89.8"
  std::string AccuracyPercent() const;

  std::string Table() const;
  nlohmann::ordered_json ToJson() const;
};

// Throws IdMismatch naming ids present in only one file, EmptyGold when the
// gold file has no entries, SchemaError for malformed lines.
EvalReport Evaluate(const std::string &predictions, const std::string &gold,
                    const TypeSystem &taxonomy);
EvalReport EvaluateFiles(const std::string &predictions_path,
                         const std::string &gold_path,
                         const std::string &taxonomy_path);

// Tenths of a percent of num / den, rounded half up. den must be positive.
std::int64_t PercentTenths(std::int64_t num, std::int64_t den);
std::string FormatTenths(std::int64_t tenths);

}  // namespace annolog

#endif  // ANNOLOG_EVAL_H_
