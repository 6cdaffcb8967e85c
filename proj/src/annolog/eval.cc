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

#include "annolog/eval.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "annolog/error.h"

namespace annolog {

namespace {

std::string ReadAll(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

struct Line {
  std::string id;
  std::string value;
};

std::vector<Line> ReadPairs(const std::string &text, const char *source,
                            bool value_required) {
  std::vector<Line> out;
  std::set<std::string> ids;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    Line l;
    l.id = line.substr(0, tab);
    if (tab != std::string::npos) l.value = line.substr(tab + 1);
    if (l.id.empty() || l.value.find('\t') != std::string::npos ||
        (value_required && l.value.empty())) {
      throw Error(ErrorCode::kSchemaError, std::string(source) + ":" +
                                               std::to_string(lineno) +
                                               ": expected id<TAB>value");
    }
    if (!ids.insert(l.id).second) {
      throw Error(ErrorCode::kSchemaError, std::string(source) + ":" +
                                               std::to_string(lineno) +
                                               ": duplicate id " + l.id);
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::string> SplitTypes(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string Join(const std::vector<std::string> &items) {
  std::string out;
  for (const std::string &s : items) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

}  // namespace

const char *VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kCorrect:
      return "Correct";
    case Verdict::kSupertype:
      return "Supertype";
    case Verdict::kWrong:
      return "Wrong";
    case Verdict::kNoPrediction:
      return "NoPrediction";
  }
  return "?";
}

Verdict ClassifyPrediction(const std::vector<std::string> &predicted,
                           const std::string &gold,
                           const TypeSystem &taxonomy) {
  if (!taxonomy.Has(gold)) throw Error(ErrorCode::kUnknownType, gold);
  for (const std::string &p : predicted) {
    if (!taxonomy.Has(p)) throw Error(ErrorCode::kUnknownType, p);
  }
  if (predicted.empty()) return Verdict::kNoPrediction;
  if (std::find(predicted.begin(), predicted.end(), gold) != predicted.end()) {
    return Verdict::kCorrect;
  }
  for (const std::string &p : predicted) {
    if (taxonomy.Subsumes(p, gold)) return Verdict::kSupertype;
  }
  return Verdict::kWrong;
}

std::int64_t PercentTenths(std::int64_t num, std::int64_t den) {
  return (num * 2000 + den) / (2 * den);
}

std::string FormatTenths(std::int64_t tenths) {
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

std::int64_t EvalReport::accuracy_tenths() const {
  return PercentTenths(static_cast<std::int64_t>(count(Verdict::kCorrect)),
                       static_cast<std::int64_t>(total()));
}

std::string EvalReport::AccuracyPercent() const {
  return FormatTenths(accuracy_tenths());
}

std::string EvalReport::Table() const {
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"id", "gold", "predicted", "verdict"});
  for (const EvalRow &r : rows) {
    cells.push_back({r.id, r.gold, r.predicted.empty() ? "-" : Join(r.predicted),
                     VerdictName(r.verdict)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto &row : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto &row : cells) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      line += row[c];
      if (c + 1 < 4) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  out += "\n";
  for (Verdict v : {Verdict::kCorrect, Verdict::kSupertype, Verdict::kWrong,
                    Verdict::kNoPrediction}) {
    std::string label = VerdictName(v);
    out += label + std::string(14 - label.size(), ' ') +
           std::to_string(count(v)) + "\n";
  }
  out += "Total         " + std::to_string(total()) + "\n";
  out += "Accuracy      " + AccuracyPercent() + "%\n";
  return out;
}

nlohmann::ordered_json EvalReport::ToJson() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const EvalRow &r : rows) {
    rs.push_back({{"id", r.id},
                  {"gold", r.gold},
                  {"predicted", r.predicted},
                  {"verdict", VerdictName(r.verdict)}});
  }
  j["rows"] = std::move(rs);
  j["counts"] = {{"Correct", count(Verdict::kCorrect)},
                 {"Supertype", count(Verdict::kSupertype)},
                 {"Wrong", count(Verdict::kWrong)},
                 {"NoPrediction", count(Verdict::kNoPrediction)}};
  j["total"] = total();
  j["accuracy"] = AccuracyPercent();
  return j;
}

EvalReport Evaluate(const std::string &predictions, const std::string &gold,
                    const TypeSystem &taxonomy) {
  std::vector<Line> preds = ReadPairs(predictions, "predictions", false);
  std::vector<Line> golds = ReadPairs(gold, "gold", true);
  std::map<std::string, std::string> by_id;
  for (const Line &p : preds) by_id[p.id] = p.value;

  std::vector<std::string> orphans;
  std::set<std::string> gold_ids;
  for (const Line &g : golds) {
    gold_ids.insert(g.id);
    if (!by_id.count(g.id)) orphans.push_back(g.id + " (gold only)");
  }
  for (const Line &p : preds) {
    if (!gold_ids.count(p.id)) orphans.push_back(p.id + " (predictions only)");
  }
  if (!orphans.empty()) {
    std::string msg = "ids do not align:";
    for (const std::string &o : orphans) msg += " " + o;
    throw Error(ErrorCode::kIdMismatch, msg);
  }
  if (golds.empty()) {
    throw Error(ErrorCode::kEmptyGold, "gold file has no entries");
  }

  EvalReport report;
  for (const Line &g : golds) {
    EvalRow row;
    row.id = g.id;
    row.gold = g.value;
    row.predicted = SplitTypes(by_id[g.id]);
    row.verdict = ClassifyPrediction(row.predicted, row.gold, taxonomy);
    ++report.counts[static_cast<std::size_t>(row.verdict)];
    report.rows.push_back(std::move(row));
  }
  return report;
}

EvalReport EvaluateFiles(const std::string &predictions_path,
                         const std::string &gold_path,
                         const std::string &taxonomy_path) {
  TypeSystem taxonomy = TypeSystem::LoadTaxonomy(taxonomy_path);
  return Evaluate(ReadAll(predictions_path), ReadAll(gold_path), taxonomy);
}

}  // namespace annolog
