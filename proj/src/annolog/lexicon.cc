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

#include "annolog/lexicon.h"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "annolog/error.h"

namespace annolog {

namespace {

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Splits non-empty, non-comment lines into tab-separated columns and checks
// the column count.
std::vector<std::vector<std::string>> ReadRows(const std::string &text,
                                               std::size_t columns,
                                               const std::string &source) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() != columns) {
      throw Error(ErrorCode::kSchemaError,
                  source + ":" + std::to_string(lineno) + ": expected " +
                      std::to_string(columns) + " tab-separated columns");
    }
    rows.push_back(std::move(cols));
  }
  return rows;
}

std::vector<std::string> SplitComma(const std::string &s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma - start);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

// --- MiniWordNet ----------------------------------------------------------

MiniWordNet MiniWordNet::Parse(const std::string &synsets,
                               const std::string &hypernyms) {
  MiniWordNet wn;
  for (auto &row : ReadRows(synsets, 2, "synsets.tsv")) {
    auto &senses = wn.senses_[row[0]];
    if (std::find(senses.begin(), senses.end(), row[1]) == senses.end()) {
      senses.push_back(row[1]);
    }
    wn.synsets_.insert(row[1]);
  }
  for (auto &row : ReadRows(hypernyms, 2, "hypernyms.tsv")) {
    for (const std::string &id : row) {
      if (!wn.synsets_.count(id)) {
        throw Error(ErrorCode::kSchemaError,
                    "hypernyms.tsv references undefined synset " + id);
      }
    }
    wn.hypernyms_[row[0]].push_back(row[1]);
  }

  // The hypernym graph must be acyclic.
  std::map<std::string, int> state;  // 1 = on stack, 2 = done
  std::function<void(const std::string &)> visit = [&](const std::string &s) {
    int &st = state[s];
    if (st == 2) return;
    if (st == 1) {
      throw Error(ErrorCode::kSchemaError, "hypernym cycle through " + s);
    }
    st = 1;
    auto it = wn.hypernyms_.find(s);
    if (it != wn.hypernyms_.end()) {
      for (const std::string &h : it->second) visit(h);
    }
    state[s] = 2;
  };
  for (const std::string &s : wn.synsets_) visit(s);
  return wn;
}

const std::vector<std::string> *MiniWordNet::Senses(
    const std::string &lemma) const {
  auto it = senses_.find(lemma);
  return it == senses_.end() ? nullptr : &it->second;
}

bool MiniWordNet::Synonym(const std::string &lemma,
                          const std::vector<std::string> &candidates) const {
  const std::vector<std::string> *mine = Senses(lemma);
  for (const std::string &c : candidates) {
    if (c == lemma) return true;
    if (mine == nullptr) continue;
    const std::vector<std::string> *theirs = Senses(c);
    if (theirs == nullptr) continue;
    for (const std::string &s : *mine) {
      if (std::find(theirs->begin(), theirs->end(), s) != theirs->end()) {
        return true;
      }
    }
  }
  return false;
}

std::vector<std::string> MiniWordNet::ChainFromSynset(
    const std::string &synset) const {
  std::vector<std::string> chain{synset};
  // Acyclic by construction, so this terminates within synset_count() steps.
  while (true) {
    auto it = hypernyms_.find(chain.back());
    if (it == hypernyms_.end() || it->second.empty()) break;
    chain.push_back(it->second.front());
  }
  return chain;
}

std::vector<std::string> MiniWordNet::HypernymChain(
    const std::string &lemma) const {
  const std::vector<std::string> *senses = Senses(lemma);
  if (senses == nullptr || senses->empty()) {
    throw Error(ErrorCode::kUnknownLemma, lemma);
  }
  return ChainFromSynset(senses->front());
}

// --- LookupTables ---------------------------------------------------------

LookupTables LookupTables::Parse(const std::string &text) {
  LookupTables t;
  for (auto &row : ReadRows(text, 3, "tables.tsv")) {
    t.tables_[row[0]][row[1]] = SplitComma(row[2]);
  }
  return t;
}

std::optional<std::vector<std::string>> LookupTables::Lookup(
    const std::string &table, const std::string &key) const {
  auto it = tables_.find(table);
  if (it == tables_.end()) throw Error(ErrorCode::kUnknownTable, table);
  auto hit = it->second.find(key);
  if (hit == it->second.end()) return std::nullopt;
  return hit->second;
}

bool LookupTables::HasTable(const std::string &table) const {
  return tables_.count(table) > 0;
}

std::vector<std::string> LookupTables::TableNames() const {
  std::vector<std::string> names;
  for (const auto &[name, rows] : tables_) names.push_back(name);
  return names;
}

std::set<std::string> LookupTables::ValueTypes() const {
  std::set<std::string> out;
  for (const auto &[name, rows] : tables_) {
    for (const auto &[key, types] : rows) out.insert(types.begin(), types.end());
  }
  return out;
}

// --- WordLists ------------------------------------------------------------

WordLists WordLists::Parse(const std::string &text) {
  WordLists w;
  for (auto &row : ReadRows(text, 2, "wordlists.tsv")) {
    const std::string &word = row[1];
    if (std::any_of(word.begin(), word.end(),
                    [](char c) { return c >= 'A' && c <= 'Z'; })) {
      throw Error(ErrorCode::kSchemaError,
                  "wordlists.tsv entries must be lowercase: " + word);
    }
    auto &words = w.lists_[row[0]];
    if (std::find(words.begin(), words.end(), word) == words.end()) {
      words.push_back(word);
    }
  }
  return w;
}

bool WordLists::Contains(const std::string &list,
                         const std::string &word) const {
  auto it = lists_.find(list);
  if (it == lists_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), word) !=
         it->second.end();
}

bool WordLists::HasList(const std::string &list) const {
  return lists_.count(list) > 0;
}

const std::vector<std::string> &WordLists::Words(
    const std::string &list) const {
  auto it = lists_.find(list);
  if (it == lists_.end()) throw Error(ErrorCode::kUnknownTable, list);
  return it->second;
}

std::vector<std::string> WordLists::ListNames() const {
  std::vector<std::string> names;
  for (const auto &[name, words] : lists_) names.push_back(name);
  return names;
}

// --- Lexicon --------------------------------------------------------------

Lexicon Lexicon::LoadDirectory(const std::string &dir) {
  namespace fs = std::filesystem;
  auto path = [&](const char *name) { return (fs::path(dir) / name).string(); };
  Lexicon lex{
      MiniWordNet::Parse(ReadFile(path("synsets.tsv")),
                         ReadFile(path("hypernyms.tsv"))),
      LookupTables::Parse(ReadFile(path("tables.tsv"))),
      WordLists::Parse(ReadFile(path("wordlists.tsv"))),
      TypeSystem::LoadTaxonomy(path("taxonomy.tsv")),
  };
  for (const std::string &type : lex.tables.ValueTypes()) {
    if (!lex.taxonomy.Has(type)) {
      throw Error(ErrorCode::kSchemaError,
                  "tables.tsv uses type " + type + " missing from taxonomy");
    }
  }
  return lex;
}

std::optional<std::vector<std::string>> Lexicon::LexicalType(
    const std::string &lemma) const {
  if (wordnet.Senses(lemma) == nullptr || !tables.HasTable(kSynsetTypeTable)) {
    return std::nullopt;
  }
  for (const std::string &synset : wordnet.HypernymChain(lemma)) {
    if (auto types = tables.Lookup(kSynsetTypeTable, synset)) return types;
  }
  return std::nullopt;
}

// --- External predicates --------------------------------------------------

namespace {

Term AtomList(const std::vector<std::string> &items) {
  std::vector<Term> terms;
  terms.reserve(items.size());
  for (const std::string &s : items) terms.push_back(Term::Atom(s));
  return Term::List(terms);
}

std::optional<std::vector<std::string>> AtomItems(const Term &t) {
  auto items = t.ListItems();
  if (!items) return std::nullopt;
  std::vector<std::string> out;
  for (const Term &i : *items) {
    if (!i.is_atom()) return std::nullopt;
    out.push_back(i.name());
  }
  return out;
}

}  // namespace

void RegisterLexiconPredicates(ExternalRegistry &registry,
                               std::shared_ptr<const Lexicon> lexicon) {
  registry.Register(
      kWordNetModule, "synonym", 2,
      [lexicon](std::span<const Term> args) -> ExternalAnswers {
        if (!args[0].is_atom()) return {};
        auto candidates = AtomItems(args[1]);
        if (!candidates) return {};
        if (!lexicon->wordnet.Synonym(args[0].name(), *candidates)) return {};
        return {{args[0], args[1]}};
      });

  registry.Register(
      kWordNetModule, "hypernymChain", 2,
      [lexicon](std::span<const Term> args) -> ExternalAnswers {
        if (!args[0].is_atom() ||
            lexicon->wordnet.Senses(args[0].name()) == nullptr) {
          return {};
        }
        return {{args[0],
                 AtomList(lexicon->wordnet.HypernymChain(args[0].name()))}};
      });

  registry.Register(
      kWordNetModule, "lexicalType", 2,
      [lexicon](std::span<const Term> args) -> ExternalAnswers {
        if (!args[0].is_atom()) return {};
        auto types = lexicon->LexicalType(args[0].name());
        if (!types) return {};
        return {{args[0], AtomList(*types)}};
      });

  for (const std::string &table : lexicon->tables.TableNames()) {
    registry.Register(
        "", table + "Lookup", 2,
        [lexicon, table](std::span<const Term> args) -> ExternalAnswers {
          if (!args[0].is_atom()) return {};
          auto types = lexicon->tables.Lookup(table, args[0].name());
          if (!types) return {};
          return {{args[0], AtomList(*types)}};
        });
  }

  for (const std::string &list : lexicon->wordlists.ListNames()) {
    registry.Register(
        "", list, 1,
        [lexicon, list](std::span<const Term> args) -> ExternalAnswers {
          if (args[0].is_var()) {
            ExternalAnswers all;
            for (const std::string &w : lexicon->wordlists.Words(list)) {
              all.push_back({Term::Atom(w)});
            }
            return all;
          }
          if (args[0].is_atom() &&
              lexicon->wordlists.Contains(list, args[0].name())) {
            return {{args[0]}};
          }
          return {};
        });
  }
}

}  // namespace annolog
