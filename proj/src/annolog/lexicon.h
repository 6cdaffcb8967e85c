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

// Immutable lexical resources exposed to rules as external predicates.
//
// A lexicon directory holds five UTF-8 TSV files:
//
//   synsets.tsv    lemma<TAB>synsetId            (sense order = line order)
//   hypernyms.tsv  synsetId<TAB>hypernymId
//   tables.tsv     tableName<TAB>key<TAB>type1,type2,...
//   wordlists.tsv  listName<TAB>word
//   taxonomy.tsv   type<TAB>supertype            (roots omit the supertype)
//
// The table named "synsetType" maps synset ids to answer types and backs
// wordNet:lexicalType/2.

#ifndef ANNOLOG_LEXICON_H_
#define ANNOLOG_LEXICON_H_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "annolog/cas.h"
#include "annolog/solver.h"

namespace annolog {

class MiniWordNet {
 public:
  static MiniWordNet Parse(const std::string &synsets,
                           const std::string &hypernyms);

  // Synset ids of a lemma in sense order, or nullptr for unknown lemmas.
  const std::vector<std::string> *Senses(const std::string &lemma) const;

  // True iff lemma equals a candidate or shares a synset with one.
  bool Synonym(const std::string &lemma,
               const std::vector<std::string> &candidates) const;

  // First-sense synset followed by its hypernyms up to a root, taking the
  // first listed hypernym at every step. Throws UnknownLemma.
  std::vector<std::string> HypernymChain(const std::string &lemma) const;
  std::vector<std::string> ChainFromSynset(const std::string &synset) const;

  std::size_t lemma_count() const { return senses_.size(); }
  std::size_t synset_count() const { return synsets_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> senses_;
  std::map<std::string, std::vector<std::string>> hypernyms_;
  std::set<std::string> synsets_;
};

class LookupTables {
 public:
  static LookupTables Parse(const std::string &text);

  // Exact-match lookup. Throws UnknownTable.
  std::optional<std::vector<std::string>> Lookup(const std::string &table,
                                                 const std::string &key) const;
  bool HasTable(const std::string &table) const;
  std::vector<std::string> TableNames() const;
  // Every type name used as a value, for taxonomy validation.
  std::set<std::string> ValueTypes() const;

 private:
  std::map<std::string, std::map<std::string, std::vector<std::string>>>
      tables_;
};

class WordLists {
 public:
  static WordLists Parse(const std::string &text);

  bool Contains(const std::string &list, const std::string &word) const;
  bool HasList(const std::string &list) const;
  // Words in file order; throws UnknownTable for a missing list.
  const std::vector<std::string> &Words(const std::string &list) const;
  std::vector<std::string> ListNames() const;

 private:
  std::map<std::string, std::vector<std::string>> lists_;
};

struct Lexicon {
  MiniWordNet wordnet;
  LookupTables tables;
  WordLists wordlists;
  TypeSystem taxonomy;

  // Loads the five files of a lexicon directory and validates every table
  // value against the taxonomy. Throws SchemaError or IoError.
  static Lexicon LoadDirectory(const std::string &dir);

  // First taxonomy type found along the lemma's hypernym chain via the
  // synsetType table; nullopt for unknown lemmas or no mapping.
  std::optional<std::vector<std::string>> LexicalType(
      const std::string &lemma) const;
};

inline constexpr char kSynsetTypeTable[] = "synsetType";
inline constexpr char kWordNetModule[] = "wordNet";

// Registers wordNet:synonym/2, wordNet:hypernymChain/2,
// wordNet:lexicalType/2, <table>Lookup/2 for every table and <list>/1 for
// every word list. Lookup misses fail; they never raise.
void RegisterLexiconPredicates(ExternalRegistry &registry,
                               std::shared_ptr<const Lexicon> lexicon);

}  // namespace annolog

#endif  // ANNOLOG_LEXICON_H_
