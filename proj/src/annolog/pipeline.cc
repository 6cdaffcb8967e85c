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

#include "annolog/pipeline.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "annolog/error.h"
#include "annolog/qparse.h"
#include "annolog/relations.h"

namespace annolog {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void ConfigFail(const std::string &path, const std::string &msg) {
  throw Error(ErrorCode::kConfigError, path + ": " + msg);
}

std::string ResolvePath(const std::string &base, const std::string &p) {
  fs::path path(p);
  if (path.is_absolute() || base.empty()) return path.lexically_normal().string();
  return (fs::path(base) / path).lexically_normal().string();
}

std::string StringField(const Json &j, const std::string &path,
                        const char *key, bool required = true) {
  auto it = j.find(key);
  if (it == j.end()) {
    if (required) ConfigFail(path + "." + key, "missing required field");
    return {};
  }
  if (!it->is_string()) ConfigFail(path + "." + key, "expected string");
  return it->get<std::string>();
}

std::uint64_t PositiveField(const Json &j, const std::string &path,
                            const char *key, std::uint64_t fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0) {
    ConfigFail(path + "." + key, "expected positive integer");
  }
  return it->get<std::uint64_t>();
}

}  // namespace

PipelineConfig PipelineConfig::FromJson(const Json &j,
                                        const std::string &base_dir) {
  if (!j.is_object()) ConfigFail("$", "expected object");
  PipelineConfig cfg;
  std::string lex = StringField(j, "$", "lexicon", false);
  if (!lex.empty()) cfg.lexicon_dir = ResolvePath(base_dir, lex);

  auto list = j.find("annotators");
  if (list == j.end()) ConfigFail("$.annotators", "missing required field");
  if (!list->is_array()) ConfigFail("$.annotators", "expected array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < list->size(); ++i) {
    std::string path = "$.annotators[" + std::to_string(i) + "]";
    const Json &a = (*list)[i];
    if (!a.is_object()) ConfigFail(path, "expected object");
    AnnotatorConfig ac;
    ac.name = StringField(a, path, "name");
    if (!names.insert(ac.name).second) {
      ConfigFail(path + ".name", "duplicate annotator name " + ac.name);
    }
    ac.kind = StringField(a, path, "kind");
    if (ac.kind != "qparse" && ac.kind != "relations") {
      ConfigFail(path + ".kind", "expected \"qparse\" or \"relations\"");
    }
    auto rules = a.find("rules");
    if (rules == a.end() || !rules->is_array() || rules->empty()) {
      ConfigFail(path + ".rules", "expected non-empty array of paths");
    }
    for (const Json &r : *rules) {
      if (!r.is_string()) ConfigFail(path + ".rules", "expected strings");
      ac.rules.push_back(ResolvePath(base_dir, r.get<std::string>()));
    }
    if (auto outs = a.find("outputs"); outs != a.end()) {
      if (ac.kind == "qparse") {
        ConfigFail(path + ".outputs", "qparse annotators have fixed outputs");
      }
      if (!outs->is_array()) ConfigFail(path + ".outputs", "expected array");
      for (std::size_t k = 0; k < outs->size(); ++k) {
        ac.outputs.push_back(OutputEntryFromJson(
            (*outs)[k], path + ".outputs[" + std::to_string(k) + "]"));
      }
    }
    if (ac.kind == "relations" && ac.outputs.empty()) {
      ConfigFail(path + ".outputs", "relations annotators need outputs");
    }
    if (auto s = a.find("solver"); s != a.end()) {
      if (!s->is_object()) ConfigFail(path + ".solver", "expected object");
      ac.solver.max_resolution_steps =
          PositiveField(*s, path + ".solver", "max_resolution_steps",
                        ac.solver.max_resolution_steps);
      ac.solver.max_depth = PositiveField(*s, path + ".solver", "max_depth",
                                          ac.solver.max_depth);
    }
    if (auto ins = a.find("inputs"); ins != a.end()) {
      if (!ins->is_array()) ConfigFail(path + ".inputs", "expected array");
      for (std::size_t k = 0; k < ins->size(); ++k) {
        std::string ip = path + ".inputs[" + std::to_string(k) + "]";
        const Json &in = (*ins)[k];
        if (!in.is_object()) ConfigFail(ip, "expected object");
        ac.inputs.push_back(
            {StringField(in, ip, "type"), StringField(in, ip, "predicate", false)});
      }
    }
    cfg.annotators.push_back(std::move(ac));
  }
  return cfg;
}

PipelineConfig PipelineConfig::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read pipeline " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::kConfigError, path + ": " + e.what());
  }
  try {
    return FromJson(j, fs::path(path).parent_path().string());
  } catch (const Error &e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {
  types_ = std::make_shared<const TypeSystem>(StandardTypeSystem());
  if (!config_.lexicon_dir.empty()) {
    lexicon_ =
        std::make_shared<const Lexicon>(Lexicon::LoadDirectory(config_.lexicon_dir));
    RegisterLexiconPredicates(registry_, lexicon_);
  }
  for (const AnnotatorConfig &ac : config_.annotators) {
    for (const OutputEntry &e : ac.outputs) ValidateOutputEntry(e, *types_);
    for (const InputSpec &in : ac.inputs) {
      if (!types_->Has(in.type)) {
        throw Error(ErrorCode::kConfigError,
                    "annotator " + ac.name + ": unknown input type " + in.type);
      }
    }
    KnowledgeBase rules = LoadRuleFiles(ac.rules, ac.inputs);
    if (ac.kind == "qparse") DeclareQuestionPredicates(rules);
    stages_.push_back({ac, std::move(rules)});
  }
}

Pipeline Pipeline::Load(const std::string &config_path) {
  return Pipeline(PipelineConfig::Load(config_path));
}

Document Pipeline::LoadDocumentFile(const std::string &path) const {
  return LoadDocument(path, types_);
}

Document Pipeline::ParseDocumentText(const std::string &json_text) const {
  return ParseDocument(json_text, types_);
}

DocumentReport Pipeline::Process(Document &doc) const {
  DocumentReport report;
  report.id = doc.cas.document_id();
  for (const Stage &stage : stages_) {
    AnnotatorReport ar;
    ar.name = stage.config.name;
    Cas work = doc.cas;
    try {
      if (stage.config.kind == "qparse") {
        AnnotateOutcome o = AnnotateQuestion(work, stage.rules, registry_,
                                             stage.config.solver,
                                             stage.config.inputs);
        ar.added = o.added.size();
        ar.diagnostics = o.diagnostics;
      } else {
        RelationOutcome o =
            AnnotateRelations(work, stage.rules, registry_, stage.config.outputs,
                              stage.config.solver, stage.config.inputs);
        ar.added = o.added.size();
      }
    } catch (const Error &e) {
      report.ok = false;
      report.error_annotator = stage.config.name;
      report.error = e.code();
      report.error_code = ErrorCodeName(e.code());
      report.error_message = e.message();
      report.error_class = static_cast<int>(e.error_class());
      report.annotators.push_back(std::move(ar));
      return report;
    }
    doc.cas = std::move(work);
    report.annotators.push_back(std::move(ar));
  }
  return report;
}

std::vector<std::string> CollectInputs(const std::string &input) {
  std::error_code ec;
  if (fs::is_directory(input, ec)) {
    std::vector<std::string> out;
    for (const auto &entry : fs::directory_iterator(input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        out.push_back(entry.path().string());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (!fs::exists(input, ec)) {
    throw Error(ErrorCode::kIoError, "no such input " + input);
  }
  return {input};
}

RunReport Pipeline::Run(const std::string &input,
                        const std::string &output_dir) const {
  return RunFiles(CollectInputs(input), output_dir);
}

RunReport Pipeline::RunFiles(const std::vector<std::string> &inputs,
                             const std::string &output_dir) const {
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create output directory " + output_dir);
  }
  RunReport run;
  for (const std::string &path : inputs) {
    DocumentReport r;
    std::optional<Document> doc;
    try {
      doc.emplace(LoadDocumentFile(path));
    } catch (const Error &e) {
      r.id = fs::path(path).stem().string();
      r.ok = false;
      r.error = e.code();
      r.error_code = ErrorCodeName(e.code());
      r.error_message = e.message();
      r.error_class = static_cast<int>(e.error_class());
    }
    if (doc) {
      r = Process(*doc);
      std::string out =
          (fs::path(output_dir) / (fs::path(path).stem().string() + ".json"))
              .string();
      std::ofstream f(out, std::ios::binary);
      if (!f) throw Error(ErrorCode::kIoError, "cannot write " + out);
      f << SerializeDocument(*doc);
      r.output = out;
    }
    r.input = path;
    run.documents.push_back(std::move(r));
  }
  std::stable_sort(run.documents.begin(), run.documents.end(),
                   [](const DocumentReport &a, const DocumentReport &b) {
                     return a.id < b.id;
                   });
  return run;
}

Json DocumentReport::ToJson() const {
  Json j;
  j["id"] = id;
  j["input"] = input;
  j["output"] = output;
  j["status"] = ok ? "ok" : "error";
  Json anns = Json::array();
  for (const AnnotatorReport &a : annotators) {
    Json aj;
    aj["name"] = a.name;
    aj["annotations"] = a.added;
    aj["diagnostics"] = a.diagnostics;
    anns.push_back(std::move(aj));
  }
  j["annotators"] = std::move(anns);
  if (!ok) {
    Json e;
    e["annotator"] = error_annotator;
    e["code"] = error_code;
    e["message"] = error_message;
    j["error"] = std::move(e);
  }
  return j;
}

std::size_t RunReport::failed() const {
  return std::count_if(documents.begin(), documents.end(),
                       [](const DocumentReport &d) { return !d.ok; });
}

int RunReport::exit_class() const {
  for (const DocumentReport &d : documents) {
    if (!d.ok) return d.error_class;
  }
  return 0;
}

Json RunReport::ToJson() const {
  Json j;
  Json docs = Json::array();
  std::size_t total = 0;
  for (const DocumentReport &d : documents) {
    for (const AnnotatorReport &a : d.annotators) total += a.added;
    docs.push_back(d.ToJson());
  }
  j["documents"] = std::move(docs);
  j["summary"] = {{"documents", documents.size()},
                  {"failed", failed()},
                  {"annotations", total}};
  return j;
}

}  // namespace annolog
