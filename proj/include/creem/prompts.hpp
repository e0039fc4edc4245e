#pragma once

#include <map>
#include <string>
#include <string_view>

namespace creem::prompts {

// {name} placeholders; rendering fails closed when a placeholder has no
// binding. Extra bindings are ignored.
std::string render(std::string_view tmpl, const std::map<std::string, std::string>& vars);

// Stage templates. Names describe the pipeline stage, the registry below maps
// name -> template text so run manifests can record template hashes.
extern const std::string_view kQuestion;
extern const std::string_view kBlendFirstSession;
extern const std::string_view kBlendRefine;
extern const std::string_view kRespond;
extern const std::string_view kJudgeMemory;
extern const std::string_view kQuestionGen;
extern const std::string_view kAnswerQuestions;
extern const std::string_view kPairwise;
extern const std::string_view kSummemExtract;
extern const std::string_view kRebotSummarize;
extern const std::string_view kCarecallSummary;
extern const std::string_view kCarecallClassify;

const std::map<std::string, std::string>& template_registry();

// Judge criterion descriptions, keyed by lowercase criterion name. The
// {speaker} placeholder inside a description is bound by the caller.
const std::map<std::string, std::string>& judge_criteria();

// Pairwise criterion descriptions, keyed by lowercase criterion name.
const std::map<std::string, std::string>& pairwise_criteria();

}  // namespace creem::prompts
