#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tsinject/chat.hpp"
#include "tsinject/synth.hpp"
#include "tsinject/timeseries.hpp"

namespace tsinject {

// The reflection cue placed after injected knowledge.
inline constexpr std::string_view kReflectCue =
    "Wait, let me reflect on my previous thinking process with the time-series data.";

// Bridge texts used by the resumed-trace strategies. The intermediate bridge
// never embeds the dropped low-confidence sentence.
inline constexpr std::string_view kIntermediateBridge =
    "Wait, I am uncertain about this point. Let me reconsider it with the "
    "following clarification from the time-series model:";
inline constexpr std::string_view kLateBridge =
    "Wait, let me reexamine my previous reasoning based on the review below:";

// Instruction texts sent to the specialist / reasoner. Defaults carry the
// full templates; tests may substitute shorter cues.
struct InstructionCue {
  std::string v_help;
  std::string v_reflect = std::string(kReflectCue);
  std::string v_judge;
  std::string v_critique;
  std::string v_continue = std::string(kContinueInstruction);

  static InstructionCue defaults();
};

struct SentenceSpan {
  std::string text;
  double confidence = 1.0;  // unscored sentences never win the weak-point argmin
};

struct ReasoningTrace {
  std::string think_text;
  std::vector<SentenceSpan> sentences;
  std::string answer_text;
};

enum class QueryMode { help, assist, critique };

enum class KnowledgeSource { sft_help_query, rl_thinking_trace, scripted };

std::string knowledge_source_name(KnowledgeSource source);

struct KnowledgeSnippet {
  std::string text;
  KnowledgeSource source = KnowledgeSource::scripted;
};

enum class Strategy { early, intermediate, late };

std::string strategy_name(Strategy strategy);
Strategy strategy_from_name(const std::string& name);

struct InjectionPlan {
  Strategy strategy = Strategy::early;
  bool include_series_in_grlm = true;
  // Early injection only: raw-question elicitation returning the specialist's
  // own thinking trace, or the shaped help query returning its full response.
  KnowledgeSource knowledge_source = KnowledgeSource::rl_thinking_trace;
};

// Builds the specialist-facing request text for one of the three shapes:
//   help      -> [question, v_help]
//   assist    -> question + partial reasoning + target sentence + v_judge
//   critique  -> question + full draft + v_critique
// Throws MissingContext when a required part is absent.
std::string shape_query(QueryMode mode, const std::string& question,
                        const std::string& trace_prefix,
                        const std::string& target_sentence,
                        const InstructionCue& cues);

// Invokes the specialist on (encoded series, shaped query). In
// rl_thinking_trace mode the returned snippet is the specialist's think
// segment when present (the trace itself is the knowledge); otherwise the
// full response text. Blank responses raise EmptyKnowledge.
KnowledgeSnippet elicit_knowledge(ModelClient& client,
                                  const EndpointProfile& tslm_profile,
                                  const TimeSeries& ts,
                                  const std::string& shaped_query,
                                  KnowledgeSource source_mode,
                                  int decimals = 2);

// snippet + '\n' + v_reflect, exactly.
std::string inject_early(const KnowledgeSnippet& snippet, const InstructionCue& cues);

// Deterministic sentence segmentation: splits after sentence-terminating
// punctuation followed by whitespace and before line-start step markers
// ("1.", "Step 2:", "Observation 3:"). A "(confidence: x.xx)" marker trailing
// a sentence is parsed into that sentence's confidence and stripped from the
// text; unmarked sentences default to 1.0.
std::vector<SentenceSpan> segment_trace(const std::string& think_text);

// Index of the lowest-confidence sentence, earliest on ties.
// Throws EmptyTrace when there are no sentences.
std::size_t locate_weak_sentence(const ReasoningTrace& trace);

// Sentences strictly before weak_index + uncertainty bridge + snippet; the
// weak sentence and everything after it are dropped.
std::string inject_intermediate(const ReasoningTrace& trace, std::size_t weak_index,
                                const KnowledgeSnippet& snippet,
                                const InstructionCue& cues);

// Full draft + reexamination bridge + snippet, in that order.
std::string inject_late(const ReasoningTrace& trace, const KnowledgeSnippet& snippet,
                        const InstructionCue& cues);

// Maps model output to an option index. Resolution order:
//   1. body of the first <answer>...</answer> pair,
//   2. an "Answer: <label>" occurrence (label case-insensitive),
//   3. a standalone uppercase option letter, if exactly one distinct,
//   4. unique case-insensitive full option text match.
// Throws Unparseable when nothing fires or resolution is ambiguous.
int extract_answer(const std::string& text, const std::vector<std::string>& options);

// The question text sent to endpoints: question + lettered options block.
std::string render_question(const McqItem& item);

struct PipelineArtifacts {
  int item_id = -1;
  Strategy strategy = Strategy::early;
  std::string shaped_query;
  std::string snippet;
  std::string injected_trace;
  std::string grlm_raw;
  int answer_index = -1;
  std::string error;  // empty on success
};

std::string artifacts_to_json(const PipelineArtifacts& artifacts);

struct PipelineResult {
  int final_answer_index = -1;
  PipelineArtifacts artifacts;
};

// Single-item pipeline:
//   early        : elicit -> inject_early -> injected reasoner pass
//   intermediate : draft pass (confidence-marked) -> weak point -> assist
//                  query -> elicit -> inject_intermediate -> resume pass
//   late         : draft pass -> critique query -> elicit -> inject_late ->
//                  refinement pass
// The specialist is called exactly once; the reasoner once (early) or twice.
// Errors are rethrown as PipelineStageError tagged with the failing stage.
PipelineResult run_pipeline(const InjectionPlan& plan, const McqItem& item,
                            const TimeSeries& ts, ModelClient& tslm_client,
                            const EndpointProfile& tslm_profile,
                            ModelClient& grlm_client,
                            const EndpointProfile& grlm_profile,
                            const InstructionCue& cues, int decimals = 2);

}  // namespace tsinject
