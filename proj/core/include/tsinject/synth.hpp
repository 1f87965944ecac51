#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tsinject/timeseries.hpp"

namespace tsinject {

// Anomaly families. baseline_normal is the no-anomaly control; the other
// five cover the failure signatures the benchmark items ask about.
enum class Family {
  baseline_normal,
  vibration_ramp,
  spike_burst,
  periodicity_shift,
  thermal_runaway,
  level_shift,
};

inline constexpr std::array<Family, 6> kAllFamilies = {
    Family::baseline_normal,  Family::vibration_ramp,  Family::spike_burst,
    Family::periodicity_shift, Family::thermal_runaway, Family::level_shift,
};

std::string family_name(Family family);
Family family_from_name(const std::string& name);

enum class Stage { WhatHappened, HowHappened, SuggestedFix };

inline constexpr std::array<Stage, 3> kAllStages = {
    Stage::WhatHappened, Stage::HowHappened, Stage::SuggestedFix};

std::string stage_name(Stage stage);
Stage stage_from_name(const std::string& name);

// The fixed question wording used for every item of a stage.
std::string question_for_stage(Stage stage);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Everything generate_series needs: which anomaly to realize, how long the
// series is, which channels exist, and the parameter ranges sampled per seed.
struct GeneratorSpec {
  Family family = Family::baseline_normal;
  int length = 160;
  std::vector<ChannelKind> channel_kinds = {
      ChannelKind::acceleration, ChannelKind::velocity, ChannelKind::temperature};
  std::map<std::string, Interval> param_ranges;

  // Canonical spec for a family: shared "noise" / "onset_frac" ranges plus
  // the family's severity/frequency ranges, tuned so that the scripted
  // detector used in tests localizes the anomaly with a wide margin.
  static GeneratorSpec defaults(Family family, int length = 160);

  void validate() const;  // throws std::invalid_argument on violations
};

struct DiagnosticAnnotation {
  Family family = Family::baseline_normal;
  // Half-open [start, end) anomaly window; [0, 0) means "no anomaly".
  int window_start = 0;
  int window_end = 0;
  std::string what_text;
  std::string how_text;
  std::string fix_text;

  const std::string& text_for(Stage stage) const;
  bool has_anomaly() const { return window_end > window_start; }
};

struct AnswerBankEntry {
  std::string what;
  std::string how;
  std::string fix;
};

// family -> canonical (what / how / fix) answer texts. std::map iteration
// order is the enum order, which keeps distractor sampling deterministic.
using AnswerBank = std::map<Family, AnswerBankEntry>;

const AnswerBank& default_answer_bank();

struct McqItem {
  int series_id = -1;
  Stage stage = Stage::WhatHappened;
  std::string question_text;
  std::vector<std::string> options;
  int correct_index = -1;
  std::vector<Family> option_families;  // provenance, parallel to options
  std::uint64_t rng_seed = 0;
};

struct SeriesRecord {
  TimeSeries series;
  DiagnosticAnnotation annotation;
};

struct Dataset {
  std::uint64_t generation_seed = 0;
  std::vector<SeriesRecord> series;  // id == index
  std::vector<McqItem> items;        // 3 per series, stage order
};

// Draws one series + annotation. Pure function of (spec, seed): two calls
// agree bitwise.
std::pair<TimeSeries, DiagnosticAnnotation> generate_series(
    const GeneratorSpec& spec, std::uint64_t seed);

// One multiple-choice item: the annotation's canonical stage text plus
// n_options-1 distractors drawn from distinct other families, order shuffled
// by the seed. Throws InsufficientDistractors when the bank is too small.
McqItem build_mcq(const DiagnosticAnnotation& annotation, Stage stage,
                  const AnswerBank& bank, int n_options, std::uint64_t seed,
                  int series_id = -1);

struct DatasetConfig {
  int n_series = 110;
  std::vector<Family> families = {Family::vibration_ramp, Family::spike_burst,
                                  Family::periodicity_shift,
                                  Family::thermal_runaway, Family::level_shift};
  int n_options = 4;
  std::uint64_t seed = 0;
  int length = 160;
};

// Families assigned round-robin; each series gets an independent child seed
// derived from (seed, index) so parallel and serial builds are bit-identical.
Dataset build_dataset(const DatasetConfig& config);

// Line-delimited JSON: header line, then one line per series, then one line
// per item. load(save(ds)) reproduces every field.
void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(const std::string& path);

}  // namespace tsinject
