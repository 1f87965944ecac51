#pragma once

#include <string>
#include <vector>

namespace tsinject {

enum class ChannelKind { acceleration, velocity, temperature, generic };

std::string channel_kind_name(ChannelKind kind);
ChannelKind channel_kind_from_name(const std::string& name);

// A channel label. An empty name means "unnamed"; unnamed channels are
// rendered as "Series k" (1-indexed position) by encode_text. Name uniqueness
// is enforced across the named channels only.
struct ChannelMeta {
  std::string name;
  ChannelKind kind = ChannelKind::generic;
};

// Immutable multivariate sensor record: D channels of T samples each.
// Construction validates all invariants (equal lengths, finite values,
// unique non-empty names); after that every accessor is const and the type
// is safe to share across threads.
class TimeSeries {
 public:
  TimeSeries(std::vector<ChannelMeta> channels,
             std::vector<std::vector<double>> values_by_channel,
             double sample_interval = 1.0);

  std::size_t length() const { return length_; }            // T
  std::size_t channel_count() const { return channels_.size(); }  // D
  double sample_interval() const { return sample_interval_; }

  const ChannelMeta& channel(std::size_t d) const { return channels_.at(d); }
  const std::vector<ChannelMeta>& channels() const { return channels_; }
  const std::vector<double>& values(std::size_t d) const { return values_.at(d); }
  double value(std::size_t t, std::size_t d) const { return values_.at(d).at(t); }

  // First channel of the given kind, or -1 when absent.
  int find_kind(ChannelKind kind) const;

 private:
  std::vector<ChannelMeta> channels_;
  std::vector<std::vector<double>> values_;  // channel-major, each length T
  double sample_interval_;
  std::size_t length_;
};

// Renders one value in fixed-decimal notation (no exponent, trailing zeros
// kept), rounding halves away from zero; "-0.00" collapses to "0.00".
// Shared by encode_text and the tests' independent formatting oracle.
std::string format_fixed(double value, int decimals);

// Object-literal text encoding consumed by model endpoints:
//   {"name": [v, v, ...], "name2": [...]}
// one space after every comma, channel order preserved, unnamed channels
// shown as "Series k". Byte-deterministic for identical inputs.
std::string encode_text(const TimeSeries& ts, int decimals = 2);

// Strict inverse of encode_text (kinds come back as generic). Throws
// MalformedEncoding on any deviation from the grammar, duplicate keys,
// ragged rows, or empty objects/arrays.
TimeSeries parse_encoded(const std::string& text);

// Downsamples every channel to exactly target_len samples by equal-width
// window means (window i covers [floor(i*T/L), floor((i+1)*T/L))), then
// optionally z-scores each channel (population std; zero-variance channels
// map to all-zeros). sample_interval is rescaled by T/L.
// Throws InvalidTarget when target_len is 0 or exceeds T.
TimeSeries preprocess(const TimeSeries& ts, std::size_t target_len, bool normalize);

}  // namespace tsinject
