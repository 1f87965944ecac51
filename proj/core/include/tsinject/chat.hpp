#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace tsinject {

enum class Role { system, user, assistant };

std::string role_name(Role role);

struct ChatMessage {
  Role role = Role::user;
  std::string content;
  // Prefill is only meaningful on a trailing assistant message: the endpoint
  // continues this text instead of starting a fresh turn.
  bool is_prefill = false;
};

struct EndpointProfile {
  std::string base_url;
  std::string model_name;
  bool supports_prefill = true;
  std::string think_open = "<think>";
  std::string think_close = "</think>";
  std::string answer_open = "<answer>";
  std::string answer_close = "</answer>";
  int max_tokens = 1024;
  double temperature = 0.0;  // greedy by default so eval runs replay exactly
  double timeout_seconds = 30.0;
  int retry_budget = 2;

  void validate() const;  // tags non-empty, open != close, retry_budget >= 0
};

struct GenerationResult {
  std::string raw_text;
  std::string think_text;   // first think-tag pair's body, if any
  std::string answer_text;  // first answer-tag pair's body, if any
};

// Splits raw endpoint text into think/answer segments using the profile's
// tags; each segment is the body of the first matched open/close pair, and
// later pairs are treated as plain content.
GenerationResult split_tagged(const std::string& raw, const EndpointProfile& profile);

// Predicate-scripted response: first entry whose predicate accepts the
// request text (all message contents joined with '\n') wins.
struct ScriptEntry {
  std::function<bool(const std::string&)> predicate;
  std::string response;
};

// The request text a ScriptEntry predicate sees.
std::string concat_messages(const std::vector<ChatMessage>& messages);

// Base client: implements the retry/segmentation contract on top of a
// transport hook. Transport errors classified TransportFailure or
// DeadlineExceeded are retried with exponential backoff up to the profile's
// retry_budget; EndpointRefused and script errors are never retried.
class ModelClient {
 public:
  virtual ~ModelClient() = default;

  GenerationResult complete(const EndpointProfile& profile,
                            const std::vector<ChatMessage>& messages);

 protected:
  virtual std::string transport(const EndpointProfile& profile,
                                const std::vector<ChatMessage>& messages) = 0;
  // Overridable so offline tests can skip the wait.
  virtual void backoff_sleep(int attempt) const;
};

// Deterministic scripted endpoint for offline tests. The request log is
// internally synchronized; clients may be shared across threads.
class MockClient : public ModelClient {
 public:
  MockClient() = default;
  explicit MockClient(std::vector<ScriptEntry> script);

  void add(ScriptEntry entry);
  // Convenience: respond when every needle occurs in the request text.
  void add_contains(std::vector<std::string> needles, std::string response);

  std::size_t request_count() const;
  std::vector<std::string> request_log() const;  // snapshot

 protected:
  std::string transport(const EndpointProfile& profile,
                        const std::vector<ChatMessage>& messages) override;
  void backoff_sleep(int) const override {}  // offline: no waiting

 private:
  mutable std::mutex mutex_;
  std::vector<ScriptEntry> script_;
  std::vector<std::string> log_;
};

// Loads a JSON mock script: an array of {"contains": [..], "respond": ".."}
// entries, matched in order. Used by the CLI's --mock flag.
std::vector<ScriptEntry> load_script_json(const std::string& path);

// HTTP chat-completions transport (POST {base_url}/v1/chat/completions with
// {model, messages, max_tokens, temperature}); bearer token read from
// TSINJECT_API_KEY when present. Profile base URLs may come from
// TSINJECT_TSLM_URL / TSINJECT_GRLM_URL via profile_from_env.
class HttpClient : public ModelClient {
 public:
  HttpClient() = default;

 protected:
  std::string transport(const EndpointProfile& profile,
                        const std::vector<ChatMessage>& messages) override;
};

// Reads {kind}-specific URL env var ("tslm" or "grlm") into a profile.
EndpointProfile profile_from_env(const std::string& kind);

// Tags used by the instructional-proxy path for endpoints without prefill.
inline constexpr std::string_view kProxyThinkOpen = "<thinking>";
inline constexpr std::string_view kProxyThinkClose = "</thinking>";
// Fixed continuation instruction appended after the proxy-wrapped trace.
inline constexpr std::string_view kContinueInstruction =
    "continue the thinking process above";

// Returns base + one injection message, leaving base untouched. With prefill
// support: a trailing assistant prefill "think_open + trace" (deliberately
// unclosed so the endpoint continues the trace). Without: a user message
// wrapping the trace in the documented thinking tags followed by the fixed
// continuation instruction.
std::vector<ChatMessage> make_injected_request(const EndpointProfile& profile,
                                               const std::vector<ChatMessage>& base,
                                               const std::string& injected_trace);

}  // namespace tsinject
