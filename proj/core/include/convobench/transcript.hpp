#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "convobench/schema.hpp"

namespace convobench {

enum class Role { User, Agent };

std::string to_string(Role role);

struct Turn {
  int index = 0;
  Role role = Role::User;
  std::string content;
  // Hex digest of the data-model instance after this turn was processed.
  std::string snapshot_digest;

  bool operator==(const Turn&) const = default;
};

// Ordered conversation history. Indices are contiguous from zero and roles
// strictly alternate, starting with the user's opening message.
class Transcript {
 public:
  const std::vector<Turn>& turns() const { return turns_; }
  bool empty() const { return turns_.empty(); }
  std::size_t size() const { return turns_.size(); }
  const Turn& back() const;

  // Appends with the next index. Throws TranscriptError when the role would
  // break alternation (or when the first turn is not a user turn).
  void append(Role role, std::string content, std::string snapshot_digest);

  bool operator==(const Transcript&) const = default;

 private:
  std::vector<Turn> turns_;
};

enum class Termination { Complete, MaxSteps, ParseFailure, BackendFailure };

std::string to_string(Termination termination);
Termination termination_from_string(std::string_view text);

// One finished conversation: configuration summary, full history, final fill
// state, and how it ended. Per-turn fill states are carried as digests on the
// turns and can be reconstructed exactly by replaying the agent envelopes.
struct RunRecord {
  std::string run_id;
  AgentMode mode = AgentMode::Adaptive;
  ProfileKind profile = ProfileKind::Standard;
  std::string backend = "scripted";
  std::uint64_t seed = 0;
  int max_iterations = 0;  // T
  Transcript transcript;
  DataModelInstance final_instance;
  Termination termination = Termination::MaxSteps;
  std::int64_t wall_ms = 0;

  bool operator==(const RunRecord&) const = default;
};

// Writes <run_id>.jsonl into `directory`: a header line with the run
// configuration, one line per turn, and a footer with the final instance,
// termination reason, and wall time. Returns the file path.
std::filesystem::path persist_run(const RunRecord& record, const std::filesystem::path& directory);

// Loads a run file back; the schema supplies leaf kinds for the final
// instance. Verifies structure and the final digest; throws PersistError on
// I/O failure or corruption (truncation, bad alternation, digest mismatch).
RunRecord load_run(const std::filesystem::path& path, const DataSchema& schema);

}  // namespace convobench
