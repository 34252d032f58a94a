#include "convobench/transcript.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace convobench {

using nlohmann::json;

std::string to_string(Role role) { return role == Role::User ? "user" : "agent"; }

const Turn& Transcript::back() const {
  if (turns_.empty()) throw TranscriptError("transcript is empty");
  return turns_.back();
}

void Transcript::append(Role role, std::string content, std::string snapshot_digest) {
  if (turns_.empty()) {
    if (role != Role::User) {
      throw TranscriptError("the first turn must be the user's opening message");
    }
  } else if (turns_.back().role == role) {
    throw TranscriptError("turn " + std::to_string(turns_.size()) +
                          " would break user/agent alternation");
  }
  turns_.push_back({static_cast<int>(turns_.size()), role, std::move(content),
                    std::move(snapshot_digest)});
}

std::string to_string(Termination termination) {
  switch (termination) {
    case Termination::Complete: return "complete";
    case Termination::MaxSteps: return "max_steps";
    case Termination::ParseFailure: return "parse_failure";
    case Termination::BackendFailure: return "backend_failure";
  }
  return "unknown";
}

Termination termination_from_string(std::string_view text) {
  if (text == "complete") return Termination::Complete;
  if (text == "max_steps") return Termination::MaxSteps;
  if (text == "parse_failure") return Termination::ParseFailure;
  if (text == "backend_failure") return Termination::BackendFailure;
  throw PersistError("unknown termination reason: '" + std::string(text) + "'");
}

namespace {

// Leaf value in the footer's "final" map. Decimals travel as strings so the
// exact canonical form survives; integers and booleans keep their JSON type.
json leaf_to_json(const FieldValue& value) {
  switch (value.state) {
    case FieldValue::State::Null: return nullptr;
    case FieldValue::State::Unclear: return "UNCLEAR";
    case FieldValue::State::Filled:
      if (const auto* s = std::get_if<std::string>(&value.value)) return *s;
      if (const auto* i = std::get_if<std::int64_t>(&value.value)) return *i;
      return std::get<bool>(value.value);
  }
  return nullptr;
}

FieldValue leaf_from_json(const json& node, const LeafSpec& leaf) {
  if (node.is_null()) return FieldValue::null();
  if (node.is_string() && node.get<std::string>() == "UNCLEAR") return FieldValue::unclear();
  if (node.is_boolean()) return FieldValue::filled(node.get<bool>());
  if (node.is_number_integer() && leaf.type != LeafType::Decimal) {
    return FieldValue::filled(node.get<std::int64_t>());
  }
  if (node.is_string()) return FieldValue::filled(node.get<std::string>());
  if (node.is_number()) return FieldValue::filled(node.dump());
  throw PersistError("final value for '" + leaf.path + "' has an unsupported type");
}

}  // namespace

std::filesystem::path persist_run(const RunRecord& record,
                                  const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    throw PersistError("cannot create '" + directory.string() + "': " + ec.message());
  }

  const std::filesystem::path path = directory / (record.run_id + ".jsonl");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.is_open()) throw PersistError("cannot open '" + path.string() + "' for writing");

  json header = {{"run", record.run_id},
                 {"mode", to_string(record.mode)},
                 {"profile", to_string(record.profile)},
                 {"backend", record.backend},
                 {"seed", record.seed},
                 {"T", record.max_iterations}};
  out << header.dump() << "\n";

  for (const Turn& turn : record.transcript.turns()) {
    json line = {{"t", turn.index},
                 {"role", to_string(turn.role)},
                 {"content", turn.content},
                 {"digest", turn.snapshot_digest}};
    out << line.dump() << "\n";
  }

  json final_values = json::object();
  for (const auto& [leaf_path, value] : record.final_instance.values()) {
    final_values[leaf_path] = leaf_to_json(value);
  }
  json footer = {{"final", final_values},
                 {"termination", to_string(record.termination)},
                 {"ms", record.wall_ms}};
  out << footer.dump() << "\n";

  if (!out.good()) throw PersistError("failed writing '" + path.string() + "'");
  return path;
}

RunRecord load_run(const std::filesystem::path& path, const DataSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw PersistError("cannot open '" + path.string() + "'");

  std::vector<json> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      lines.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw PersistError("corrupt run file '" + path.string() + "': " + e.what());
    }
  }
  if (lines.size() < 2) {
    throw PersistError("corrupt run file '" + path.string() + "': missing header or footer");
  }

  const json& header = lines.front();
  const json& footer = lines.back();
  if (!header.contains("run") || !footer.contains("final") || !footer.contains("termination")) {
    throw PersistError("corrupt run file '" + path.string() + "': truncated");
  }

  RunRecord record;
  try {
    record.run_id = header.at("run").get<std::string>();
    record.mode = agent_mode_from_string(header.at("mode").get<std::string>());
    record.profile = profile_kind_from_string(header.at("profile").get<std::string>());
    record.backend = header.at("backend").get<std::string>();
    record.seed = header.at("seed").get<std::uint64_t>();
    record.max_iterations = header.at("T").get<int>();

    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
      const json& node = lines[i];
      const std::string role = node.at("role").get<std::string>();
      if (node.at("t").get<int>() != static_cast<int>(i - 1)) {
        throw PersistError("turn indices are not contiguous");
      }
      record.transcript.append(role == "user" ? Role::User : Role::Agent,
                               node.at("content").get<std::string>(),
                               node.at("digest").get<std::string>());
    }

    record.final_instance = DataModelInstance::empty(schema);
    for (const auto& [leaf_path, node] : footer.at("final").items()) {
      if (!schema.has_leaf(leaf_path)) {
        throw PersistError("final instance names unknown leaf '" + leaf_path + "'");
      }
      record.final_instance.set(leaf_path, leaf_from_json(node, schema.leaf(leaf_path)));
    }
    record.termination = termination_from_string(footer.at("termination").get<std::string>());
    record.wall_ms = footer.at("ms").get<std::int64_t>();
  } catch (const json::exception& e) {
    throw PersistError("corrupt run file '" + path.string() + "': " + e.what());
  } catch (const TranscriptError& e) {
    throw PersistError("corrupt run file '" + path.string() + "': " + e.what());
  } catch (const ConfigError& e) {
    throw PersistError("corrupt run file '" + path.string() + "': " + e.what());
  }

  if (record.transcript.empty()) {
    throw PersistError("corrupt run file '" + path.string() + "': no turns");
  }
  if (record.transcript.back().snapshot_digest !=
      instance_digest(schema, record.final_instance)) {
    throw PersistError("corrupt run file '" + path.string() +
                       "': final instance does not match the last turn digest");
  }
  return record;
}

}  // namespace convobench
