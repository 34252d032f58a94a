#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "convobench/errors.hpp"

namespace convobench {

// How the agent is allowed to react to ambiguity: one-shot records it and
// moves on, adaptive asks follow-up questions until it is resolved.
enum class AgentMode { OneShot, Adaptive };

// Synthetic user flavours: standard answers are clear and complete, ambiguous
// answers are vague first and resolve only when the agent presses.
enum class ProfileKind { Standard, Ambiguous };

std::string to_string(AgentMode mode);
std::string to_string(ProfileKind kind);
AgentMode agent_mode_from_string(std::string_view text);
ProfileKind profile_kind_from_string(std::string_view text);

// ---------------------------------------------------------------------------
// Declared fields
// ---------------------------------------------------------------------------

struct FieldSpec;

// Kind of a declared field. Money and list are compound: a money field
// flattens to an amount/currency leaf pair, a bounded list to max_len copies
// of its item fields.
struct FieldKind {
  enum class Tag { Text, Integer, Decimal, Boolean, Date, Enum, Money, List };

  Tag tag = Tag::Text;
  std::vector<std::string> options;    // Tag::Enum only
  int max_len = 0;                     // Tag::List only
  std::vector<FieldSpec> item_fields;  // Tag::List only

  static FieldKind text() { return {Tag::Text}; }
  static FieldKind integer() { return {Tag::Integer}; }
  static FieldKind decimal() { return {Tag::Decimal}; }
  static FieldKind boolean() { return {Tag::Boolean}; }
  static FieldKind date() { return {Tag::Date}; }
  static FieldKind enumeration(std::vector<std::string> options);
  static FieldKind money() { return {Tag::Money}; }
  static FieldKind list(int max_len, std::vector<FieldSpec> item_fields);
};

struct FieldSpec {
  std::string id;
  std::string label;
  FieldKind kind;
  bool required = true;
};

// ---------------------------------------------------------------------------
// Canonical values
// ---------------------------------------------------------------------------

// Canonical values after normalization. Decimals are kept as exact canonical
// digit strings (never round-tripped through floating point); integers are
// 64-bit; everything text-like is a string.
using CanonicalValue = std::variant<std::string, std::int64_t, bool>;

// Plain-text rendering of a canonical value ("true"/"false" for booleans).
std::string render_value(const CanonicalValue& value);

struct FieldValue {
  enum class State { Null, Unclear, Filled };

  State state = State::Null;
  CanonicalValue value;  // meaningful only when state == Filled

  static FieldValue null() { return {}; }
  static FieldValue unclear() { return {State::Unclear, {}}; }
  static FieldValue filled(CanonicalValue v) { return {State::Filled, std::move(v)}; }

  bool operator==(const FieldValue&) const = default;
};

// ---------------------------------------------------------------------------
// Flattened schema
// ---------------------------------------------------------------------------

// Atomic leaf kinds after flattening compound fields.
enum class LeafType { Text, Integer, Decimal, Boolean, Date, Enum, Currency };

std::string to_string(LeafType type);

// Normalization variants recognized from the field's id/label: phone numbers
// (integer kind) drop all non-digits, postal codes (text kind) are uppercased
// with internal spaces removed.
enum class NormalizeHint { None, Phone, PostalCode };

// One atomic slot. `path` is the canonical leaf-path string: dot-separated
// ids with bracketed zero-based indices, e.g. "postal_code_history[0].year".
struct LeafSpec {
  std::string path;
  std::string label;
  LeafType type = LeafType::Text;
  std::vector<std::string> enum_options;  // LeafType::Enum only
  NormalizeHint hint = NormalizeHint::None;
  bool required = true;
};

// One conversational question unit: a scalar leaf, a money pair, or a single
// entry of a bounded list. Scripted participants ask and answer per group.
struct QuestionGroup {
  enum class Kind { Scalar, Money, ListEntry };

  Kind kind = Kind::Scalar;
  std::string label;
  std::vector<std::size_t> leaves;  // indices into DataSchema::leaves()
};

class DataSchema {
 public:
  DataSchema() = default;

  // Validates and flattens. Throws SchemaError on duplicate leaf ids, empty
  // or non-unique enum options, max_len < 1, nested lists, or no fields.
  static DataSchema from_fields(std::string name, std::vector<FieldSpec> fields);

  const std::string& name() const { return name_; }
  const std::vector<FieldSpec>& fields() const { return fields_; }

  // Deterministic flattening in document order; bounded lists expand to
  // max_len entries.
  const std::vector<LeafSpec>& leaves() const { return leaves_; }
  const std::vector<QuestionGroup>& groups() const { return groups_; }

  bool has_leaf(std::string_view path) const;
  const LeafSpec& leaf(std::string_view path) const;       // throws SchemaError
  std::size_t leaf_index(std::string_view path) const;     // throws SchemaError

 private:
  std::string name_;
  std::vector<FieldSpec> fields_;
  std::vector<LeafSpec> leaves_;
  std::vector<QuestionGroup> groups_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Parses and validates a schema document (JSON, see README for the format).
DataSchema load_schema(std::string_view json_text);

// ---------------------------------------------------------------------------
// Normalization and comparison
// ---------------------------------------------------------------------------

// Brings a raw textual value into canonical form for the leaf's kind:
//   text      trimmed (postal-code hint: uppercased, internal spaces removed)
//   integer   separators and a leading currency symbol stripped, exact parse
//             (phone hint: all non-digit characters dropped first)
//   decimal   as integer, plus an optional fraction; canonical digit string
//   boolean   yes/no/true/false, case-insensitive
//   date      DD-MM-YYYY or YYYY-MM-DD accepted, emitted as DD-MM-YYYY
//   enum      case-insensitive match, stored with the option's spelling
//   currency  three-letter code, uppercased
// Returns nullopt and fills `error` when the value cannot be parsed.
std::optional<CanonicalValue> try_normalize(const LeafSpec& leaf, std::string_view raw,
                                            std::string* error = nullptr);

// Throwing variant of try_normalize.
CanonicalValue normalize(const LeafSpec& leaf, std::string_view raw);

// True iff `actual` is Filled and its canonical value equals `expected`.
// Null and Unclear never match.
bool compare_leaf(const FieldValue& actual, const CanonicalValue& expected);

// ---------------------------------------------------------------------------
// Per-run fill state
// ---------------------------------------------------------------------------

class DataModelInstance {
 public:
  DataModelInstance() = default;

  // All leaves Null.
  static DataModelInstance empty(const DataSchema& schema);

  const std::string& schema_name() const { return schema_name_; }
  const std::map<std::string, FieldValue, std::less<>>& values() const { return values_; }

  const FieldValue& at(std::string_view path) const;  // throws SchemaError
  void set(std::string_view path, FieldValue value);  // path must already exist

  std::size_t count(FieldValue::State state) const;

  bool operator==(const DataModelInstance&) const = default;

 private:
  std::string schema_name_;
  std::map<std::string, FieldValue, std::less<>> values_;
};

// One proposed update for a leaf, as carried by a reply envelope.
struct SnapshotEntry {
  enum class Kind { Value, Unclear, Null };

  Kind kind = Kind::Null;
  std::string raw;  // Kind::Value only

  static SnapshotEntry value(std::string raw) { return {Kind::Value, std::move(raw)}; }
  static SnapshotEntry unclear() { return {Kind::Unclear, {}}; }
  static SnapshotEntry null() { return {}; }

  bool operator==(const SnapshotEntry&) const = default;
};

using Snapshot = std::map<std::string, SnapshotEntry, std::less<>>;

// A rejected snapshot transition; the previous state is kept.
struct Violation {
  enum class Kind {
    UnknownLeaf,  // key is not a leaf path of the schema
    Regression,   // Filled/Unclear proposed back to Null, or Unclear on Filled
    Conflict,     // Filled proposed to a different Filled value
    BadValue,     // raw value failed normalization
  };

  Kind kind = Kind::UnknownLeaf;
  std::string leaf;
  std::string detail;
};

struct ApplyResult {
  DataModelInstance instance;
  std::vector<Violation> violations;
};

// Applies a snapshot under monotonic transition rules. Allowed: Null->Filled,
// Null->Unclear, Unclear->Filled. Everything that would lose or change a
// Filled value (or drop an Unclear mark back to Null) is recorded as a
// Violation and the old state is kept. Re-proposing the current state is a
// no-op. Absent keys leave state unchanged.
ApplyResult apply_snapshot(const DataSchema& schema, const DataModelInstance& instance,
                           const Snapshot& snapshot);

// One-shot: every leaf populated (Unclear counts). Adaptive: every leaf
// Filled (Unclear must have been resolved).
bool is_terminal(const DataModelInstance& instance, AgentMode mode);

// ---------------------------------------------------------------------------
// Ground truth
// ---------------------------------------------------------------------------

struct AmbiguityEntry {
  std::string vague;
  std::string clarified;

  bool operator==(const AmbiguityEntry&) const = default;
};

// Canonical reference values for every leaf plus an optional ambiguity script
// (first answer / resolution answer) for a subset of leaves. Drives the
// synthetic user and anchors all scoring.
struct GroundTruthProfile {
  std::map<std::string, CanonicalValue, std::less<>> values;
  std::map<std::string, AmbiguityEntry, std::less<>> ambiguity_script;

  bool operator==(const GroundTruthProfile&) const = default;
};

// Parses a ground-truth document and validates it against the schema: every
// leaf must have a value (normalized on load), script keys must be leaves.
GroundTruthProfile load_ground_truth(std::string_view json_text, const DataSchema& schema);

// Content hash (FNV-1a 64, lowercase hex) over the instance in schema leaf
// order; identical instances always digest identically.
std::string instance_digest(const DataSchema& schema, const DataModelInstance& instance);

}  // namespace convobench
