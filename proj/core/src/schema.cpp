#include "convobench/schema.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

namespace convobench {

using nlohmann::json;

namespace {

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string to_upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::string trim(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(begin, end - begin + 1));
}

bool contains_word(std::string_view haystack, std::string_view needle) {
  return to_lower(haystack).find(needle) != std::string::npos;
}

NormalizeHint hint_for(const FieldSpec& field, LeafType type) {
  if (type == LeafType::Integer &&
      (contains_word(field.id, "phone") || contains_word(field.label, "phone"))) {
    return NormalizeHint::Phone;
  }
  if (type == LeafType::Text &&
      (contains_word(field.id, "postal") || contains_word(field.label, "postal"))) {
    return NormalizeHint::PostalCode;
  }
  return NormalizeHint::None;
}

}  // namespace

std::string to_string(AgentMode mode) {
  return mode == AgentMode::OneShot ? "one_shot" : "adaptive";
}

std::string to_string(ProfileKind kind) {
  return kind == ProfileKind::Standard ? "standard" : "ambiguous";
}

AgentMode agent_mode_from_string(std::string_view text) {
  if (text == "one_shot") return AgentMode::OneShot;
  if (text == "adaptive") return AgentMode::Adaptive;
  throw ConfigError("unknown agent mode: '" + std::string(text) + "'");
}

ProfileKind profile_kind_from_string(std::string_view text) {
  if (text == "standard") return ProfileKind::Standard;
  if (text == "ambiguous") return ProfileKind::Ambiguous;
  throw ConfigError("unknown profile kind: '" + std::string(text) + "'");
}

std::string to_string(LeafType type) {
  switch (type) {
    case LeafType::Text: return "text";
    case LeafType::Integer: return "integer";
    case LeafType::Decimal: return "decimal";
    case LeafType::Boolean: return "boolean";
    case LeafType::Date: return "date";
    case LeafType::Enum: return "enum";
    case LeafType::Currency: return "currency";
  }
  return "unknown";
}

FieldKind FieldKind::enumeration(std::vector<std::string> options) {
  FieldKind kind{Tag::Enum};
  kind.options = std::move(options);
  return kind;
}

FieldKind FieldKind::list(int max_len, std::vector<FieldSpec> item_fields) {
  FieldKind kind{Tag::List};
  kind.max_len = max_len;
  kind.item_fields = std::move(item_fields);
  return kind;
}

std::string render_value(const CanonicalValue& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  return std::get<bool>(value) ? "true" : "false";
}

// ---------------------------------------------------------------------------
// Flattening
// ---------------------------------------------------------------------------

namespace {

void validate_kind(const FieldSpec& field) {
  switch (field.kind.tag) {
    case FieldKind::Tag::Enum: {
      if (field.kind.options.empty()) {
        throw SchemaError("field '" + field.id + "': enum has no options");
      }
      std::set<std::string> seen;
      for (const auto& option : field.kind.options) {
        auto key = to_lower(trim(option));
        if (key.empty()) throw SchemaError("field '" + field.id + "': empty enum option");
        if (!seen.insert(key).second) {
          throw SchemaError("field '" + field.id + "': duplicate enum option '" + option + "'");
        }
      }
      break;
    }
    case FieldKind::Tag::List:
      if (field.kind.max_len < 1) {
        throw SchemaError("field '" + field.id + "': list max_len must be >= 1");
      }
      if (field.kind.item_fields.empty()) {
        throw SchemaError("field '" + field.id + "': list has no item fields");
      }
      for (const auto& item : field.kind.item_fields) {
        if (item.kind.tag == FieldKind::Tag::List) {
          throw SchemaError("field '" + field.id + "': nested lists are not supported");
        }
      }
      break;
    default:
      break;
  }
}

LeafType scalar_leaf_type(FieldKind::Tag tag) {
  switch (tag) {
    case FieldKind::Tag::Text: return LeafType::Text;
    case FieldKind::Tag::Integer: return LeafType::Integer;
    case FieldKind::Tag::Decimal: return LeafType::Decimal;
    case FieldKind::Tag::Boolean: return LeafType::Boolean;
    case FieldKind::Tag::Date: return LeafType::Date;
    case FieldKind::Tag::Enum: return LeafType::Enum;
    default: throw SchemaError("not a scalar kind");
  }
}

struct Flattener {
  std::vector<LeafSpec> leaves;
  std::vector<QuestionGroup> groups;

  void add_field(const FieldSpec& field, const std::string& path_prefix,
                 const std::string& label_prefix, bool group_per_field) {
    validate_kind(field);
    const std::string path = path_prefix + field.id;
    const std::string label = label_prefix.empty() ? field.label : label_prefix + field.label;

    switch (field.kind.tag) {
      case FieldKind::Tag::Money: {
        QuestionGroup group{QuestionGroup::Kind::Money,
                            label + " (amount and the currency)", {}};
        group.leaves.push_back(leaves.size());
        leaves.push_back({path + ".amount", label + " amount", LeafType::Decimal, {},
                          NormalizeHint::None, field.required});
        group.leaves.push_back(leaves.size());
        leaves.push_back({path + ".currency", label + " currency", LeafType::Currency, {},
                          NormalizeHint::None, field.required});
        if (group_per_field) groups.push_back(std::move(group));
        break;
      }
      case FieldKind::Tag::List: {
        for (int entry = 0; entry < field.kind.max_len; ++entry) {
          const std::string entry_path = path + "[" + std::to_string(entry) + "].";
          const std::size_t span_begin = leaves.size();
          for (const auto& item : field.kind.item_fields) {
            // Item leaves inherit the entry context in their label.
            add_field(item, entry_path,
                      label + " entry " + std::to_string(entry + 1) + " ", false);
          }
          std::ostringstream entry_label;
          entry_label << label << " (entry " << entry + 1 << " of " << field.kind.max_len
                      << ": ";
          for (std::size_t i = 0; i < field.kind.item_fields.size(); ++i) {
            if (i > 0) entry_label << (i + 1 == field.kind.item_fields.size() ? " and " : ", ");
            entry_label << field.kind.item_fields[i].label;
          }
          entry_label << ")";
          QuestionGroup group{QuestionGroup::Kind::ListEntry, entry_label.str(), {}};
          for (std::size_t i = span_begin; i < leaves.size(); ++i) group.leaves.push_back(i);
          if (group_per_field) groups.push_back(std::move(group));
        }
        break;
      }
      default: {
        const LeafType type = scalar_leaf_type(field.kind.tag);
        if (group_per_field) {
          groups.push_back({QuestionGroup::Kind::Scalar, label, {leaves.size()}});
        }
        leaves.push_back({path, label, type, field.kind.options, hint_for(field, type),
                          field.required});
        break;
      }
    }
  }
};

}  // namespace

DataSchema DataSchema::from_fields(std::string name, std::vector<FieldSpec> fields) {
  if (fields.empty()) throw SchemaError("schema '" + name + "' declares no fields");

  Flattener flattener;
  for (const auto& field : fields) {
    if (trim(field.id).empty()) throw SchemaError("schema field with empty id");
    flattener.add_field(field, "", "", /*group_per_field=*/true);
  }

  DataSchema schema;
  schema.name_ = std::move(name);
  schema.fields_ = std::move(fields);
  schema.leaves_ = std::move(flattener.leaves);
  schema.groups_ = std::move(flattener.groups);
  for (std::size_t i = 0; i < schema.leaves_.size(); ++i) {
    if (!schema.index_.emplace(schema.leaves_[i].path, i).second) {
      throw SchemaError("duplicate leaf id '" + schema.leaves_[i].path + "'");
    }
  }
  return schema;
}

bool DataSchema::has_leaf(std::string_view path) const {
  return index_.find(path) != index_.end();
}

const LeafSpec& DataSchema::leaf(std::string_view path) const {
  return leaves_[leaf_index(path)];
}

std::size_t DataSchema::leaf_index(std::string_view path) const {
  auto it = index_.find(path);
  if (it == index_.end()) {
    throw SchemaError("unknown leaf path '" + std::string(path) + "'");
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Schema document
// ---------------------------------------------------------------------------

namespace {

FieldSpec parse_field(const json& node);

FieldKind parse_kind(const json& node, const std::string& id) {
  const std::string kind = node.at("kind").get<std::string>();
  if (kind == "text") return FieldKind::text();
  if (kind == "integer") return FieldKind::integer();
  if (kind == "decimal") return FieldKind::decimal();
  if (kind == "boolean") return FieldKind::boolean();
  if (kind == "date") return FieldKind::date();
  if (kind == "money") return FieldKind::money();
  if (kind == "enum") {
    if (!node.contains("options") || !node["options"].is_array()) {
      throw SchemaError("field '" + id + "': enum requires an options array");
    }
    return FieldKind::enumeration(node["options"].get<std::vector<std::string>>());
  }
  if (kind == "list") {
    if (!node.contains("max_len") || !node["max_len"].is_number_integer()) {
      throw SchemaError("field '" + id + "': list requires integer max_len");
    }
    if (!node.contains("item_fields") || !node["item_fields"].is_array()) {
      throw SchemaError("field '" + id + "': list requires item_fields");
    }
    std::vector<FieldSpec> items;
    for (const auto& item : node["item_fields"]) items.push_back(parse_field(item));
    return FieldKind::list(node["max_len"].get<int>(), std::move(items));
  }
  throw SchemaError("field '" + id + "': unknown kind '" + kind + "'");
}

FieldSpec parse_field(const json& node) {
  if (!node.is_object() || !node.contains("id") || !node.contains("kind")) {
    throw SchemaError("schema field must be an object with id and kind");
  }
  FieldSpec field;
  field.id = node.at("id").get<std::string>();
  field.label = node.value("label", field.id);
  field.required = node.value("required", true);
  field.kind = parse_kind(node, field.id);
  return field;
}

}  // namespace

DataSchema load_schema(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed schema document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("fields") ||
      !doc["fields"].is_array()) {
    throw SchemaError("schema document requires a name and a fields array");
  }
  std::vector<FieldSpec> fields;
  for (const auto& node : doc["fields"]) fields.push_back(parse_field(node));
  return DataSchema::from_fields(doc["name"].get<std::string>(), std::move(fields));
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

namespace {

// Strips thousands separators and one leading currency symbol ($, €, £) from
// a numeric string. € and £ are multi-byte in UTF-8.
std::string strip_numeric_decorations(std::string_view raw) {
  std::string text = trim(raw);
  for (std::string_view symbol : {"$", "€", "£"}) {
    if (text.rfind(symbol, 0) == 0) {
      text = trim(text.substr(symbol.size()));
      break;
    }
  }
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == ',') continue;
    out.push_back(c);
  }
  return out;
}

bool all_digits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::optional<std::int64_t> parse_int64(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// Exact decimal canonicalization on the digit string; no floating point.
// "0060,000.50" -> "60000.5", "60000.00" -> "60000", "-0" -> "0".
std::optional<std::string> canonical_decimal(std::string_view stripped) {
  std::string text(stripped);
  if (text.empty()) return std::nullopt;

  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }

  std::string int_part, frac_part;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_dot ? frac_part : int_part).push_back(c);
    } else {
      return std::nullopt;
    }
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;

  while (int_part.size() > 1 && int_part.front() == '0') int_part.erase(int_part.begin());
  if (int_part.empty()) int_part = "0";
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();

  std::string out;
  if (negative && !(int_part == "0" && frac_part.empty())) out.push_back('-');
  out += int_part;
  if (!frac_part.empty()) {
    out.push_back('.');
    out += frac_part;
  }
  return out;
}

bool valid_date(int day, int month, int year) {
  if (year < 1 || month < 1 || month > 12 || day < 1) return false;
  static constexpr int days_in_month[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int max_day = days_in_month[month - 1];
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  if (month == 2 && leap) max_day = 29;
  return day <= max_day;
}

// Accepts DD-MM-YYYY or YYYY-MM-DD, emits zero-padded DD-MM-YYYY. A four
// digit first segment selects the year-first reading.
std::optional<std::string> canonical_date(std::string_view raw) {
  std::string text = trim(raw);
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == '-') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() != 3) return std::nullopt;
  for (const auto& part : parts) {
    if (!all_digits(part) || part.size() > 4) return std::nullopt;
  }

  int day = 0, month = 0, year = 0;
  if (parts[0].size() == 4) {
    year = *parse_int64(parts[0]);
    month = static_cast<int>(*parse_int64(parts[1]));
    day = static_cast<int>(*parse_int64(parts[2]));
  } else {
    day = static_cast<int>(*parse_int64(parts[0]));
    month = static_cast<int>(*parse_int64(parts[1]));
    year = static_cast<int>(*parse_int64(parts[2]));
    if (parts[2].size() != 4) return std::nullopt;
  }
  if (!valid_date(day, month, year)) return std::nullopt;

  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%02d-%02d-%04d", day, month, year);
  return std::string(buffer);
}

}  // namespace

std::optional<CanonicalValue> try_normalize(const LeafSpec& leaf, std::string_view raw,
                                            std::string* error) {
  auto fail = [&](const std::string& why) -> std::optional<CanonicalValue> {
    if (error) *error = why;
    return std::nullopt;
  };

  const std::string trimmed = trim(raw);
  if (trimmed.empty()) return fail("empty value");

  switch (leaf.type) {
    case LeafType::Text: {
      if (leaf.hint == NormalizeHint::PostalCode) {
        std::string out;
        for (char c : trimmed) {
          if (c == ' ') continue;
          out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
        if (out.empty()) return fail("empty postal code");
        return CanonicalValue{out};
      }
      return CanonicalValue{trimmed};
    }
    case LeafType::Integer: {
      if (leaf.hint == NormalizeHint::Phone) {
        std::string digits;
        for (char c : trimmed) {
          if (std::isdigit(static_cast<unsigned char>(c))) digits.push_back(c);
        }
        if (digits.empty()) return fail("no digits in phone number");
        auto value = parse_int64(digits);
        if (!value) return fail("phone number out of range");
        return CanonicalValue{*value};
      }
      const std::string stripped = strip_numeric_decorations(trimmed);
      auto value = parse_int64(stripped);
      if (!value) return fail("not an integer: '" + trimmed + "'");
      return CanonicalValue{*value};
    }
    case LeafType::Decimal: {
      auto value = canonical_decimal(strip_numeric_decorations(trimmed));
      if (!value) return fail("not a decimal: '" + trimmed + "'");
      return CanonicalValue{*value};
    }
    case LeafType::Boolean: {
      const std::string lowered = to_lower(trimmed);
      if (lowered == "yes" || lowered == "true") return CanonicalValue{true};
      if (lowered == "no" || lowered == "false") return CanonicalValue{false};
      return fail("not a boolean: '" + trimmed + "'");
    }
    case LeafType::Date: {
      auto value = canonical_date(trimmed);
      if (!value) return fail("not a valid date: '" + trimmed + "'");
      return CanonicalValue{*value};
    }
    case LeafType::Enum: {
      const std::string lowered = to_lower(trimmed);
      for (const auto& option : leaf.enum_options) {
        if (to_lower(option) == lowered) return CanonicalValue{option};
      }
      return fail("'" + trimmed + "' is not an option of " + leaf.path);
    }
    case LeafType::Currency: {
      const std::string code = to_upper(trimmed);
      if (code.size() != 3 || !std::all_of(code.begin(), code.end(), [](unsigned char c) {
            return std::isalpha(c) != 0;
          })) {
        return fail("not a three-letter currency code: '" + trimmed + "'");
      }
      return CanonicalValue{code};
    }
  }
  return fail("unhandled leaf type");
}

CanonicalValue normalize(const LeafSpec& leaf, std::string_view raw) {
  std::string error;
  auto value = try_normalize(leaf, raw, &error);
  if (!value) throw NormalizeError(leaf.path + ": " + error);
  return *value;
}

bool compare_leaf(const FieldValue& actual, const CanonicalValue& expected) {
  return actual.state == FieldValue::State::Filled && actual.value == expected;
}

// ---------------------------------------------------------------------------
// Instances and snapshots
// ---------------------------------------------------------------------------

DataModelInstance DataModelInstance::empty(const DataSchema& schema) {
  DataModelInstance instance;
  instance.schema_name_ = schema.name();
  for (const auto& leaf : schema.leaves()) {
    instance.values_.emplace(leaf.path, FieldValue::null());
  }
  return instance;
}

const FieldValue& DataModelInstance::at(std::string_view path) const {
  auto it = values_.find(path);
  if (it == values_.end()) {
    throw SchemaError("instance has no leaf '" + std::string(path) + "'");
  }
  return it->second;
}

void DataModelInstance::set(std::string_view path, FieldValue value) {
  auto it = values_.find(path);
  if (it == values_.end()) {
    throw SchemaError("instance has no leaf '" + std::string(path) + "'");
  }
  it->second = std::move(value);
}

std::size_t DataModelInstance::count(FieldValue::State state) const {
  return static_cast<std::size_t>(std::count_if(
      values_.begin(), values_.end(), [&](const auto& kv) { return kv.second.state == state; }));
}

ApplyResult apply_snapshot(const DataSchema& schema, const DataModelInstance& instance,
                           const Snapshot& snapshot) {
  ApplyResult result{instance, {}};

  for (const auto& [path, entry] : snapshot) {
    if (!schema.has_leaf(path)) {
      result.violations.push_back({Violation::Kind::UnknownLeaf, path, "not a schema leaf"});
      continue;
    }
    const FieldValue& current = result.instance.at(path);

    switch (entry.kind) {
      case SnapshotEntry::Kind::Null:
        if (current.state != FieldValue::State::Null) {
          result.violations.push_back(
              {Violation::Kind::Regression, path, "cannot reset a populated leaf"});
        }
        break;
      case SnapshotEntry::Kind::Unclear:
        if (current.state == FieldValue::State::Filled) {
          result.violations.push_back(
              {Violation::Kind::Regression, path, "cannot mark a filled leaf unclear"});
        } else {
          result.instance.set(path, FieldValue::unclear());
        }
        break;
      case SnapshotEntry::Kind::Value: {
        std::string error;
        auto value = try_normalize(schema.leaf(path), entry.raw, &error);
        if (!value) {
          result.violations.push_back({Violation::Kind::BadValue, path, error});
          break;
        }
        if (current.state == FieldValue::State::Filled) {
          if (current.value != *value) {
            result.violations.push_back(
                {Violation::Kind::Conflict, path,
                 "filled with '" + render_value(current.value) + "', proposed '" +
                     render_value(*value) + "'"});
          }
          break;
        }
        result.instance.set(path, FieldValue::filled(std::move(*value)));
        break;
      }
    }
  }
  return result;
}

bool is_terminal(const DataModelInstance& instance, AgentMode mode) {
  for (const auto& [path, value] : instance.values()) {
    if (mode == AgentMode::OneShot) {
      if (value.state == FieldValue::State::Null) return false;
    } else {
      if (value.state != FieldValue::State::Filled) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ground truth
// ---------------------------------------------------------------------------

GroundTruthProfile load_ground_truth(std::string_view json_text, const DataSchema& schema) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed ground-truth document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_object()) {
    throw SchemaError("ground-truth document requires a values object");
  }

  GroundTruthProfile profile;
  for (const auto& [path, raw] : doc["values"].items()) {
    if (!schema.has_leaf(path)) {
      throw SchemaError("ground truth names unknown leaf '" + path + "'");
    }
    std::string text;
    if (raw.is_string()) {
      text = raw.get<std::string>();
    } else if (raw.is_boolean()) {
      text = raw.get<bool>() ? "true" : "false";
    } else if (raw.is_number_integer()) {
      text = std::to_string(raw.get<std::int64_t>());
    } else if (raw.is_number()) {
      text = raw.dump();
    } else {
      throw SchemaError("ground truth leaf '" + path + "' must be a scalar");
    }
    profile.values.emplace(path, normalize(schema.leaf(path), text));
  }
  for (const auto& leaf : schema.leaves()) {
    if (!profile.values.contains(leaf.path)) {
      throw SchemaError("ground truth missing leaf '" + leaf.path + "'");
    }
  }

  if (doc.contains("ambiguity_script")) {
    if (!doc["ambiguity_script"].is_object()) {
      throw SchemaError("ambiguity_script must be an object");
    }
    for (const auto& [path, entry] : doc["ambiguity_script"].items()) {
      if (!profile.values.contains(path)) {
        throw SchemaError("ambiguity script names unknown leaf '" + path + "'");
      }
      if (!entry.is_object() || !entry.contains("vague") || !entry.contains("clarified")) {
        throw SchemaError("ambiguity script for '" + path + "' requires vague and clarified");
      }
      profile.ambiguity_script.emplace(
          path, AmbiguityEntry{entry["vague"].get<std::string>(),
                               entry["clarified"].get<std::string>()});
    }
  }
  return profile;
}

// ---------------------------------------------------------------------------
// Digest
// ---------------------------------------------------------------------------

std::string instance_digest(const DataSchema& schema, const DataModelInstance& instance) {
  std::uint64_t hash = 14695981039346656037ULL;
  auto mix = [&hash](std::string_view text) {
    for (unsigned char c : text) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
  };

  for (const auto& leaf : schema.leaves()) {
    const FieldValue& value = instance.at(leaf.path);
    mix(leaf.path);
    mix("=");
    switch (value.state) {
      case FieldValue::State::Null: mix("null"); break;
      case FieldValue::State::Unclear: mix("unclear"); break;
      case FieldValue::State::Filled:
        // Tag the alternative so text "true" and boolean true differ.
        mix(value.value.index() == 0 ? "s:" : value.value.index() == 1 ? "i:" : "b:");
        mix(render_value(value.value));
        break;
    }
    mix("\n");
  }

  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buffer);
}

}  // namespace convobench
