#include "wciforge/document.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace wciforge {

namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::int64_t parse_integer(std::string_view token, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw InputError(std::string(what) + ": '" + std::string(token) + "' is not an integer");
  }
  return value;
}

void check_entry(std::int64_t value, std::string_view field) {
  if (value > kMaxDocumentEntry) {
    throw InputError(std::string(field) + " entry " + std::to_string(value) +
                     " exceeds the supported maximum " + std::to_string(kMaxDocumentEntry));
  }
}

std::vector<std::int64_t> split_list(std::string_view body, std::string_view field) {
  std::vector<std::int64_t> values;
  if (body.empty()) {
    return values;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    const auto token = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    values.push_back(parse_integer(token, field));
    check_entry(values.back(), field);
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return values;
}

std::vector<std::int64_t> json_list(const Json& value, std::string_view field) {
  if (!value.is_array()) {
    throw InputError(std::string(field) + " must be an array of integers");
  }
  std::vector<std::int64_t> values;
  for (const auto& entry : value) {
    if (!entry.is_number_integer()) {
      throw InputError(std::string(field) + " must contain only integers, got " + entry.dump());
    }
    if (entry.is_number_unsigned() &&
        entry.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxDocumentEntry)) {
      throw InputError(std::string(field) + " entry " + entry.dump() +
                       " exceeds the supported maximum " + std::to_string(kMaxDocumentEntry));
    }
    values.push_back(entry.get<std::int64_t>());
    check_entry(values.back(), field);
  }
  return values;
}

Presentation build(std::vector<std::int64_t> weights, std::vector<std::int64_t> degrees) {
  if (weights.size() > kMaxDocumentWeights) {
    throw InputError("at most " + std::to_string(kMaxDocumentWeights) + " weights supported, got " +
                     std::to_string(weights.size()));
  }
  return Presentation::normalize(std::move(weights), std::move(degrees));
}

PresentationDocument parse_json_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw InputError("presentation document must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "weights" && key != "degrees") {
      throw InputError("unknown field '" + key + "' in presentation document");
    }
  }
  if (!doc.contains("weights")) {
    throw InputError("presentation document lacks 'weights'");
  }
  auto weights = json_list(doc["weights"], "weights");
  std::vector<std::int64_t> degrees;
  if (doc.contains("degrees")) {
    degrees = json_list(doc["degrees"], "degrees");
  }
  return {doc, build(std::move(weights), std::move(degrees))};
}

PresentationDocument parse_inline_document(std::string_view text) {
  std::optional<std::vector<std::int64_t>> weights;
  std::optional<std::vector<std::int64_t>> degrees;
  std::istringstream tokens{std::string(text)};
  std::string token;
  while (tokens >> token) {
    const std::string_view view(token);
    if (view.starts_with("w=")) {
      if (weights) {
        throw InputError("weights given twice");
      }
      weights = split_list(view.substr(2), "weights");
    } else if (view.starts_with("d=")) {
      if (degrees) {
        throw InputError("degrees given twice");
      }
      degrees = split_list(view.substr(2), "degrees");
    } else {
      throw InputError("unrecognized token '" + token + "' (expected w=... or d=...)");
    }
  }
  if (!weights) {
    throw InputError("presentation lacks 'w=' weights");
  }
  Json source;
  source["weights"] = *weights;
  source["degrees"] = degrees.value_or(std::vector<std::int64_t>{});
  return {source, build(*weights, degrees.value_or(std::vector<std::int64_t>{}))};
}

}  // namespace

PresentationDocument parse_document(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) {
    throw InputError("empty presentation document");
  }
  if (body.front() == '{') {
    return parse_json_document(body);
  }
  return parse_inline_document(body);
}

SearchCaps parse_caps(std::string_view text) {
  const auto values = split_list(trim(text), "caps");
  if (values.size() != 3) {
    throw InputError("caps must be 'codim,degree,weight', got '" + std::string(text) + "'");
  }
  for (auto v : values) {
    if (v < 1 || v > 1000) {
      throw InputError("caps must lie in 1..1000, got " + std::to_string(v));
    }
  }
  SearchCaps caps{static_cast<int>(values[0]), static_cast<int>(values[1]),
                  static_cast<int>(values[2])};
  return caps;
}

Json to_json(const Presentation& p) {
  Json out;
  out["weights"] = p.weights();
  out["degrees"] = p.degrees();
  return out;
}

}  // namespace wciforge
