#pragma once

#include "wciforge/enumerate.hpp"
#include "wciforge/presentation.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace wciforge {

using Json = nlohmann::ordered_json;

/// Largest accepted weight or degree in a document.
inline constexpr std::int64_t kMaxDocumentEntry = 1'000'000;
/// Largest accepted number of weights in a document.
inline constexpr std::size_t kMaxDocumentWeights = 64;

struct PresentationDocument {
  Json source;  // the document as written (inline input is converted)
  Presentation presentation;
};

/// Parses `{"weights":[...],"degrees":[...]}` or the inline form
/// `w=1,1,2,3 d=6`. Throws InputError on anything else.
PresentationDocument parse_document(std::string_view text);

/// Parses `codim,degree,weight`.
SearchCaps parse_caps(std::string_view text);

Json to_json(const Presentation& p);

}  // namespace wciforge
