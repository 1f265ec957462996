#pragma once

// JSON instance documents. Keys are emitted in sorted order and lists in a
// fixed order, so equal documents serialize to identical bytes.

#include <string>

#include "json.hpp"
#include "synlab/document.hpp"

namespace synlab {

/// Throws InputError on malformed or inconsistent input.
Document load_document(const nlohmann::json& j);
Document load_document_file(const std::string& path);

nlohmann::json to_json(const Document& d);
nlohmann::json to_json(const Structure& s);
/// Appends one structure to the matching list of a document.
void add_structure(Document& d, const Structure& s);

std::string canonical_dump(const nlohmann::json& j);

}  // namespace synlab
