#pragma once

#include <json.hpp>

#include <string>

namespace qcount::toml_lite {

/// Reads the TOML subset a job configuration needs — bare-key `key = value`
/// pairs, `[table]` headers, `#` comments, and values that are strings,
/// integers, booleans, or (nested) arrays — into a JSON document.
nlohmann::json parse(const std::string& text);

}  // namespace qcount::toml_lite
