#pragma once

#include <string>

#include "grpdeg/group.hpp"

namespace grpdeg {

/// GroupSpec as JSON, e.g. {"family":"gendicyclic","n":6,"gamma_sq":"b"} or
/// {"family":"product","left":{...},"right":{...}}.
std::string spec_to_json(const GroupSpec& spec);

/// Inverse of spec_to_json. Throws DomainError on malformed input or
/// parameters outside the family's domain.
GroupSpec spec_from_json(const std::string& text);

}  // namespace grpdeg
