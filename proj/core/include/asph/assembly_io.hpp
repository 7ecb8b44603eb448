#pragma once

#include "asph/assembly.hpp"

#include <filesystem>
#include <string>

namespace asph::assembly {

/// Structured document:
/// {"blocks": [{"id", "kind", "params", "reversed"}], "gluings": [{"a": [id, port], "b": [id, port]}]}
std::string to_document(const Assembly& a, int indent = 2);

/// Rebuilds the assembly, re-running every constructor and port check.
/// Throws InvalidInput on malformed documents and GluingError on refused gluings.
Assembly from_document(const std::string& text);

void save(const Assembly& a, const std::filesystem::path& path);
Assembly load(const std::filesystem::path& path);

}  // namespace asph::assembly
