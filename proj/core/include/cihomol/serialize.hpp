#pragma once

#include <filesystem>
#include <string>

#include "cihomol/module.hpp"

namespace cihomol {

/// Ring spec grammar: p=<uint>;exps=<uint>(,<uint>)*
/// Errors carry the byte position of the offending character.
Ring parse_ring_spec(const std::string& spec);

/// Canonical module file, bit-exact under write-then-parse:
/// {"actions":[[...],...],"dim":n,"ring":"p=..;exps=.."} plus newline.
std::string module_to_json(const Module& m);
/// Parses and validates all module invariants (entry ranges, commuting,
/// nilpotency); errors name the failed invariant and matrix indices.
Module module_from_json(const std::string& text);

Module load_module(const std::filesystem::path& path);
void save_module(const Module& m, const std::filesystem::path& path);

/// FNV-1a 64 over the canonical module file, as 16 hex digits.
std::string content_hash(const Module& m);
std::uint64_t fnv1a(const std::string& bytes);

} // namespace cihomol
