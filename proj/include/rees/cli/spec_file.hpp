#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rees/derivation.hpp"

namespace rees::cli {

struct SpecOptions {
  std::optional<int> bound;
  std::optional<int> max_iter;
  std::optional<std::size_t> max_pairs;
};

// A parsed spec file:
//
//   ring: x, y, u, v
//   relations: x*v - y*u - 1
//   derivation: u -> x; v -> y
//   options: bound = 16; max-iter = 8
//
// `#` starts a comment. Section bodies may continue on later lines; items are
// separated by ';' or line breaks (',' or line breaks for `ring:`).
struct SpecFile {
  RingPtr ring;
  std::vector<Poly> relations;
  std::vector<Poly> images;  // one per variable, zero when not given
  SpecOptions options;
};

SpecFile parse_spec(std::string_view text);
SpecFile load_spec(const std::filesystem::path& path);

QuotientAlgebra spec_algebra(const SpecFile& spec, const GbOptions& options = {});
Derivation spec_derivation(const SpecFile& spec, const GbOptions& options = {});

// Throws DerivationError or NilpotencyError when the derivation is not a
// well-defined locally nilpotent derivation.
void validate(const Derivation& d, int bound);

}  // namespace rees::cli
