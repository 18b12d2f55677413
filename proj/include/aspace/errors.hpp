#pragma once

#include <stdexcept>
#include <string>

namespace aspace {

// Base class for everything this library throws on bad input.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A violated precondition or invariant on otherwise well-formed values
// (unknown point, disconnected space where a connected one is required, ...).
struct domain_error : error {
  using error::error;
};

// Malformed textual input: poset files, group tables, hom specs, CLI args.
struct parse_error : error {
  using error::error;
};

}  // namespace aspace
