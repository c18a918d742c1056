#pragma once

// Text codespec files: "key value" lines, '#' comments, field line first.
//
//   field 7^4/1,0,0,6,3
//   family RCTRS
//   n 7
//   k 3
//   alphas 0,1,2,3,4,5
//   ...
//
// Elements are written as field indices.

#include <istream>
#include <ostream>
#include <string>

#include "rctrs/codes.hpp"

namespace rctrs {

/// Throws ParseError ("line N: ...") for syntax, unknown or duplicate keys,
/// and ValidationError when the parsed spec violates an invariant.
CodeSpec codespec_read(std::istream& is);
CodeSpec codespec_read_file(const std::string& path);

/// Validates first; writes every key including defaults.
void codespec_write(std::ostream& os, const CodeSpec& spec);
void codespec_write_file(const std::string& path, const CodeSpec& spec);

}  // namespace rctrs
