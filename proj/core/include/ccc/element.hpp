#pragma once

#include <string>
#include <variant>

#include "ccc/mat.hpp"
#include "ccc/perm.hpp"

namespace ccc {

// A group element is either a permutation or a matrix over a finite field.
// std::variant's built-in ordering (kind first, then value) gives the
// canonical element order used for ids throughout.
using Element = std::variant<Perm, Mat>;

bool same_kind(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);  // KindMismatch on mixed kinds
Element inverse_of(const Element& a);
bool is_identity(const Element& a);
std::string render(const Element& a);  // cycle notation / bracketed rows

}  // namespace ccc
