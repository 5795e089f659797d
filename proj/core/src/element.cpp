#include "ccc/element.hpp"

#include "ccc/error.hpp"

namespace ccc {

bool same_kind(const Element& a, const Element& b) {
  if (a.index() != b.index()) return false;
  if (const auto* pa = std::get_if<Perm>(&a))
    return pa->degree() == std::get<Perm>(b).degree();
  const auto& ma = std::get<Mat>(a);
  const auto& mb = std::get<Mat>(b);
  return ma.dim() == mb.dim() && &ma.field() == &mb.field();
}

Element mul(const Element& a, const Element& b) {
  require(same_kind(a, b), Errc::kind_mismatch,
          "cannot multiply elements of different kinds");
  if (const auto* pa = std::get_if<Perm>(&a))
    return *pa * std::get<Perm>(b);
  return std::get<Mat>(a) * std::get<Mat>(b);
}

Element inverse_of(const Element& a) {
  if (const auto* pa = std::get_if<Perm>(&a)) return pa->inverse();
  return std::get<Mat>(a).inverse();
}

bool is_identity(const Element& a) {
  if (const auto* pa = std::get_if<Perm>(&a)) return pa->is_identity();
  return std::get<Mat>(a).is_identity();
}

std::string render(const Element& a) {
  if (const auto* pa = std::get_if<Perm>(&a)) return pa->cycle_string();
  return std::get<Mat>(a).to_string();
}

}  // namespace ccc
