#include "ccc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ccc/error.hpp"

namespace ccc {

namespace {
constexpr unsigned kMaxDegree = 255;
}

Perm::Perm(unsigned degree) : images_(degree) {
  require(degree <= kMaxDegree, Errc::too_large, "permutation degree > 255");
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  require(images_.size() <= kMaxDegree, Errc::too_large,
          "permutation degree > 255");
  std::vector<bool> seen(images_.size(), false);
  for (std::uint8_t x : images_) {
    require(x < images_.size() && !seen[x], Errc::invalid_argument,
            "image sequence is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(unsigned degree,
                       const std::vector<std::vector<unsigned>>& cycles) {
  Perm p(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      unsigned from = cyc[i];
      unsigned to = cyc[(i + 1) % cyc.size()];
      require(from < degree && to < degree, Errc::invalid_argument,
              "cycle point out of range");
      require(p.images_[from] == from, Errc::invalid_argument,
              "cycles are not disjoint");
      p.images_[from] = static_cast<std::uint8_t>(to);
    }
  }
  // Re-validate: repeated points within one cycle slip past the check above.
  return Perm(std::move(p.images_));
}

Perm Perm::parse_cycles(const std::string& text, unsigned min_degree) {
  std::vector<std::vector<unsigned>> cycles;
  unsigned max_point = 0;
  bool any_point = false;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    require(text[i] == '(', Errc::parse_error,
            "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<unsigned> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      require(std::isdigit(static_cast<unsigned char>(text[i])),
              Errc::parse_error, "expected point in cycle notation: " + text);
      unsigned v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<unsigned>(text[i++] - '0');
      require(v <= kMaxDegree, Errc::too_large, "point > 255");
      cyc.push_back(v);
      max_point = std::max(max_point, v);
      any_point = true;
      skip_ws();
    }
    require(i < text.size(), Errc::parse_error, "unclosed cycle: " + text);
    ++i;  // ')'
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  unsigned degree = std::max(min_degree, any_point ? max_point + 1 : 0u);
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Perm::is_even() const {
  int transpositions = 0;
  for (const auto& cyc : cycles()) transpositions += static_cast<int>(cyc.size()) - 1;
  return transpositions % 2 == 0;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<std::uint8_t> out(images_.size());
  for (unsigned i = 0; i < degree(); ++i) out[i] = rhs.images_[images_[i]];
  Perm p;
  p.images_ = std::move(out);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> out(images_.size());
  for (unsigned i = 0; i < degree(); ++i) out[images_[i]] = static_cast<std::uint8_t>(i);
  Perm p;
  p.images_ = std::move(out);
  return p;
}

Perm Perm::extended(unsigned degree) const {
  require(degree >= this->degree(), Errc::invalid_argument,
          "extended() cannot shrink a permutation");
  std::vector<std::uint8_t> out(degree);
  std::iota(out.begin(), out.end(), std::uint8_t{0});
  std::copy(images_.begin(), images_.end(), out.begin());
  Perm p;
  p.images_ = std::move(out);
  return p;
}

std::vector<std::vector<unsigned>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(degree(), false);
  for (unsigned start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::vector<unsigned> cyc;
    unsigned x = start;
    do {
      seen[x] = true;
      cyc.push_back(x);
      x = images_[x];
    } while (x != start);
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& cyc : cycles(true)) lengths.push_back(static_cast<int>(cyc.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Perm::cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace ccc
