#include "ccc/groupspec.hpp"

#include <algorithm>
#include <fstream>

#include "ccc/error.hpp"
#include "ccc/gl2.hpp"

namespace ccc {

std::vector<Element> sym_generators(int n) {
  require(n >= 1, Errc::invalid_argument, "sym:N needs N >= 1");
  std::vector<Element> gens;
  if (n == 1) {
    gens.push_back(Perm(1));
    return gens;
  }
  gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  std::vector<unsigned> full(n);
  for (int i = 0; i < n; ++i) full[i] = static_cast<unsigned>(i);
  gens.push_back(Perm::from_cycles(n, {full}));
  return gens;
}

std::vector<Element> alt_generators(int n) {
  require(n >= 3, Errc::invalid_argument, "alt:N needs N >= 3");
  std::vector<Element> gens;
  gens.push_back(Perm::from_cycles(n, {{0, 1, 2}}));
  if (n > 3) {
    std::vector<unsigned> cyc;
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) cyc.push_back(static_cast<unsigned>(i));
    } else {
      for (int i = 1; i < n; ++i) cyc.push_back(static_cast<unsigned>(i));
    }
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return gens;
}

std::vector<Element> dihedral_generators(int n) {
  require(n >= 3, Errc::invalid_argument, "dihedral:N needs N >= 3");
  std::vector<unsigned> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = static_cast<unsigned>(i);
  std::vector<std::uint8_t> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = static_cast<std::uint8_t>((n - i) % n);
  return {Perm::from_cycles(n, {rot}), Perm(std::move(refl))};
}

std::vector<Element> cyclic_generators(int n) {
  require(n >= 1, Errc::invalid_argument, "cyclic:N needs N >= 1");
  if (n == 1) return {Perm(1)};
  std::vector<unsigned> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = static_cast<unsigned>(i);
  return {Perm::from_cycles(n, {rot})};
}

std::vector<Element> quaternion_generators() {
  // Q8 = {1,-1,i,-i,j,-j,k,-k} in its left-regular action; generators are
  // left multiplication by i and by j.
  const int kOne = 0, kNegOne = 1, kI = 2, kNegI = 3, kJ = 4, kNegJ = 5,
            kK = 6, kNegK = 7;
  auto neg = [](int x) { return x ^ 1; };
  auto mul_base = [&](int a, int b) -> int {
    // table on {1, i, j, k} with signs handled outside
    static const int tbl[4][4] = {{kOne, kI, kJ, kK},
                                  {kI, kNegOne, kK, kNegJ},
                                  {kJ, kNegK, kNegOne, kI},
                                  {kK, kJ, kNegI, kNegOne}};
    int sign = (a & 1) ^ (b & 1);
    int r = tbl[a >> 1][b >> 1];
    return sign ? neg(r) : r;
  };
  auto left_mult = [&](int a) {
    std::vector<std::uint8_t> images(8);
    for (int x = 0; x < 8; ++x) images[x] = static_cast<std::uint8_t>(mul_base(a, x));
    return Perm(std::move(images));
  };
  return {left_mult(kI), left_mult(kJ)};
}

namespace {

int parse_positive(const std::string& text, const std::string& what) {
  require(!text.empty() &&
              std::all_of(text.begin(), text.end(),
                          [](char c) { return c >= '0' && c <= '9'; }),
          Errc::parse_error, "bad number in " + what);
  long long v = 0;
  for (char c : text) {
    v = v * 10 + (c - '0');
    require(v <= 1000000, Errc::parse_error, "number too large in " + what);
  }
  require(v >= 1, Errc::parse_error, "number must be positive in " + what);
  return static_cast<int>(v);
}

std::pair<std::string, std::string> split_colon(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos) return {s, ""};
  return {s.substr(0, pos), s.substr(pos + 1)};
}

}  // namespace

GroupSpec parse_group_spec(const std::string& base, const std::string& mod) {
  auto [kind, arg] = split_colon(base);
  GroupSpec spec;
  spec.mod = mod;

  if (kind == "alt-in-sym") {
    require(mod.empty(), Errc::parse_error, "alt-in-sym fixes the subgroup; drop --mod");
    spec.base = "sym:" + std::to_string(parse_positive(arg, base));
    spec.mod = "alt";
  } else if (kind == "sl2-in-gl2") {
    require(mod.empty(), Errc::parse_error, "sl2-in-gl2 fixes the subgroup; drop --mod");
    spec.base = "gl2:" + std::to_string(parse_positive(arg, base));
    spec.mod = "sl";
  } else if (kind == "sym" || kind == "alt" || kind == "dihedral" ||
             kind == "cyclic" || kind == "gl2") {
    spec.base = kind + ":" + std::to_string(parse_positive(arg, base));
  } else if (kind == "q8") {
    require(arg.empty(), Errc::parse_error, "q8 takes no argument");
    spec.base = "q8";
  } else if (kind == "perm-file") {
    require(!arg.empty(), Errc::parse_error, "perm-file:PATH needs a path");
    spec.base = "perm-file:" + arg;
  } else {
    fail(Errc::parse_error, "unknown group spec: " + base);
  }

  const std::string& m = spec.mod;
  if (!m.empty()) {
    auto [mkind, marg] = split_colon(m);
    auto [bkind, barg] = split_colon(spec.base);
    if (mkind == "alt") {
      require(marg.empty() && bkind == "sym", Errc::parse_error,
              "--mod alt applies to sym:N");
    } else if (mkind == "sl") {
      require(marg.empty() && bkind == "gl2", Errc::parse_error,
              "--mod sl applies to gl2:Q");
    } else if (mkind == "rot") {
      require(marg.empty() && bkind == "dihedral", Errc::parse_error,
              "--mod rot applies to dihedral:N");
    } else if (mkind == "sub") {
      require(bkind == "cyclic", Errc::parse_error, "--mod sub:K applies to cyclic:N");
      int k = parse_positive(marg, "--mod sub:K");
      require(parse_positive(barg, spec.base) % k == 0, Errc::parse_error,
              "sub:K needs K dividing N");
    } else if (mkind == "v4") {
      require(marg.empty() && (spec.base == "sym:4" || spec.base == "alt:4"),
              Errc::parse_error, "--mod v4 applies to sym:4 or alt:4");
    } else if (mkind == "centre" || mkind == "trivial") {
      require(marg.empty(), Errc::parse_error, "--mod " + mkind + " takes no argument");
    } else {
      fail(Errc::parse_error, "unknown subgroup selector: " + m);
    }
  }
  return spec;
}

std::string to_string(const GroupSpec& spec) {
  return spec.mod.empty() ? spec.base : spec.base + " --mod " + spec.mod;
}

namespace {

std::vector<int> all_ids(const FiniteGroup& g) {
  std::vector<int> out(g.order());
  for (int i = 0; i < g.order(); ++i) out[i] = i;
  return out;
}

std::vector<int> select_members(const GroupSpec& spec, const FiniteGroup& g) {
  if (spec.mod.empty()) return all_ids(g);
  auto [mkind, marg] = split_colon(spec.mod);
  auto [bkind, barg] = split_colon(spec.base);

  if (mkind == "alt") {
    std::vector<int> out;
    for (int i = 0; i < g.order(); ++i)
      if (std::get<Perm>(g.element(i)).is_even()) out.push_back(i);
    return out;
  }
  if (mkind == "sl") return det_members(g, 1);
  if (mkind == "rot" || mkind == "sub") {
    const int n = parse_positive(barg, spec.base);
    std::vector<unsigned> full(n);
    for (int i = 0; i < n; ++i) full[i] = static_cast<unsigned>(i);
    int rot = g.index_of(Perm::from_cycles(n, {full}));
    require(rot >= 0, Errc::crosscheck_failure, "rotation generator missing");
    if (mkind == "sub") rot = g.power(rot, n / parse_positive(marg, spec.mod));
    std::vector<int> seed{rot};
    return subgroup_closure(g, seed);
  }
  if (mkind == "v4") {
    std::vector<int> out{g.identity()};
    for (auto cycles : {std::vector<std::vector<unsigned>>{{0, 1}, {2, 3}},
                        std::vector<std::vector<unsigned>>{{0, 2}, {1, 3}},
                        std::vector<std::vector<unsigned>>{{0, 3}, {1, 2}}}) {
      int id = g.index_of(Perm::from_cycles(4, cycles));
      require(id >= 0, Errc::invalid_argument, "group does not contain V4");
      out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (mkind == "centre") return centre(g);
  if (mkind == "trivial") return {g.identity()};
  fail(Errc::parse_error, "unknown subgroup selector: " + spec.mod);
}

}  // namespace

BuiltPair build_group(const GroupSpec& spec, int cap) {
  auto [bkind, barg] = split_colon(spec.base);
  std::vector<Element> gens;
  if (bkind == "sym")
    gens = sym_generators(parse_positive(barg, spec.base));
  else if (bkind == "alt")
    gens = alt_generators(parse_positive(barg, spec.base));
  else if (bkind == "dihedral")
    gens = dihedral_generators(parse_positive(barg, spec.base));
  else if (bkind == "cyclic")
    gens = cyclic_generators(parse_positive(barg, spec.base));
  else if (bkind == "gl2") {
    BuiltPair out;
    out.group = std::make_shared<FiniteGroup>(
        gl2_group(parse_positive(barg, spec.base), cap));
    out.name = to_string(spec);
    out.h_members = select_members(spec, *out.group);
    return out;
  } else if (bkind == "q8")
    gens = quaternion_generators();
  else if (bkind == "perm-file") {
    std::ifstream in(barg);
    require(in.good(), Errc::parse_error, "cannot open " + barg);
    std::vector<Perm> perms;
    unsigned degree = 0;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      perms.push_back(Perm::parse_cycles(line));
      degree = std::max(degree, perms.back().degree());
    }
    require(!perms.empty(), Errc::parse_error, "no generators in " + barg);
    for (Perm& p : perms) gens.push_back(p.extended(degree));
  } else {
    fail(Errc::parse_error, "unknown group spec: " + spec.base);
  }

  BuiltPair out;
  out.group = std::make_shared<FiniteGroup>(FiniteGroup::close(std::move(gens), cap));
  out.name = to_string(spec);
  out.h_members = select_members(spec, *out.group);
  return out;
}

}  // namespace ccc
