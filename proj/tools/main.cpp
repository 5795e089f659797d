// ccc: commuting conjugacy classes of finite groups.
//
// Computes the commuting relation on conjugacy classes, split/non-split
// status relative to a normal subgroup with cyclic quotient, coset-to-coset
// matchings with commuting witnesses, the prime-index partition, partition
// coarsenings for symmetric groups, the GL2(q) class tables, Frobenius
// detection, and a one-shot verification suite over a built-in catalog.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>

#include "ccc/catalog.hpp"
#include "ccc/error.hpp"
#include "ccc/frobenius.hpp"
#include "ccc/groupspec.hpp"
#include "ccc/reports.hpp"
#include "ccc/verify.hpp"

namespace {

struct CommonArgs {
  std::string spec;
  std::string mod;
  std::string format;
  int coset = 0;
  int coset_y = 0;
  std::uint64_t seed = 0;
  int cap = ccc::kDefaultClosureCap;
};

struct Built {
  ccc::BuiltPair pair;
  ccc::ClassSet classes;
  ccc::ClassRelation relation;
  std::optional<ccc::QuotientData> quotient;
};

Built build(const CommonArgs& args, bool need_relation, bool need_quotient) {
  ccc::GroupSpec spec = ccc::parse_group_spec(args.spec, args.mod);
  Built out;
  out.pair = ccc::build_group(spec, args.cap);
  out.classes = ccc::conjugacy_classes(*out.pair.group);
  if (need_relation)
    out.relation = ccc::ClassRelation::commuting(*out.pair.group, out.classes);
  if (need_quotient || !spec.mod.empty())
    out.quotient = ccc::cyclic_quotient(*out.pair.group, out.pair.h_members);
  return out;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("spec", args.spec, "group spec, e.g. sym:4, gl2:5, cyclic:6")
      ->required();
  cmd->add_option("--mod", args.mod,
                  "normal subgroup selector: alt, sl, rot, sub:K, v4, centre, trivial");
  cmd->add_option("--format", args.format, "output format: tsv, json or dot");
  cmd->add_option("--cap", args.cap, "closure cap on the group order");
}

ccc::OutFormat format_or(const std::string& text, ccc::OutFormat fallback) {
  return text.empty() ? fallback : ccc::parse_format(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commuting conjugacy classes of finite groups"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string partition_arg, with_arg;
  int table_n = 20, bijection_n = 0;
  int gl2_q = 5;
  std::string verify_only, verify_q;
  bool verify_all = false;

  CLI::App* classes = app.add_subcommand("classes", "conjugacy class table");
  add_common(classes, args);

  CLI::App* relation = app.add_subcommand("relation", "commuting-class graph");
  add_common(relation, args);

  CLI::App* match = app.add_subcommand("match", "coset-to-coset commuting matching");
  add_common(match, args);
  match->add_option("--coset", args.coset, "coset exponent x (left side)");

  CLI::App* partition = app.add_subcommand("partition", "prime-index commuting tuples");
  add_common(partition, args);

  CLI::App* coarsen = app.add_subcommand("coarsen", "partition coarsenings");
  coarsen->add_option("partition", partition_arg, "partition, e.g. 4+3+3+1")->required();
  coarsen->add_option("--with", with_arg, "second partition: report a common coarsening");
  coarsen->add_option("--format", args.format, "output format: tsv or json");

  CLI::App* sym_table = app.add_subcommand("sym-table", "p_even/p_odd/d_o counts");
  sym_table->add_option("--max-n", table_n, "largest n (default 20)");
  sym_table->add_option("--bijection", bijection_n,
                        "emit the commuting bijection for this n instead");

  CLI::App* gl2_table = app.add_subcommand("gl2-table", "SL2/C_xi type-count table");
  gl2_table->add_option("--q", gl2_q, "odd prime power")->required();
  gl2_table->add_option("--format", args.format, "output format: tsv or json");
  bool gl2_matching = false;
  gl2_table->add_flag("--matching", gl2_matching,
                      "emit the SL2 <-> C_xi witness matching as JSON");

  CLI::App* frobenius = app.add_subcommand("frobenius", "split-iff-Frobenius report");
  std::string frob_spec;
  bool frob_catalog = false;
  frobenius->add_option("spec", frob_spec, "group spec, e.g. dihedral:7");
  frobenius->add_option("--mod", args.mod, "normal subgroup selector");
  frobenius->add_flag("--catalog", frob_catalog,
                      "summarize every prime-index catalog pair as TSV");
  frobenius->add_option("--cap", args.cap, "closure cap on the group order");

  CLI::App* explore = app.add_subcommand(
      "explore", "experimental matching search between arbitrary cosets");
  add_common(explore, args);
  explore->add_option("--coset", args.coset, "left coset exponent x");
  explore->add_option("--coset-y", args.coset_y, "right coset exponent y");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_flag("--all", verify_all, "run every check (default)");
  verify->add_option("--only", verify_only,
                     "topic or criterion number: hall, sym, gl2, split, "
                     "counterexample, frobenius, centre, 1..12");
  verify->add_option("--q", verify_q, "comma-separated q list for GL2 brute force");
  verify->add_option("--seed", args.seed, "seed for sampled Hall audits");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classes) {
      Built b = build(args, false, false);
      std::cout << ccc::classes_report(*b.pair.group, b.classes,
                                       b.quotient ? &*b.quotient : nullptr,
                                       format_or(args.format, ccc::OutFormat::tsv));
    } else if (*relation) {
      Built b = build(args, true, false);
      std::cout << ccc::relation_report(*b.pair.group, b.classes, b.relation,
                                        b.quotient ? &*b.quotient : nullptr,
                                        format_or(args.format, ccc::OutFormat::dot));
    } else if (*match) {
      Built b = build(args, true, true);
      ccc::ClassMatching m = ccc::theorem1_matching(*b.pair.group, b.classes,
                                                    b.relation, *b.quotient, args.coset);
      std::cout << ccc::matching_json(*b.pair.group, b.classes, m);
    } else if (*partition) {
      Built b = build(args, true, true);
      ccc::Theorem2Partition part = ccc::theorem2_partition(
          *b.pair.group, b.classes, b.relation, *b.quotient);
      std::cout << ccc::theorem2_json(*b.pair.group, b.classes, *b.quotient, part);
    } else if (*coarsen) {
      ccc::Partition p = ccc::Partition::parse(partition_arg);
      ccc::OutFormat format = format_or(args.format, ccc::OutFormat::tsv);
      if (with_arg.empty())
        std::cout << ccc::coarsenings_report(p, format);
      else
        std::cout << ccc::common_coarsening_report(
            p, ccc::Partition::parse(with_arg), format);
    } else if (*sym_table) {
      if (bijection_n > 0)
        std::cout << ccc::sym_bijection_json(bijection_n);
      else
        std::cout << ccc::sym_table_tsv(table_n);
    } else if (*gl2_table) {
      if (gl2_matching)
        std::cout << ccc::sl2_cxi_matching_json(ccc::sl2_cxi_matching(gl2_q));
      else
        std::cout << ccc::gl2_table_report(gl2_q,
                                           format_or(args.format, ccc::OutFormat::tsv));
    } else if (*frobenius) {
      if (frob_catalog) {
        std::cout << ccc::frobenius_catalog_tsv();
      } else {
        if (frob_spec.empty()) {
          std::fprintf(stderr, "error: frobenius needs a group spec or --catalog\n");
          return 1;
        }
        args.spec = frob_spec;
        Built b = build(args, false, true);
        ccc::FrobeniusReport rep = ccc::proposition3_check(*b.quotient, b.classes);
        std::cout << ccc::frobenius_json(b.pair.name, rep);
      }
    } else if (*explore) {
      Built b = build(args, true, true);
      ccc::ExplorationResult result = ccc::conjecture_explorer(
          *b.pair.group, b.classes, b.relation, *b.quotient, args.coset, args.coset_y);
      std::cout << ccc::explore_json(*b.pair.group, b.classes, result);
    } else if (*verify) {
      ccc::VerifyOptions options;
      options.only = verify_only;
      options.seed = args.seed;
      if (!verify_q.empty()) {
        options.gl2_brute_q.clear();
        std::size_t from = 0;
        while (from < verify_q.size()) {
          std::size_t comma = verify_q.find(',', from);
          if (comma == std::string::npos) comma = verify_q.size();
          options.gl2_brute_q.push_back(std::stoi(verify_q.substr(from, comma - from)));
          from = comma + 1;
        }
      }
      auto outcomes = ccc::run_verification(options);
      bool ok = ccc::all_passed(outcomes);
      for (const ccc::CheckOutcome& o : outcomes)
        std::printf("[%s] criterion %2s (%s): %s  [%.2fs]\n",
                    o.pass ? "PASS" : "FAIL", o.id.c_str(), o.topic.c_str(),
                    (o.claim + " -- " + o.detail).c_str(), o.seconds);
      if (outcomes.empty()) {
        std::fprintf(stderr, "no checks matched --only %s\n", verify_only.c_str());
        return 2;
      }
      std::printf("%s: %zu check(s)\n", ok ? "ALL PASS" : "FAILURES", outcomes.size());
      return ok ? 0 : 1;
    }
  } catch (const ccc::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
