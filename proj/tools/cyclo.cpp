// SPDX-License-Identifier: Apache-2.0
//
// Command line front end: block partitions, Jantzen coefficients, the
// grid verification sweep and abacus displays, with JSON and table output.

#include <cstdint>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/abacus.hpp"
#include "cyclo/blocks.hpp"
#include "cyclo/jantzen.hpp"
#include "cyclo/partition.hpp"
#include "cyclo/regime.hpp"
#include "cyclo/residue.hpp"

namespace {

using cyclo::Int;
using ojson = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string acc;
  for (char c : s) {
    if (c == sep) {
      out.push_back(acc);
      acc.clear();
    } else {
      acc += c;
    }
  }
  out.push_back(acc);
  return out;
}

Int parse_int(const std::string& s, const std::string& what) {
  std::string t = trim(s);
  try {
    std::size_t used = 0;
    Int v = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected an integer, got '" + t +
                                "'");
  }
}

// e and p accept a number or "inf".
Int parse_extended(const std::string& s, const std::string& what) {
  std::string t = trim(s);
  if (t == "inf") return cyclo::infinity;
  return parse_int(t, what);
}

std::vector<Int> parse_int_list(const std::string& s,
                                const std::string& what) {
  std::vector<Int> out;
  if (trim(s).empty()) return out;
  for (const std::string& tok : split(s, ','))
    out.push_back(parse_int(tok, what));
  return out;
}

std::vector<Int> parse_extended_list(const std::string& s,
                                     const std::string& what) {
  std::vector<Int> out;
  if (trim(s).empty()) return out;
  for (const std::string& tok : split(s, ','))
    out.push_back(parse_extended(tok, what));
  return out;
}

// Multipartition literal: components joined by '|', parts by ','; an empty
// segment is an empty component. "4,1,1|2|3,2,1" or "" or "||".
cyclo::Multipartition parse_multipartition(const std::string& literal) {
  std::vector<cyclo::Partition> comps;
  for (const std::string& seg : split(literal, '|')) {
    std::string t = trim(seg);
    if (t.empty()) {
      comps.emplace_back();
      continue;
    }
    std::vector<Int> parts;
    for (const std::string& tok : split(t, ','))
      parts.push_back(parse_int(tok, "multipartition part"));
    comps.emplace_back(std::move(parts));
  }
  return cyclo::Multipartition(std::move(comps));
}

std::string partition_literal(const cyclo::Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string multipartition_literal(const cyclo::Multipartition& m) {
  std::string out;
  for (Int a = 1; a <= m.r(); ++a) {
    if (a > 1) out += '|';
    out += partition_literal(m.component(a));
  }
  return out;
}

ojson extended_json(Int v) {
  if (v == cyclo::infinity) return ojson("inf");
  return ojson(v);
}

ojson multipartition_json(const cyclo::Multipartition& m) {
  ojson out = ojson::array();
  for (Int a = 1; a <= m.r(); ++a)
    out.push_back(m.component(a).parts());
  return out;
}

ojson regime_json(const cyclo::Regime& R) {
  ojson out;
  out["case"] = R.case_number();
  out["e"] = extended_json(R.e);
  out["p"] = extended_json(R.p);
  out["r"] = R.r;
  out["charges"] = R.charges;
  return out;
}

struct RegimeOpts {
  std::string kase = "auto";
  std::string e = "inf";
  std::string p = "inf";
  Int r = 1;
  std::string charges;
  bool zero_params = false;

  void attach(CLI::App* cmd, bool with_r) {
    cmd->add_option("--case", kase, "parameter case 1..5 or 'auto'");
    cmd->add_option("--e", e, "quantum characteristic (>= 2 or 'inf')");
    cmd->add_option("--p", p, "base characteristic (prime or 'inf')");
    if (with_r) cmd->add_option("--r", r, "number of components");
    cmd->add_option("--charges", charges,
                    "comma separated multicharge (case 1)");
    cmd->add_flag("--zero-params", zero_params,
                  "cyclotomic parameters are all zero (case derivation)");
  }

  cyclo::Regime build(Int r_override = 0) const {
    Int rr = r_override > 0 ? r_override : r;
    Int ev = parse_extended(e, "--e");
    Int pv = parse_extended(p, "--p");
    std::vector<Int> cs = parse_int_list(charges, "--charges");
    cyclo::ParamCase kind;
    if (kase == "auto") {
      kind = cyclo::derive_case(ev, pv, rr, zero_params);
    } else {
      Int k = parse_int(kase, "--case");
      if (k < 1 || k > 5)
        throw std::invalid_argument("--case must be 1..5 or 'auto'");
      kind = static_cast<cyclo::ParamCase>(k);
    }
    if (kind != cyclo::ParamCase::one && cs.empty())
      return cyclo::Regime::make(kind, ev, pv, rr);
    return cyclo::Regime::make(kind, ev, pv, rr, std::move(cs));
  }
};

// Runs one function per index, in parallel when hardware allows, collecting
// results in index order so output stays deterministic.
template <typename F>
auto run_indexed(Int count, F&& f) {
  using Result = decltype(f(Int{0}));
  std::vector<Result> results(static_cast<std::size_t>(count));
  unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || count <= 1) {
    for (Int i = 0; i < count; ++i)
      results[static_cast<std::size_t>(i)] = f(i);
    return results;
  }
  std::atomic<Int> next{0};
  auto worker = [&]() {
    while (true) {
      Int i = next.fetch_add(1);
      if (i >= count) break;
      results[static_cast<std::size_t>(i)] = f(i);
    }
  };
  std::vector<std::future<void>> futs;
  for (unsigned t = 0; t < hw; ++t)
    futs.push_back(std::async(std::launch::async, worker));
  for (auto& fu : futs) fu.get();
  return results;
}

int cmd_blocks(const cyclo::Regime& R, Int n, const std::string& format,
               std::uint64_t seed) {
  cyclo::JantzenAudit audit;
  audit.seed = seed;
  cyclo::BlockPartition jb = cyclo::blocks_by_jantzen(R, n, audit);
  cyclo::BlockPartition rb = cyclo::blocks_by_residue(R, n);
  cyclo::detail::ensure(jb == rb,
                        "block partitions from the two equivalences differ");
  std::vector<cyclo::Multipartition> basis =
      cyclo::enumerate_multipartitions(R.r, n);
  if (format == "table") {
    std::cout << "case " << R.case_number() << ", e=" << (R.finite_e()
              ? std::to_string(R.e) : "inf") << ", p="
              << (R.finite_p() ? std::to_string(R.p) : "inf") << ", r=" << R.r
              << ", n=" << n << "\n";
    for (std::size_t k = 0; k < jb.classes.size(); ++k) {
      std::cout << "class " << (k + 1) << ":";
      for (Int idx : jb.classes[k])
        std::cout << "  "
                  << multipartition_literal(
                         basis[static_cast<std::size_t>(idx)]);
      std::cout << "\n";
    }
    return 0;
  }
  ojson out;
  out["regime"] = regime_json(R);
  out["n"] = n;
  out["classes"] = ojson::array();
  for (const auto& cls : jb.classes) {
    ojson jc = ojson::array();
    for (Int idx : cls)
      jc.push_back(multipartition_json(basis[static_cast<std::size_t>(idx)]));
    out["classes"].push_back(std::move(jc));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_jantzen(const cyclo::Regime& R, const std::string& lambda_lit,
                const std::string& mu_lit, bool oracle,
                const std::string& format) {
  cyclo::Multipartition lambda = parse_multipartition(lambda_lit);
  cyclo::Multipartition mu = parse_multipartition(mu_lit);
  Int j = cyclo::jantzen_fast(lambda, mu, R);
  bool match = true;
  Int jo = 0;
  if (oracle) {
    jo = cyclo::jantzen_bruteforce(lambda, mu, R);
    match = (jo == j);
  }
  if (format == "table") {
    std::cout << "J[" << lambda_lit << " , " << mu_lit << "] = " << j << "\n";
    if (oracle)
      std::cout << "defining sum = " << jo << " ("
                << (match ? "match" : "MISMATCH") << ")\n";
  } else {
    ojson out;
    out["regime"] = regime_json(R);
    out["n"] = lambda.size();
    out["lambda"] = multipartition_json(lambda);
    out["mu"] = multipartition_json(mu);
    out["J"] = j;
    if (oracle) {
      out["J_oracle"] = jo;
      out["match"] = match;
    }
    std::cout << out.dump(2) << "\n";
  }
  return match ? 0 : 1;
}

int cmd_verify(Int r_max, Int n_max, const std::string& e_list_s,
               const std::string& p_list_s, bool cross_34,
               const std::string& format, std::uint64_t seed) {
  std::vector<Int> e_list = parse_extended_list(e_list_s, "--e-list");
  std::vector<Int> p_list = parse_extended_list(p_list_s, "--p-list");
  std::vector<cyclo::GridCell> grid =
      cyclo::theorem_grid(r_max, n_max, e_list, p_list);
  cyclo::JantzenAudit audit;
  audit.seed = seed;
  struct CellResult {
    bool equal = false;
    Int classes = 0;
    std::string witness_lambda;
    std::string witness_mu;
  };
  std::vector<CellResult> results =
      run_indexed(static_cast<Int>(grid.size()), [&](Int i) {
        const cyclo::GridCell& cell = grid[static_cast<std::size_t>(i)];
        cyclo::BlockPartition jb =
            cyclo::blocks_by_jantzen(cell.regime, cell.n, audit);
        cyclo::BlockPartition rb =
            cyclo::blocks_by_residue(cell.regime, cell.n);
        CellResult res;
        res.equal = (jb == rb);
        res.classes = static_cast<Int>(jb.classes.size());
        if (!res.equal) {
          cyclo::VerifyReport rep = cyclo::verify_theorem(cell.regime, cell.n);
          if (rep.witness) {
            std::vector<cyclo::Multipartition> basis =
                cyclo::enumerate_multipartitions(cell.regime.r, cell.n);
            res.witness_lambda = multipartition_literal(
                basis[static_cast<std::size_t>(rep.witness->first)]);
            res.witness_mu = multipartition_literal(
                basis[static_cast<std::size_t>(rep.witness->second)]);
          }
        }
        return res;
      });
  Int failures = 0;
  for (const CellResult& res : results)
    if (!res.equal) ++failures;

  // Optional cross check: cases 3 and 4 produce identical block partitions
  // at equal (p, r, n).
  struct CrossResult {
    Int p = 0, r = 0, n = 0;
    bool identical = false;
  };
  std::vector<CrossResult> cross;
  if (cross_34) {
    for (Int p : p_list) {
      bool in_e = false;
      for (Int e : e_list) in_e = in_e || (e == p);
      if (!in_e) continue;
      for (Int r = 2; r <= r_max; ++r)
        for (Int n = 1; n <= n_max; ++n) {
          cyclo::Regime r3 =
              cyclo::Regime::make(cyclo::ParamCase::three, p, p, r);
          cyclo::Regime r4 =
              cyclo::Regime::make(cyclo::ParamCase::four, p, p, r);
          CrossResult cr;
          cr.p = p;
          cr.r = r;
          cr.n = n;
          cr.identical =
              cyclo::blocks_by_jantzen(r3, n, audit) ==
                  cyclo::blocks_by_jantzen(r4, n, audit) &&
              cyclo::blocks_by_residue(r3, n) == cyclo::blocks_by_residue(r4, n);
          if (!cr.identical) ++failures;
          cross.push_back(cr);
        }
    }
  }

  if (format == "table") {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const cyclo::GridCell& cell = grid[i];
      const CellResult& res = results[i];
      std::cout << "case=" << cell.regime.case_number() << " e="
                << (cell.regime.finite_e() ? std::to_string(cell.regime.e)
                                           : "inf")
                << " p="
                << (cell.regime.finite_p() ? std::to_string(cell.regime.p)
                                           : "inf")
                << " r=" << cell.regime.r << " n=" << cell.n << " charges=";
      for (std::size_t k = 0; k < cell.regime.charges.size(); ++k) {
        if (k) std::cout << ',';
        std::cout << cell.regime.charges[k];
      }
      std::cout << " classes=" << res.classes
                << (res.equal ? " ok" : " MISMATCH") << "\n";
    }
    for (const CrossResult& cr : cross)
      std::cout << "cross34 p=" << (cr.p == cyclo::infinity
                    ? "inf" : std::to_string(cr.p))
                << " r=" << cr.r << " n=" << cr.n
                << (cr.identical ? " ok" : " MISMATCH") << "\n";
    std::cout << "cells=" << grid.size() << " failures=" << failures << "\n";
  } else {
    ojson out;
    out["grid"] = {{"r_max", r_max},
                   {"n_max", n_max},
                   {"e_list", ojson::array()},
                   {"p_list", ojson::array()}};
    for (Int e : e_list) out["grid"]["e_list"].push_back(extended_json(e));
    for (Int p : p_list) out["grid"]["p_list"].push_back(extended_json(p));
    out["cells"] = ojson::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const cyclo::GridCell& cell = grid[i];
      const CellResult& res = results[i];
      ojson jc;
      jc["case"] = cell.regime.case_number();
      jc["e"] = extended_json(cell.regime.e);
      jc["p"] = extended_json(cell.regime.p);
      jc["r"] = cell.regime.r;
      jc["n"] = cell.n;
      jc["charges"] = cell.regime.charges;
      jc["classes"] = res.classes;
      jc["equal"] = res.equal;
      if (!res.equal)
        jc["witness"] = {res.witness_lambda, res.witness_mu};
      out["cells"].push_back(std::move(jc));
    }
    if (cross_34) {
      out["cross_34"] = ojson::array();
      for (const CrossResult& cr : cross)
        out["cross_34"].push_back({{"p", extended_json(cr.p)},
                                   {"r", cr.r},
                                   {"n", cr.n},
                                   {"identical", cr.identical}});
    }
    out["cells_total"] = grid.size();
    out["failures"] = failures;
    std::cout << out.dump(2) << "\n";
  }
  return failures == 0 ? 0 : 1;
}

int cmd_abacus(const RegimeOpts& opts, const std::string& lambda_lit,
               Int rows, const std::string& format) {
  cyclo::Multipartition lambda = parse_multipartition(lambda_lit);
  Int r = lambda.r();
  Int ev = parse_extended(opts.e, "--e");
  std::vector<Int> charges = parse_int_list(opts.charges, "--charges");
  if (charges.empty()) charges.assign(static_cast<std::size_t>(r), 0);
  if (static_cast<Int>(charges.size()) != r)
    throw std::invalid_argument(
        "abacus: one charge per component required (or none for all zero)");
  cyclo::MultiAbacus ma = cyclo::to_multi_abacus(lambda, charges, ev);
  std::string ascii = cyclo::render_ascii(ma, rows);
  std::vector<std::vector<Int>> betas;
  for (Int a = 1; a <= r; ++a) {
    const cyclo::AbacusDisplay& d = ma.comps[static_cast<std::size_t>(a - 1)];
    betas.push_back(d.beta_head(lambda.component(a).rows() + 2));
  }
  cyclo::Multipartition core = cyclo::multicore(lambda, charges, ev);
  Int weight = cyclo::multiweight(lambda, ev);
  // Weight invariant and hub exist for case 1 with finite e.
  bool invariants = false;
  Int wt = 0;
  std::vector<Int> hub_v;
  cyclo::Regime R = opts.build(r);
  if (R.kind == cyclo::ParamCase::one && R.finite_e()) {
    invariants = true;
    wt = cyclo::weight_invariant(lambda, R);
    hub_v = cyclo::hub(lambda, R);
  }
  if (format == "table") {
    std::cout << ascii;
    for (Int a = 1; a <= r; ++a) {
      std::cout << "beta[" << a << "] =";
      for (Int b : betas[static_cast<std::size_t>(a - 1)])
        std::cout << " " << b;
      std::cout << "\n";
    }
    std::cout << "core = " << multipartition_literal(core) << "\n";
    std::cout << "weight = " << weight << "\n";
    if (invariants) {
      std::cout << "Wt = " << wt << "\nhub =";
      for (Int h : hub_v) std::cout << " " << h;
      std::cout << "\n";
    }
    return 0;
  }
  ojson out;
  out["regime"] = regime_json(R);
  out["lambda"] = multipartition_json(lambda);
  out["ascii"] = ascii;
  out["beta"] = betas;
  out["core"] = multipartition_json(core);
  out["weight"] = weight;
  out["Wt"] = invariants ? ojson(wt) : ojson(nullptr);
  out["hub"] = invariants ? ojson(hub_v) : ojson(nullptr);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact block combinatorics for cyclotomic Hecke and Schur algebras of "
      "type G(r,1,n)"};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = cyclo::JantzenAudit{}.seed;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--seed", seed, "seed for the sampled fast-path audit");
  };

  // blocks
  auto* blocks_cmd =
      app.add_subcommand("blocks", "block partition of an enumeration");
  add_common(blocks_cmd);
  RegimeOpts blocks_opts;
  Int blocks_n = 0;
  blocks_opts.attach(blocks_cmd, true);
  blocks_cmd->add_option("--n", blocks_n, "total size")->required();

  // jantzen
  auto* jantzen_cmd =
      app.add_subcommand("jantzen", "one Jantzen coefficient");
  add_common(jantzen_cmd);
  RegimeOpts jantzen_opts;
  std::string jantzen_lambda, jantzen_mu;
  bool jantzen_oracle = false;
  jantzen_opts.attach(jantzen_cmd, false);
  jantzen_cmd->add_option("lambda", jantzen_lambda, "multipartition literal")
      ->required();
  jantzen_cmd->add_option("mu", jantzen_mu, "multipartition literal")
      ->required();
  jantzen_cmd->add_flag("--oracle", jantzen_oracle,
                        "also evaluate the defining sum and compare");

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "sweep the parameter grid and compare the two equivalences");
  add_common(verify_cmd);
  Int verify_rmax = 3, verify_nmax = 6;
  std::string verify_elist = "2,3,4,inf";
  std::string verify_plist = "2,3,inf";
  bool verify_cross34 = false;
  verify_cmd->add_option("--r-max", verify_rmax, "largest r");
  verify_cmd->add_option("--n-max", verify_nmax, "largest n");
  verify_cmd->add_option("--e-list", verify_elist, "comma list, 'inf' allowed");
  verify_cmd->add_option("--p-list", verify_plist, "comma list, 'inf' allowed");
  verify_cmd->add_flag("--cross-34", verify_cross34,
                       "also compare cases 3 and 4 at equal (p, r, n)");

  // abacus
  auto* abacus_cmd =
      app.add_subcommand("abacus", "abacus display and invariants");
  add_common(abacus_cmd);
  RegimeOpts abacus_opts;
  std::string abacus_lambda;
  Int abacus_rows = 7;
  abacus_opts.attach(abacus_cmd, false);
  abacus_cmd->add_option("lambda", abacus_lambda, "multipartition literal")
      ->required();
  abacus_cmd->add_option("--rows", abacus_rows, "rendered rows per component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (blocks_cmd->parsed())
      return cmd_blocks(blocks_opts.build(), blocks_n, format, seed);
    if (jantzen_cmd->parsed()) {
      cyclo::Multipartition lambda = parse_multipartition(jantzen_lambda);
      return cmd_jantzen(jantzen_opts.build(lambda.r()), jantzen_lambda,
                         jantzen_mu, jantzen_oracle, format);
    }
    if (verify_cmd->parsed())
      return cmd_verify(verify_rmax, verify_nmax, verify_elist, verify_plist,
                        verify_cross34, format, seed);
    if (abacus_cmd->parsed())
      return cmd_abacus(abacus_opts, abacus_lambda, abacus_rows, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal assertion failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
