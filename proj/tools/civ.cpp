// Copyright 2026 The civ authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// civ: builds commuting involution graphs C(L,X) for L = PSL2(q), runs the
// per-lemma verification suite, audits the point-count bounds, and exports
// DIMACS. JSON-lines reports; exit 0 iff every assertion-mode check passed.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "civ/autgrp.hpp"
#include "civ/cache.hpp"
#include "civ/verify.hpp"
#include "civ/weil.hpp"

namespace {

struct PrimePower {
  std::uint32_t q, p, f;
};

std::optional<PrimePower> factor_prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t f = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{q, p, f};
}

std::vector<PrimePower> expand_qs(const std::vector<std::uint32_t>& qs,
                                  const std::string& range, std::uint32_t p,
                                  std::uint32_t f) {
  std::vector<PrimePower> out;
  for (std::uint32_t q : qs) {
    auto pp = factor_prime_power(q);
    if (!pp || q <= 3)
      throw CLI::ValidationError("--q", std::to_string(q) +
                                            " is not a prime power > 3");
    out.push_back(*pp);
  }
  if (!range.empty()) {
    auto dots = range.find("..");
    if (dots == std::string::npos)
      throw CLI::ValidationError("--q-range", "expected a..b");
    std::uint32_t lo = std::stoul(range.substr(0, dots));
    std::uint32_t hi = std::stoul(range.substr(dots + 2));
    for (std::uint32_t q = std::max<std::uint32_t>(lo, 4); q <= hi; ++q)
      if (auto pp = factor_prime_power(q)) out.push_back(*pp);
  }
  if (p != 0) {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < f; ++i) q *= p;
    auto pp = factor_prime_power(q);
    if (!pp || pp->p != p || q <= 3)
      throw CLI::ValidationError("--p", "invalid prime power p^f");
    out.push_back(*pp);
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const PrimePower& a, const PrimePower& b) {
                          return a.q == b.q;
                        }),
            out.end());
  if (out.empty()) throw CLI::ValidationError("--q", "no q selected");
  return out;
}

void print_report(const civ::LemmaReport& rep, const std::string& format,
                  bool& csv_header_done) {
  if (format == "json") {
    std::cout << rep.to_json().dump() << "\n";
  } else if (format == "csv") {
    if (!csv_header_done) {
      std::cout << "lemma,q,status,millis,witnesses\n";
      csv_header_done = true;
    }
    std::string w;
    for (const auto& s : rep.witnesses) {
      if (!w.empty()) w += "; ";
      w += s;
    }
    std::cout << rep.lemma << ',' << rep.q << ','
              << civ::LemmaReport::status_name(rep.status) << ',' << rep.millis
              << ",\"" << w << "\"\n";
  } else {
    std::cout << "q=" << rep.q << " " << rep.lemma << ": "
              << civ::LemmaReport::status_name(rep.status) << " ("
              << rep.millis << " ms)\n";
    for (const auto& w : rep.witnesses) std::cout << "  witness: " << w << "\n";
  }
}

struct CommonOpts {
  std::vector<std::uint32_t> qs;
  std::string q_range;
  std::uint32_t p = 0, f = 1;
  std::string cache_dir;
  std::string format = "json";
  std::uint32_t timeout_secs = 600;
  std::uint32_t jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--q", o.qs, "prime power q > 3 (repeatable)");
  cmd->add_option("--q-range", o.q_range,
                  "inclusive range a..b, expanded to prime powers");
  cmd->add_option("--p", o.p, "field characteristic (with --f)");
  cmd->add_option("--f", o.f, "extension degree (with --p)");
  cmd->add_option("--cache-dir", o.cache_dir, "graph cache directory")
      ->envname("CIV_CACHE_DIR");
  cmd->add_option("--format", o.format, "json, csv or human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  cmd->add_option("--timeout-secs", o.timeout_secs,
                  "per-search timeout in seconds");
  cmd->add_option("--jobs", o.jobs, "parallel q-tasks")
      ->check(CLI::Range(1u, 64u));
}

const std::vector<std::string> kLemmas = {"disks",     "4cycle", "eigen",
                                          "bound1",    "bound2", "faithful1",
                                          "weil",      "theorem1"};

std::vector<civ::LemmaReport> run_lemmas(const PrimePower& pp,
                                         const std::vector<std::string>& which,
                                         const CommonOpts& opts,
                                         std::uint64_t seed, int samples) {
  std::vector<civ::LemmaReport> reps;
  civ::Field F(pp.p, pp.f);
  bool odd = pp.p != 2;
  auto wants = [&](const std::string& name) {
    return std::find(which.begin(), which.end(), name) != which.end() ||
           std::find(which.begin(), which.end(), "all") != which.end();
  };
  std::optional<civ::InvolutionGraph> g;
  auto graph = [&]() -> const civ::InvolutionGraph& {
    if (!g) g = civ::cached_graph(F, opts.cache_dir);
    return *g;
  };
  try {
    if (odd) {
      if (wants("disks")) reps.push_back(civ::verify_disc_formulas(graph()));
      if (wants("4cycle")) reps.push_back(civ::verify_four_cycle(graph()));
      if (wants("eigen"))
        reps.push_back(civ::verify_eigenvalue_criterion(graph()));
      if (wants("bound1") && pp.q % 4 == 1)
        reps.push_back(civ::verify_bound1(graph()));
      if (wants("bound2") && pp.q % 4 == 3)
        reps.push_back(civ::verify_bound2(graph()));
      if (wants("faithful1") && pp.q % 4 == 1)
        reps.push_back(civ::verify_faithful1_count(graph()));
      if (wants("weil"))
        reps.push_back(civ::verify_weil_samples(F, samples, seed));
    }
    if (wants("theorem1")) {
      civ::Theorem1Options topts;
      topts.timeout = std::chrono::seconds(opts.timeout_secs);
      reps.push_back(civ::verify_theorem1(F, topts));
    }
  } catch (const std::exception& e) {
    civ::LemmaReport rep;
    rep.lemma = "exception";
    rep.q = pp.q;
    rep.status = civ::LemmaReport::Status::kError;
    rep.witnesses.push_back(e.what());
    reps.push_back(rep);
  }
  for (auto& rep : reps) rep.details["seed"] = seed;
  return reps;
}

int emit_all(const std::vector<PrimePower>& pps, const CommonOpts& opts,
             const std::vector<std::string>& which, std::uint64_t seed,
             int samples) {
  std::vector<std::vector<civ::LemmaReport>> all(pps.size());
  if (opts.jobs <= 1) {
    for (std::size_t i = 0; i < pps.size(); ++i)
      all[i] = run_lemmas(pps[i], which, opts, seed, samples);
  } else {
    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= pps.size()) return;
          i = next++;
        }
        all[i] = run_lemmas(pps[i], which, opts, seed, samples);
      }
    };
    std::vector<std::thread> pool;
    for (std::uint32_t j = 0; j < std::min<std::size_t>(opts.jobs, pps.size());
         ++j)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  bool csv_header = false;
  bool ok = true;
  for (const auto& reps : all)
    for (const auto& rep : reps) {
      print_report(rep, opts.format, csv_header);
      ok = ok && rep.passed();
    }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commuting involution graph verifier for PSL2(q)"};
  app.require_subcommand(1);

  CommonOpts vopts;
  std::vector<std::string> lemmas = {"all"};
  CLI::App* verify = app.add_subcommand("verify", "run lemma checks");
  add_common(verify, vopts);
  {
    std::vector<std::string> allowed = kLemmas;
    allowed.push_back("all");
    verify->add_option("--lemma", lemmas, "checks to run")
        ->check(CLI::IsMember(allowed));
  }
  std::uint64_t vseed = 1;
  int vsamples = 20;
  verify->add_option("--seed", vseed, "rng seed for sampled checks");
  verify->add_option("--samples", vsamples, "sample count for weil");

  CommonOpts eopts;
  std::string out_path;
  CLI::App* exp = app.add_subcommand("export", "write DIMACS graphs");
  add_common(exp, eopts);
  exp->add_option("--output", out_path,
                  "output file (single q) or directory; default stdout");

  CommonOpts wopts;
  std::uint64_t wseed = 1;
  int wsamples = 20;
  CLI::App* weil = app.add_subcommand("weil", "audit the point-count bound");
  add_common(weil, wopts);
  weil->add_option("--seed", wseed, "rng seed");
  weil->add_option("--samples", wsamples, "samples per q");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      auto pps = expand_qs(vopts.qs, vopts.q_range, vopts.p, vopts.f);
      return emit_all(pps, vopts, lemmas, vseed, vsamples);
    }
    if (exp->parsed()) {
      auto pps = expand_qs(eopts.qs, eopts.q_range, eopts.p, eopts.f);
      for (const auto& pp : pps) {
        civ::Field F(pp.p, pp.f);
        civ::InvolutionGraph g = civ::cached_graph(F, eopts.cache_dir);
        if (out_path.empty()) {
          civ::write_dimacs(g, std::cout);
        } else {
          std::filesystem::path base(out_path);
          std::filesystem::path file =
              pps.size() == 1 && !std::filesystem::is_directory(base)
                  ? base
                  : base / ("civ_q" + std::to_string(pp.q) + ".dimacs");
          std::ofstream os(file);
          if (!os) {
            std::cerr << "cannot open " << file << "\n";
            return 1;
          }
          civ::write_dimacs(g, os);
        }
      }
      return 0;
    }
    auto pps = expand_qs(wopts.qs, wopts.q_range, wopts.p, wopts.f);
    return emit_all(pps, wopts, {"weil"}, wseed, wsamples);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
