// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
//
// orcalc verify --suite <id> --genus <g> --b <0|1|both>
// orcalc export graphs|poset|atlas|strata ...
//
// Exit codes: 0 success, 1 verification failures or I/O errors, 2 usage.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orcalc/orcalc.hpp"

namespace fs = std::filesystem;
using namespace orcalc;

namespace {

constexpr int kUsage = 2;
constexpr int kMaxGenus = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ORCALC_OUT_DIR")) return env;
  return ".";
}

void write_file(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw IoError("write failed: " + path.string());
}

/// Writes to --out when given, else to stdout.
void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  write_file(out, text);
}

void check_genus(int g) {
  if (g < 2) throw UsageError("genus must be at least 2");
  if (g > kMaxGenus) throw UsageError("genus above " + std::to_string(kMaxGenus) + " is not supported");
}

/// THETA, DUMBBELL, G<i> (atlas member) or the compact form "w[..] e[..]".
Graph resolve_graph(const std::string& name, const Atlas& atlas) {
  if (name == "THETA") return catalog::theta();
  if (name == "DUMBBELL") return catalog::dumbbell();
  if (name.size() > 1 && name[0] == 'G' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int i = std::stoi(name.substr(1));
    if (i < 0 || i >= atlas.size()) throw UsageError("no atlas member " + name);
    return atlas.graph(i);
  }
  try {
    return graph_from_string(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string poset_text(const FinitePoset& p, const std::string& name, const std::string& format) {
  return format == "dot" ? to_dot(p, name) : to_json(p).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orcalc: orientation calculus on vertex-weighted multigraphs"};
  app.require_subcommand(1);

  int genus = 2;
  std::string b_flag = "both";
  std::string suite = "all";
  double budget = 1800;
  int threads = 1;
  std::string out;
  std::string format = "json";
  bool no_timing = false;

  auto* verify = app.add_subcommand("verify", "run a theorem suite and print a JSON report");
  verify->add_option("--suite", suite, "suite id")->check(CLI::IsMember(suite_ids()));
  verify->add_option("--genus", genus, "genus of the atlas");
  verify->add_option("--b", b_flag, "0, 1 or both")->check(CLI::IsMember({"0", "1", "both"}));
  verify->add_option("--budget-secs", budget, "time budget; larger sweeps are sampled with a fixed seed")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "report file (default stdout)");
  verify->add_flag("--no-timing", no_timing, "omit elapsed_ms so reports compare byte for byte");

  auto* exp = app.add_subcommand("export", "write graphs, posets or the atlas bundle");
  exp->require_subcommand(1);
  auto* graphs = exp->add_subcommand("graphs", "one JSON file per atlas member");
  graphs->add_option("--genus", genus);
  graphs->add_option("--out", out, "output directory (default $ORCALC_OUT_DIR or .)");

  std::string poset_kind = "OPbar";
  std::string graph_name = "THETA";
  auto* poset = exp->add_subcommand("poset", "one poset as JSON or DOT");
  poset->add_option("--poset", poset_kind, "A, OP, OPbar (per graph) or Sg, Ag, OPg, conj (per genus)")
      ->check(CLI::IsMember({"A", "OP", "OPbar", "Sg", "Ag", "OPg", "conj"}));
  poset->add_option("--graph", graph_name, "THETA, DUMBBELL, G<i> or w[..] e[..]");
  poset->add_option("--genus", genus);
  poset->add_option("--b", b_flag)->check(CLI::IsMember({"0", "1"}));
  poset->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  poset->add_option("--out", out, "output file (default stdout)");

  auto* atlas_cmd = exp->add_subcommand("atlas", "atlas bundle with posets and stratification");
  atlas_cmd->add_option("--genus", genus);
  atlas_cmd->add_option("--b", b_flag)->check(CLI::IsMember({"0", "1"}));
  atlas_cmd->add_option("--out", out, "output directory (default $ORCALC_OUT_DIR or .)");

  auto* strata = exp->add_subcommand("strata", "stratification report");
  strata->add_option("--genus", genus);
  strata->add_option("--b", b_flag)->check(CLI::IsMember({"0", "1"}));
  strata->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) {
      check_genus(genus);
      SuiteOptions opt;
      opt.genus = genus;
      opt.bs = parse_b(b_flag);
      opt.budget_secs = budget;
      opt.threads = threads;
      const SuiteReport rep = run_suite(suite, opt);
      emit(out, to_json(rep, !no_timing).dump(2) + "\n");
      if (!out.empty() && out != "-") {
        std::cerr << suite << ": " << rep.report.instances << " instances, " << rep.report.failures.size()
                  << " failures, " << rep.report.findings.size() << " findings\n";
      }
      return rep.ok() ? 0 : 1;
    }
    check_genus(genus);
    if (*graphs) {
      const Atlas atlas = enumerate_stable_graphs(genus);
      const fs::path dir = out_dir(out);
      for (int i = 0; i < atlas.size(); ++i) {
        write_file(dir / ("graph_g" + std::to_string(genus) + "_" + std::to_string(i) + ".json"),
                   to_json(atlas.graph(i)).dump(2) + "\n");
      }
      return 0;
    }
    const int b = parse_b(b_flag).front();
    if (*poset) {
      const Atlas atlas = enumerate_stable_graphs(genus);
      const ContractionTable table(atlas);
      if (poset_kind == "A" || poset_kind == "OP" || poset_kind == "OPbar") {
        const Graph g = resolve_graph(graph_name, atlas);
        const std::string name = poset_kind + "^" + std::to_string(b) + " " + to_string(g);
        if (poset_kind == "A") {
          emit(out, poset_text(build_A(g, b).poset, name, format));
        } else if (poset_kind == "OP") {
          emit(out, poset_text(build_OP(g, b).poset, name, format));
        } else {
          emit(out, poset_text(build_OPbar(g, b).poset, name, format));
        }
        return 0;
      }
      const std::string name = poset_kind + " g=" + std::to_string(genus) + " b=" + std::to_string(b);
      if (poset_kind == "Sg") {
        emit(out, poset_text(build_Sg(atlas), "S_" + std::to_string(genus), format));
        return 0;
      }
      const GenusA ga = build_Ag(table, b);
      if (poset_kind == "Ag") {
        emit(out, poset_text(ga.poset, name, format));
        return 0;
      }
      const GenusOP op = build_OPg(table, b, ga);
      if (poset_kind == "OPg") {
        emit(out, poset_text(op.poset, name, format));
      } else {
        emit(out, poset_text(conjugacy_quotient(op, atlas).poset, name, format));
      }
      return 0;
    }
    if (*atlas_cmd) {
      const Atlas atlas = enumerate_stable_graphs(genus);
      const ContractionTable table(atlas);
      const fs::path dir = out_dir(out);
      const std::string tag = "g" + std::to_string(genus) + "_b" + std::to_string(b);
      write_file(dir / ("atlas_" + tag + ".json"), atlas_bundle(atlas, table, b).dump(2) + "\n");
      write_file(dir / ("Sg_g" + std::to_string(genus) + ".dot"), to_dot(build_Sg(atlas), "S_" + std::to_string(genus)));
      const GenusA ga = build_Ag(table, b);
      const GenusOP op = build_OPg(table, b, ga);
      write_file(dir / ("conj_" + tag + ".dot"), to_dot(conjugacy_quotient(op, atlas).poset, "[OP] " + tag));
      return 0;
    }
    if (*strata) {
      const Atlas atlas = enumerate_stable_graphs(genus);
      const ContractionTable table(atlas);
      emit(out, stratification_report(atlas, table, b).dump(2) + "\n");
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
