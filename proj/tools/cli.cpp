#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

namespace qsyl::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

SystemFile load(const fs::path& p, const Common& c) {
  SystemFile f = load_qsys(p);
  return c.apply_fixes ? f.corrected() : f;
}

// Runs body and maps library exceptions onto the exit-code contract.
template <class F>
int guarded(const fs::path& p, std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << p.string() << ": " << e.what() << "\n";
  } catch (const ShapeError& e) {
    err << "error: " << p.string() << ": " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return input_error;
}

ordered_json residual_json(const ResidualReport& r) {
  return {{"absolute", r.absolute}, {"scale", r.scale}, {"max_relative", r.max_relative()}};
}

void residual_text(std::ostream& out, const ResidualReport& r) {
  for (size_t i = 0; i < r.absolute.size(); ++i) out << "equation " << i + 1 << ": " << sci(r.absolute[i]) << "\n";
  out << "scale: " << sci(r.scale) << "\n";
  out << "max relative residual: " << sci(r.max_relative()) << "\n";
}

void write_text(const fs::path& p, const std::string& s) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << s;
}

}  // namespace

int cmd_check(const fs::path& system, const Common& c, std::ostream& out, std::ostream& err) {
  return guarded(system, err, [&] {
    c.tol.validate();
    const SystemFile f = load(system, c);
    const RankCertificate cert = check(f.system(), c.tol);
    const bool has_ref = !f.ranks.empty();
    std::vector<size_t> mismatched;
    if (has_ref)
      for (size_t i = 0; i < cert.ranks.size(); ++i)
        if (i >= f.ranks.size() || f.ranks[i] != cert.ranks[i].lhs) mismatched.push_back(i);

    if (c.format == Format::json) {
      ordered_json j;
      j["kind"] = to_string(f.kind);
      j["ranks"] = ordered_json::array();
      for (const auto& r : cert.ranks)
        j["ranks"].push_back({{"id", r.id}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds()}});
      j["projectors"] = ordered_json::array();
      for (const auto& p : cert.projectors)
        j["projectors"].push_back({{"id", p.id}, {"residual", p.residual}, {"holds", p.holds}});
      j["rank_verdict"] = cert.rank_verdict();
      j["projector_verdict"] = cert.projector_verdict();
      j["consistent"] = cert.consistent();
      if (has_ref) {
        j["reference_ranks"] = f.ranks;
        j["reference_match"] = mismatched.empty() && f.ranks.size() == cert.ranks.size();
      }
      out << j.dump(2) << "\n";
    } else {
      out << "kind: " << to_string(f.kind) << "\n";
      for (const auto& r : cert.ranks)
        out << r.id << ": " << r.lhs << " = " << r.rhs << (r.holds() ? " OK" : " FAIL") << "\n";
      for (const auto& p : cert.projectors)
        out << p.id << ": " << sci(p.residual) << (p.holds ? " OK" : " FAIL") << "\n";
      out << "rank route: " << (cert.rank_verdict() ? "consistent" : "inconsistent") << "\n";
      out << "projector route: " << (cert.projector_verdict() ? "consistent" : "inconsistent") << "\n";
      if (has_ref) {
        if (mismatched.empty() && f.ranks.size() == cert.ranks.size()) {
          out << "reference ranks: match\n";
        } else {
          out << "reference ranks: mismatch at";
          for (size_t i : mismatched)
            out << " " << cert.ranks[i].id << " (" << (i < f.ranks.size() ? std::to_string(f.ranks[i]) : "-")
                << " vs " << cert.ranks[i].lhs << ")";
          if (f.ranks.size() != cert.ranks.size()) out << " (count " << f.ranks.size() << " vs " << cert.ranks.size() << ")";
          out << "\n";
        }
      }
    }
    return cert.consistent() ? ok : inconsistent;
  });
}

int cmd_solve(const SolveArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  if (a.random_free && !a.seed) {
    err << "error: --free random requires --seed\n";
    return input_error;
  }
  return guarded(a.system, err, [&] {
    c.tol.validate();
    const SystemFile f = load(a.system, c);
    const CoupledSystem sys = f.system();
    const FreeParameters free = a.random_free ? random_parameters(shape_query(sys), *a.seed) : FreeParameters{};
    SolutionBundle s;
    try {
      s = solve(sys, free, c.tol);
    } catch (const Inconsistent& e) {
      err << "inconsistent: " << e.what() << "\n";
      return static_cast<int>(inconsistent);
    }
    const bool passed = s.residuals.max_relative() <= c.tol.verify_tol;

    std::ostringstream report;
    if (c.format == Format::json) {
      ordered_json j;
      j["kind"] = to_string(sys.kind);
      j["free"] = a.random_free ? "random" : "zero";
      if (a.seed) j["seed"] = *a.seed;
      j["residuals"] = residual_json(s.residuals);
      j["branch_gap"] = s.branch_gap;
      j["verified"] = passed;
      report << j.dump(2) << "\n";
    } else {
      report << "kind: " << to_string(sys.kind) << "\n";
      report << "free parameters: " << (a.random_free ? "random, seed " + std::to_string(*a.seed) : "zero") << "\n";
      residual_text(report, s.residuals);
      if (s.X3_alternate) report << "X3 branch gap: " << sci(s.branch_gap) << "\n";
      report << (passed ? "verified" : "NOT verified") << "\n";
    }
    fs::create_directories(a.out);
    for (size_t k = 0; k < s.X.size(); ++k) save_qmat(a.out / ("X" + std::to_string(k + 1) + ".qmat"), s.X[k]);
    write_text(a.out / (c.format == Format::json ? "residuals.json" : "residuals.txt"), report.str());
    out << report.str();
    return static_cast<int>(passed ? ok : verification_failed);
  });
}

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  return guarded(a.system, err, [&] {
    c.tol.validate();
    const SystemFile f = load(a.system, c);
    const CoupledSystem sys = f.system();
    std::vector<QuatMatrix> X;
    if (a.solution) {
      for (int k = 1; k <= unknown_count(sys.kind); ++k) {
        const fs::path p = *a.solution / ("X" + std::to_string(k) + ".qmat");
        try {
          X.push_back(load_qmat(p));
        } catch (const ParseError& e) {
          err << "error: " << p.string() << ": " << e.what() << "\n";
          return static_cast<int>(input_error);
        }
      }
    } else if (auto x = f.solution()) {
      X = std::move(*x);
    } else {
      err << "error: " << a.system.string() << " has no X blocks and no solution directory was given\n";
      return static_cast<int>(input_error);
    }
    const ResidualReport r = residual(sys, X);
    const bool passed = r.max_relative() <= c.tol.verify_tol;
    if (c.format == Format::json) {
      ordered_json j;
      j["kind"] = to_string(sys.kind);
      j["residuals"] = residual_json(r);
      j["verify_tol"] = c.tol.verify_tol;
      j["verified"] = passed;
      out << j.dump(2) << "\n";
    } else {
      residual_text(out, r);
      out << (passed ? "verified" : "NOT verified") << "\n";
    }
    return static_cast<int>(passed ? ok : verification_failed);
  });
}

int cmd_gen(const GenArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const auto kind = parse_kind(a.kind);
  if (!kind) {
    err << "error: unknown kind '" << a.kind << "'\n";
    return input_error;
  }
  if (a.size < 1) {
    err << "error: size must be at least 1\n";
    return input_error;
  }
  return guarded(a.out, err, [&] {
    GenOptions opt;
    opt.max_dim = a.size;
    opt.vary_dims = a.vary_dims;
    opt.rank_deficient = a.rank_deficient;
    const Generated g = generate(*kind, opt, a.seed);
    SystemFile f = SystemFile::from_system(g.sys);
    f.comments.push_back("# generated: kind " + a.kind + ", size " + std::to_string(a.size) + ", seed " +
                         std::to_string(a.seed));
    if (a.perturb) {
      const Perturbation p = perturb(g.sys, a.seed, c.tol);
      f = SystemFile::from_system(p.sys);
      f.comments.push_back("# generated: kind " + a.kind + ", size " + std::to_string(a.size) + ", seed " +
                           std::to_string(a.seed) + ", perturbed C" + std::to_string(p.equation + 1) + "(" +
                           std::to_string(p.row + 1) + "," + std::to_string(p.col + 1) + ")");
    }
    fs::create_directories(a.out);
    save_qsys(a.out / "system.qsys", f);
    if (!a.perturb)
      for (size_t k = 0; k < g.planted.size(); ++k)
        save_qmat(a.out / ("X" + std::to_string(k + 1) + ".qmat"), g.planted[k]);
    if (c.format == Format::json) {
      ordered_json j{{"kind", a.kind}, {"size", a.size}, {"seed", a.seed}, {"system", (a.out / "system.qsys").string()},
                     {"perturbed", a.perturb}};
      out << j.dump(2) << "\n";
    } else {
      out << "wrote " << (a.out / "system.qsys").string() << (a.perturb ? "" : " and planted X*.qmat") << "\n";
    }
    return static_cast<int>(ok);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solvability and general solutions of coupled one-sided Sylvester-type quaternion systems"};
  app.require_subcommand(1);
  Common common;
  std::string format = "text";
  double tol_rank = 0.0, tol_verify = common.tol.verify_tol;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--tol-rank", tol_rank, "Relative singular-value cutoff (0 = max(2m,2n)*eps)");
    s->add_option("--tol-verify", tol_verify, "Maximum relative residual accepted");
    s->add_flag("--apply-fixes", common.apply_fixes, "Apply the file's @fix corrections");
  };

  std::string sys_path;
  auto* check_cmd = app.add_subcommand("check", "Evaluate every rank and projector condition");
  check_cmd->add_option("system", sys_path, "System file (.qsys)")->required();
  add_common(check_cmd);

  SolveArgs solve_args;
  std::string free_mode = "zero";
  unsigned long long seed = 0;
  auto* solve_cmd = app.add_subcommand("solve", "Construct a solution and write X*.qmat plus a residual report");
  solve_cmd->add_option("system", sys_path, "System file (.qsys)")->required();
  solve_cmd->add_option("--free", free_mode, "Free parameters")->check(CLI::IsMember({"zero", "random"}));
  auto* solve_seed = solve_cmd->add_option("--seed", seed, "Seed for random free parameters");
  solve_cmd->add_option("--out", solve_args.out, "Output directory");
  add_common(solve_cmd);

  VerifyArgs verify_args;
  std::string solution_dir;
  auto* verify_cmd = app.add_subcommand("verify", "Substitute a solution and report residuals");
  verify_cmd->add_option("system", sys_path, "System file (.qsys)")->required();
  verify_cmd->add_option("solution", solution_dir, "Directory with X1.qmat ... (default: X blocks in the system file)");
  add_common(verify_cmd);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a consistent system with a planted solution");
  gen_cmd->add_option("kind,--kind", gen_args.kind, "System kind")->required();
  gen_cmd->add_option("size,--size", gen_args.size, "Side length of every unknown (maximum with --vary)");
  gen_cmd->add_option("seed,--seed", gen_args.seed, "RNG seed");
  gen_cmd->add_option("--out", gen_args.out, "Output directory");
  gen_cmd->add_flag("--vary", gen_args.vary_dims, "Draw every side uniformly from 1..size");
  gen_cmd->add_flag("--deficient", gen_args.rank_deficient, "Rank-deficient coefficients");
  gen_cmd->add_flag("--perturb", gen_args.perturb, "Make one equation unsolvable; no planted solution");
  add_common(gen_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  common.format = format == "json" ? Format::json : Format::text;
  common.tol.rank_rtol = tol_rank;
  common.tol.verify_tol = tol_verify;

  if (check_cmd->parsed()) return cmd_check(sys_path, common, out, err);
  if (solve_cmd->parsed()) {
    solve_args.system = sys_path;
    solve_args.random_free = free_mode == "random";
    if (solve_seed->count()) solve_args.seed = seed;
    return cmd_solve(solve_args, common, out, err);
  }
  if (verify_cmd->parsed()) {
    verify_args.system = sys_path;
    if (!solution_dir.empty()) verify_args.solution = fs::path(solution_dir);
    return cmd_verify(verify_args, common, out, err);
  }
  return cmd_gen(gen_args, common, out, err);
}

}  // namespace qsyl::cli
