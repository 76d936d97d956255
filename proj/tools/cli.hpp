#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "qsyl/qsyl.hpp"

namespace qsyl::cli {

enum ExitCode : int { ok = 0, input_error = 2, inconsistent = 3, verification_failed = 4 };

enum class Format { text, json };

struct Common {
  Tolerances tol;
  Format format = Format::text;
  // Apply the @fix lines of the system file before use.
  bool apply_fixes = false;
};

struct SolveArgs {
  std::filesystem::path system;
  bool random_free = false;
  std::optional<unsigned long long> seed;
  std::filesystem::path out = ".";
};

struct VerifyArgs {
  std::filesystem::path system;
  // Directory of X1.qmat... files; the system file's own X blocks when empty.
  std::optional<std::filesystem::path> solution;
};

struct GenArgs {
  std::string kind;
  int size = 3;
  unsigned long long seed = 0;
  std::filesystem::path out = ".";
  bool vary_dims = false;
  bool rank_deficient = false;
  bool perturb = false;
};

int cmd_check(const std::filesystem::path& system, const Common& c, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveArgs& a, const Common& c, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& a, const Common& c, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsyl::cli
