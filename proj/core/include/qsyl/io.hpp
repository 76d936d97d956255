#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsyl/coupled.hpp"

namespace qsyl {

// .qmat grammar
//   file    := header row{m}
//   header  := INT INT NEWLINE            (m n, both >= 0)
//   row     := (DEC DEC DEC DEC){n} NEWLINE
// Blank lines and lines starting with '#' are skipped. Each row sits on one line.
QuatMatrix parse_qmat(std::string_view text);
std::string format_qmat(const QuatMatrix& m);
QuatMatrix load_qmat(const std::filesystem::path& path);
void save_qmat(const std::filesystem::path& path, const QuatMatrix& m);

// An entry replacement recorded in a system file; row and col are 0-based in memory.
struct EntryFix {
  std::string label;
  Index row = 0;
  Index col = 0;
  Quaternion value;
};

// .qsys grammar
//   file    := kind NEWLINE item*
//   item    := LABEL ':' NEWLINE qmat        (LABEL in A1..A4, B1..B4, C1..C4, X1..X5)
//            | '@ranks' INT* NEWLINE         (reference ranks in certificate order)
//            | '@fix' LABEL INT INT DEC DEC DEC DEC NEWLINE   (1-based row, col)
// Comment lines are kept and written back after the kind line.
struct SystemFile {
  Kind kind = Kind::sys01;
  std::vector<std::string> comments;
  std::map<std::string, QuatMatrix> blocks;
  std::vector<long> ranks;
  std::vector<EntryFix> fixes;

  static SystemFile from_system(const CoupledSystem& sys, const std::vector<QuatMatrix>& X = {});
  CoupledSystem system() const;
  // X1..Xn when all are present.
  std::optional<std::vector<QuatMatrix>> solution() const;
  // Copy with every fix applied and the fix list cleared.
  SystemFile corrected() const;
};

SystemFile parse_qsys(std::string_view text);
std::string format_qsys(const SystemFile& f);
SystemFile load_qsys(const std::filesystem::path& path);
void save_qsys(const std::filesystem::path& path, const SystemFile& f);

// Labels in canonical order: A1, B1, C1, ..., A4, B4, C4, X1, ..., X5.
const std::vector<std::string>& canonical_labels();
// FNV-1a over "LABEL m n" headers and one "a0 a1 a2 a3" line per entry, row-major.
std::uint64_t fnv1a64(std::string_view bytes);
std::string checksum(const SystemFile& f);

}  // namespace qsyl
