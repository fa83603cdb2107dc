#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace toricdp::cli {

enum class Command {
  FanValidate,
  FanInfo,
  FanEnumerate,
  PairClassify,
  Verify,
  Draw,
};

enum class OutputFormat { Table, Json, Csv };

enum class Suite { T1, T2, T3, Volumes };

struct RunConfig {
  Command command = Command::FanValidate;
  std::optional<std::string> input_path;
  OutputFormat output_format = OutputFormat::Table;
  Suite suite = Suite::T2;
  std::int64_t r_max = 20;
  std::vector<std::size_t> rays{5, 6, 7};
  std::int64_t gamma_bound = 6;
  std::size_t samples = 1000;
  std::uint64_t seed = 20240611;
  std::optional<std::vector<std::int64_t>> coeffs;
  std::optional<std::string> svg_path;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // invalid fan, FAIL, non-ample
inline constexpr int kExitIo = 2;      // I/O, parse or usage failure

/// Parses argv-style arguments (without the program name) and runs the
/// command. Everything is written to out/err; nothing touches std::cout.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace toricdp::cli
