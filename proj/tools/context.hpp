#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include <discrete_remez/vitushkin.hpp>

namespace cli {

enum class Format { kJson, kCsv };

/// Settings shared by every subcommand.
struct GlobalOptions {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool csv = false;
  std::string constants_table;
  std::string out;
};

/// Exit statuses of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotApplicable = 3;
inline constexpr int kExitVerification = 4;

/// Command name, parameters, seed, tool version and timestamp; written at the
/// head of every output so a run can be repeated.
nlohmann::json make_manifest(const std::string& command, const nlohmann::json& parameters,
                             const GlobalOptions& g);

class Context {
 public:
  Context(std::string command, nlohmann::json parameters, const GlobalOptions& g);

  const GlobalOptions& options() const { return g_; }
  Format format() const { return g_.csv ? Format::kCsv : Format::kJson; }
  const nlohmann::json& manifest() const { return manifest_; }

  discrete_remez::VitushkinModel model(int n, int d) const;

  /// {"manifest": ..., "result": result} to --out or stdout.
  void emit_json(nlohmann::json result) const;
  /// CSV with the manifest as a leading comment line.
  void emit_csv(const std::string& csv) const;
  void write(const std::string& text) const;

 private:
  GlobalOptions g_;
  nlohmann::json manifest_;
  std::optional<discrete_remez::ConstantsTable> table_;
};

/// Parses one of the library's JSON strings back into a document.
nlohmann::json parsed(const std::string& text);

}  // namespace cli
