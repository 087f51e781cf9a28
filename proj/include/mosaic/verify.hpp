#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mosaic {

class CensusSession;

enum class Tier { Required, Extended };
enum class VerifyStatus { Pass, Fail, SkippedExtended };

std::string_view tier_name(Tier t);
std::string_view status_name(VerifyStatus s);

struct ManifestEntry {
  std::string id;
  Tier tier = Tier::Required;
  int criterion = 0;  // acceptance criterion the check belongs to
  std::string description;
};

/// Parses `id | tier | criterion | description` lines; `#` starts a comment.
/// Throws ParseError on malformed lines or repeated ids.
std::vector<ManifestEntry> parse_manifest(std::string_view text);
std::string_view embedded_manifest_text();
const std::vector<ManifestEntry>& manifest();

struct CheckOutcome {
  bool passed = false;
  std::string details;
};

/// Shared state for a run of checks, so the 4x4 census is computed once.
class VerifyContext {
 public:
  VerifyContext();
  ~VerifyContext();
  CensusSession& session() { return *session_; }

 private:
  std::unique_ptr<CensusSession> session_;
};

/// Runs the check with the given manifest id. Throws std::out_of_range for
/// an unknown id.
CheckOutcome run_check(const std::string& id, VerifyContext& ctx);

struct VerifyResult {
  std::string id;
  VerifyStatus status = VerifyStatus::Fail;
  std::string details;
  std::chrono::duration<double> elapsed{};
};

/// Runs the manifest in order. Extended checks are reported as
/// SkippedExtended unless tier is Extended. `on_result` sees each result as
/// soon as it is known.
std::vector<VerifyResult> verify_all(Tier tier, const std::function<void(const VerifyResult&)>& on_result = {});

/// `STATUS id: details`, plus the elapsed time when `timing` is set.
std::string format_text(const VerifyResult& r, bool timing);
/// One JSON object per line.
std::string format_json(const VerifyResult& r, bool timing);

}  // namespace mosaic
