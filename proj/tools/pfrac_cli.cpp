// pfrac: partial fractions over hyperplane arrangements.
//
//   pfrac points    INPUT [--format json|text] [--max-xp N]
//   pfrac decompose INPUT [--strategy S] [--verify] [--format F] [--seed N] [--trials N]
//   pfrac verify    DECOMPOSITION INPUT [--format F] [--seed N] [--trials N]
//   pfrac generic   INPUT [--format F]
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pfrac/pfrac.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

struct InputDeleter {
  void operator()(pfrac_input* p) const { pfrac_input_free(p); }
};
struct DecompositionDeleter {
  void operator()(pfrac_decomposition* p) const { pfrac_decomposition_free(p); }
};
struct ReportDeleter {
  void operator()(pfrac_report* p) const { pfrac_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { pfrac_string_free(p); }
};

using InputPtr = std::unique_ptr<pfrac_input, InputDeleter>;
using DecompositionPtr = std::unique_ptr<pfrac_decomposition, DecompositionDeleter>;
using ReportPtr = std::unique_ptr<pfrac_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind to main with a ready exit code; the message is already printed.
struct ExitRequest {
  int code;
};

int exit_code_for(pfrac_status s) {
  switch (s) {
    case PFRAC_OK: return kExitOk;
    case PFRAC_ERR_INVALID_ARGUMENT:
    case PFRAC_ERR_PARSE:
    case PFRAC_ERR_BAD_DIMENSION:
    case PFRAC_ERR_ZERO_VECTOR_FORM:
    case PFRAC_ERR_NOT_SPANNING:
    case PFRAC_ERR_DIMENSION_MISMATCH:
    case PFRAC_ERR_SUBSET_EXPLOSION:
      return kExitInvalidInput;
    default:
      return kExitInternal;
  }
}

void check(pfrac_status s, const std::string& context) {
  if (s == PFRAC_OK) return;
  std::cerr << "pfrac: " << context << ": " << pfrac_last_error() << " ["
            << pfrac_status_name(s) << "]\n";
  throw ExitRequest{exit_code_for(s)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "pfrac: cannot read " << path << "\n";
    throw ExitRequest{kExitInvalidInput};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputPtr load_input(const std::string& path) {
  const std::string text = read_file(path);
  pfrac_input* raw = nullptr;
  check(pfrac_input_parse(text.c_str(), &raw), path);
  return InputPtr(raw);
}

pfrac_format to_format(const std::string& name) {
  return name == "text" ? PFRAC_FORMAT_TEXT : PFRAC_FORMAT_JSON;
}

void emit(char* raw) {
  StringPtr s(raw);
  std::cout << s.get();
}

ReportPtr run_verify(const pfrac_decomposition* d, std::size_t trials, std::uint64_t seed) {
  pfrac_report* raw = nullptr;
  check(pfrac_verify(d, trials, seed, &raw), "verify");
  return ReportPtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-fraction decomposition over hyperplane arrangements"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string strategy = "last-removable";
  bool verify = false;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t max_xp = 20;
  std::string input_path;
  std::string decomposition_path;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Seed for the random spot check")->capture_default_str();
    cmd->add_option("--trials", trials, "Spot-check sample count")->capture_default_str();
  };

  auto* points = app.add_subcommand("points", "List the points of the arrangement with X_p");
  points->add_option("input", input_path, "Arrangement JSON file")->required();
  add_format(points);
  points->add_option("--max-xp", max_xp, "Cap on |X_p| for spanning-subset enumeration")
      ->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Decompose into partial fractions");
  decompose->add_option("input", input_path, "Arrangement JSON file")->required();
  decompose->add_option("--strategy", strategy, "Pivot strategy")
      ->check(CLI::IsMember({"last-removable", "first-removable"}))
      ->capture_default_str();
  decompose->add_flag("--verify", verify, "Run the verification oracles on the result");
  decompose->add_option("--max-xp", max_xp, "Cap on |X_p| for the |L(X_p)| column of the text listing")
      ->capture_default_str();
  add_format(decompose);
  add_sampling(decompose);

  auto* verify_cmd = app.add_subcommand("verify", "Re-verify a decomposition file");
  verify_cmd->add_option("decomposition", decomposition_path, "Decomposition JSON file")
      ->required();
  verify_cmd->add_option("input", input_path, "Arrangement JSON file")->required();
  add_format(verify_cmd);
  add_sampling(verify_cmd);

  auto* generic = app.add_subcommand("generic", "Report whether the parameters are generic");
  generic->add_option("input", input_path, "Arrangement JSON file")->required();
  add_format(generic);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    const auto fmt = to_format(format);
    if (*points) {
      auto input = load_input(input_path);
      char* out = nullptr;
      check(pfrac_points_render(input.get(), fmt, max_xp, &out), "points");
      emit(out);
      return kExitOk;
    }
    if (*generic) {
      auto input = load_input(input_path);
      char* out = nullptr;
      check(pfrac_generic_render(input.get(), fmt, nullptr, &out), "generic");
      emit(out);
      return kExitOk;
    }
    if (*decompose) {
      auto input = load_input(input_path);
      pfrac_strategy s{};
      check(pfrac_strategy_from_name(strategy.c_str(), &s), "strategy");
      pfrac_decomposition* raw = nullptr;
      check(pfrac_decompose(input.get(), s, &raw), "decompose");
      DecompositionPtr d(raw);
      ReportPtr report;
      if (verify) report = run_verify(d.get(), trials, seed);
      char* out = nullptr;
      check(pfrac_decomposition_render(d.get(), fmt, report.get(), max_xp, &out), "render");
      emit(out);
      return report && !pfrac_report_passed(report.get()) ? kExitVerifyFailed : kExitOk;
    }
    if (*verify_cmd) {
      auto input = load_input(input_path);
      const std::string text = read_file(decomposition_path);
      pfrac_decomposition* raw = nullptr;
      check(pfrac_decomposition_parse(input.get(), text.c_str(), &raw), decomposition_path);
      DecompositionPtr d(raw);
      auto report = run_verify(d.get(), trials, seed);
      char* out = nullptr;
      check(pfrac_report_render(report.get(), fmt, &out), "render");
      emit(out);
      return pfrac_report_passed(report.get()) ? kExitOk : kExitVerifyFailed;
    }
  } catch (const ExitRequest& e) {
    return e.code;
  }
  return kExitInvalidInput;
}
