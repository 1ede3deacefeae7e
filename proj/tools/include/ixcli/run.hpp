#pragma once

// Command dispatch for the ixcalc tool. run() reads its inputs, computes,
// and returns a Report without touching stdout or writing files; files
// requested with --out/--cert/--trace are carried in Report::outputs and
// written by commit_outputs() only when the command did not error.

#include <string>
#include <utility>
#include <vector>

namespace ix::cli {

enum class Status { pass, fail, error };
const char* to_string(Status s);

struct Output {
  std::string path;
  std::string content;
};

struct Report {
  /// The invocation, echoed as given.
  std::string command;
  /// "key: value" lines in insertion order.
  std::vector<std::pair<std::string, std::string>> fields;
  /// Multi-line payload printed after the fields (documents, tallies, models).
  std::string body;
  Status status = Status::pass;
  std::vector<std::string> diagnostics;
  std::vector<Output> outputs;

  void field(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  std::string render() const;
  /// pass → 0, fail → 1, error → 2.
  int exit_code() const;
};

/// `args` excludes the program name.
Report run(const std::vector<std::string>& args);

/// Writes every pending output; an I/O failure turns the report into an
/// error. Does nothing when the report is already an error.
void commit_outputs(Report& report);

}  // namespace ix::cli
