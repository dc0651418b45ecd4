#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaussnum/json_io.hpp"

namespace gaussnum::cli {

enum class Status { Ok, NotFound, Error };

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Status status = Status::Ok;
  std::string message;

  Json to_json() const;
  int exit_code() const;
};

void cmd_digits(Report& r, const std::string& base);
void cmd_encode(Report& r, const std::string& base, const std::string& z);
void cmd_decode(Report& r, const std::string& base, const std::string& word);
void cmd_scan_bases(Report& r, long norm_min, long norm_max, long radius_sq, unsigned k_max);
void cmd_deptest(Report& r, const std::string& a, const std::string& b);
void cmd_witness(Report& r, const std::string& a, const std::string& b, const std::string& u, const std::string& bound,
                   unsigned long m_max);
void cmd_prefix(Report& r, const std::string& a, const std::string& b, const std::string& u, unsigned long n_min,
                  unsigned long budget, unsigned depth);
void cmd_residuals(Report& r, const std::string& a, const std::string& base, unsigned k, unsigned e);
void cmd_pump(Report& r, const std::string& base, const std::string& set, const std::string& word, unsigned k,
                unsigned reps);

void cmd_dfa_build(Report& r, const std::string& kind, const std::string& base);
void cmd_dfa_run(Report& r, const std::string& file, const std::string& word);
void cmd_dfa_min(Report& r, const std::string& file);
void cmd_dfa_equiv(Report& r, const std::string& lhs, const std::string& rhs);
void cmd_dfa_falsify(Report& r, const std::string& file, const std::string& set, unsigned max_len);

void cmd_verify(Report& r, const std::vector<int>& only);

/// Runs a command body; library errors become status "error" reports that keep the inputs.
template <typename F>
Report guarded(std::string command, F&& body) {
  Report r;
  r.command = std::move(command);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.results = Json::object();
    r.status = Status::Error;
    r.message = e.what();
  }
  return r;
}

}  // namespace gaussnum::cli
