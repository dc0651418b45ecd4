#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace gaussnum::cli;

int main(int argc, char** argv) {
  CLI::App app{"Complex-base numeration for the Gaussian integers: digit sets, automata, dependence witnesses"};
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false;
  std::string output;
  app.add_flag("--pretty", pretty, "Indented output");
  app.add_flag("--json", [&](std::int64_t) { pretty = false; }, "Compact JSON output (default)");
  app.add_option("-o,--output", output, "Write the report to FILE instead of stdout");

  std::function<Report()> selected;

  std::string base, z, word, a, b, u = "1", bound = "1/25", set = "integers", file, file2;
  unsigned long m_max = 256, budget = 256, n_min = 3;
  unsigned depth = 0, k = 1, e = 3, reps = 8, max_len = 6;
  long norm_min = 5, norm_max = 100, radius_sq = 400;
  unsigned k_max = 12;
  std::vector<int> criteria;

  auto* digits = app.add_subcommand("digits", "Canonical digit set for a base");
  digits->add_option("-b,--base", base)->required();
  digits->callback([&] { selected = [&] { return guarded("digits", [&](Report& r) { cmd_digits(r, base); }); }; });

  auto* enc = app.add_subcommand("encode", "Base-b word of a Gaussian integer");
  enc->add_option("-b,--base", base)->required();
  enc->add_option("z", z)->required();
  enc->callback([&] { selected = [&] { return guarded("encode", [&](Report& r) { cmd_encode(r, base, z); }); }; });

  auto* dec = app.add_subcommand("decode", "Value of a comma-separated msd-first word");
  dec->add_option("-b,--base", base)->required();
  dec->add_option("word", word, "Digits, e.g. 0-1i,0+1i,-1,0 (\"\" for the empty word)")->required();
  dec->callback([&] { selected = [&] { return guarded("decode", [&](Report& r) { cmd_decode(r, base, word); }); }; });

  auto* scan = app.add_subcommand("scan-bases", "Digit-count, round-trip and length-bound checks over a norm range");
  scan->add_option("--norm-min", norm_min);
  scan->add_option("--norm-max", norm_max);
  scan->add_option("--radius-sq", radius_sq, "Squared radius of the test disc");
  scan->add_option("--k-max", k_max);
  scan->callback([&] {
    selected = [&] {
      return guarded("scan-bases", [&](Report& r) { cmd_scan_bases(r, norm_min, norm_max, radius_sq, k_max); });
    };
  });

  auto* dep = app.add_subcommand("deptest", "Multiplicative dependence of a and b");
  dep->add_option("a", a)->required();
  dep->add_option("b", b)->required();
  dep->callback([&] { selected = [&] { return guarded("deptest", [&](Report& r) { cmd_deptest(r, a, b); }); }; });

  auto* wit = app.add_subcommand("witness", "Search a^m / b^n close to u");
  wit->add_option("a", a)->required();
  wit->add_option("b", b)->required();
  wit->add_option("-u", u);
  wit->add_option("--bound", bound, "Squared error bound NUM/DEN");
  wit->add_option("--m-max", m_max);
  wit->callback([&] {
    selected = [&] { return guarded("witness", [&](Report& r) { cmd_witness(r, a, b, u, bound, m_max); }); };
  });

  auto* pre = app.add_subcommand("prefix", "Search a^m whose base-b word extends the word of u");
  pre->add_option("a", a)->required();
  pre->add_option("b", b)->required();
  pre->add_option("-u", u);
  pre->add_option("--n-min", n_min);
  pre->add_option("--budget", budget, "Largest exponent m searched");
  pre->add_option("--depth", depth, "Extra chain links after the first");
  pre->callback([&] {
    selected = [&] { return guarded("prefix", [&](Report& r) { cmd_prefix(r, a, b, u, n_min, budget, depth); }); };
  });

  auto* res = app.add_subcommand("residuals", "Residual class counts for the powers of a in base b");
  res->add_option("a", a)->required();
  res->add_option("-b,--base", base)->required();
  res->add_option("-k", k, "Prefix depth")->required();
  res->add_option("-e", e, "Extension depth");
  res->callback([&] { selected = [&] { return guarded("residuals", [&](Report& r) { cmd_residuals(r, a, base, k, e); }); }; });

  auto* pump = app.add_subcommand("pump", "Insert blocks of zeros after the leading digit and test membership");
  pump->add_option("-b,--base", base)->required();
  pump->add_option("--set", set, "integers | powers:A");
  pump->add_option("word", word)->required();
  pump->add_option("-k", k, "Block length");
  pump->add_option("--reps", reps);
  pump->callback([&] { selected = [&] { return guarded("pump", [&](Report& r) { cmd_pump(r, base, set, word, k, reps); }); }; });

  auto* dfa = app.add_subcommand("dfa", "DFA engine");
  dfa->require_subcommand(1);
  dfa->fallthrough();
  std::string kind;
  auto* build = dfa->add_subcommand("build", "Emit a built-in DFA (powers | integers)");
  build->add_option("kind", kind)->required();
  build->add_option("-b,--base", base)->required();
  build->callback([&] { selected = [&] { return guarded("dfa build", [&](Report& r) { cmd_dfa_build(r, kind, base); }); }; });
  auto* drun = dfa->add_subcommand("run", "Run a DFA file on a word");
  drun->add_option("file", file)->required();
  drun->add_option("word", word)->required();
  drun->callback([&] { selected = [&] { return guarded("dfa run", [&](Report& r) { cmd_dfa_run(r, file, word); }); }; });
  auto* dmin = dfa->add_subcommand("min", "Minimize a DFA file");
  dmin->add_option("file", file)->required();
  dmin->callback([&] { selected = [&] { return guarded("dfa min", [&](Report& r) { cmd_dfa_min(r, file); }); }; });
  auto* deq = dfa->add_subcommand("equiv", "Language equivalence of two DFA files");
  deq->add_option("lhs", file)->required();
  deq->add_option("rhs", file2)->required();
  deq->callback([&] { selected = [&] { return guarded("dfa equiv", [&](Report& r) { cmd_dfa_equiv(r, file, file2); }); }; });
  auto* dfal = dfa->add_subcommand("falsify", "Shortest word where a DFA file and a set disagree");
  dfal->add_option("file", file)->required();
  dfal->add_option("--set", set, "integers | powers:A");
  dfal->add_option("--max-len", max_len);
  dfal->callback([&] {
    selected = [&] { return guarded("dfa falsify", [&](Report& r) { cmd_dfa_falsify(r, file, set, max_len); }); };
  });

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--only", criteria, "Criterion ids to run (default: all)");
  verify->callback([&] { selected = [&] { return guarded("verify", [&](Report& r) { cmd_verify(r, criteria); }); }; });

  CLI11_PARSE(app, argc, argv);

  const Report report = selected();
  const std::string text = report.to_json().dump(pretty ? 2 : -1) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return 1;
    }
    out << text;
  }
  return report.exit_code();
}
