// synmon: command-line front end.
//
// Exit codes: 0 success / yes, 1 negative answer or failed check,
// 2 malformed input, I/O or budget failure, 3 unknown (search budget).

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "synmon/affine.hpp"
#include "synmon/automata.hpp"
#include "synmon/io.hpp"
#include "synmon/starfree.hpp"
#include "synmon/syntactic.hpp"
#include "synmon/verify.hpp"

namespace {

  using namespace synmon;

  constexpr int kOk        = 0;
  constexpr int kNegative  = 1;
  constexpr int kBadInput  = 2;
  constexpr int kUnknown   = 3;

  void emit(std::string const& path, std::string const& contents) {
    if (path.empty() || path == "-") {
      std::cout << contents;
    } else {
      write_file(path, contents);
    }
  }

  std::string subset_text(std::vector<index_t> const& subset, FiniteSemigroup const& S) {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
      out += (i ? ", " : "") + S.label(subset[i]);
    }
    return out + "}";
  }

  struct ConstructArgs {
    index_t     n      = 1;
    std::string reduct = "add";
    std::string out;
    std::string bundle;
    index_t     max_n  = 3;
  };

  int cmd_construct(ConstructArgs const& a) {
    ConstructionBudget budget;
    budget.max_n  = a.max_n;
    auto const A  = construct_a_plus_bn(a.n, budget);
    auto const& S = a.reduct == "add" ? A.add_reduct : A.mul_reduct;
    emit(a.out, semigroup_to_json(S));
    if (!a.bundle.empty()) {
      write_file(a.bundle, bundle_to_json(A));
    }
    auto& log = a.out.empty() || a.out == "-" ? std::cerr : std::cout;
    log << "A+(B_" << a.n << "): " << A.census.total() << " elements = "
        << A.census.constants << " constant + " << A.census.singleton
        << " singleton-support + " << A.census.nsupport << " n-support\n";
    return kOk;
  }

  struct VerifyArgs {
    bool        paper = false;
    index_t     n     = 1;
    std::string out_dir;
    std::string format = "text";
  };

  int cmd_verify(VerifyArgs const& a) {
    if (!a.paper) {
      std::cerr << "verify: only the --paper suite is available\n";
      return kBadInput;
    }
    std::optional<std::filesystem::path> dir;
    if (!a.out_dir.empty()) {
      dir = a.out_dir;
    }
    auto const report = run_verification_suite(a.n, dir);
    std::cout << (a.format == "json" ? report_to_json(report) : report_to_text(report));
    if (dir) {
      write_file(*dir / "report.json", report_to_json(report));
    }
    return report.passed() ? kOk : kNegative;
  }

  struct DecideArgs {
    std::string   path;
    std::uint64_t budget = 10'000'000;
    std::string   cert;
    std::string   mode = "monoid";
  };

  int cmd_decide(DecideArgs const& a) {
    auto const    S = semigroup_from_json(read_file(a.path));
    DecideOptions opts;
    opts.node_budget = a.budget;
    opts.mode        = context_mode_from_string(a.mode);
    auto const d     = decide_syntactic(S, opts);
    std::cout << to_string(d.verdict) << "\n";
    if (d.verdict == Verdict::yes) {
      std::cout << "disjunctive subset: " << subset_text(*d.subset, S) << "\n";
      if (!a.cert.empty()) {
        write_file(a.cert, certificate_to_json(*d.certificate));
        std::cout << "certificate: " << a.cert << "\n";
      }
      return kOk;
    }
    std::cout << "atoms: " << d.atoms << ", search nodes: " << d.nodes << "\n";
    return d.verdict == Verdict::no ? kNegative : kUnknown;
  }

  int cmd_replay(std::string const& semigroup, std::string const& cert) {
    auto const S = semigroup_from_json(read_file(semigroup));
    auto const c = certificate_from_json(read_file(cert));
    bool const ok = replay_certificate(S, c);
    std::cout << (ok ? "valid" : "invalid") << " certificate for a subset of size "
              << c.subset.size() << " (" << c.pairs.size() << " pairs)\n";
    return ok ? kOk : kNegative;
  }

  struct AutomatonArgs {
    std::string in;
    std::string out;
    std::string format = "json";
  };

  std::string render(Dfa const& A, std::string const& format) {
    if (format == "dot") {
      return to_dot(A);
    }
    return dfa_to_json(A);
  }

  int cmd_minimize(AutomatonArgs const& a) {
    auto const M = minimize(dfa_from_json(read_file(a.in)));
    emit(a.out, render(M, a.format));
    return kOk;
  }

  int cmd_monoid(AutomatonArgs const& a) {
    auto const A = dfa_from_json(read_file(a.in));
    auto const T = transition_monoid(A);
    if (a.format == "json") {
      emit(a.out, semigroup_to_json(T.monoid));
      return kOk;
    }
    std::ostringstream text;
    text << "transition monoid with " << T.monoid.size() << " elements\n";
    for (index_t x = 0; x < T.monoid.size(); ++x) {
      text << T.monoid.label(x) << ":";
      for (index_t q : T.functions[x]) {
        text << " " << q;
      }
      text << "\n";
    }
    text << (is_aperiodic(T.monoid).aperiodic ? "aperiodic" : "not aperiodic") << "\n";
    emit(a.out, text.str());
    return kOk;
  }

  struct StarFreeArgs {
    std::string expr;
    std::string alphabet;
    std::string emit_path;
    std::string format = "json";
  };

  int cmd_starfree(StarFreeArgs const& a) {
    auto const e = parse_starfree(a.expr);
    auto const A = compile_starfree(e, parse_alphabet(a.alphabet));
    emit(a.emit_path, render(A, a.format));
    if (!a.emit_path.empty() && a.emit_path != "-") {
      std::cout << e.to_string() << ": " << A.state_count() << " states\n";
    }
    return kOk;
  }

  int cmd_iso(std::string const& lhs, std::string const& rhs, std::uint64_t budget) {
    auto const S = semigroup_from_json(read_file(lhs));
    auto const T = semigroup_from_json(read_file(rhs));
    std::optional<IsoWitness> iso;
    try {
      iso = find_isomorphism(S, T, budget);
    } catch (BudgetExceeded const& e) {
      std::cout << "unknown: " << e.what() << "\n";
      return kUnknown;
    }
    if (!iso) {
      std::cout << "not isomorphic\n";
      return kNegative;
    }
    std::cout << "isomorphic\n";
    for (index_t x = 0; x < S.size(); ++x) {
      std::cout << S.label(x) << " -> " << T.label(iso->mapping[x]) << "\n";
    }
    return kOk;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups, syntactic congruences and automata"};
  app.require_subcommand(1);
  std::function<int()> action;

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a reduct of A+(B_n) as semigroup JSON");
  c->add_option("--n", construct.n, "Degree n")->required();
  c->add_option("--reduct", construct.reduct, "add or mul")
      ->check(CLI::IsMember({"add", "mul"}));
  c->add_option("--out", construct.out, "Output path (default: stdout)");
  c->add_option("--bundle", construct.bundle, "Also write the full A+(B_n) bundle here");
  c->add_option("--max-n", construct.max_n, "Largest n allowed");
  c->callback([&] { action = [&] { return cmd_construct(construct); }; });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the verification suite for A+(B_n)");
  v->add_flag("--paper", verify.paper, "Run the full suite");
  v->add_option("--n", verify.n, "Degree n")->required();
  v->add_option("--out-dir", verify.out_dir, "Directory for certificates and tables");
  v->add_option("--format", verify.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  v->callback([&] { action = [&] { return cmd_verify(verify); }; });

  DecideArgs decide;
  auto* d = app.add_subcommand("decide", "Decide whether a semigroup is syntactic");
  d->add_option("path", decide.path, "Semigroup JSON")->required();
  d->add_option("--budget", decide.budget, "Search node budget");
  d->add_option("--cert", decide.cert, "Write the certificate here");
  d->add_option("--mode", decide.mode, "monoid or semigroup contexts")
      ->check(CLI::IsMember({"monoid", "semigroup"}));
  d->callback([&] { action = [&] { return cmd_decide(decide); }; });

  std::string replay_semigroup, replay_cert;
  auto* r = app.add_subcommand("replay", "Re-check a disjunctivity certificate");
  r->add_option("semigroup", replay_semigroup, "Semigroup JSON")->required();
  r->add_option("certificate", replay_cert, "Certificate JSON")->required();
  r->callback([&] { action = [&] { return cmd_replay(replay_semigroup, replay_cert); }; });

  auto* a = app.add_subcommand("automaton", "Automaton tools");
  a->require_subcommand(1);
  AutomatonArgs minimize_args, monoid_args;
  auto* am = a->add_subcommand("minimize", "Minimise a DFA");
  am->add_option("--in", minimize_args.in, "DFA JSON")->required();
  am->add_option("--out", minimize_args.out, "Output path (default: stdout)");
  am->add_option("--format", minimize_args.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  am->callback([&] { action = [&] { return cmd_minimize(minimize_args); }; });
  auto* at = a->add_subcommand("monoid", "Transition monoid of a DFA");
  at->add_option("--in", monoid_args.in, "DFA JSON")->required();
  at->add_option("--out", monoid_args.out, "Output path (default: stdout)");
  monoid_args.format = "text";
  at->add_option("--format", monoid_args.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  at->callback([&] { action = [&] { return cmd_monoid(monoid_args); }; });

  StarFreeArgs starfree;
  auto* s = app.add_subcommand("starfree", "Compile a star-free expression to a minimal DFA");
  s->add_option("--expr", starfree.expr, "Expression")->required();
  s->add_option("--alphabet", starfree.alphabet, "\"abc\" or comma-separated names")
      ->required();
  s->add_option("--emit", starfree.emit_path, "Output path (default: stdout)");
  s->add_option("--format", starfree.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  s->callback([&] { action = [&] { return cmd_starfree(starfree); }; });

  std::string   iso_lhs, iso_rhs;
  std::uint64_t iso_budget = 10'000'000;
  auto* i = app.add_subcommand("iso", "Search for an isomorphism between two semigroups");
  i->add_option("lhs", iso_lhs, "Semigroup JSON")->required();
  i->add_option("rhs", iso_rhs, "Semigroup JSON")->required();
  i->add_option("--budget", iso_budget, "Search node budget");
  i->callback([&] { action = [&] { return cmd_iso(iso_lhs, iso_rhs, iso_budget); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }
  try {
    return action();
  } catch (synmon::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
