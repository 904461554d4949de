#include "synmon/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "synmon/affine.hpp"
#include "synmon/automata.hpp"
#include "synmon/io.hpp"
#include "synmon/separation_cases.hpp"
#include "synmon/starfree.hpp"
#include "synmon/syntactic.hpp"

namespace synmon {

  FiniteSemigroup contains_b_without_c_table() {
    return validate_semigroup({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, {"f_a", "f_b", "f_c"});
  }

  FiniteSemigroup ends_with_a_then_bs_table() {
    return validate_semigroup({{0, 0, 2}, {0, 1, 2}, {0, 2, 2}}, {"f_a", "f_b", "f_c"});
  }

  bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
  }

  namespace {
    // A check reports failures through fail(); anything thrown fails it too.
    struct Outcome {
      std::vector<std::string> failures;
      std::vector<std::string> notes;
      std::vector<std::string> artifacts;

      void expect(bool ok, std::string const& what) {
        if (!ok) {
          failures.push_back(what);
        }
      }
      void note(std::string what) {
        notes.push_back(std::move(what));
      }
    };

    class Suite {
     public:
      Suite(index_t n, std::optional<std::filesystem::path> dir)
          : dir_(std::move(dir)) {
        report_.n = n;
      }

      void run(std::string name, std::string anchor, std::function<void(Outcome&)> body) {
        CheckRecord record{std::move(name), std::move(anchor), false, 0, {}, {}};
        Outcome     outcome;
        auto const  start = std::chrono::steady_clock::now();
        try {
          body(outcome);
        } catch (std::exception const& e) {
          outcome.failures.push_back(std::string("exception: ") + e.what());
        }
        record.elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        record.passed    = outcome.failures.empty();
        auto const& why  = record.passed ? outcome.notes : outcome.failures;
        for (std::size_t i = 0; i < why.size(); ++i) {
          record.detail += (i ? "; " : "") + why[i];
        }
        record.artifacts = std::move(outcome.artifacts);
        report_.checks.push_back(std::move(record));
      }

      // Writes an artifact when an output directory was given.
      void emit(Outcome& out, std::string const& file, std::string const& contents) {
        if (dir_) {
          auto const path = *dir_ / file;
          write_file(path, contents);
          out.artifacts.push_back(path.string());
        }
      }

      VerificationReport take() {
        return std::move(report_);
      }

     private:
      std::optional<std::filesystem::path> dir_;
      VerificationReport                   report_;
    };

    std::string reduct_name(bool additive) {
      return additive ? "add" : "mul";
    }

    void check_left_distributivity(APlusBn const& A, Outcome& out) {
      auto const& add  = A.add_reduct;
      auto const& mul  = A.mul_reduct;
      index_t const sz = add.size();
      for (index_t f = 0; f < sz; ++f) {
        for (index_t g = 0; g < sz; ++g) {
          for (index_t h = 0; h < sz; ++h) {
            if (mul.product(f, add.product(g, h))
                != add.product(mul.product(f, g), mul.product(f, h))) {
              out.expect(false, "f(g + h) != fg + fh at f = " + A.label(f) + ", g = "
                                    + A.label(g) + ", h = " + A.label(h));
              return;
            }
          }
        }
      }
      out.note(std::to_string(std::size_t{sz} * sz * sz) + " triples");
    }

    // The label assignment f_a, f_b, f_c -> xi(1,1), (1,1;id),
    // xi(theta) on A+(B_1).
    std::vector<index_t> b1_assignment(APlusBn const& A) {
      return {A.constant(BrandtElement::pair(1, 1)),
              A.nsupport(1, 1, identity_permutation(1)),
              A.constant(BrandtElement::theta())};
    }

    void check_table(Dfa const&             dfa,
                     FiniteSemigroup const& table,
                     FiniteSemigroup const& reduct,
                     std::vector<index_t> const& assignment,
                     Outcome&               out) {
      auto const T = transition_monoid(dfa);
      out.expect(T.monoid.size() == 3,
                 "transition monoid has " + std::to_string(T.monoid.size()) + " elements");
      for (index_t s = 0; s < 3; ++s) {
        for (index_t t = 0; t < 3; ++t) {
          out.expect(T.monoid.product(T.generator_map[s], T.generator_map[t])
                         == T.generator_map[table.product(s, t)],
                     "transition monoid differs from the table at " + table.label(s) + " "
                         + table.label(t));
          out.expect(reduct.product(assignment[s], assignment[t])
                         == assignment[table.product(s, t)],
                     "reduct differs from the table at " + table.label(s) + " "
                         + table.label(t));
        }
      }
      out.expect(is_isomorphism(table, reduct, assignment),
                 "label assignment is not an isomorphism");
      auto const iso = find_isomorphism(T.monoid, reduct);
      out.expect(iso.has_value(), "no isomorphism found by search");
      if (iso) {
        for (index_t s = 0; s < 3; ++s) {
          out.expect(iso->mapping[T.generator_map[s]] == assignment[s],
                     "search found a different isomorphism");
        }
      }
    }

    void check_disjunctive(Suite&                      suite,
                           Outcome&                    out,
                           FiniteSemigroup const&      S,
                           std::vector<index_t> const& subset,
                           std::string const&          tag) {
      for (auto mode : {ContextMode::monoid, ContextMode::semigroup}) {
        auto const cong = syntactic_congruence(S, subset, mode);
        out.expect(cong.is_equality(), to_string(mode) + " contexts: congruence has "
                                           + std::to_string(cong.block_count())
                                           + " blocks, expected "
                                           + std::to_string(S.size()));
        auto const result = is_disjunctive(S, subset, mode);
        out.expect(result.disjunctive && result.certificate
                       && replay_certificate(S, *result.certificate),
                   to_string(mode) + " contexts: certificate missing or replay failed");
        if (result.certificate) {
          suite.emit(out, "certificate_" + tag + "_" + to_string(mode) + ".json",
                     certificate_to_json(*result.certificate));
        }
        out.expect(find_isomorphism(quotient(S, cong), S).has_value(),
                   "quotient by the syntactic congruence is not isomorphic to S");
      }
      out.note("|subset| = " + std::to_string(subset.size()) + ", "
               + std::to_string(std::size_t{S.size()} * (S.size() - 1) / 2)
               + " pairs certified in both modes");
    }

    void check_decide(Suite& suite, Outcome& out, FiniteSemigroup const& S, std::string const& tag) {
      auto const d = decide_syntactic(S);
      out.expect(d.verdict == Verdict::yes, tag + ": decision " + to_string(d.verdict));
      if (d.certificate) {
        out.expect(replay_certificate(S, *d.certificate), tag + ": replay failed");
        suite.emit(out, "certificate_decide_" + tag + ".json",
                   certificate_to_json(*d.certificate));
      }
    }
  }  // namespace

  VerificationReport
  run_verification_suite(index_t n, std::optional<std::filesystem::path> const& artifact_dir) {
    if (n < 1 || n > 3) {
      throw BudgetExceeded("verification suite supports 1 <= n <= 3, got "
                           + std::to_string(n));
    }
    Suite                  suite(n, artifact_dir);
    std::optional<APlusBn> built;

    suite.run("census", "additive closure of the affine maps has the predicted size and kinds",
              [&](Outcome& out) {
                built = construct_a_plus_bn(n);
                auto const& c = built->census;
                std::size_t fact = 1;
                for (index_t k = 2; k <= n; ++k) {
                  fact *= k;
                }
                std::size_t const n2 = std::size_t{n} * n;
                out.expect(c.total() == expected_a_plus_bn_size(n),
                           "total " + std::to_string(c.total()));
                out.expect(c.constants == n2 + 1, "constants " + std::to_string(c.constants));
                out.expect(c.singleton == (n == 1 ? 0 : n2 * n2),
                           "singleton " + std::to_string(c.singleton));
                out.expect(c.nsupport == fact * n2, "n-support " + std::to_string(c.nsupport));
                out.expect(c.other == 0, "other " + std::to_string(c.other));
                out.note(std::to_string(c.total()) + " = " + std::to_string(c.constants) + " + "
                         + std::to_string(c.singleton) + " + " + std::to_string(c.nsupport));
                suite.emit(out, "a_plus_b" + std::to_string(n) + ".json", bundle_to_json(*built));
                for (bool additive : {true, false}) {
                  suite.emit(out,
                             "reduct_" + reduct_name(additive) + "_n" + std::to_string(n) + ".json",
                             semigroup_to_json(additive ? built->add_reduct : built->mul_reduct));
                }
              });
    if (!built) {
      return suite.take();
    }
    APlusBn const& A = *built;

    suite.run("multiplicative closure", "the additive closure is closed under composition",
              [&](Outcome& out) {
                auto const closure = generate_closure(A.elements, Operation::compose);
                out.expect(closure.size() == A.elements.size(),
                           "composition closure has " + std::to_string(closure.size())
                               + " elements");
              });

    suite.run("left distributivity", "f(g + h) = fg + fh on the whole carrier",
              [&](Outcome& out) { check_left_distributivity(A, out); });

    if (n == 1) {
      auto const assignment = b1_assignment(A);
      suite.run("table of T(A_b)",
                "transition monoid of the b-language automaton equals the additive reduct",
                [&](Outcome& out) {
                  check_table(contains_b_without_c_dfa(), contains_b_without_c_table(),
                              A.add_reduct, assignment, out);
                });
      suite.run("table of T(A_a)",
                "transition monoid of the a-language automaton equals the multiplicative "
                "reduct",
                [&](Outcome& out) {
                  check_table(ends_with_a_then_bs_dfa(), ends_with_a_then_bs_table(),
                              A.mul_reduct, assignment, out);
                });
      suite.run("minimality", "the two automata are minimal with 3 and 2 states",
                [&](Outcome& out) {
                  auto const Ab = contains_b_without_c_dfa();
                  auto const Aa = ends_with_a_then_bs_dfa();
                  auto const mb = minimize(Ab);
                  auto const ma = minimize(Aa);
                  out.expect(mb.state_count() == 3,
                             "A_b minimises to " + std::to_string(mb.state_count()));
                  out.expect(ma.state_count() == 2,
                             "A_a minimises to " + std::to_string(ma.state_count()));
                  out.expect(dfa_equivalent(Ab, mb).equivalent, "A_b changed language");
                  out.expect(dfa_equivalent(Aa, ma).equivalent, "A_a changed language");
                });
      suite.run("star-free expressions",
                "the expressions compile to the two automata with aperiodic monoids",
                [&](Outcome& out) {
                  std::vector<std::string> const sigma{"a", "b", "c"};
                  auto const pairs = {std::pair{contains_b_without_c_expr, contains_b_without_c_dfa()},
                                      std::pair{ends_with_a_then_bs_expr, ends_with_a_then_bs_dfa()}};
                  for (auto const& [text, target] : pairs) {
                    auto const compiled = compile_starfree(parse_starfree(text), sigma);
                    auto const eq       = dfa_equivalent(compiled, target);
                    out.expect(eq.equivalent,
                               std::string(text) + " differs on "
                                   + (eq.witness ? "\"" + target.format_word(*eq.witness) + "\""
                                                 : std::string("?")));
                    out.expect(is_aperiodic(syntactic_monoid_of(compiled)).aperiodic,
                               std::string(text) + ": monoid is not aperiodic");
                  }
                });
      suite.run("aperiodicity", "both reducts of A+(B_1) are aperiodic (all idempotent)",
                [&](Outcome& out) {
                  for (bool additive : {true, false}) {
                    auto const& S = additive ? A.add_reduct : A.mul_reduct;
                    out.expect(is_aperiodic(S).aperiodic, reduct_name(additive) + " reduct");
                    for (index_t x = 0; x < S.size(); ++x) {
                      out.expect(S.is_idempotent(x),
                                 reduct_name(additive) + ": " + A.label(x) + " not idempotent");
                    }
                  }
                });
      suite.run("disjunctive subset D", "D is disjunctive in the multiplicative reduct",
                [&](Outcome& out) {
                  check_disjunctive(suite, out, A.mul_reduct,
                                    disjunctive_subset_multiplicative(A), "D");
                });
      suite.run("decision", "both reducts of A+(B_1) are syntactic", [&](Outcome& out) {
        check_decide(suite, out, A.add_reduct, "add");
        check_decide(suite, out, A.mul_reduct, "mul");
      });
      suite.run("separation contexts",
                "the multiplicative separating contexts hold for every pair",
                [&](Outcome& out) {
                  auto const r = replay_multiplicative_separations(A);
                  out.failures.insert(out.failures.end(), r.failures.begin(), r.failures.end());
                  out.note(std::to_string(r.instances) + " contexts");
                });
      return suite.take();
    }

    suite.run("disjunctive subset P", "P is disjunctive in the additive reduct",
              [&](Outcome& out) {
                check_disjunctive(suite, out, A.add_reduct, disjunctive_subset_additive(A), "P");
              });
    suite.run("disjunctive subset D", "D is disjunctive in the multiplicative reduct",
              [&](Outcome& out) {
                check_disjunctive(suite, out, A.mul_reduct, disjunctive_subset_multiplicative(A),
                                  "D");
              });
    suite.run("aperiodicity",
              "the additive reduct is aperiodic and the multiplicative one is not",
              [&](Outcome& out) {
                out.expect(is_aperiodic(A.add_reduct).aperiodic, "additive reduct");
                auto const mul = is_aperiodic(A.mul_reduct);
                out.expect(!mul.aperiodic && mul.witness,
                           "multiplicative reduct has no witness cycle");
                if (mul.witness) {
                  auto const& w = *mul.witness;
                  out.expect(w.period > 1 && replay_power_cycle(A.mul_reduct, w),
                             "witness cycle does not replay");
                  out.note("witness " + A.label(w.element) + " with index "
                           + std::to_string(w.index) + " and period "
                           + std::to_string(w.period));
                }
              });
    suite.run("separation contexts",
              "the explicit separating contexts hold for every pair in both reducts",
              [&](Outcome& out) {
                for (auto const& r : {replay_additive_separations(A),
                                      replay_multiplicative_separations(A)}) {
                  out.failures.insert(out.failures.end(), r.failures.begin(), r.failures.end());
                  out.note(std::to_string(r.instances) + " contexts over "
                           + std::to_string(r.pairs) + " pairs");
                }
              });
    suite.run("sum language",
              "the syntactic semigroup of the sum language is the additive reduct, and "
              "aperiodic",
              [&](Outcome& out) {
                auto const P   = disjunctive_subset_additive(A);
                auto const dfa = sum_language_dfa(A, P);
                suite.emit(out, "sum_language_n" + std::to_string(n) + ".json", dfa_to_json(dfa));
                auto const T = syntactic_semigroup_of(dfa);
                out.expect(T.monoid.size() == A.add_reduct.size(),
                           "syntactic semigroup has " + std::to_string(T.monoid.size())
                               + " elements");
                // Each element is sent to the sum of the letters of its word.
                std::vector<index_t> mapping;
                for (auto const& w : T.words) {
                  index_t sum = A.aff[w.at(0)];
                  for (std::size_t i = 1; i < w.size(); ++i) {
                    sum = A.add_reduct.product(sum, A.aff[w[i]]);
                  }
                  mapping.push_back(sum);
                }
                out.expect(T.monoid.size() == A.add_reduct.size()
                               && is_isomorphism(T.monoid, A.add_reduct, mapping),
                           "letter sums do not give an isomorphism");
                if (n == 2) {
                  out.expect(find_isomorphism(T.monoid, A.add_reduct).has_value(),
                             "isomorphism search found no witness");
                }
                out.expect(is_aperiodic(T.monoid).aperiodic, "syntactic semigroup not aperiodic");
              });
    return suite.take();
  }

  std::string report_to_text(VerificationReport const& report) {
    std::ostringstream out;
    for (auto const& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << static_cast<long>(c.elapsed_ms)
          << " ms): " << c.anchor;
      if (!c.detail.empty()) {
        out << " [" << c.detail << "]";
      }
      out << "\n";
    }
    out << (report.passed() ? "all checks passed" : "some checks failed") << " for n = "
        << report.n << "\n";
    return out.str();
  }

  std::string report_to_json(VerificationReport const& report) {
    nlohmann::ordered_json j;
    j["n"]      = report.n;
    j["passed"] = report.passed();
    auto checks = nlohmann::ordered_json::array();
    for (auto const& c : report.checks) {
      nlohmann::ordered_json e;
      e["name"]       = c.name;
      e["anchor"]     = c.anchor;
      e["status"]     = c.passed ? "pass" : "fail";
      e["elapsed_ms"] = c.elapsed_ms;
      e["detail"]     = c.detail;
      e["artifacts"]  = c.artifacts;
      checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
  }

}  // namespace synmon
