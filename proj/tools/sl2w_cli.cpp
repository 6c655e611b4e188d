// Command-line surface for the sl2 weight-system library: evaluation of
// chord diagrams, Sigma_n and wheel values, Bernoulli utilities, and the
// term-by-term series verification.
//
// Exit codes: 0 success, 1 mathematical verification failure, 2 usage or
// parse error.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sl2w/sl2w.hpp"

namespace {

unsigned default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

std::string read_all_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

void print_poly(const sl2w::CasimirPoly& p, bool json, const std::string& var) {
  std::cout << (json ? p.to_json() : p.to_string(var)) << "\n";
}

struct OracleSweep {
  bool ok = true;
  std::vector<std::string> lines;
};

// eval_cv versus the brute-force definition, over every canonical diagram
// with up to max_n chords.
OracleSweep run_oracle_sweep(unsigned max_n, const sl2w::Evaluator& ev) {
  OracleSweep sweep;
  sl2w::OracleEvaluator oracle;
  for (unsigned n = 1; n <= max_n; ++n) {
    unsigned bad = 0, count = 0;
    for (const auto& [d, mult] : sl2w::enumerate_matchings(n)) {
      ++count;
      if (ev.eval_cv(d) != oracle.eval(d)) {
        ++bad;
        sweep.lines.push_back("oracle mismatch at " + d.to_string());
      }
    }
    sweep.lines.push_back("oracle agreement n=" + std::to_string(n) + ": " +
                          std::to_string(count - bad) + "/" + std::to_string(count) +
                          " diagrams");
    if (bad) sweep.ok = false;
  }
  return sweep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sl2 weight system on chord diagrams"};
  app.require_subcommand(1);

  std::string dow;
  bool use_oracle = false, use_both = false, as_json = false;
  unsigned arg_n = 0;
  unsigned threads = default_threads();
  std::vector<unsigned> wheel_parts;
  std::string bern_kind;

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate W of a chord diagram");
  cmd_eval->add_option("dow", dow, "double-occurrence word, or - for stdin")->required();
  cmd_eval->add_flag("--oracle", use_oracle, "use the brute-force evaluator");
  cmd_eval->add_flag("--both", use_both, "print both evaluators and compare");
  cmd_eval->add_flag("--json", as_json, "JSON output");

  CLI::App* cmd_sigma = app.add_subcommand("sigma", "evaluate W(Sigma_n)");
  cmd_sigma->add_option("n", arg_n, "number of chords")->required();
  cmd_sigma->add_flag("--json", as_json, "JSON output");
  cmd_sigma->add_option("--threads", threads, "worker threads");

  CLI::App* cmd_wheel =
      app.add_subcommand("wheel", "evaluate W of a disjoint union of wheels");
  cmd_wheel->add_option("parts", wheel_parts, "half leg counts n_i (wheel w_{2n_i})")
      ->required();
  cmd_wheel->add_flag("--json", as_json, "JSON output");
  cmd_wheel->add_option("--threads", threads, "worker threads");

  CLI::App* cmd_bern =
      app.add_subcommand("bernoulli", "Bernoulli polynomials and numbers");
  cmd_bern->add_option("kind", bern_kind, "poly | modified | q")
      ->required()
      ->check(CLI::IsMember({"poly", "modified", "q"}));
  cmd_bern->add_option("n", arg_n, "index")->required();
  cmd_bern->add_flag("--json", as_json, "JSON output");

  CLI::App* cmd_series = app.add_subcommand("series", "print the three even series");
  cmd_series->add_option("N", arg_n, "truncation order")->required();
  cmd_series->add_flag("--json", as_json, "JSON output");
  cmd_series->add_option("--threads", threads, "worker threads");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "verify the series identities term by term");
  cmd_verify->add_option("N", arg_n, "verification order (>= 1)")->required();
  cmd_verify->add_flag("--json", as_json, "JSON output");
  cmd_verify->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (threads == 0) threads = 1;
  sl2w::Evaluator ev;

  try {
    if (*cmd_eval) {
      sl2w::ChordDiagram d = sl2w::parse_dow(dow == "-" ? read_all_stdin() : dow);
      if (use_both) {
        sl2w::CasimirPoly cv = ev.eval_cv(d);
        sl2w::CasimirPoly oc = sl2w::eval_oracle(d);
        std::cout << "recurrence: " << (as_json ? cv.to_json() : cv.to_string("c"))
                  << "\n";
        std::cout << "oracle:     " << (as_json ? oc.to_json() : oc.to_string("c"))
                  << "\n";
        if (cv != oc) {
          std::cerr << "evaluators disagree\n";
          return 1;
        }
      } else {
        print_poly(use_oracle ? sl2w::eval_oracle(d) : ev.eval_cv(d), as_json, "c");
      }
    } else if (*cmd_sigma) {
      print_poly(sl2w::eval_sigma(arg_n, ev, threads), as_json, "c");
    } else if (*cmd_wheel) {
      sl2w::WheelMonomial m(wheel_parts);
      print_poly(sl2w::eval_wheel_union(m, ev, threads), as_json, "c");
    } else if (*cmd_bern) {
      if (bern_kind == "poly") {
        print_poly(sl2w::bernoulli_poly(arg_n), as_json, "x");
      } else if (bern_kind == "modified") {
        sl2w::Rational b = sl2w::modified_bernoulli(arg_n);
        std::cout << (as_json ? sl2w::Polynomial(b).to_json() : b.to_string()) << "\n";
      } else {
        print_poly(sl2w::q_poly(arg_n), as_json, "c");
      }
    } else if (*cmd_series) {
      sl2w::EvenSeries main = sl2w::main_series(arg_n, ev, threads);
      sl2w::EvenSeries qs = sl2w::q_series(arg_n);
      sl2w::EvenSeries wheels = sl2w::wheels_exp_series(arg_n, ev, threads);
      if (as_json) {
        auto dump = [](const sl2w::EvenSeries& s) {
          std::string out = "[";
          for (unsigned k = 0; k <= s.order(); ++k) {
            if (k) out += ",";
            out += s.term(k).to_json();
          }
          return out + "]";
        };
        std::cout << "{\"order\":" << arg_n << ",\"main\":" << dump(main)
                  << ",\"q\":" << dump(qs) << ",\"wheels\":" << dump(wheels) << "}\n";
      } else {
        auto dump = [](const char* name, const sl2w::EvenSeries& s) {
          std::cout << name << ":\n";
          for (unsigned k = 0; k <= s.order(); ++k)
            std::cout << "  h^" << 2 * k << ": " << s.term(k).to_string("c") << "\n";
        };
        dump("main", main);
        dump("q", qs);
        dump("wheels", wheels);
      }
    } else if (*cmd_verify) {
      if (arg_n < 1) {
        std::cerr << "verify: order must be >= 1\n";
        return 2;
      }
      // Warm the cache order by order so the per-order cost is visible.
      for (unsigned n = 1; n <= arg_n; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        sl2w::eval_sigma(n, ev, threads);
        auto t1 = std::chrono::steady_clock::now();
        std::cerr << "order " << n << ": "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << " ms\n";
      }
      sl2w::Report rep = sl2w::verify(arg_n, ev, threads);
      OracleSweep sweep = run_oracle_sweep(std::min(arg_n, 4u), ev);
      if (as_json) {
        std::cout << rep.to_json() << "\n";
        for (const std::string& line : sweep.lines) std::cerr << line << "\n";
      } else {
        std::cout << rep.to_text();
        for (const std::string& line : sweep.lines) std::cout << line << "\n";
      }
      if (!rep.pass || !sweep.ok) {
        std::cerr << "verification failed\n";
        return 1;
      }
    }
  } catch (const sl2w::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
