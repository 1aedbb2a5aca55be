#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "hybridwig/errors.hpp"
#include "io.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kConfig = 2, kQuadrature = 3, kCutoff = 4 };

}

int main(int argc, char** argv) {
  using namespace hybridwig;
  std::vector<std::string> args(argv + 1, argv + argc);
  SweepConfig cfg;
  try {
    cfg = cli::parse_config(args);
  } catch (const cli::HelpRequested& h) {
    std::cout << h.text;
    return kOk;
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  }

  try {
    const std::vector<SweepRow> rows = run_sweep(cfg);
    if (cfg.output_path.empty()) {
      cli::write_rows(std::cout, rows, cfg.output_format);
    } else {
      std::ofstream out(cfg.output_path);
      if (!out) {
        std::cerr << "cannot open " << cfg.output_path << '\n';
        return kFailure;
      }
      cli::write_rows(out, rows, cfg.output_format);
      if (!out) {
        std::cerr << "write to " << cfg.output_path << " failed\n";
        return kFailure;
      }
    }
  } catch (const QuadratureNonConvergence& e) {
    std::cerr << "quadrature did not converge: " << e.what() << '\n';
    return kQuadrature;
  } catch (const CutoffInsufficient& e) {
    std::cerr << "Fock cutoff insufficient: " << e.what() << '\n';
    return kCutoff;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const OracleMismatch& e) {
    std::cerr << "oracle check failed: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
