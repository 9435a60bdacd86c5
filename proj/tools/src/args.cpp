#include <iostream>

#include "CLI11.hpp"
#include "kdvspec/cli.hpp"

namespace kdvspec::cli {

int main_entry(int argc, char** argv) {
  CLI::App app{"kdvspec: KdV levels, spectral curves and factorizations of L - lambda"};
  JobSpec job;
  bool opposite = false, no_timings = false;
  std::string g2, g3, l0, m0, t0;

  app.add_option("command", job.command, "hierarchy|level|curve|factor|parametrize|solve|specialize|verify")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--family", job.family, "rational|rosen-morse|elliptic|custom");
  app.add_option("--s", job.s, "family member (hierarchy: highest index)");
  app.add_option("--potential", job.potential, "potential expression, e.g. \"6/x^2\"");
  app.add_option("--tower", job.tower, "rational|exponential|w|weierstrass");
  auto* og2 = app.add_option("--g2", g2, "numeric invariant g2");
  auto* og3 = app.add_option("--g3", g3, "numeric invariant g3");
  auto* ol0 = app.add_option("--lambda0", l0, "curve point, lambda coordinate");
  auto* om0 = app.add_option("--mu0", m0, "curve point, mu coordinate");
  auto* ot0 = app.add_option("--tau0", t0, "parameter value");
  app.add_option("--format", job.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--opposite-sheet", opposite, "use chi2 with the opposite sign");
  app.add_option("--s-max", job.s_max, "largest level searched");
  app.add_flag("--no-timings", no_timings, "omit timings from JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ParseFailed;
  }
  if (*og2) job.g2 = g2;
  if (*og3) job.g3 = g3;
  if (*ol0) job.lambda0 = l0;
  if (*om0) job.mu0 = m0;
  if (*ot0) job.tau0 = t0;
  if (opposite) job.sign = 1;

  ResultDoc doc = run_command(job);
  if (job.format == "json")
    std::cout << doc.json(!no_timings);
  else
    std::cout << doc.text();
  if (!doc.error.empty()) std::cerr << "kdvspec: " << doc.error << "\n";
  return doc.exit_code;
}

}  // namespace kdvspec::cli
