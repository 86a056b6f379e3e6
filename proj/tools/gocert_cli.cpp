// gocert: build, verify and self-check finiteness certificates.
//
//   gocert analyze --p 3 --f 2 --curve 2,0 [--ram-inf 1,2] [--ram-fin 0] [--out cert.json]
//   gocert analyze --config analysis.json
//   gocert verify --in cert.json
//   gocert selfcheck --max-f 4 --primes 2,3
//
// Exit codes: 0 finite / verified / all suites pass, 2 inconclusive, 1 error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gocert/gocert.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

template <typename Int>
std::vector<Int> parse_list(const std::string& text, const std::string& flag) {
  std::vector<Int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || (std::is_unsigned_v<Int> && value < 0))
      throw gocert::DomainError(flag + ": '" + item + "' is not a valid integer");
    out.push_back(static_cast<Int>(value));
  }
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gocert::DomainError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct AnalyzeArgs {
  std::uint64_t p = 0;
  std::int64_t f = 0;
  std::string ram_inf;
  std::uint64_t ram_fin = 0;
  std::string curve;
  std::string config;
  std::string out;
};

int run_analyze(const AnalyzeArgs& args) {
  gocert::AnalysisConfig cfg;
  if (!args.config.empty()) {
    cfg = gocert::config_from_json(gocert::Json::parse(read_file(args.config)));
  } else {
    if (args.curve.empty() || args.f == 0 || args.p == 0)
      throw gocert::DomainError("analyze needs --p, --f and --curve (or --config)");
    cfg.p = args.p;
    cfg.f = args.f;
    cfg.ram_inf = parse_list<std::int64_t>(args.ram_inf, "--ram-inf");
    cfg.ram_fin = args.ram_fin;
    const auto gn = parse_list<std::int64_t>(args.curve, "--curve");
    if (gn.size() != 2) throw gocert::DomainError("--curve expects g,n");
    cfg.g = gn[0];
    cfg.n = gn[1];
  }

  const gocert::FinitenessCertificate cert = gocert::build_certificate(cfg);
  const std::string text = gocert::serialize(cert);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw gocert::DomainError("cannot write " + args.out);
    out << text;
  }

  std::cerr << "verdict: " << gocert::to_string(cert.verdict) << " (" << cert.nodes.size() << " nodes)";
  if (cert.diagnostic) std::cerr << ": " << *cert.diagnostic;
  std::cerr << "\n";
  switch (cert.verdict) {
    case gocert::Verdict::finite: return kExitOk;
    case gocert::Verdict::inconclusive: return kExitInconclusive;
    case gocert::Verdict::error: return kExitError;
  }
  return kExitError;
}

int run_verify(const std::string& path) {
  const gocert::VerifyReport report = gocert::verify_document(read_file(path));
  if (report.ok) {
    std::cerr << "verified\n";
    return kExitOk;
  }
  std::cerr << "verification failed";
  if (!report.node_path.empty()) std::cerr << " at " << report.node_path;
  std::cerr << ": " << report.message << "\n";
  return kExitError;
}

int run_selfcheck(int max_f, const std::string& primes_text) {
  const auto primes = parse_list<std::uint64_t>(primes_text, "--primes");
  for (std::uint64_t p : primes)
    if (!gocert::is_prime(p)) throw gocert::DomainError("--primes: " + std::to_string(p) + " is not prime");
  if (max_f > gocert::kMaxTreeDimension) throw gocert::DomainError("--max-f is limited to 12");
  const gocert::SelfcheckReport report = gocert::selfcheck(max_f, primes);
  std::cout << gocert::to_string(report);
  return report.all_passed() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goren-Oort strata finiteness certificates"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "build a finiteness certificate");
  cmd_analyze->add_option("--p", analyze.p, "the prime p (inert in F)");
  cmd_analyze->add_option("--f", analyze.f, "[F:Q], the number of archimedean places");
  cmd_analyze->add_option("--ram-inf", analyze.ram_inf, "ramified archimedean places, comma separated");
  cmd_analyze->add_option("--ram-fin", analyze.ram_fin, "number of ramified finite places (p excluded)");
  cmd_analyze->add_option("--curve", analyze.curve, "curve type g,n");
  cmd_analyze->add_option("--config", analyze.config, "JSON analysis config instead of flags");
  cmd_analyze->add_option("--out", analyze.out, "write the certificate here instead of stdout");

  std::string verify_in;
  auto* cmd_verify = app.add_subcommand("verify", "replay and check a certificate");
  cmd_verify->add_option("--in", verify_in, "certificate path, '-' for stdin")->required();

  int max_f = 4;
  std::string primes = "2,3";
  auto* cmd_selfcheck = app.add_subcommand("selfcheck", "run the exhaustive invariant suites");
  cmd_selfcheck->add_option("--max-f", max_f, "largest [F:Q] to enumerate");
  cmd_selfcheck->add_option("--primes", primes, "primes for the degree suites, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*cmd_analyze) return run_analyze(analyze);
    if (*cmd_verify) return run_verify(verify_in);
    if (*cmd_selfcheck) return run_selfcheck(max_f, primes);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
