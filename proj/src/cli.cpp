#include "chatelet/cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "chatelet/bundle.hpp"

namespace chatelet {

namespace {

std::vector<ExtPlace> parse_off_places(const std::string& arg, const QuadField& K) {
  std::vector<ExtPlace> out;
  if (arg.empty()) return out;
  std::string cur;
  std::istringstream in(arg);
  while (std::getline(in, cur, ',')) out.push_back(parse_ext_place(cur, K));
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             bool allow_color) {
  CLI::App app{"exact local-invariant toolkit for Chatelet surfaces over Q and Q(sqrt(d))"};
  app.require_subcommand(1);

  std::string a_str, b_str, v_str;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol (a,b)_v over Q_v");
  hilbert_cmd->add_option("a", a_str, "nonzero rational, e.g. 73 or 5334/5329")->required();
  hilbert_cmd->add_option("b", b_str, "nonzero rational")->required();
  hilbert_cmd->add_option("v", v_str, "place: 'real' or a prime")->required();

  long d = 0;
  std::string exclude_str;
  auto* primes_cmd = app.add_subcommand("find-primes", "find the prime pair (p1, p2) for Q(sqrt(d))");
  primes_cmd->add_option("d", d, "squarefree integer, not 0 or 1")->required();
  primes_cmd->add_option("--exclude", exclude_str, "comma-separated primes to skip for p1");
  long scan_bound = 100000;
  primes_cmd->add_option("--scan-bound", scan_bound, "prime scan guard (default 100000)");

  long p1 = 0, p2 = 0, depth = 4, primes_upto = 200;
  std::string format = "json";
  auto* profile_cmd = app.add_subcommand("profile", "invariant profile of V0(p1,p2) over Q and Q(sqrt(d))");
  profile_cmd->add_option("d", d, "squarefree integer")->required();
  profile_cmd->add_option("p1", p1)->required();
  profile_cmd->add_option("p2", p2)->required();
  profile_cmd->add_option("--depth", depth, "valuation shell radius (default 4)");
  profile_cmd->add_option("--primes-upto", primes_upto, "place table bound (default 200)");
  profile_cmd->add_option("--format", format, "json or text");

  std::string off_str;
  auto* cert_cmd = app.add_subcommand("certificate", "weak-approximation failure certificate for V0(p1,p2) over Q(sqrt(d))");
  cert_cmd->add_option("d", d, "squarefree integer")->required();
  cert_cmd->add_option("p1", p1)->required();
  cert_cmd->add_option("p2", p2)->required();
  cert_cmd->add_option("--off", off_str, "places to omit, e.g. '5i,3r' (must avoid places over p1)");
  cert_cmd->add_option("--depth", depth);
  cert_cmd->add_option("--primes-upto", primes_upto);
  cert_cmd->add_option("--format", format, "json or text");

  long height_bound = 10000;
  long tamper_p2 = 0;
  auto* verify_cmd = app.add_subcommand("verify-example", "verify the explicit construction over Q(sqrt(3))");
  verify_cmd->add_option("--depth", depth);
  verify_cmd->add_option("--primes-upto", primes_upto);
  verify_cmd->add_option("--height-bound", height_bound);
  verify_cmd->add_option("--format", format, "json or text");
  verify_cmd->add_option("--tamper-p2", tamper_p2, "negative-control: replace p2")->group("");

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  bool json = format == "json";
  if (!json && format != "text") {
    err << "unknown format '" << format << "'\n";
    return 2;
  }

  try {
    if (hilbert_cmd->parsed()) {
      Rat a = parse_rat(a_str), b = parse_rat(b_str);
      Place v = parse_place(v_str);
      out << hilbert_q(a, b, v) << "\n";
      return 0;
    }
    if (primes_cmd->parsed()) {
      QuadField K = make_quad_field(d);
      std::set<long> excluded;
      if (!exclude_str.empty()) {
        std::istringstream in(exclude_str);
        std::string cur;
        while (std::getline(in, cur, ',')) excluded.insert(std::stol(cur));
      }
      auto [q1, q2] = find_prime_pair(K, excluded, scan_bound);
      out << "p1=" << q1 << " p2=" << q2 << "\n";
      return 0;
    }
    if (profile_cmd->parsed()) {
      Config cfg{depth, scan_bound, primes_upto, json};
      cfg.validate();
      QuadField K = make_quad_field(d);
      V0 v0 = build_v0(p1, p2);
      QProfile qp = profile_over_q(v0, primes_upto, depth);
      ExtProfile ep = profile_over_ext(v0, K, primes_upto, depth);
      out << emit_certificate(profile_certificate(v0, qp, ep), json, allow_color);
      return 0;
    }
    if (cert_cmd->parsed()) {
      Config cfg{depth, scan_bound, primes_upto, json};
      cfg.validate();
      QuadField K = make_quad_field(d);
      WAFailureCertificate wcert =
          wa_failure_certificate(K, p1, p2, parse_off_places(off_str, K), primes_upto, depth);
      out << emit_certificate(wa_certificate(wcert), json, allow_color);
      return 0;
    }
    if (verify_cmd->parsed()) {
      VerifyOptions opts;
      opts.depth = depth;
      opts.prime_bound = primes_upto;
      opts.height_bound = height_bound;
      if (tamper_p2 != 0) opts.tamper_p2 = tamper_p2;
      Certificate cert = verify_example(opts);
      out << emit_certificate(cert, json, allow_color);
      if (cert.has_failure()) return 1;
      if (cert.has_inconclusive()) return 3;
      return 0;
    }
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace chatelet
