// wpltilt: command line front end of the tilting engine.
// Exit codes: 0 ok, 1 engine error or failed check, 2 bad usage.

#include <CLI11.hpp>
#include <httplib.h>

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "wpl/http_api.hpp"
#include "wpl/theorems.hpp"

using namespace wpl;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

WeightDescriptor type_arg(const std::string& s) {
  try {
    return parse_type(s);
  } catch (const std::exception& e) {
    throw UsageError("invalid type '" + s + "': " + e.what());
  }
}

std::vector<int> seq_arg(const std::string& s) {
  try {
    return parse_int_list(s);
  } catch (const std::exception& e) {
    throw UsageError("invalid sequence '" + s + "': " + e.what());
  }
}

std::string slope_str(const Numerics& n) {
  auto s = n.slope();
  return s ? to_string(*s) : "inf";
}

void print_state(std::ostream& os, const ConcreteTilting& t) {
  const auto& k0 = *t.k0;
  auto rep = tilting_numeric_report(k0, t.datum);
  os << "summand  deg/rk   slope     polarity  line bundle\n";
  for (std::size_t k = 0; k < t.datum.size(); ++k) {
    const auto& s = t.datum.summands[k];
    auto n = k0.numerics(s.cls);
    const auto& dn = rep.dual_numerics[k];
    const bool src = sgn(dn.rank) > 0 || (sgn(dn.rank) == 0 && sgn(dn.degree) > 0);
    auto lb = k0.locate_line_bundle(s.cls);
    os << std::left << std::setw(9) << ("[" + std::to_string(s.label) + "]") << std::setw(9) << fraction(n)
       << std::setw(10) << slope_str(n) << std::setw(10) << (src ? "source" : "sink")
       << (lb ? "O(" + k0.descriptor().str(*lb) + ")" : "-") << "\n";
  }
  os << "arrows:";
  for (const auto& a : *t.datum.quiver)
    os << " " << a.from << "->" << a.to << (a.count > 1 ? "x" + std::to_string(a.count) : "");
  os << "\nrelations:";
  if (t.datum.relations->empty()) os << " none";
  for (const auto& a : *t.datum.relations) os << " " << a.from << "~>" << a.to << "<" << a.count << ">";
  os << "\ncentral simples: " << rep.central_simples << "  width: " << (rep.width ? to_string(*rep.width) : "undefined")
     << "  canonical: " << (rep.canonical ? "yes" : "no") << "\n";
}

json describe_json(const WeightDescriptor& d) {
  K0 k0(d);
  json j = to_json(d);
  j["coxeter_polynomial"] = to_json(k0.coxeter_polynomial());
  return j;
}

int cmd_describe(const std::string& type, bool as_json) {
  auto d = type_arg(type);
  if (as_json) {
    std::cout << describe_json(d).dump(2) << "\n";
    return 0;
  }
  K0 k0(d);
  std::cout << "type " << d.label() << "\n"
            << "n=" << d.rank() << " pbar=" << d.pbar() << " delta(omega)=" << d.delta_omega() << " "
            << to_string(d.curvature()) << "\n"
            << "euler characteristic " << to_string(d.euler_characteristic()) << ", [L : Z omega] = "
            << (sgn(d.gorenstein_index()) == 0 ? std::string("infinite") : d.gorenstein_index().get_str()) << "\n"
            << "coxeter polynomial " << k0.coxeter_polynomial().str() << "\n";
  return 0;
}

ConcreteTilting run_sequence(const WeightDescriptor& d, const std::vector<int>& seq, std::vector<StepReport>* steps) {
  auto k0 = std::make_shared<K0>(d);
  auto tr = reflect_sequence(canonical_tilting(k0), seq);
  if (steps) *steps = tr.steps;
  return tr.states.back();
}

int cmd_canonical(const std::string& type, bool as_json) {
  auto t = run_sequence(type_arg(type), {}, nullptr);
  if (as_json)
    std::cout << state_json(t).dump(2) << "\n";
  else
    print_state(std::cout, t);
  return 0;
}

int cmd_reflect(const std::string& type, const std::string& seq, bool as_json) {
  std::vector<StepReport> steps;
  auto t = run_sequence(type_arg(type), seq_arg(seq), &steps);
  if (as_json) {
    json j = state_json(t);
    json s = json::array();
    for (const auto& r : steps) s.push_back(to_json(r));
    j["steps"] = s;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& r = steps[k];
    std::cout << "step " << k + 1 << ": reflect [" << r.label << "] (" << to_string(r.polarity) << ") "
              << fraction(r.old_numerics) << " -> " << fraction(r.new_numerics) << "  End=" << r.end_dim
              << " Ext1(T,T*)=" << r.ext_forward << " Ext1(T*,T)=" << r.ext_backward << "  via " << r.model << "\n";
  }
  print_state(std::cout, t);
  return 0;
}

int cmd_check(const std::string& suite, const std::string& input, bool as_json) {
  json in = nullptr;
  if (!input.empty()) {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot read input file " + input);
    try {
      in = json::parse(f);
    } catch (const json::exception& e) {
      throw SuiteError(std::string("malformed input: ") + e.what());
    }
  }
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  json all = json::array();
  for (const auto& n : names) {
    auto r = run_suite(n, in);
    ok = ok && r.pass();
    if (as_json)
      all.push_back(to_json(r));
    else
      std::cout << to_table(r) << "\n";
  }
  if (as_json) std::cout << (names.size() == 1 ? all[0] : all).dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_export(const std::string& format, const std::string& type, const std::string& seq) {
  auto t = run_sequence(type_arg(type), seq.empty() ? std::vector<int>{} : seq_arg(seq), nullptr);
  if (format == "json")
    std::cout << state_json(t).dump(2) << "\n";
  else
    print_state(std::cout, t);
  return 0;
}

httplib::Server* g_server = nullptr;

int cmd_serve(int port, const std::string& snapshot, const std::string& static_dir, const std::string& host) {
  SessionStore store(snapshot);
  httplib::Server srv;
  install_routes(srv, store, static_dir);
  g_server = &srv;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server) g_server->stop();
  });
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!srv.listen(host, port)) {
    std::cerr << "cannot listen on port " << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wpltilt: tilting bundles on weighted projective lines"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine readable output");

  std::string type, seq, suite, input, format = "table", snapshot, static_dir, host = "127.0.0.1";
  int port = 0;

  auto* describe = app.add_subcommand("describe", "weight data of a type such as 2,3,7");
  describe->add_option("type", type, "weights, optionally ';' and lambdas")->required();
  auto* canonical = app.add_subcommand("canonical", "the canonical tilting bundle");
  canonical->add_option("type", type)->required();
  auto* reflect = app.add_subcommand("reflect", "apply reflections to T_can");
  reflect->add_option("--type", type)->required();
  reflect->add_option("--seq", seq, "comma separated vertex labels")->required();
  auto* check = app.add_subcommand("check", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  check->add_option("--input", input, "JSON input file")->check(CLI::ExistingFile);
  auto* serve = app.add_subcommand("serve", "HTTP JSON API");
  serve->add_option("--port", port, "port (default $WPLTILT_PORT or 8080)")->check(CLI::Range(1, 65535));
  serve->add_option("--snapshot", snapshot, "persist sessions to this JSON file");
  serve->add_option("--static", static_dir, "directory served at /")->check(CLI::ExistingDirectory);
  serve->add_option("--host", host);
  auto* exp = app.add_subcommand("export", "export a state");
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  exp->add_option("--type", type)->required();
  exp->add_option("--seq", seq);
  for (auto* s : {describe, canonical, reflect, check, serve, exp}) s->add_flag("--json", as_json, "machine readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*describe) return cmd_describe(type, as_json);
    if (*canonical) return cmd_canonical(type, as_json);
    if (*reflect) return cmd_reflect(type, seq, as_json);
    if (*check) return cmd_check(suite, input, as_json);
    if (*exp) return cmd_export(format, type, seq);
    if (*serve) {
      if (port == 0) {
        const char* e = std::getenv("WPLTILT_PORT");
        port = e && *e ? std::atoi(e) : 8080;
      }
      return cmd_serve(port, snapshot, static_dir, host);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const ReflectionError& e) {
    json err{{"error", e.what()},
             {"kind", e.kind == ReflectionError::Kind::InvalidVertex     ? "invalid-vertex"
                      : e.kind == ReflectionError::Kind::WindowExhausted ? "window-exhausted"
                                                                          : "validation"}};
    json tr = json::array();
    for (const auto& a : e.trace) tr.push_back(to_json(a));
    err["trace"] = tr;
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
