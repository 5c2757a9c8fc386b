// Command-line front end: weight/character queries, module descriptors and
// the digit constructions, plus the self-check suite. Exit codes: 0 success
// or PASS, 1 usage error, 2 precondition violation, 3 identity FAIL.

#include <schur/character.hpp>
#include <schur/modules.hpp>
#include <schur/oracle.hpp>
#include <schur/planner.hpp>
#include <schur/serialize.hpp>
#include <schur/weight.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using schur::Character;
using schur::DominantWeight;
using schur::Int;
using schur::Weight;
using json = nlohmann::ordered_json;

struct GlobalOpts {
  bool json_out = false;
  std::uint64_t seed = 1729;
  bool no_character = false;
};

Int parse_int(const std::string& text, const char* what) {
  try {
    return Int(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string("bad ") + what + ": \"" + text + "\"");
  }
}

Weight parse_ranked(const std::string& text, unsigned long n) {
  Weight w = schur::parse_weight(text);
  if (w.rank() != n) {
    throw std::invalid_argument("weight " + schur::to_string(w) + " has rank " +
                                std::to_string(w.rank()) + ", expected n = " +
                                std::to_string(n));
  }
  return w;
}

std::vector<Int> parse_int_list(const std::string& text, const char* what) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(parse_int(
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos), what));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void print_terms(const Character& x) {
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    std::cout << "  " << schur::to_string(it->first) << "  " << it->second.get_str() << "\n";
  }
}

std::string algebra_str(const schur::EndAlgebra& e) {
  std::ostringstream os;
  if (e.truncated) {
    if (e.truncated->generators == 0) {
      os << "k (trivial)";
    } else {
      os << "k[x_1..x_" << e.truncated->generators << "]/(x_i^" << e.truncated->cap << ")";
    }
  } else {
    os << "unresolved shape";
  }
  os << ", dimension " << e.dim.get_str();
  return os.str();
}

void print_descriptor(const schur::InjectiveDescriptor& d) {
  std::cout << "socle weight: " << schur::to_string(d.socle_weight.weight()) << "\n";
  std::cout << "end algebra: " << algebra_str(d.end_algebra) << "\n";
  std::cout << "admissible index: " << (d.index.exact ? "" : ">= ") << d.index.value << "\n";
  if (d.character) {
    std::cout << "character: " << d.character->terms().size() << " terms, dimension "
              << d.character->dimension().get_str() << "\n";
    print_terms(*d.character);
  }
}

int cmd_char(const GlobalOpts& g, unsigned long n, const std::string& weight_text) {
  const Weight w = parse_ranked(weight_text, n);
  const Character chi = schur::weyl_character(w);
  if (g.json_out) {
    std::cout << schur::io::to_json(chi) << "\n";
  } else {
    std::cout << "chi" << schur::to_string(w) << ": dimension " << chi.dimension().get_str()
              << ", " << chi.terms().size() << " terms\n";
    print_terms(chi);
  }
  return 0;
}

int cmd_orbit(const GlobalOpts& g, unsigned long n, const std::string& weight_text) {
  const Weight w = parse_ranked(weight_text, n);
  const std::vector<Weight> orbit = schur::weyl_orbit(w);
  if (g.json_out) {
    json out;
    out["weight"] = json::parse(schur::io::to_json(w));
    out["size"] = orbit.size();
    json arr = json::array();
    for (const Weight& e : orbit) arr.push_back(json::parse(schur::io::to_json(e)));
    out["orbit"] = std::move(arr);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "orbit of " << schur::to_string(w) << ": size " << orbit.size() << "\n";
    for (const Weight& e : orbit) std::cout << "  " << schur::to_string(e) << "\n";
  }
  return 0;
}

int cmd_dominance(const GlobalOpts& g, unsigned long n, const std::string& a_text,
                  const std::string& b_text) {
  const Weight a = parse_ranked(a_text, n);
  const Weight b = parse_ranked(b_text, n);
  const bool leq = schur::dominance_leq(a, b);
  const bool geq = schur::dominance_leq(b, a);
  if (g.json_out) {
    json out;
    out["a"] = json::parse(schur::io::to_json(a));
    out["b"] = json::parse(schur::io::to_json(b));
    out["leq"] = leq;
    out["geq"] = geq;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << schur::to_string(a) << " <= " << schur::to_string(b) << ": "
              << (leq ? "yes" : "no") << "\n";
    std::cout << schur::to_string(b) << " <= " << schur::to_string(a) << ": "
              << (geq ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_padic(const GlobalOpts& g, unsigned long n, const std::string& p_text,
              const std::string& weight_text) {
  const Int p = parse_int(p_text, "p");
  const DominantWeight a(parse_ranked(weight_text, n));
  const schur::PAdicDecomposition dec = schur::p_adic_decompose(a, p);
  const Int b = schur::p_adic_breadth(a, p);
  if (g.json_out) {
    json out;
    out["weight"] = json::parse(schur::io::to_json(a.weight()));
    out["base"] = p.fits_slong_p() ? json(p.get_si()) : json(p.get_str());
    json digits = json::array();
    for (const DominantWeight& d : dec.digits) {
      digits.push_back(json::parse(schur::io::to_json(d.weight())));
    }
    out["digits"] = std::move(digits);
    out["breadth"] = b.fits_slong_p() ? json(b.get_si()) : json(b.get_str());
    std::cout << out.dump() << "\n";
  } else {
    std::cout << schur::to_string(a.weight()) << " in base " << p.get_str() << ":\n";
    for (std::size_t j = 0; j < dec.digits.size(); ++j) {
      std::cout << "  digit " << j << ": " << schur::to_string(dec.digits[j].weight()) << "\n";
    }
    std::cout << "p-adic breadth: " << b.get_str() << "\n";
  }
  return 0;
}

int cmd_brauer(const GlobalOpts& g, unsigned long n, const std::string& p_text,
               const std::string& weight_text) {
  const Int p = parse_int(p_text, "p");
  if (!schur::is_probable_prime(p)) {
    throw schur::PreconditionError("brauer: " + p.get_str() + " is not prime");
  }
  const DominantWeight lam(parse_ranked(weight_text, n));
  if (!lam.is_polynomial() || schur::breadth(lam) >= p) {
    throw schur::PreconditionError("brauer: weight " + schur::to_string(lam.weight()) +
                                   " must be polynomial with breadth < p = " + p.get_str());
  }

  const DominantWeight st((p - 1) * schur::delta(n));
  const Character lhs = schur::weyl_character(st) * schur::orbit_sum(lam);
  const auto expansion = schur::brauer_expand(st, lam);
  Character rhs(n);
  bool signs_ok = true;
  for (const auto& [sign, rep] : expansion) {
    signs_ok = signs_ok && sign == +1;
    rhs = rhs + Int(sign) * schur::weyl_character(rep);
  }
  const bool pass =
      lhs == rhs && signs_ok && expansion.size() == schur::weyl_orbit(lam).size();

  if (g.json_out) {
    json out;
    out["n"] = n;
    out["p"] = p.get_si();
    out["lambda"] = json::parse(schur::io::to_json(lam.weight()));
    json summands = json::array();
    for (const auto& [sign, rep] : expansion) {
      summands.push_back(
          json{{"sign", sign}, {"weight", json::parse(schur::io::to_json(rep.weight()))}});
    }
    out["summands"] = std::move(summands);
    out["lhs_terms"] = lhs.terms().size();
    out["rhs_terms"] = rhs.terms().size();
    out["pass"] = pass;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "chi(" << schur::to_string(st.weight()) << ") * s("
              << schur::to_string(lam.weight()) << ") = sum of " << expansion.size()
              << " summands:\n";
    for (const auto& [sign, rep] : expansion) {
      std::cout << "  " << (sign > 0 ? "+" : "-") << "chi" << schur::to_string(rep.weight())
                << "\n";
    }
    std::cout << "both sides have " << lhs.terms().size() << " terms, dimension "
              << lhs.dimension().get_str() << "\n";
    std::cout << "identity: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 3;
}

int cmd_zhat(const GlobalOpts& g, unsigned long n, const std::string& p_text,
             const std::string& weight_text) {
  const Int p = parse_int(p_text, "p");
  const Weight lam = parse_ranked(weight_text, n);
  const Character ch = schur::zhat_character(lam, p);
  const Int expected = schur::int_pow(p, n * (n - 1) / 2);
  const bool pass = ch.dimension() == expected;
  if (g.json_out) {
    json out;
    out["n"] = n;
    out["p"] = p.get_si();
    out["lambda"] = json::parse(schur::io::to_json(lam));
    if (!g.no_character) out["character"] = json::parse(schur::io::to_json(ch));
    out["dimension"] = ch.dimension().get_str();
    out["expected"] = expected.get_str();
    out["pass"] = pass;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "induced-hull character at " << schur::to_string(lam) << ", p = " << p.get_str()
              << ": dimension " << ch.dimension().get_str() << " (expected "
              << expected.get_str() << ")\n";
    if (!g.no_character) print_terms(ch);
    std::cout << "dimension check: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 3;
}

int cmd_tilting(const GlobalOpts& g, unsigned long n, const std::string& p_text,
                const std::string& weight_text) {
  const Int p = parse_int(p_text, "p");
  const DominantWeight lam(parse_ranked(weight_text, n));
  const schur::InjectiveDescriptor d =
      schur::steinberg_tilting(n, p, lam, !g.no_character);
  if (g.json_out) {
    std::cout << schur::io::to_json(d) << "\n";
  } else {
    std::cout << "tilting descriptor for lambda = " << schur::to_string(lam.weight())
              << ", p = " << p.get_str() << ":\n";
    print_descriptor(d);
  }
  return 0;
}

int cmd_hook(const GlobalOpts& g, unsigned long n, const std::string& p_text, unsigned long m,
             const std::string& a_text) {
  const Int p = parse_int(p_text, "p");
  const Int a = parse_int(a_text, "a");
  const schur::InjectiveDescriptor d = schur::pm_hook_injective(n, p, m, a, !g.no_character);
  if (g.json_out) {
    std::cout << schur::io::to_json(d) << "\n";
  } else {
    std::cout << "hook injective for a = " << a.get_str() << ", p = " << p.get_str()
              << ", m = " << m << ":\n";
    print_descriptor(d);
  }
  return 0;
}

void print_construction(const schur::ConstructionResult& res) {
  std::cout << (res.regime == schur::Regime::classical ? "classical" : "quantum")
            << " construction: n = " << res.n << ", p = " << res.p.get_str()
            << ", m = " << res.m << " (P = " << res.P.get_str() << ")";
  if (res.l) std::cout << ", l = " << res.l->get_str();
  std::cout << ", h = " << res.h << ", r = " << res.r.get_str() << "\n";
  if (res.u_minus1) {
    std::cout << "bottom digit u(-1) = " << res.u_minus1->get_str() << ", factor "
              << schur::to_string(res.lambda_minus1->weight()) << "\n";
  }
  std::cout << "digits:";
  for (const Int& u : res.digits) std::cout << " " << u.get_str();
  std::cout << "\nfactors:";
  for (const DominantWeight& f : res.lambda_factors) {
    std::cout << " " << schur::to_string(f.weight());
  }
  std::cout << "\ngamma: " << schur::to_string(res.gamma.weight()) << "\n";
  std::cout << "mu: " << schur::to_string(res.mu.weight()) << "\n";
  std::cout << "end algebra: " << algebra_str(res.descriptor.end_algebra) << "\n";
  std::cout << "admissible index: " << (res.descriptor.index.exact ? "" : ">= ")
            << res.descriptor.index.value << "\n";
  if (res.descriptor.character) {
    std::cout << "character: " << res.descriptor.character->terms().size()
              << " terms, dimension " << res.descriptor.character->dimension().get_str() << "\n";
  }
  std::cout << "representation dimension >= " << res.repdim_lower_bound.get_str() << "\n";
}

int cmd_construct(const GlobalOpts& g, const std::string& regime, unsigned long n,
                  const std::string& p_text, unsigned long m, unsigned long h,
                  const std::string& r_text, const std::string& l_text) {
  const Int p = parse_int(p_text, "p");
  if (m == 0) {
    throw std::invalid_argument("missing -m; the smallest m with p^m > n is " +
                                std::to_string(schur::suggest_m(n, p)));
  }
  const Int r = parse_int(r_text, "r");
  schur::ConstructionResult res = [&] {
    if (regime == "classical") {
      return schur::construct_classical({n, p, m, h, r, !g.no_character});
    }
    if (l_text.empty()) {
      throw std::invalid_argument("quantum construction requires -l");
    }
    schur::QuantumParams params{{n, p, m, h, r, !g.no_character}, parse_int(l_text, "l")};
    return schur::construct_quantum(params);
  }();
  if (g.json_out) {
    std::cout << schur::io::to_json(res) << "\n";
  } else {
    print_construction(res);
  }
  return 0;
}

int cmd_bound(const GlobalOpts& g, const std::string& regime, unsigned long n,
              const std::string& p_text, unsigned long m, const std::string& r_text,
              const std::string& l_text) {
  const Int p = parse_int(p_text, "p");
  if (m == 0) {
    throw std::invalid_argument("missing -m; the smallest m with p^m > n is " +
                                std::to_string(schur::suggest_m(n, p)));
  }
  const Int r = parse_int(r_text, "r");
  const bool quantum = regime == "quantum";
  Int l = 0;
  if (quantum) {
    if (l_text.empty()) throw std::invalid_argument("quantum bound requires -l");
    l = parse_int(l_text, "l");
  }
  const unsigned long h = quantum ? schur::max_h_quantum(n, p, m, l, r)
                                  : schur::max_h_classical(n, p, m, r);
  const Int threshold = quantum ? schur::min_r_quantum(n, p, m, l, 1)
                                : schur::min_r_classical(n, p, m, 1);
  if (g.json_out) {
    json out;
    out["regime"] = regime;
    out["n"] = n;
    out["p"] = p.get_si();
    out["m"] = m;
    if (quantum) out["l"] = l.get_si();
    out["r"] = r.fits_slong_p() ? json(r.get_si()) : json(r.get_str());
    out["h"] = h;
    if (h >= 1) out["repdim_lower_bound"] = h + (quantum ? 2 : 1);
    out["min_r_h1"] = threshold.fits_slong_p() ? json(threshold.get_si())
                                               : json(threshold.get_str());
    std::cout << out.dump() << "\n";
  } else if (h >= 1) {
    std::cout << "max h = " << h << "; representation dimension >= "
              << h + (quantum ? 2 : 1) << "\n";
  } else {
    std::cout << "no nontrivial bound: r = " << r.get_str() << " is below the h = 1 threshold "
              << threshold.get_str() << "\n";
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, unsigned long max_n, unsigned long max_deg,
               const std::string& primes_text) {
  schur::SuiteOptions opt;
  opt.max_n = max_n;
  opt.max_degree = max_deg;
  opt.primes = parse_int_list(primes_text, "prime list");
  opt.seed = g.seed;
  const std::vector<schur::OracleReport> reports = schur::run_suite(opt);
  bool all_pass = true;
  if (g.json_out) {
    std::cout << schur::io::to_json(reports) << "\n";
    for (const auto& rep : reports) all_pass = all_pass && rep.pass();
  } else {
    for (const auto& rep : reports) {
      all_pass = all_pass && rep.pass();
      std::cout << rep.identity << ": " << (rep.pass() ? "PASS" : "FAIL") << " ("
                << rep.checked << " checked)\n";
      for (const auto& f : rep.failures) {
        std::cout << "  " << f.inputs << ": expected " << f.expected << ", got " << f.got
                  << "\n";
      }
    }
    std::cout << (all_pass ? "all identities PASS" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight, character and injective-descriptor calculator for Schur algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "Print help");

  GlobalOpts g;
  app.add_flag("--json", g.json_out, "Emit JSON instead of text");
  app.add_option("--seed", g.seed, "Seed for the randomized checks")->capture_default_str();
  app.add_flag("--no-character", g.no_character, "Skip materializing full characters");

  int status = 0;

  unsigned long char_n = 0;
  std::string char_w;
  auto* c_char = app.add_subcommand("char", "Weyl character of a weight");
  c_char->set_help_flag("--help", "Print help");
  c_char->add_option("-n,--rank", char_n, "rank")->required();
  c_char->add_option("weight", char_w, "weight literal, e.g. \"(2,1,0)\"")->required();
  c_char->callback([&] { status = cmd_char(g, char_n, char_w); });

  unsigned long orbit_n = 0;
  std::string orbit_w;
  auto* c_orbit = app.add_subcommand("orbit", "Weyl-group orbit of a weight");
  c_orbit->set_help_flag("--help", "Print help");
  c_orbit->add_option("-n,--rank", orbit_n, "rank")->required();
  c_orbit->add_option("weight", orbit_w, "weight literal")->required();
  c_orbit->callback([&] { status = cmd_orbit(g, orbit_n, orbit_w); });

  unsigned long dom_n = 0;
  std::string dom_a, dom_b;
  auto* c_dom = app.add_subcommand("dominance", "Compare two weights in the dominance order");
  c_dom->set_help_flag("--help", "Print help");
  c_dom->add_option("-n,--rank", dom_n, "rank")->required();
  c_dom->add_option("a", dom_a, "first weight")->required();
  c_dom->add_option("b", dom_b, "second weight")->required();
  c_dom->callback([&] { status = cmd_dominance(g, dom_n, dom_a, dom_b); });

  unsigned long padic_n = 0;
  std::string padic_p, padic_w;
  auto* c_padic = app.add_subcommand("padic", "Base-p digit decomposition of a dominant weight");
  c_padic->set_help_flag("--help", "Print help");
  c_padic->add_option("-n,--rank", padic_n, "rank")->required();
  c_padic->add_option("-p,--prime", padic_p, "base")->required();
  c_padic->add_option("weight", padic_w, "weight literal")->required();
  c_padic->callback([&] { status = cmd_padic(g, padic_n, padic_p, padic_w); });

  unsigned long brauer_n = 0;
  std::string brauer_p, brauer_w;
  auto* c_brauer = app.add_subcommand(
      "brauer", "Check chi((p-1)delta) * s(lambda) against its orbit expansion");
  c_brauer->set_help_flag("--help", "Print help");
  c_brauer->add_option("-n,--rank", brauer_n, "rank")->required();
  c_brauer->add_option("-p,--prime", brauer_p, "prime")->required();
  c_brauer->add_option("lambda", brauer_w, "weight literal")->required();
  c_brauer->callback([&] { status = cmd_brauer(g, brauer_n, brauer_p, brauer_w); });

  unsigned long zhat_n = 0;
  std::string zhat_p, zhat_w;
  auto* c_zhat = app.add_subcommand("zhat", "Character e^(lambda-(p-1)delta) chi((p-1)delta)");
  c_zhat->set_help_flag("--help", "Print help");
  c_zhat->add_option("-n,--rank", zhat_n, "rank")->required();
  c_zhat->add_option("-p,--prime", zhat_p, "p")->required();
  c_zhat->add_option("lambda", zhat_w, "weight literal")->required();
  c_zhat->callback([&] { status = cmd_zhat(g, zhat_n, zhat_p, zhat_w); });

  unsigned long tilt_n = 0;
  std::string tilt_p, tilt_w;
  auto* c_tilt = app.add_subcommand("tilting", "Descriptor of the tilting module over lambda");
  c_tilt->set_help_flag("--help", "Print help");
  c_tilt->add_option("-n,--rank", tilt_n, "rank")->required();
  c_tilt->add_option("-p,--prime", tilt_p, "prime")->required();
  c_tilt->add_option("lambda", tilt_w, "weight literal")->required();
  c_tilt->callback([&] { status = cmd_tilting(g, tilt_n, tilt_p, tilt_w); });

  unsigned long hook_n = 0, hook_m = 1;
  std::string hook_p, hook_a;
  auto* c_hook = app.add_subcommand("hook", "Descriptor of the hook injective");
  c_hook->set_help_flag("--help", "Print help");
  c_hook->add_option("-n,--rank", hook_n, "rank")->required();
  c_hook->add_option("-p,--prime", hook_p, "prime")->required();
  c_hook->add_option("-m", hook_m, "number of layers")->capture_default_str();
  c_hook->add_option("-a", hook_a, "socle shift, 0 <= a < p^m")->required();
  c_hook->callback([&] { status = cmd_hook(g, hook_n, hook_p, hook_m, hook_a); });

  std::string con_regime, con_p, con_r, con_l;
  unsigned long con_n = 0, con_m = 0, con_h = 0;
  auto* c_con = app.add_subcommand("construct", "Run the digit construction of mu");
  c_con->set_help_flag("--help", "Print help");
  c_con->add_option("regime", con_regime, "classical or quantum")
      ->required()
      ->check(CLI::IsMember({"classical", "quantum"}));
  c_con->add_option("-n,--rank", con_n, "rank")->required();
  c_con->add_option("-p,--prime", con_p, "prime")->required();
  c_con->add_option("-m", con_m, "twist exponent, p^m > n");
  c_con->add_option("-h,--height", con_h, "number of layers")->required();
  c_con->add_option("-r,--degree", con_r, "target degree")->required();
  c_con->add_option("-l,--root-order", con_l, "order of the root of unity (quantum)");
  c_con->callback(
      [&] { status = cmd_construct(g, con_regime, con_n, con_p, con_m, con_h, con_r, con_l); });

  std::string bound_regime, bound_p, bound_r, bound_l;
  unsigned long bound_n = 0, bound_m = 0;
  auto* c_bound = app.add_subcommand("bound", "Largest h reachable at a given degree");
  c_bound->set_help_flag("--help", "Print help");
  c_bound->add_option("regime", bound_regime, "classical or quantum")
      ->required()
      ->check(CLI::IsMember({"classical", "quantum"}));
  c_bound->add_option("-n,--rank", bound_n, "rank")->required();
  c_bound->add_option("-p,--prime", bound_p, "prime")->required();
  c_bound->add_option("-m", bound_m, "twist exponent, p^m > n");
  c_bound->add_option("-r,--degree", bound_r, "degree")->required();
  c_bound->add_option("-l,--root-order", bound_l, "order of the root of unity (quantum)");
  c_bound->callback(
      [&] { status = cmd_bound(g, bound_regime, bound_n, bound_p, bound_m, bound_r, bound_l); });

  unsigned long ver_max_n = 3, ver_max_deg = 10;
  std::string ver_primes = "2,3";
  auto* c_ver = app.add_subcommand("verify", "Run the full identity suite");
  c_ver->set_help_flag("--help", "Print help");
  c_ver->add_option("--max-n", ver_max_n, "largest rank")->capture_default_str();
  c_ver->add_option("--max-deg", ver_max_deg, "largest degree")->capture_default_str();
  c_ver->add_option("--primes", ver_primes, "comma-separated primes")->capture_default_str();
  c_ver->callback([&] { status = cmd_verify(g, ver_max_n, ver_max_deg, ver_primes); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const schur::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
