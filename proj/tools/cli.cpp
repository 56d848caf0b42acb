#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "obill/closedform.hpp"
#include "obill/substlang.hpp"
#include "suite.hpp"

namespace obill {

namespace {

using nlohmann::json;

struct Config {
  int k = 5;
  int nmax = -1;
  int steps = 20;
  int depth = -1;
  std::string start;
  std::string format = "text";
  std::string out;
  unsigned seed = 1;
  bool compare = false;
  std::string only;
  std::string eps = "1e-2";
  bool flip = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "-2/7", "0.01", "1e-2"
Rational parse_rational(const std::string& s) {
  auto bad = [&] { return UsageError("not a rational number: " + s); };
  if (s.empty()) throw bad();
  if (s.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }
  std::string mant = s;
  long exp10 = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    mant = s.substr(0, e);
    try {
      std::size_t used = 0;
      exp10 = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  bool neg = !mant.empty() && (mant[0] == '-' || mant[0] == '+');
  if (neg && mant[0] == '+') neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) mant.erase(0, 1);
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || !std::all_of(mant.begin(), mant.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw bad();
  mpz_class num(mant), p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  Rational q = exp10 >= 0 ? Rational(num * p) : Rational(num, p);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

PlanePoint parse_start(const PolygonTable& P, const Config& c) {
  if (c.start.empty()) {
    auto pts = sample_points(P.cone(0), P.n_root, 1, c.seed, 9);
    if (pts.empty()) throw UsageError("no sample point");
    return pts.front();
  }
  if (c.start.front() == '[') return parse_element(P.n_root, c.start);
  return FieldElement::rational(P.n_root, parse_rational(c.start));
}

std::string dbl(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

// ---- orbit ----

std::string orbit_svg(const PolygonTable& P, const std::vector<OrbitRecord>& recs) {
  const double px = 200;
  std::vector<std::complex<double>> poly, pts;
  for (const auto& v : P.vertices) poly.push_back(to_complex(v));
  for (const auto& r : recs) pts.push_back(to_complex(r.point));
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto* set : {&poly, &pts})
    for (auto z : *set) {
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag());
      y1 = std::max(y1, z.imag());
    }
  x0 -= 0.5, y0 -= 0.5, x1 += 0.5, y1 += 0.5;
  auto X = [&](double x) { return dbl((x - x0) * px); };
  auto Y = [&](double y) { return dbl((y1 - y) * px); };
  const double reach = std::hypot(x1 - x0, y1 - y0) + std::hypot(x0, y0) + std::hypot(x1, y1);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << dbl((x1 - x0) * px) << "\" height=\""
     << dbl((y1 - y0) * px) << "\" viewBox=\"0 0 " << dbl((x1 - x0) * px) << " " << dbl((y1 - y0) * px) << "\">\n";
  os << "<polygon points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? " " : "") << X(poly[i].real()) << "," << Y(poly[i].imag());
  os << "\" fill=\"#dddddd\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < P.halflines.size(); ++i) {
    auto o = to_complex(P.halflines[i].origin), d = to_complex(P.halflines[i].direction);
    auto e = o + d / std::abs(d) * reach;
    os << "<line class=\"d" << i << "\" x1=\"" << X(o.real()) << "\" y1=\"" << Y(o.imag()) << "\" x2=\"" << X(e.real())
       << "\" y2=\"" << Y(e.imag()) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  }
  os << "<path d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " L " : "M ") << X(pts[i].real()) << " " << Y(pts[i].imag());
  os << "\" fill=\"none\" stroke=\"blue\"/>\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    os << "<text x=\"" << X(pts[i].real()) << "\" y=\"" << Y(pts[i].imag()) << "\" font-size=\"10\">" << recs[i].step
       << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

int cmd_orbit(const Config& c, std::ostream& out) {
  PolygonTable P = build_table(c.k, c.flip ? Tangency::left : Tangency::right);
  PlanePoint x = parse_start(P, c);
  if (c.steps < 0) throw UsageError("--steps must be >= 0");
  auto recs = trace_orbit(P, x, static_cast<std::size_t>(c.steps));
  if (c.format == "svg") {
    out << orbit_svg(P, recs);
  } else if (c.format == "json") {
    json rows = json::array();
    for (const auto& r : recs) {
      auto z = to_complex(r.point);
      rows.push_back({{"step", r.step}, {"cone", r.cone}, {"re", z.real()}, {"im", z.imag()}, {"exact", r.point.str()}});
    }
    out << json{{"k", c.k}, {"start", x.str()}, {"orbit", rows}}.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "step,cone,re,im,exact\n";
    for (const auto& r : recs) {
      auto z = to_complex(r.point);
      out << r.step << "," << r.cone << "," << dbl(z.real()) << "," << dbl(z.imag()) << ",\"" << r.point.str()
          << "\"\n";
    }
  } else {
    out << format_orbit(recs);
  }
  return 0;
}

int cmd_code(const Config& c, std::ostream& out) {
  PolygonTable P = build_table(c.k, c.flip ? Tangency::left : Tangency::right);
  PlanePoint x = parse_start(P, c);
  if (c.steps < 1) throw UsageError("--steps must be >= 1");
  const std::size_t n = static_cast<std::size_t>(c.steps);
  Word rho = code_orbit(P, x, n + 1, Flavor::rho).word();
  Word eta = code_orbit(P, x, n, Flavor::eta).word();
  const bool law = difference_word(rho, c.k) == eta;
  if (c.format == "json") {
    out << json{{"k", c.k}, {"start", x.str()}, {"rho", rho}, {"eta", eta}, {"difference_law", law}}.dump(2) << "\n";
  } else {
    out << "rho " << rho << "\neta " << eta << "\ndifference law " << (law ? "holds" : "FAILS") << "\n";
  }
  return law ? 0 : 1;
}

// ---- languages ----

Language build_language(const Config& c, int n_max) {
  if (c.depth >= 0) {
    Language L = Language::from_periodic(generator_set(c.k, c.depth), n_max);
    L.provenance = "generator families with parameters <= " + std::to_string(c.depth);
    return L;
  }
  return polygon_language(c.k, n_max);
}

using Row = std::vector<json>;

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit_table(const std::vector<std::string>& header, const std::vector<Row>& rows, const std::string& format,
                json meta, std::ostream& out) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o = json::object();
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      arr.push_back(o);
    }
    meta["rows"] = arr;
    out << meta.dump(2) << "\n";
    return;
  }
  const std::string sep = format == "csv" ? "," : "\t";
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? sep : "") << header[i];
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? sep : "") << cell(r[i]);
    out << "\n";
  }
}

int cmd_language(const Config& c, std::ostream& out) {
  const int nmax = c.nmax < 0 ? 15 : c.nmax;
  Language L = build_language(c, nmax + 2);
  std::vector<std::string> header{"n", "p", "s", "b", "cassaigne"};
  if (c.compare) header.insert(header.end(), {"p_formula", "match"});
  std::vector<Row> rows;
  bool all_match = true;
  for (int n = 0; n <= nmax; ++n) {
    const long p = static_cast<long>(complexity(L, n)), s = s_function(L, n), b = b_function(L, n);
    Row r{n, p, s, b, s_function(L, n + 1) - s - b};
    if (c.compare) {
      const long f = p_formula(c.k, n);
      all_match = all_match && f == p;
      r.push_back(f);
      r.push_back(f == p);
    }
    rows.push_back(r);
  }
  emit_table(header, rows, c.format, {{"k", c.k}, {"n_max", nmax}, {"source", L.provenance}}, out);
  return all_match ? 0 : 1;
}

int cmd_bispecial(const Config& c, std::ostream& out) {
  const int nmax = c.nmax < 0 ? 12 : c.nmax;
  Language L = build_language(c, nmax + 2);
  std::vector<Row> rows;
  for (int n = 0; n <= nmax; ++n)
    for (const auto& r : bispecial_scan(L, n))
      rows.push_back({n, r.v.empty() ? "eps" : r.v, r.ml, r.mr, r.mb, r.index, kind_name(r.kind)});
  emit_table({"n", "word", "ml", "mr", "mb", "index", "kind"}, rows, c.format, {{"k", c.k}, {"n_max", nmax}}, out);
  return 0;
}

int cmd_families(const Config& c, std::ostream& out) {
  const int len = c.nmax < 0 ? 30 : c.nmax;
  if (len < 0) throw UsageError("--nmax must be >= 0");
  Language L = polygon_language(5, len + 2);
  std::vector<Row> rows;
  int wrong = 0;
  for (const auto& f : bispecial_families("all", static_cast<std::size_t>(len))) {
    auto r = bispecial_report(L, f.word);
    const long formula = derived_length_formula(f.id).eval(f.n, f.k).get_si();
    wrong += r.kind != f.kind || formula != static_cast<long>(f.word.size());
    rows.push_back({f.id, f.k, f.n, f.word.size(), kind_name(f.kind), formula, kind_name(r.kind), r.index,
                    f.word.empty() ? "eps" : f.word});
  }
  emit_table({"id", "k", "n", "length", "kind", "formula_length", "observed_kind", "observed_index", "word"}, rows,
             c.format, {{"max_length", len}}, out);
  return wrong ? 1 : 0;
}

// ---- verification ----

std::vector<std::string> selected_groups(const std::string& only) {
  const auto& all = suite_groups();
  if (only.empty()) return all;
  std::vector<std::string> out;
  std::stringstream ss(only);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty() && std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      const std::size_t i = std::stoul(item);
      if (i < 1 || i > all.size()) throw UsageError("no criterion " + item);
      out.push_back(all[i - 1]);
    } else if (std::find(all.begin(), all.end(), item) != all.end()) {
      out.push_back(item);
    } else {
      std::string names;
      for (const auto& g : all) names += " " + g;
      throw UsageError("unknown check group " + item + "; groups:" + names);
    }
  }
  return out;
}

int cmd_verify(const Config& c, std::ostream& out) {
  SuiteOptions opt;
  opt.tangency = c.flip ? Tangency::left : Tangency::right;
  opt.eps = parse_rational(c.eps);
  if (opt.eps <= 0) throw UsageError("--eps must be positive");
  opt.seed = c.seed;
  std::vector<SuiteCheck> checks;
  for (const auto& g : selected_groups(c.only)) {
    auto r = run_group(g, opt);
    checks.insert(checks.end(), r.begin(), r.end());
  }
  int failed = 0, errata = 0;
  for (const auto& ch : checks) {
    if (ch.ok) continue;
    if (ch.erratum)
      ++errata;
    else
      ++failed;
  }
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& ch : checks)
      arr.push_back({{"group", ch.group},
                     {"name", ch.name},
                     {"ok", ch.ok},
                     {"erratum", ch.erratum},
                     {"detail", ch.detail}});
    out << json{{"checks", arr}, {"failed", failed}, {"errata", errata}, {"passed", failed == 0}}.dump(2) << "\n";
  } else {
    for (const auto& ch : checks)
      out << (ch.ok ? "ok      " : ch.erratum ? "erratum " : "FAIL    ") << ch.group << ": " << ch.name
          << (ch.detail.empty() ? "" : " | " + ch.detail) << "\n";
    if (failed == 0)
      out << "all checks passed";
    else
      out << failed << " checks failed";
    if (errata) out << " (" << errata << " printed claims did not reproduce)";
    out << "\n";
  }
  return failed ? 1 : 0;
}

int cmd_beta(const Config& c, std::ostream& out) {
  const Rational eps = parse_rational(c.eps);
  if (eps <= 0) throw UsageError("--eps must be positive");
  RationalInterval b = beta(eps);
  const double lo = Rational(b.lo).get_d(), hi = Rational(b.hi).get_d();
  if (c.format == "json") {
    out << json{{"eps", c.eps}, {"lo", lo}, {"hi", hi}, {"lo_exact", b.lo.get_str()}, {"hi_exact", b.hi.get_str()}}
               .dump(2)
        << "\n";
  } else {
    out << "beta in [" << dbl(lo) << ", " << dbl(hi) << "], width " << dbl(Rational(b.width()).get_d()) << "\n";
  }
  return 0;
}

int cmd_decagon(const Config& c, std::ostream& out) {
  DecagonSystem d = decagon_system();
  const int len = c.nmax < 0 ? 60 : c.nmax;
  DecagonGenerators g = decagon_generators(static_cast<std::size_t>(len));
  const Substitution th = catalog("theta");
  if (c.format == "json") {
    json theta = json::object(), checks = json::array(), gens = json::array();
    for (int i = 0; i < 5; ++i) theta[std::to_string(i + 1)] = d.theta[i];
    for (const auto& ch : d.checks) checks.push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
    for (const auto& w : g.words) gens.push_back({{"decagon", w}, {"pentagon", th.apply(w)}});
    out << json{{"theta", theta}, {"checks", checks}, {"generators", gens}, {"undecodable", g.undecodable}}.dump(2)
        << "\n";
  } else {
    for (int i = 0; i < 5; ++i) out << "theta(" << i + 1 << ") = " << d.theta[i] << "\n";
    for (const auto& ch : d.checks)
      out << (ch.ok ? "ok   " : "FAIL ") << ch.name << (ch.detail.empty() ? "" : " | " + ch.detail) << "\n";
    for (const auto& w : g.words) out << w << " -> " << th.apply(w) << "\n";
    out << g.words.size() << " decagon generators from pentagon periods <= " << len << ", " << g.undecodable.size()
        << " undecodable\n";
  }
  return all_ok(d.checks) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"outer billiards outside regular polygons"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> all_formats{"text", "csv", "json", "svg"};

  auto* orbit = app.add_subcommand("orbit", "trace T from a start point");
  auto* code = app.add_subcommand("code", "rho and eta codings of an orbit");
  auto* language = app.add_subcommand("language", "complexity table of the generator language");
  auto* bisp = app.add_subcommand("bispecial", "bispecial words of the generator language");
  auto* fams = app.add_subcommand("families", "pentagon bispecial families against the scanned language");
  auto* verify = app.add_subcommand("verify", "run the check suite");
  auto* bet = app.add_subcommand("beta", "enclosure of the bispecial constant");
  auto* deca = app.add_subcommand("decagon-map", "decagon cells through theta");

  for (auto* s : {orbit, code, language, bisp})
    s->add_option("--k", c.k, "polygon")->check(CLI::IsMember({3, 4, 5, 6, 10}));
  for (auto* s : {orbit, code}) {
    s->add_option("--steps", c.steps, "number of steps");
    s->add_option("--start", c.start, "[c0,c1,...] over zeta, or a rational");
    s->add_option("--seed", c.seed, "picks the start when --start is absent");
    s->add_flag("--test-flip-tangency", c.flip)->group("");
  }
  for (auto* s : {language, bisp, fams, deca}) s->add_option("--nmax", c.nmax, "word length bound");
  for (auto* s : {language, bisp}) s->add_option("--depth", c.depth, "use generator families up to this parameter");
  language->add_flag("--compare-formula", c.compare, "add the closed-form column");
  verify->add_option("--only", c.only, "check groups or criterion numbers, comma separated");
  verify->add_option("--seed", c.seed, "sampling seed");
  verify->add_flag("--test-flip-tangency", c.flip)->group("");
  for (auto* s : {verify, bet}) s->add_option("--eps", c.eps, "interval width for beta");

  orbit->add_option("--format", c.format)->check(CLI::IsMember(all_formats));
  for (auto* s : {language, bisp, fams})
    s->add_option("--format", c.format)->check(CLI::IsMember({"text", "csv", "json"}));
  for (auto* s : {code, verify, bet, deca}) s->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  for (auto* s : {orbit, code, language, bisp, fams, verify, bet, deca}) s->add_option("--out", c.out, "output file");

  std::vector<std::string> argv_s{"obill"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_s) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      err << "error: cannot write " << c.out << "\n";
      return 2;
    }
    os = &file;
  }
  try {
    if (orbit->parsed()) return cmd_orbit(c, *os);
    if (code->parsed()) return cmd_code(c, *os);
    if (language->parsed()) return cmd_language(c, *os);
    if (bisp->parsed()) return cmd_bispecial(c, *os);
    if (fams->parsed()) return cmd_families(c, *os);
    if (verify->parsed()) return cmd_verify(c, *os);
    if (bet->parsed()) return cmd_beta(c, *os);
    if (deca->parsed()) return cmd_decagon(c, *os);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace obill
