#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mccool/automorphism.hpp"
#include "mccool/braid_perm.hpp"
#include "mccool/cohomology.hpp"
#include "mccool/error.hpp"
#include "mccool/graded.hpp"
#include "mccool/lie.hpp"
#include "mccool/relations.hpp"
#include "mccool/tower.hpp"
#include "mccool/word.hpp"

using json = nlohmann::ordered_json;
using namespace mccool;

namespace {

constexpr const char* kGrammar = R"(usage: mccool <command> [options]

commands:
  verify --n N [--family NAME] [--format text|json]
  aut eval --n N --expr EXPR [--word WORD] [--format text|json]
  aut compose --n N --f EXPR --g EXPR [--format text|json]
  project --n N --expr EXPR [--variant auto|plus|full]
  decompose --n N --expr EXPR [--variant auto|plus|full] [--format text|json]
  retract --n N --expr EXPR
  gamma --n N --expr EXPR [--format text|json]
  lie basis --m M --degree D [--format text|json]
  lie witt --m M --degree D [--format text|json]
  gr ranks --n N --variant plus|full --max-degree D [--oracle] [--format text|json|csv]
  gr series --n N --max-degree D [--format text|json]
  coh basis --n N --degree K [--format text|json]
  coh mult --n N --a MONOMIAL --b MONOMIAL [--format text|json]
  coh poincare --n N [--format text|json]
  coh confluence --n N [--trials T] [--max-degree K] [--seed S]
  bp split --n N --expr EXPR [--format text|json]

global options:
  --config FILE   key=value lines; keys n, m, degree, max-degree, format, seed

grammars:
  word        tokens x<k> (generator) or X<k> (inverse), separated by spaces or '*';
              the empty string is the identity
  expression  factors c[k,i], th[k;s,t], xi[i], tau[i], delta, s[i], each with an
              optional ^-1, separated by '*' or spaces
  monomial    factors d[i,j] (j < i) joined by '*'; "1" is the unit

exit status: 0 success, 1 domain error, 2 usage error
)";

using Config = std::map<std::string, std::string>;

Config read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  Config out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ParseError(path + ":" + std::to_string(number) + ": expected key=value",
                            CLI::ExitCodes::InvalidError);
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

// Finds --config before parsing so its values can become option defaults.
std::string config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return {};
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json images_json(const Endomorphism& f) {
  json out = json::object();
  for (int i = 1; i <= f.rank(); ++i) out["x" + std::to_string(i)] = format_word(f.image(i));
  return out;
}

void print_images(const Endomorphism& f) {
  for (int i = 1; i <= f.rank(); ++i) {
    std::cout << "x" << i << " -> " << format_word(f.image(i)) << "\n";
  }
}

TowerLevel level_for(int n, const std::string& variant, const GroupExpression& e) {
  return {n, variant == "auto" ? infer_variant(e) : parse_variant(variant)};
}

struct Options {
  int n = 3;
  int m = 2;
  int degree = 1;
  int max_degree = 4;
  int trials = 1000;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string family;
  std::string expr;
  std::string word;
  std::string f;
  std::string g;
  std::string a;
  std::string b;
  std::string variant = "auto";
  bool oracle = false;
  std::string config;
};

int run_verify(const Options& o) {
  const VerificationReport report = verify_all(o.n, o.family);
  std::cerr << "runtime " << report.runtime.count() << " s\n";
  if (o.format == "json") {
    json j;
    j["n"] = report.n;
    j["instances"] = json::array();
    for (const auto& r : report.results) {
      j["instances"].push_back({{"family", r.family}, {"indices", r.indices}, {"ok", r.ok}});
    }
    json fams = json::object();
    for (const auto& [name, t] : report.families) {
      fams[name] = {{"instances", t.instances}, {"failures", t.failures}};
    }
    j["families"] = fams;
    j["total"] = report.total();
    j["failures"] = report.failures();
    j["ok"] = report.ok();
    print(j);
  } else {
    for (const auto& [name, t] : report.families) {
      std::cout << name << " " << t.instances << " instances, " << t.failures << " failures\n";
    }
    std::cout << "total " << report.total() << ", failures " << report.failures() << "\n";
  }
  return report.ok() ? 0 : 1;
}

int run_aut_eval(const Options& o) {
  const Endomorphism f = evaluate(parse_expression(o.expr, o.n));
  if (!o.word.empty()) {
    const Word w = apply(f, parse_word(o.word, o.n));
    if (o.format == "json") {
      print({{"word", format_word(w)}});
    } else {
      std::cout << format_word(w) << "\n";
    }
    return 0;
  }
  if (o.format == "json") {
    print(images_json(f));
  } else {
    print_images(f);
  }
  return 0;
}

int run_aut_compose(const Options& o) {
  const Endomorphism h = compose(evaluate(parse_expression(o.f, o.n)), evaluate(parse_expression(o.g, o.n)));
  if (o.format == "json") {
    print(images_json(h));
  } else {
    print_images(h);
  }
  return 0;
}

int run_project(const Options& o) {
  const GroupExpression e = parse_expression(o.expr, o.n);
  std::cout << format_expression(project(e, level_for(o.n, o.variant, e))) << "\n";
  return 0;
}

int run_decompose(const Options& o) {
  const GroupExpression e = parse_expression(o.expr, o.n);
  const TowerLevel level = level_for(o.n, o.variant, e);
  const Decomposition d = decompose(e, level);
  json j;
  j["variant"] = to_string(level.variant);
  j["w_head"] = format_expression(d.w_head);
  j["x_tail"] = format_expression(d.x_tail);
  if (level.variant == Variant::plus) j["kernel_word"] = format_expression(kernel_word(d));
  if (o.format == "json") {
    print(j);
  } else {
    for (const auto& [key, value] : j.items()) std::cout << key << ": " << value.get<std::string>() << "\n";
  }
  return 0;
}

int run_retract(const Options& o) {
  std::cout << format_word(retract_plus(evaluate(parse_expression(o.expr, o.n)))) << "\n";
  return 0;
}

int run_gamma(const Options& o) {
  const auto v = gamma(parse_expression(o.expr, o.n));
  if (o.format == "json") {
    print({{"gamma", v}, {"in_kernel", std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })}});
  } else {
    std::vector<std::string> parts;
    for (long x : v) parts.push_back(std::to_string(x));
    std::cout << join(parts, " ") << "\n";
  }
  return 0;
}

int run_lie_basis(const Options& o) {
  const auto basis = lyndon_basis(o.m, o.degree);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& b : basis) j.push_back(b.bracketing());
    print(j);
  } else {
    for (const auto& b : basis) std::cout << b.bracketing() << "\n";
  }
  return 0;
}

int run_lie_witt(const Options& o) {
  const Integer r = witt_rank(o.m, o.degree);
  if (o.format == "json") {
    print({{"m", o.m}, {"degree", o.degree}, {"rank", integer_json(r)}});
  } else {
    std::cout << r.get_str() << "\n";
  }
  return 0;
}

int run_gr_ranks(const Options& o) {
  const Variant variant = parse_variant(o.variant == "auto" ? "plus" : o.variant);
  const bool from_quotient = variant == Variant::full || o.oracle;
  const RankTable ranks =
      from_quotient ? quotient_ranks(o.n, variant, o.max_degree) : model_ranks(o.n, o.max_degree);
  const std::string label = variant == Variant::full ? "upper bound for graded ranks of the full group"
                            : o.oracle               ? "free Lie quotient (linear algebra)"
                                                     : "row model";
  if (o.format == "json") {
    json r = json::object();
    for (const auto& [d, v] : ranks) r[std::to_string(d)] = v;
    print({{"n", o.n}, {"variant", to_string(variant)}, {"source", label}, {"ranks", r}});
  } else if (o.format == "csv") {
    std::cout << "degree,rank\n";
    for (const auto& [d, v] : ranks) std::cout << d << "," << v << "\n";
  } else {
    std::cout << "# " << label << "\n";
    for (const auto& [d, v] : ranks) std::cout << d << " " << v << "\n";
  }
  return 0;
}

int run_gr_series(const Options& o) {
  const TruncatedSeries model = uea_series(model_ranks(o.n, o.max_degree), o.max_degree);
  const TruncatedSeries closed = closed_form_series(o.n, o.max_degree);
  if (model != closed) throw Error("enveloping algebra series disagrees with the closed form");
  if (o.format == "json") {
    json c = json::array();
    for (const auto& v : model.coefficients) c.push_back(integer_json(v));
    print({{"n", o.n}, {"coefficients", c}});
  } else {
    std::vector<std::string> parts;
    for (const auto& v : model.coefficients) parts.push_back(v.get_str());
    std::cout << join(parts, " ") << "\n";
  }
  return 0;
}

json class_json(const CohomologyClass& c) {
  json j = json::object();
  for (const auto& [m, v] : c.terms()) j[format_monomial(m)] = integer_json(v);
  return j;
}

int run_coh_basis(const Options& o) {
  const auto b = basis(o.n, o.degree);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& m : b) j.push_back(format_monomial(m));
    print(j);
  } else {
    for (const auto& m : b) std::cout << format_monomial(m) << "\n";
  }
  return 0;
}

int run_coh_mult(const Options& o) {
  const Monomial a = parse_monomial(o.a, o.n);
  const Monomial b = parse_monomial(o.b, o.n);
  const CohomologyClass p = multiply(normalize(o.n, a), normalize(o.n, b));
  if (o.format == "json") {
    print(class_json(p));
  } else {
    std::cout << format_class(p) << "\n";
  }
  return 0;
}

int run_coh_poincare(const Options& o) {
  const TruncatedSeries p = poincare_polynomial(o.n);
  if (o.format == "json") {
    json c = json::array();
    for (const auto& v : p.coefficients) c.push_back(integer_json(v));
    print({{"n", o.n}, {"coefficients", c}});
  } else {
    std::vector<std::string> parts;
    for (const auto& v : p.coefficients) parts.push_back(v.get_str());
    std::cout << join(parts, " ") << "\n";
  }
  return 0;
}

int run_coh_confluence(const Options& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> length(0, o.max_degree);
  int disagreements = 0;
  for (int t = 0; t < o.trials; ++t) {
    Monomial f;
    const int len = length(rng);
    for (int p = 0; p < len; ++p) {
      const int i = std::uniform_int_distribution<int>(2, o.n)(rng);
      f.push_back({i, std::uniform_int_distribution<int>(1, i - 1)(rng)});
    }
    if (normalize_random(o.n, f, 1, rng) != normalize(o.n, f)) ++disagreements;
  }
  std::cout << "trials " << o.trials << ", disagreements " << disagreements << "\n";
  return disagreements == 0 ? 0 : 1;
}

int run_bp_split(const Options& o) {
  const Endomorphism f = evaluate(parse_expression(o.expr, o.n));
  const PermConjData data = detect(f);
  const Splitting s = split(f);
  if (o.format == "json") {
    json conj = json::array();
    for (const auto& w : data.conjugators) conj.push_back(format_word(w));
    print({{"lambda", format_permutation(s.lambda)}, {"pure", images_json(s.pure)}, {"conjugators", conj}});
  } else {
    std::cout << "lambda " << format_permutation(s.lambda) << "\n";
    print_images(s.pure);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Basis-conjugating automorphism groups of free groups"};
  app.require_subcommand(1);
  app.set_help_flag("-h,--help");

  std::string config_file;
  try {
    config_file = config_path(argc, argv);
    if (!config_file.empty()) {
      const Config cfg = read_config(config_file);
      for (const auto& [key, value] : cfg) {
        if (key == "n") o.n = std::stoi(value);
        else if (key == "m") o.m = std::stoi(value);
        else if (key == "degree") o.degree = std::stoi(value);
        else if (key == "max-degree") o.max_degree = std::stoi(value);
        else if (key == "format") o.format = value;
        else if (key == "seed") o.seed = std::stoull(value);
        else throw CLI::ParseError("unknown config key '" + key + "'", CLI::ExitCodes::InvalidError);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 2;
  }
  app.add_option("--config", o.config, "key=value defaults file");

  auto formats = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format)->check(CLI::IsMember(allowed));
  };
  auto need_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank")->check(CLI::Range(2, 64));
  };

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&action, fn, &o] { action = [fn, &o] { return fn(o); }; });
  };

  auto* verify = app.add_subcommand("verify", "check the relation families");
  need_n(verify);
  verify->add_option("--family", o.family, "family name or prefix");
  formats(verify, {"text", "json"});
  bind(verify, run_verify);

  auto* aut = app.add_subcommand("aut", "evaluate generator expressions");
  aut->require_subcommand(1);
  auto* eval = aut->add_subcommand("eval", "images of the generators");
  need_n(eval);
  eval->add_option("--expr", o.expr)->required();
  eval->add_option("--word", o.word, "apply to this word instead");
  formats(eval, {"text", "json"});
  bind(eval, run_aut_eval);
  auto* comp = aut->add_subcommand("compose", "evaluate(f) after evaluate(g)");
  need_n(comp);
  comp->add_option("--f", o.f)->required();
  comp->add_option("--g", o.g)->required();
  formats(comp, {"text", "json"});
  bind(comp, run_aut_compose);

  auto* proj = app.add_subcommand("project", "delete the last generator");
  need_n(proj);
  proj->add_option("--expr", o.expr)->required();
  proj->add_option("--variant", o.variant)->check(CLI::IsMember({"auto", "plus", "full"}));
  bind(proj, run_project);

  auto* dec = app.add_subcommand("decompose", "split into section and kernel parts");
  need_n(dec);
  dec->add_option("--expr", o.expr)->required();
  dec->add_option("--variant", o.variant)->check(CLI::IsMember({"auto", "plus", "full"}));
  formats(dec, {"text", "json"});
  bind(dec, run_decompose);

  auto* ret = app.add_subcommand("retract", "word U with x_n -> U^-1 x_n U");
  need_n(ret);
  ret->add_option("--expr", o.expr)->required();
  bind(ret, run_retract);

  auto* gam = app.add_subcommand("gamma", "exponent sums of c[i,n]");
  need_n(gam);
  gam->add_option("--expr", o.expr)->required();
  formats(gam, {"text", "json"});
  bind(gam, run_gamma);

  auto* lie = app.add_subcommand("lie", "free Lie algebras");
  lie->require_subcommand(1);
  for (auto [name, fn] : {std::pair{"basis", run_lie_basis}, std::pair{"witt", run_lie_witt}}) {
    auto* sub = lie->add_subcommand(name);
    sub->add_option("--m", o.m, "number of generators")->check(CLI::Range(1, 255));
    sub->add_option("--degree", o.degree)->check(CLI::Range(1, 64));
    formats(sub, {"text", "json"});
    bind(sub, fn);
  }

  auto* gr = app.add_subcommand("gr", "graded Lie algebra ranks and series");
  gr->require_subcommand(1);
  auto* ranks = gr->add_subcommand("ranks");
  need_n(ranks);
  ranks->add_option("--variant", o.variant)->check(CLI::IsMember({"plus", "full"}));
  ranks->add_option("--max-degree", o.max_degree)->check(CLI::Range(1, 32));
  ranks->add_flag("--oracle", o.oracle, "plus variant from the free Lie quotient");
  formats(ranks, {"text", "json", "csv"});
  bind(ranks, run_gr_ranks);
  auto* series = gr->add_subcommand("series");
  need_n(series);
  series->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 64));
  formats(series, {"text", "json"});
  bind(series, run_gr_series);

  auto* coh = app.add_subcommand("coh", "cohomology ring");
  coh->require_subcommand(1);
  auto* cb = coh->add_subcommand("basis");
  need_n(cb);
  cb->add_option("--degree", o.degree)->check(CLI::NonNegativeNumber);
  formats(cb, {"text", "json"});
  bind(cb, run_coh_basis);
  auto* cm = coh->add_subcommand("mult");
  need_n(cm);
  cm->add_option("--a", o.a)->required();
  cm->add_option("--b", o.b)->required();
  formats(cm, {"text", "json"});
  bind(cm, run_coh_mult);
  auto* cp = coh->add_subcommand("poincare");
  need_n(cp);
  formats(cp, {"text", "json"});
  bind(cp, run_coh_poincare);
  auto* cc = coh->add_subcommand("confluence", "random rewrite schedules against the normal form");
  need_n(cc);
  cc->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  cc->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 16));
  cc->add_option("--seed", o.seed);
  bind(cc, run_coh_confluence);

  auto* bp = app.add_subcommand("bp", "braid-permutation automorphisms");
  bp->require_subcommand(1);
  auto* bs = bp->add_subcommand("split");
  need_n(bs);
  bs->add_option("--expr", o.expr)->required();
  formats(bs, {"text", "json"});
  bind(bs, run_bp_split);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << kGrammar;
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 2;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
