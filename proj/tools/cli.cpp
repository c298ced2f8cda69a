#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "cache.hpp"
#include "sdw/dirac.hpp"
#include "sdw/errors.hpp"
#include "sdw/instanton.hpp"
#include "sdw/modular.hpp"
#include "sdw/seeley.hpp"
#include "sdw/series_json.hpp"
#include "sdw/theta.hpp"

namespace sdw::cli {

namespace {

constexpr const char* kNomeTag = "nome=exp(-2*pi*mu)";

struct Config {
  long trunc = 6;
  double tol = 1e-10;
  int samples = 5;
  std::uint64_t seed = 20240101;
  std::string cache_dir;
  bool no_cache = false;
};

struct PointArgs {
  std::string p = "0", q = "0";
  Characteristics parse() const { return {Rational::parse(p), Rational::parse(q)}; }
};

struct MuArgs {
  std::optional<double> re;
  double im = 0;
  bool given() const { return re.has_value(); }
  Complex value() const {
    if (!(*re > 0)) throw DomainError("Re(mu) must be positive");
    return {*re, im};
  }
};

void add_point(CLI::App* cmd, PointArgs& pt) {
  cmd->add_option("--p", pt.p, "first characteristic, as num/den")->required();
  cmd->add_option("--q", pt.q, "second characteristic, as num/den")->required();
}

void add_mu(CLI::App* cmd, MuArgs& mu) {
  cmd->add_option("--mu-re", mu.re, "Re(mu) for a numeric value");
  cmd->add_option("--mu-im", mu.im, "Im(mu)");
}

void check_order(int order) {
  if (order != 0 && order != 2 && order != 4) throw InvalidParameters("--order must be 0, 2 or 4");
}

SeriesCache make_cache(const Config& cfg) {
  if (cfg.no_cache) return SeriesCache(std::nullopt);
  if (!cfg.cache_dir.empty()) return SeriesCache(std::filesystem::path(cfg.cache_dir));
  if (const char* env = std::getenv("SDW_CACHE_DIR"); env && *env) return SeriesCache(std::filesystem::path(env));
  if (const char* home = std::getenv("HOME"); home && *home)
    return SeriesCache(std::filesystem::path(home) / ".cache" / "sdw");
  return SeriesCache(std::nullopt);
}

void require_nondegenerate(const std::vector<Characteristics>& pts) {
  for (const auto& x : pts)
    if (is_degenerate(x))
      throw DomainError("degenerate parameter point (" + x.p.to_string() + "," + x.q.to_string() + ")");
}

// Exact coefficient series of an orbit (or a single point), through the cache.
PuiseuxSeries cached_series(const Config& cfg, const std::vector<Characteristics>& pts, bool orbit_scope, int order) {
  require_nondegenerate(pts);
  std::ostringstream desc;
  desc << "family=two;scope=" << (orbit_scope ? "orbit" : "point") << ";p=" << pts.front().p << ";q=" << pts.front().q
       << ";order=" << order << ";trunc=" << cfg.trunc << ";" << kNomeTag;
  SeriesCache cache = make_cache(cfg);
  const std::string key = SeriesCache::key(desc.str());
  if (auto hit = cache.load(key)) return series_from_json(Json::parse(*hit));
  PuiseuxSeries s = orbit_scope ? orbit_sum_series(pts, order, Rational(cfg.trunc))
                                : point_series(pts.front(), order, Rational(cfg.trunc)).truncated(Rational(cfg.trunc));
  try {
    cache.store(key, series_to_json(s).dump());
  } catch (const std::exception& e) {
    std::cerr << "warning: cache write failed: " << e.what() << "\n";
  }
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seeley-de Witt coefficients of Bianchi IX instantons"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--trunc", cfg.trunc, "series truncation in integer powers of Q")->capture_default_str();
  app.add_option("--tol", cfg.tol, "numeric tolerance")->capture_default_str();
  app.add_option("--samples", cfg.samples, "sample points for numeric checks")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sample mu")->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "series cache directory (default $SDW_CACHE_DIR or ~/.cache/sdw)");
  app.add_flag("--no-cache", cfg.no_cache, "disable the series cache");
  app.fallthrough();

  Json result;

  // theta
  auto* theta = app.add_subcommand("theta", "theta function with characteristics");
  PointArgs tpt;
  MuArgs tmu;
  int tn = 0;
  bool tdq = false, tseries = false;
  add_point(theta, tpt);
  add_mu(theta, tmu);
  theta->add_option("--n", tn, "number of mu-derivatives");
  theta->add_flag("--dq", tdq, "one derivative in the second characteristic");
  theta->add_flag("--series", tseries, "exact nome series instead of a value");
  theta->callback([&] {
    ThetaSpec spec{tpt.parse(), tn, tdq ? 1 : 0};
    if (tseries) {
      result = Json{{"series", series_to_json(theta_series(spec, Rational(cfg.trunc)))}};
    } else {
      if (!tmu.given()) throw InvalidParameters("theta needs --series or --mu-re");
      result = Json{{"value", complex_to_json(theta_eval(spec, tmu.value(), cfg.tol))}};
    }
  });

  // orbit
  auto* orb = app.add_subcommand("orbit", "PSL2(Z) orbit of a parameter pair");
  PointArgs opt;
  add_point(orb, opt);
  orb->callback([&] { result = orbit_to_json(orbit(opt.parse())); });

  // coeff
  auto* coeff = app.add_subcommand("coeff", "Seeley-de Witt coefficient, exact or numeric");
  PointArgs cpt;
  MuArgs cmu;
  int corder = 0;
  bool cpoint = false;
  std::string family = "two";
  double q0re = 1, q0im = 0, conformal = 1;
  coeff->add_option("--p", cpt.p, "first characteristic, as num/den");
  coeff->add_option("--q", cpt.q, "second characteristic, as num/den");
  coeff->add_option("--order", corder, "0, 2 or 4")->required();
  coeff->add_flag("--point", cpoint, "single parameter point instead of its orbit sum");
  coeff->add_option("--family", family, "two or one")->check(CLI::IsMember({"two", "one"}));
  coeff->add_option("--q0-re", q0re, "one-parameter family: Re(q0)");
  coeff->add_option("--q0-im", q0im, "one-parameter family: Im(q0)");
  coeff->add_option("--C", conformal, "one-parameter family: conformal constant");
  add_mu(coeff, cmu);
  coeff->callback([&] {
    check_order(corder);
    CoeffResult r;
    r.order = corder;
    r.grade = coefficient_grade(corder);
    if (family == "one") {
      if (!cmu.given()) throw InvalidParameters("the one-parameter family is numeric only; give --mu-re");
      if (Complex(q0re, q0im) == Complex(0)) throw InvalidParameters("q0 must be nonzero");
      if (!(conformal > 0)) throw InvalidParameters("C must be positive");
      r.mu = cmu.value();
      r.value = coefficient_value(frame_one_param_jet({q0re, q0im}, *r.mu, conformal, cfg.tol), corder);
    } else {
      Characteristics seed = cpt.parse();
      std::vector<Characteristics> pts = cpoint ? std::vector<Characteristics>{reduce(seed)} : orbit(seed).points;
      if (cmu.given()) {
        require_nondegenerate(pts);
        r.mu = cmu.value();
        r.value = orbit_sum_value(pts, corder, *r.mu, cfg.tol);
      } else {
        r.series = cached_series(cfg, pts, !cpoint, corder);
      }
    }
    result = coeff_result_to_json(r);
  });

  // identify
  auto* ident = app.add_subcommand("identify", "identify an orbit sum with a classical modular form");
  PointArgs ipt;
  int iorder = 0;
  add_point(ident, ipt);
  ident->add_option("--order", iorder, "0, 2 or 4")->required();
  ident->callback([&] {
    check_order(iorder);
    if (cfg.trunc < 3) throw InvalidParameters("identification needs --trunc >= 3");
    Orbit o = orbit(ipt.parse());
    if (is_exceptional(o)) throw ExceptionalOrbit("exceptional orbit; identification is not defined");
    PuiseuxSeries s = cached_series(cfg, o.points, true, iorder);
    result = identification_to_json(identify(s, o), o, iorder);
  });

  // check
  auto* check = app.add_subcommand("check", "numeric verification");
  check->require_subcommand(1);
  auto* transforms = check->add_subcommand("transforms", "modular transformation residuals");
  PointArgs xpt;
  int xorder = 0;
  std::string xfamily = "two";
  std::vector<std::string> words{"S", "T"};
  double xq0re = 1, xq0im = 0;
  transforms->add_option("--p", xpt.p, "first characteristic, as num/den");
  transforms->add_option("--q", xpt.q, "second characteristic, as num/den");
  transforms->add_option("--order", xorder, "0, 2 or 4")->required();
  transforms->add_option("--family", xfamily, "two or one")->check(CLI::IsMember({"two", "one"}));
  transforms->add_option("--words", words, "words in S and T (two-parameter family)")->delimiter(',');
  transforms->add_option("--q0-re", xq0re, "one-parameter family: Re(q0)");
  transforms->add_option("--q0-im", xq0im, "one-parameter family: Im(q0)");
  transforms->callback([&] {
    check_order(xorder);
    ModularityReport rep;
    if (xfamily == "one") {
      rep = one_param_report({xq0re, xq0im}, xorder, cfg.samples, cfg.seed);
    } else {
      Orbit o = orbit(xpt.parse());
      require_nondegenerate(o.points);
      std::vector<Word> ws;
      for (const auto& w : words) ws.push_back(Word{w});
      rep = vv_modularity_report(o, xorder, ws, cfg.samples, cfg.seed);
    }
    result = Json{{"max_residual", rep.max_residual}, {"worst", rep.worst}, {"checks", rep.checks}};
  });

  auto* dirac = check->add_subcommand("dirac", "symbol of the squared rescaled Dirac operator");
  PointArgs dpt;
  MuArgs dmu;
  Angles ang;
  add_point(dirac, dpt);
  add_mu(dirac, dmu);
  dirac->add_option("--eta", ang.eta, "angle eta in (0, pi)");
  dirac->add_option("--psi", ang.psi, "angle psi");
  dirac->callback([&] {
    if (!dmu.given()) dmu.re = 1.2;
    Characteristics x = dpt.parse();
    require_nondegenerate({x});
    auto rep = dtilde_sq_crosscheck(dirac_input(frame_two_param_jet(x, dmu.value(), cfg.tol)), ang);
    result = Json{{"residual", {{"p2", rep.p2}, {"p1", rep.p1}, {"p0", rep.p0}}}, {"max_residual", rep.max()}};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ExceptionalOrbit& e) {
    err << "error: " << e.what() << "\n";
    return kExceptional;
  } catch (const IdentificationFailed& e) {
    err << "error: " << e.what() << "\n";
    return kUnidentified;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << result.dump(2) << "\n";
  return kOk;
}

}  // namespace sdw::cli
