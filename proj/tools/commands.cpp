#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "maxcyl/identities.hpp"

namespace maxcyl::app {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json point_json(const Vec3& x) { return json::array({x[0], x[1], x[2]}); }

json metadata(const RunConfig& cfg, const std::string& command) {
  return json{{"command", command},
              {"config_hash", cfg.hash_hex()},
              {"config", cfg.canonical},
              {"tool", "maxcyl"},
              {"version", "0.1.0"}};
}

fs::path output_file(const RunConfig& cfg, const std::string& name) {
  const fs::path dir(cfg.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + cfg.output + "': " + ec.message());
  return dir / name;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Medium make_medium(const RunConfig& cfg) {
  return Medium{make_coefficient(cfg.eps, cfg.cross_section), make_coefficient(cfg.mu, cfg.cross_section)};
}

BandStructure compute_bands(const RunConfig& cfg, const Medium& m, std::ostream& log) {
  if (!cfg.cross_section.is_rectangle()) {
    throw UnsupportedGeometryError("band structures are available only for rectangular cross-sections; got " +
                                   cfg.cross_section.describe());
  }
  const StaggeredGrid grid(cfg.cross_section, cfg.grid[0], cfg.grid[1], cfg.grid[2]);
  BandOptions opt;
  opt.eigen.shift = default_shift(cfg.cross_section, m.eps, m.mu);
  opt.eigen.seed = cfg.seed;
  log << "computing " << cfg.bands << " bands at " << cfg.k_samples.size() << " k samples on a " << cfg.grid[0]
      << "x" << cfg.grid[1] << "x" << cfg.grid[2] << " grid\n";
  return maxwell_bands(grid, m.eps, m.mu, cfg.k_samples, cfg.bands, opt);
}

/// Validation points plus their x3 translates by one period.
double periodicity_defect(const CoefficientSpec& spec, const CrossSection& cs) {
  const ExpPoly p = to_exp_poly(spec.terms);
  double worst = 0.0;
  const int n = 8;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vec3 x;
        if (cs.is_rectangle()) {
          x = Vec3(cs.a() * i / n, cs.b() * j / n, double(k) / n);
        } else {
          const double r = cs.radius() * i / n;
          const double t = kTwoPi * j / n;
          x = Vec3(r * std::cos(t), r * std::sin(t), double(k) / n);
        }
        const Vec3 y = x + Vec3(0.0, 0.0, 1.0);
        worst = std::max(worst, std::abs(p.value(y) - p.value(x)) / std::max(1.0, std::abs(p.value(x))));
      }
    }
  }
  return worst;
}

std::vector<Vec3> cell_sample_grid(const RunConfig& cfg) {
  const CrossSection& cs = cfg.cross_section;
  const auto [n1, n2, n3] = cfg.grid;
  std::vector<Vec3> pts;
  for (int k = 0; k < n3; ++k) {
    for (int j = 0; j < n2; ++j) {
      for (int i = 0; i < n1; ++i) {
        const double x3 = double(k) / n3;
        if (cs.is_rectangle()) {
          pts.emplace_back(cs.a() * (i + 0.5) / n1, cs.b() * (j + 0.5) / n2, x3);
        } else {
          const double r = cs.radius() * (i + 0.5) / n1;
          const double t = kTwoPi * j / n2;
          pts.emplace_back(r * std::cos(t), r * std::sin(t), x3);
        }
      }
    }
  }
  return pts;
}

std::vector<BoundaryPoint> boundary_sample_grid(const RunConfig& cfg) {
  const CrossSection& cs = cfg.cross_section;
  const auto [n1, n2, n3] = cfg.grid;
  std::vector<double> params;
  if (cs.is_rectangle()) {
    // Face midpoints, never corners: faces x2=0, x1=a, x2=b, x1=0 in arc-length order.
    const double lens[4] = {cs.a(), cs.b(), cs.a(), cs.b()};
    const int counts[4] = {n1, n2, n1, n2};
    double offset = 0.0;
    for (int f = 0; f < 4; ++f) {
      for (int i = 0; i < counts[f]; ++i) params.push_back(offset + lens[f] * (i + 0.5) / counts[f]);
      offset += lens[f];
    }
  } else {
    const int m = 2 * (n1 + n2);
    for (int i = 0; i < m; ++i) params.push_back(kTwoPi * i / m);
  }
  std::vector<BoundaryPoint> out;
  for (int k = 0; k < n3; ++k) {
    for (double s : params) out.push_back(boundary_frame(cs, s, double(k) / n3));
  }
  return out;
}

template <class M>
json matrix_part(const M& m, bool imag) {
  json rows = json::array();
  for (int r = 0; r < 6; ++r) {
    json row = json::array();
    for (int c = 0; c < 6; ++c) {
      const cplx v = cplx(m(r, c));
      row.push_back(imag ? v.imag() : v.real());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& log) {
  bool ok = true;
  log << "geometry: " << cfg.cross_section.describe() << "\n";
  for (const auto& [name, spec] : {std::pair<const char*, const CoefficientSpec*>{"eps", &cfg.eps},
                                   std::pair<const char*, const CoefficientSpec*>{"mu", &cfg.mu}}) {
    const BoundsReport rep = sample_bounds(spec->terms, cfg.cross_section, 32);
    const bool low_ok = rep.min_value >= spec->lower && rep.min_value > 0.0;
    const bool high_ok = rep.max_value <= spec->upper;
    const double per = periodicity_defect(*spec, cfg.cross_section);
    const bool per_ok = per <= 1e-12;
    log << name << ": min " << g17(rep.min_value) << " at (" << g17(rep.argmin[0]) << ", " << g17(rep.argmin[1])
        << ", " << g17(rep.argmin[2]) << "), max " << g17(rep.max_value) << " at (" << g17(rep.argmax[0]) << ", "
        << g17(rep.argmax[1]) << ", " << g17(rep.argmax[2]) << "), declared [" << g17(spec->lower) << ", "
        << g17(spec->upper) << "]: " << (low_ok && high_ok ? "bounds ok" : "BOUND VIOLATION")
        << "; periodicity defect " << g17(per) << ": " << (per_ok ? "ok" : "NOT PERIODIC") << "\n";
    ok = ok && low_ok && high_ok && per_ok;
  }
  log << (ok ? "validation passed" : "validation failed") << "\n";
  return ok ? kPass : kCheckFailure;
}

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
  const Medium m = make_medium(cfg);
  SuiteOptions opt;
  opt.pointwise_tol = cfg.tol.pointwise;
  opt.quadrature_tol = cfg.tol.quadrature;
  opt.curvature_tol = cfg.tol.curvature;
  opt.points = cfg.points;
  opt.lambda = cfg.lambda;
  opt.seed = cfg.seed;
  const std::vector<IdentityReport> reports = run_identity_suite(m, opt);

  json arr = json::array();
  bool all = true;
  for (const IdentityReport& r : reports) {
    json terms = json::object();
    for (const auto& [k, v] : r.terms) terms[k] = json::array({v.real(), v.imag()});
    arr.push_back(json{{"name", r.name},
                       {"residual", r.residual},
                       {"scale", r.scale},
                       {"tol", r.tol},
                       {"passed", r.passed},
                       {"lhs", json::array({r.lhs.real(), r.lhs.imag()})},
                       {"rhs", json::array({r.rhs.real(), r.rhs.imag()})},
                       {"constraint_residual", r.constraint_residual},
                       {"terms", terms}});
    all = all && r.passed;
    log << std::left << std::setw(28) << r.name << (r.passed ? "pass" : "FAIL") << "  residual " << g17(r.residual)
        << "  scale " << g17(r.scale) << "\n";
  }
  json doc = metadata(cfg, "verify");
  doc["reports"] = arr;
  doc["all_passed"] = all;
  const fs::path path = output_file(cfg, "verify.json");
  write_file(path, doc.dump(2) + "\n");
  log << "wrote " << path.string() << "\n";
  return all ? kPass : kCheckFailure;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& log) {
  const Medium m = make_medium(cfg);
  json V = json::array();
  for (const Vec3& x : cell_sample_grid(cfg)) {
    const CMat6 v = m.v(x, cfg.lambda);
    V.push_back(json{{"x", point_json(x)}, {"re", matrix_part(v, false)}, {"im", matrix_part(v, true)}});
  }
  json S = json::array();
  for (const BoundaryPoint& bp : boundary_sample_grid(cfg)) {
    const Mat6 s = m.sigma(bp);
    S.push_back(json{{"x", point_json(bp.position)},
                     {"normal", point_json(bp.normal)},
                     {"curvature", bp.curvature},
                     {"re", matrix_part(s, false)},
                     {"im", matrix_part(s, true)}});
  }
  json doc = metadata(cfg, "reduce");
  doc["lambda"] = cfg.lambda;
  json coeff = json{{"eps", cfg.canonical.at("coefficients").at("eps")}, {"mu", cfg.canonical.at("coefficients").at("mu")}};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(coeff.dump())));
  doc["coefficient_hash"] = buf;
  doc["V"] = V;
  doc["Sigma"] = S;
  const fs::path path = output_file(cfg, "reduce.json");
  write_file(path, doc.dump(1) + "\n");
  log << "sampled V at " << V.size() << " cell points and Sigma at " << S.size() << " boundary points\n";
  log << "wrote " << path.string() << "\n";
  return kPass;
}

std::string bands_csv(const BandStructure& bs) {
  std::ostringstream os;
  os << "k_index,k,band,lambda_sq,lambda_pos,lambda_neg,div_residual\n";
  for (std::size_t j = 0; j < bs.k_samples.size(); ++j) {
    for (int n = 0; n < bs.band_count(); ++n) {
      const double l2 = bs.bands(Eigen::Index(j), n).real();
      const double l = std::sqrt(std::max(l2, 0.0));
      os << j << ',' << g17(bs.k_samples[j]) << ',' << (n + 1) << ',' << g17(l2) << ',' << g17(l) << ',' << g17(-l)
         << ',' << g17(bs.div_residuals(Eigen::Index(j), n)) << '\n';
    }
  }
  return os.str();
}

std::string bands_svg(const BandStructure& bs) {
  const double W = 640, H = 480, pad = 50;
  double ymax = 0.0;
  for (Eigen::Index j = 0; j < bs.bands.rows(); ++j) {
    for (Eigen::Index n = 0; n < bs.bands.cols(); ++n) ymax = std::max(ymax, std::sqrt(std::max(bs.bands(j, n).real(), 0.0)));
  }
  if (ymax == 0.0) ymax = 1.0;
  ymax *= 1.05;
  auto px = [&](double k) { return pad + (W - 2 * pad) * k / kTwoPi; };
  auto py = [&](double y) { return H / 2 - (H / 2 - pad) * y / ymax; };
  std::vector<std::size_t> order(bs.k_samples.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bs.k_samples[a] < bs.k_samples[b]; });

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<line x1=\"" << pad << "\" y1=\"" << py(0) << "\" x2=\"" << W - pad << "\" y2=\"" << py(0)
     << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << H - pad
     << "\" stroke=\"black\"/>\n"
     << "<text x=\"" << W / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">k in [0, 2pi)</text>\n"
     << "<text x=\"15\" y=\"" << H / 2 << "\" transform=\"rotate(-90 15 " << H / 2
     << ")\" text-anchor=\"middle\">+-lambda</text>\n";
  for (int n = 0; n < bs.band_count(); ++n) {
    for (int sign : {1, -1}) {
      os << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
      for (std::size_t j : order) {
        const double l = sign * std::sqrt(std::max(bs.bands(Eigen::Index(j), n).real(), 0.0));
        os << g17(px(bs.k_samples[j])) << ',' << g17(py(l)) << ' ';
      }
      os << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

int cmd_bands(const RunConfig& cfg, const CommandOptions& opt, std::ostream& log) {
  const Medium m = make_medium(cfg);
  const BandStructure bs = compute_bands(cfg, m, log);
  const fs::path csv = output_file(cfg, "bands.csv");
  write_file(csv, bands_csv(bs));

  const ContinuityReport cont = continuity_report(bs);
  json meta = metadata(cfg, "bands");
  meta["csv"] = "bands.csv";
  meta["max_div_residual"] = bs.div_residuals.size() ? bs.div_residuals.maxCoeff() : 0.0;
  meta["continuity"] = json{{"lipschitz", cont.lipschitz}, {"worst_ratio", cont.worst_ratio}, {"jumps", cont.jumps}};
  write_file(output_file(cfg, "bands.meta.json"), meta.dump(2) + "\n");
  log << "wrote " << csv.string() << "\n";
  if (opt.svg) {
    const fs::path svg = output_file(cfg, "bands.svg");
    write_file(svg, bands_svg(bs));
    log << "wrote " << svg.string() << "\n";
  }
  return kPass;
}

int cmd_flatscan(const RunConfig& cfg, std::ostream& log) {
  const Medium m = make_medium(cfg);
  const BandStructure bs = compute_bands(cfg, m, log);
  const FlatBandReport rep = flat_band_scan(bs, cfg.tol.flat_rel);
  json bands = json::array();
  for (const BandStatistics& st : rep.bands) {
    bands.push_back(json{{"band", st.band},
                         {"min", st.min},
                         {"max", st.max},
                         {"variation", st.variation},
                         {"rel_variation", st.rel_variation},
                         {"flat", st.flat}});
    log << "band " << st.band << ": rel_variation " << g17(st.rel_variation) << (st.flat ? "  FLAT" : "") << "\n";
  }
  json doc = metadata(cfg, "flatscan");
  doc["rel_tol"] = rep.rel_tol;
  doc["verdict"] = rep.verdict;
  doc["bands"] = bands;
  const fs::path path = output_file(cfg, "flatscan.json");
  write_file(path, doc.dump(2) + "\n");
  log << rep.verdict << "\nwrote " << path.string() << "\n";
  return rep.any_flat ? kCheckFailure : kPass;
}

int cmd_empty_compare(const RunConfig& cfg, std::ostream& log) {
  const Medium m = make_medium(cfg);
  if (!m.eps.is_constant() || !m.mu.is_constant()) {
    throw ConfigError("empty-compare needs constant eps and mu");
  }
  const double em = m.eps.eval(Vec3(0, 0, 0)).value * m.mu.eval(Vec3(0, 0, 0)).value;
  const BandStructure bs = compute_bands(cfg, m, log);
  std::ostringstream csv;
  csv << "k_index,k,band,computed,analytic,rel_error\n";
  log << std::left << std::setw(8) << "k" << std::setw(6) << "band" << std::setw(24) << "computed" << std::setw(24)
      << "analytic" << "rel_error\n";
  double worst = 0.0;
  for (std::size_t j = 0; j < bs.k_samples.size(); ++j) {
    const std::vector<double> an = analytic_empty_bands(cfg.cross_section.a(), cfg.cross_section.b(), bs.k_samples[j],
                                                        bs.band_count());
    for (int n = 0; n < bs.band_count(); ++n) {
      const double c = bs.bands(Eigen::Index(j), n).real();
      const double a = an[std::size_t(n)] / em;
      const double rel = std::abs(c - a) / a;
      worst = std::max(worst, rel);
      csv << j << ',' << g17(bs.k_samples[j]) << ',' << (n + 1) << ',' << g17(c) << ',' << g17(a) << ',' << g17(rel)
          << '\n';
      log << std::setw(8) << std::setprecision(4) << bs.k_samples[j] << std::setw(6) << (n + 1) << std::setw(24)
          << std::setprecision(12) << c << std::setw(24) << a << std::setprecision(3) << rel << "\n";
    }
  }
  const fs::path path = output_file(cfg, "empty_compare.csv");
  write_file(path, csv.str());
  log << "worst relative error " << g17(worst) << " (tolerance " << g17(cfg.tol.empty_rel) << ")\nwrote "
      << path.string() << "\n";
  return worst <= cfg.tol.empty_rel ? kPass : kCheckFailure;
}

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const CoefficientError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const UnsupportedGeometryError& e) {
    err << "unsupported geometry: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ConstraintError& e) {
    err << "check failure: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace maxcyl::app
