#include "run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "maxcyl/spectral/bands.hpp"

namespace maxcyl::app {

using nlohmann::json;

std::string RunConfig::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError("config field '" + field + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) fail(path + key, "missing");
  return obj.at(key);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a real number, got " + j.dump());
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "not finite");
  return v;
}

int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer, got " + j.dump());
  return j.get<int>();
}

CrossSection parse_cross_section(const json& root) {
  const json* cs = nullptr;
  if (root.contains("cross_section")) {
    cs = &root.at("cross_section");
  } else if (root.contains("geometry") && root.at("geometry").contains("cross_section")) {
    cs = &root.at("geometry").at("cross_section");
  } else {
    fail("cross_section", "missing");
  }
  const std::string shape = require(*cs, "shape", "cross_section.").is_string()
                                ? cs->at("shape").get<std::string>()
                                : std::string();
  if (shape == "rectangle") {
    const double a = number(require(*cs, "a", "cross_section."), "cross_section.a");
    const double b = number(require(*cs, "b", "cross_section."), "cross_section.b");
    if (a <= 0.0 || b <= 0.0) fail("cross_section", "side lengths must be positive");
    return CrossSection::rectangle(a, b);
  }
  if (shape == "disk") {
    const double R = number(require(*cs, "R", "cross_section."), "cross_section.R");
    if (R <= 0.0) fail("cross_section.R", "radius must be positive");
    return CrossSection::disk(R);
  }
  fail("cross_section.shape", "expected \"rectangle\" or \"disk\"");
}

CoefficientTerm parse_term(const json& t, const std::string& path) {
  const std::string type = require(t, "type", path + ".").is_string() ? t.at("type").get<std::string>() : "";
  const double amp = number(require(t, "amp", path + "."), path + ".amp");
  const double phase = t.contains("phase") ? number(t.at("phase"), path + ".phase") : 0.0;
  if (type == "trig") {
    const json& k = require(t, "k", path + ".");
    if (!k.is_array() || k.size() != 3) fail(path + ".k", "expected [k1, k2, n3]");
    const double k1 = number(k[0], path + ".k[0]");
    const double k2 = number(k[1], path + ".k[1]");
    if (!k[2].is_number_integer()) fail(path + ".k[2]", "x3 frequency must be an integer (period-1 fields only)");
    return CoefficientTerm::trig(amp, k1, k2, k[2].get<int>(), phase);
  }
  if (type == "poly") {
    const json& p = require(t, "powers", path + ".");
    if (!p.is_array() || p.size() != 2) fail(path + ".powers", "expected [p1, p2]");
    const int p1 = integer(p[0], path + ".powers[0]");
    const int p2 = integer(p[1], path + ".powers[1]");
    if (p1 < 0 || p2 < 0) fail(path + ".powers", "powers must be nonnegative");
    const int n3 = t.contains("n3") ? integer(t.at("n3"), path + ".n3") : 0;
    return CoefficientTerm::poly(amp, p1, p2, n3, phase);
  }
  fail(path + ".type", "expected \"trig\" or \"poly\"");
}

CoefficientSpec parse_coefficient(const json& root, const std::string& name) {
  const json& c = require(require(root, "coefficients", ""), name, "coefficients.");
  const std::string path = "coefficients." + name;
  CoefficientSpec spec;
  const json& terms = require(c, "terms", path + ".");
  if (!terms.is_array() || terms.empty()) fail(path + ".terms", "expected a nonempty list");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    spec.terms.push_back(parse_term(terms[i], path + ".terms[" + std::to_string(i) + "]"));
  }
  spec.lower = number(require(c, "lower", path + "."), path + ".lower");
  spec.upper = number(require(c, "upper", path + "."), path + ".upper");
  if (!(spec.lower > 0.0)) fail(path + ".lower", "must be positive");
  if (spec.upper < spec.lower) fail(path + ".upper", "must be at least lower");
  return spec;
}

double tolerance(const json& tol, const char* key, double fallback) {
  if (!tol.contains(key)) return fallback;
  const double v = number(tol.at(key), std::string("tolerances.") + key);
  if (v < 0.0) fail(std::string("tolerances.") + key, "must be nonnegative");
  return v;
}

}  // namespace

std::array<int, 3> parse_grid(const std::string& text) {
  std::array<int, 3> g{};
  std::stringstream ss(text);
  std::string part;
  int n = 0;
  while (std::getline(ss, part, ',')) {
    if (n == 3) fail("grid", "expected N1,N2,N3, got '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      fail("grid", "expected N1,N2,N3, got '" + text + "'");
    }
    if (used != part.size()) fail("grid", "expected N1,N2,N3, got '" + text + "'");
    g[std::size_t(n++)] = v;
  }
  if (n != 3) fail("grid", "expected N1,N2,N3, got '" + text + "'");
  return g;
}

RunConfig parse_config(const std::string& text, const Overrides& ov) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i) line += text[i] == '\n';
    throw ConfigError("config parse error at line " + std::to_string(line) + ": " + e.what());
  }
  if (!root.is_object()) fail("<root>", "expected a JSON object");

  if (ov.seed) root["seed"] = *ov.seed;
  if (ov.grid) root["grid"] = *ov.grid;
  if (ov.k_count) root["k_samples"] = json{{"count", *ov.k_count}};
  if (ov.output) root["output"] = *ov.output;

  RunConfig cfg;
  cfg.cross_section = parse_cross_section(root);
  cfg.eps = parse_coefficient(root, "eps");
  cfg.mu = parse_coefficient(root, "mu");

  if (root.contains("grid")) {
    const json& g = root.at("grid");
    if (!g.is_array() || g.size() != 3) fail("grid", "expected [N1, N2, N3]");
    for (int i = 0; i < 3; ++i) cfg.grid[std::size_t(i)] = integer(g[std::size_t(i)], "grid[" + std::to_string(i) + "]");
  }
  for (int n : cfg.grid) {
    if (n < 4) fail("grid", "every grid size must be at least 4");
  }

  if (root.contains("k_samples")) {
    const json& k = root.at("k_samples");
    if (k.is_array()) {
      for (std::size_t i = 0; i < k.size(); ++i) cfg.k_samples.push_back(number(k[i], "k_samples[" + std::to_string(i) + "]"));
    } else if (k.is_object() && k.contains("count")) {
      const int count = integer(k.at("count"), "k_samples.count");
      if (count < 1) fail("k_samples.count", "must be positive");
      cfg.k_samples = uniform_k_samples(count);
    } else {
      fail("k_samples", "expected a list of k values or {\"count\": n}");
    }
  } else {
    cfg.k_samples = uniform_k_samples(16);
  }
  if (cfg.k_samples.empty()) fail("k_samples", "at least one sample is required");
  for (double k : cfg.k_samples) {
    if (k < 0.0 || k >= kTwoPi) fail("k_samples", "every k must lie in [0, 2 pi)");
  }

  if (root.contains("lambda")) {
    const json& l = root.at("lambda");
    if (l.is_array() || l.is_object()) fail("lambda", "must be real; complex values are not accepted");
    cfg.lambda = number(l, "lambda");
  }
  if (root.contains("bands")) {
    cfg.bands = integer(root.at("bands"), "bands");
    if (cfg.bands < 1) fail("bands", "must be positive");
  }
  if (root.contains("points")) {
    cfg.points = integer(root.at("points"), "points");
    if (cfg.points < 1) fail("points", "must be positive");
  }
  if (root.contains("tolerances")) {
    const json& t = root.at("tolerances");
    if (!t.is_object()) fail("tolerances", "expected an object");
    cfg.tol.pointwise = tolerance(t, "pointwise", cfg.tol.pointwise);
    cfg.tol.quadrature = tolerance(t, "quadrature", cfg.tol.quadrature);
    cfg.tol.curvature = tolerance(t, "curvature", cfg.tol.curvature);
    cfg.tol.flat_rel = tolerance(t, "flat_rel", cfg.tol.flat_rel);
    cfg.tol.empty_rel = tolerance(t, "empty_rel", cfg.tol.empty_rel);
  }
  if (root.contains("seed")) {
    const json& s = root.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      fail("seed", "expected a nonnegative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  if (root.contains("output")) {
    if (!root.at("output").is_string()) fail("output", "expected a path string");
    cfg.output = root.at("output").get<std::string>();
  }

  // The output directory does not affect results and is left out of the hash.
  cfg.canonical = root;
  cfg.canonical.erase("output");
  cfg.hash = fnv1a64(cfg.canonical.dump());
  return cfg;
}

RunConfig load_config(const std::string& path, const Overrides& ov) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), ov);
}

CoefficientField make_coefficient(const CoefficientSpec& spec, const CrossSection& cs) {
  return CoefficientField::create(spec.terms, spec.lower, spec.upper, cs);
}

}  // namespace maxcyl::app
