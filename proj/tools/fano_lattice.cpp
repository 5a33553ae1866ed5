// fano-lattice: command-line front end.
//
// Exit codes: 0 success, 1 a computed check failed, 2 bad input.

#include <fano/exact.hpp>
#include <fano/fano.hpp>
#include <fano/finite_field.hpp>
#include <fano/groupscheme.hpp>
#include <fano/intersection.hpp>
#include <fano/io.hpp>
#include <fano/lattice.hpp>
#include <fano/scenario.hpp>
#include <fano/semilinear.hpp>
#include <fano/witt.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace fano;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

/// "C1..C8,C9" -> C1, C2, ..., C8, C9.
std::vector<std::string> expand_labels(const std::string& spec) {
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string item;
  static const std::regex range(R"(^([A-Za-z_]*)(\d+)\.\.([A-Za-z_]*)(\d+)$)");
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::smatch m;
    if (std::regex_match(item, m, range)) {
      if (!m[3].str().empty() && m[3].str() != m[1].str()) throw Error("range endpoints differ in prefix: " + item);
      long lo = std::stol(m[2].str()), hi = std::stol(m[4].str());
      if (lo > hi) throw Error("empty label range: " + item);
      for (long i = lo; i <= hi; ++i) out.push_back(m[1].str() + std::to_string(i));
    } else {
      out.push_back(item);
    }
  }
  return out;
}

/// A path as given, or a bare name looked up in the fixture directory.
json read_input_file(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path) && fs::path(path).parent_path().empty() && fs::exists(fixture_path(path)))
    return io::read_json_file(fixture_path(path));
  return io::read_json_file(path);
}

/// Inline JSON, or @path / a path to a file.
json json_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_input_file(arg.substr(1));
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse_json_text(arg);
  return read_input_file(arg);
}

/// "p=2,e=2"
FieldPtr parse_field(const std::string& spec) {
  long p = 0, e = 1;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("field spec must look like p=2,e=2");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    long v = 0;
    try {
      v = std::stol(val);
    } catch (const std::exception&) {
      throw Error("bad number in field spec: " + val);
    }
    if (key == "p")
      p = v;
    else if (key == "e")
      e = v;
    else
      throw Error("unknown field spec key: " + key);
  }
  if (p < 2 || e < 1) throw Error("field spec needs a prime p and e >= 1");
  return FiniteField::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
}

/// A field element is an index 0..q-1 or a coefficient vector over F_p.
FiniteField::Element element_from_json(const FiniteField& k, const json& j) {
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 0 || static_cast<unsigned long long>(v) >= k.order()) throw Error("field element out of range: " + j.dump());
    return static_cast<FiniteField::Element>(v);
  }
  if (j.is_array()) {
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
      long long v = x.get<long long>();
      if (v < 0 || static_cast<unsigned long long>(v) >= k.characteristic()) throw Error("coefficient out of range");
      c.push_back(static_cast<std::uint32_t>(v));
    }
    if (c.size() > k.degree()) throw Error("too many coefficients for the field degree");
    return k.from_coefficients(c);
  }
  throw Error("field element must be an integer or a coefficient array");
}

json element_to_json(const FiniteField& k, FiniteField::Element x) {
  json c = json::array();
  for (auto v : k.coefficients(x)) c.push_back(v);
  return c;
}

FieldMatrix field_matrix_from_json(const FiniteField& k, const json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix must be a non-empty array of rows");
  FieldMatrix m(j.size(), j[0].size(), 0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw Error("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = element_from_json(k, j[i][c]);
  }
  return m;
}

std::vector<FiniteField::Element> witt_components(const FiniteField& k, const std::string& text) {
  std::vector<FiniteField::Element> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long v = 0;
    try {
      v = std::stol(item);
    } catch (const std::exception&) {
      throw Error("bad Witt component: " + item);
    }
    if (v < 0 || static_cast<unsigned long>(v) >= k.order()) throw Error("Witt component out of range: " + item);
    out.push_back(static_cast<FiniteField::Element>(v));
  }
  return out;
}

// --- subcommands ------------------------------------------------------------

struct LatticeOpts {
  std::string name, file;
  bool disc = false, definite = false, isotropic = false, over = false, bilinear = false, as_json = false;
};

int run_lattice(const LatticeOpts& o) {
  if (o.name.empty() == o.file.empty()) throw Error("give exactly one of --name or --file");
  Lattice l = o.name.empty() ? io::lattice_from_json(read_input_file(o.file)) : named_lattice(o.name);
  const Isotropy mode = o.bilinear ? Isotropy::Bilinear : Isotropy::Quadratic;
  const bool any = o.disc || o.definite || o.isotropic || o.over;
  if (o.as_json) {
    json out = io::to_json(l);
    Signature sig = signature(l.gram());
    out["det"] = io::to_json(l.det());
    out["signature"] = {sig.positive, sig.negative, sig.zero};
    out["even"] = l.is_even();
    out["definiteness"] = to_string(definiteness(l).kind);
    if (l.det() != 0) {
      DiscriminantForm f = discriminant_group(l);
      out["discriminant_group"] = f.group.to_string();
      out["q_values"] = io::vector_to_json(f.q_values);
      if (o.isotropic || o.over) {
        auto iso = isotropic_subgroups(f, mode);
        out["isotropic_subgroups"] = iso.size();
        json lats = json::array();
        for (const auto& ov : overlattices(l, mode)) lats.push_back(io::to_json(ov.lattice));
        out["overlattices"] = lats;
      }
    }
    emit(out);
    return kOk;
  }
  if (!any) {
    Signature sig = signature(l.gram());
    std::cout << "rank " << l.rank() << "\n"
              << "det " << l.det() << "\n"
              << "signature (" << sig.positive << "," << sig.negative << ")" << (sig.zero ? " zero " + std::to_string(sig.zero) : "") << "\n"
              << "parity " << (l.is_even() ? "even" : "odd") << "\n"
              << "definiteness " << to_string(definiteness(l).kind) << "\n";
    if (l.det() != 0) std::cout << "discriminant " << discriminant_group(l).group.to_string() << "\n";
    return kOk;
  }
  if (o.definite) {
    Definiteness d = definiteness(l);
    std::cout << to_string(d.kind);
    for (const auto& v : d.kernel) {
      std::cout << " kernel";
      for (const auto& x : v) std::cout << " " << x;
    }
    std::cout << "\n";
  }
  if (o.disc) std::cout << discriminant_group(l).group.to_string() << "\n";
  if (o.isotropic) {
    auto iso = isotropic_subgroups(discriminant_group(l), mode);
    std::cout << "isotropic subgroups " << iso.size() << " (nontrivial " << iso.size() - 1 << ")\n";
  }
  if (o.over) {
    auto ov = overlattices(l, mode);
    std::cout << "overlattices " << ov.size() << "\n";
    for (const auto& x : ov) std::cout << "  index " << x.index << " gram " << x.lattice.gram() << "\n";
  }
  return kOk;
}

int run_contract(const std::string& surface, const std::string& curves, bool as_json) {
  SurfaceModel s = io::surface_from_json(json_argument(surface));
  std::vector<IntVector> cfg;
  std::vector<std::string> labels = expand_labels(curves);
  for (const auto& l : labels) cfg.push_back(s.num.unit(l));
  Contraction c = contract(s, cfg);
  if (as_json) {
    json out;
    out["contracted"] = labels;
    out["surface"] = io::to_json(c.surface);
    out["embedding"] = io::matrix_to_json(c.embedding);
    out["note"] = c.note;
    emit(out);
    return kOk;
  }
  std::cout << "contracted " << labels.size() << " curves\n"
            << "rank " << c.surface.num.rank() << "\n"
            << "gram " << c.surface.num.gram() << "\n"
            << "canonical " << detail::vec_string(c.surface.canonical) << "\n"
            << "chi " << c.surface.chi << "\n"
            << "embedding " << c.embedding << "\n"
            << "note: " << c.note << "\n";
  return kOk;
}

int run_pullback(const std::string& config, bool reverse, bool as_json) {
  json j = json_argument(config);
  ResolutionConfig cfg = io::resolution_from_json(j);
  PullbackResult r;
  if (reverse) {
    if (!j.contains("rational_self")) throw Error("--reverse needs \"rational_self\" in the config");
    r = mumford_strict_self(cfg.exceptional, cfg.strict_meets, io::rational_from_json(j.at("rational_self")));
  } else {
    if (!j.contains("strict_self")) throw Error("config needs \"strict_self\"");
    r = mumford_pullback(cfg);
  }
  if (as_json) {
    emit(io::to_json(r));
    return kOk;
  }
  std::cout << "lambda " << detail::vec_string(r.lambda) << "\n"
            << "strict_self " << to_string(r.strict_self) << (r.strict_self_integral ? "" : " (NON-INTEGRAL)") << "\n"
            << "rational_self " << to_string(r.rational_self) << "\n";
  return kOk;
}

int run_chi(const std::string& surface, const std::string& divisor, long t, bool as_json) {
  SurfaceModel s = io::surface_from_json(json_argument(surface));
  Divisor d = io::divisor_from_json(json_argument(divisor), s.num);
  ChiPolynomial p = chi_polynomial(s, d);
  Rational v = p(Rational(t));
  if (as_json) {
    json out;
    out["a2"] = io::to_json(p.a2);
    out["a1"] = io::to_json(p.a1);
    out["a0"] = io::to_json(p.a0);
    out["t"] = t;
    out["value"] = io::to_json(v);
    out["integral"] = is_integral(v);
    out["integer_valued"] = p.integer_valued();
    emit(out);
    return kOk;
  }
  std::cout << to_string(v) << (is_integral(v) ? "" : " (NON-INTEGRAL)") << "\n";
  return kOk;
}

int run_hw(const std::string& field, const std::string& matrix, bool as_json) {
  FieldPtr k = parse_field(field);
  PLinearMap f(k, field_matrix_from_json(*k, json_argument(matrix)));
  std::size_t r = hw_rank(f);
  HwDetClass c = hw_det_class(f);
  if (as_json) {
    json out;
    out["field"] = k->describe();
    out["rank"] = r;
    out["max_rank"] = has_max_rank(f);
    out["det_class"] = c.to_string();
    out["det_class_representative"] = element_to_json(*k, c.representative);
    emit(out);
    return kOk;
  }
  std::cout << "field " << k->describe() << "\n"
            << "rank " << r << "\n"
            << "max_rank " << (has_max_rank(f) ? "true" : "false") << "\n"
            << "det_class " << c.to_string() << "\n";
  return kOk;
}

int run_witt(const std::string& field, std::size_t length, const std::string& op, const std::string& a,
             const std::string& b, std::size_t n, bool as_json) {
  FieldPtr k = parse_field(field);
  WittRing w(k, length);
  WittVector x = w.make(witt_components(*k, a));
  WittVector y = w.zero();
  const bool binary = op == "add" || op == "sub" || op == "mul";
  if (binary) y = w.make(witt_components(*k, b));
  WittVector out;
  if (op == "add")
    out = w.add(x, y);
  else if (op == "sub")
    out = w.sub(x, y);
  else if (op == "mul")
    out = w.mul(x, y);
  else if (op == "neg")
    out = w.neg(x);
  else if (op == "F")
    out = w.frobenius(x);
  else if (op == "V")
    out = w.verschiebung(x);
  else if (op == "project")
    out = w.project(x, n);
  else
    throw Error("unknown Witt operation: " + op);
  if (as_json) {
    json j;
    j["op"] = op;
    j["result"] = out.components;
    emit(j);
    return kOk;
  }
  std::cout << w.to_string(out) << "\n";
  return kOk;
}

int run_upsilon(const std::string& group, bool as_json) {
  GroupSchemeData g = io::group_scheme_from_json(json_argument(group));
  FiniteUnipotentData u = upsilon(g);
  if (as_json) {
    emit(io::to_json(u));
    return kOk;
  }
  std::cout << u.describe() << "\n";
  return kOk;
}

int run_cone(long dim, const std::string& degree, long index, long chi, long m, bool as_json) {
  FanoData b{dim, parse_rational(degree), index, Integer(chi)};
  ConeResult r = cone_invariants(b, m);
  if (as_json) {
    json out = io::to_json(r.cone);
    out["degree_integral"] = r.degree_integral;
    out["canonical"] = r.canonical;
    emit(out);
    return kOk;
  }
  std::cout << "dim " << r.cone.dim << "\n"
            << "degree " << to_string(r.cone.degree) << (r.degree_integral ? "" : " (NON-INTEGRAL)") << "\n"
            << "index " << r.cone.index << "\n"
            << "chi " << r.cone.chi << "\n"
            << r.canonical << "\n";
  return kOk;
}

int run_scenario(const std::string& which, bool as_json, bool supersingular) {
  if (which != "t237") throw Error("unknown scenario: " + which);
  T237Inputs in = T237Inputs::load();
  ScenarioReport r = scenario_t237(in, supersingular ? EnriquesKind::Supersingular : EnriquesKind::Classical);
  if (as_json)
    emit(r.json());
  else
    std::cout << r.text();
  return r.all_pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice, intersection and Frobenius-semilinear computations", "fano-lattice"};
  app.require_subcommand(1, 1);

  LatticeOpts lo;
  auto* lat = app.add_subcommand("lattice", "lattice invariants");
  lat->add_option("--name", lo.name, "built-in lattice: T237, E10, E8, E8~, D5, A1, H, ...");
  lat->add_option("--file", lo.file, "lattice or dual-graph JSON");
  lat->add_flag("--disc", lo.disc, "discriminant group");
  lat->add_flag("--definiteness", lo.definite, "definiteness class and kernel");
  lat->add_flag("--isotropic", lo.isotropic, "count isotropic subgroups");
  lat->add_flag("--overlattices", lo.over, "list overlattices");
  lat->add_flag("--bilinear", lo.bilinear, "isotropy w.r.t. b only (all integral overlattices)");
  lat->add_flag("--json", lo.as_json);

  std::string surface, curves, config, divisor, field, matrix, op = "add", a, b, group, which = "t237";
  std::string degree = "1";
  bool as_json = false, reverse = false, supersingular = false, classical = false, text = false;
  long t = 1, dim = 2, index = 1, chi = 1, m = 1;
  std::size_t length = 2, n = 1;

  auto* con = app.add_subcommand("contract", "contract a negative-definite configuration");
  con->add_option("--surface", surface, "surface JSON")->required();
  con->add_option("--curves", curves, "labels, ranges allowed: C1..C8,C9")->required();
  con->add_flag("--json", as_json);

  auto* pb = app.add_subcommand("pullback", "Mumford rational pullback");
  pb->add_option("--config", config, "resolution config JSON")->required();
  pb->add_flag("--reverse", reverse, "derive Theta*^2 from rational_self");
  pb->add_flag("--json", as_json);

  auto* ch = app.add_subcommand("chi", "Riemann-Roch chi(L^t)");
  ch->add_option("--surface", surface, "surface JSON")->required();
  ch->add_option("--divisor", divisor, "divisor JSON")->required();
  ch->add_option("--t", t, "power of L (default 1)");
  ch->add_flag("--json", as_json);

  auto* hw = app.add_subcommand("hw", "Hasse-Witt invariants of a p-linear map");
  hw->add_option("--field", field, "p=2,e=2")->required();
  hw->add_option("--matrix", matrix, "matrix JSON")->required();
  hw->add_flag("--json", as_json);

  auto* wt = app.add_subcommand("witt", "truncated Witt vector arithmetic");
  wt->add_option("--field", field, "p=2,e=1")->required();
  wt->add_option("--length", length, "Witt length m (1..6)");
  wt->add_option("--op", op, "add, sub, mul, neg, F, V, project");
  wt->add_option("--a", a, "components of a, comma separated")->required();
  wt->add_option("--b", b, "components of b");
  wt->add_option("--n", n, "components dropped by project");
  wt->add_flag("--json", as_json);

  auto* up = app.add_subcommand("upsilon", "maximal finite unipotent quotient");
  up->add_option("--group", group, "group scheme JSON (inline, @file or path)")->required();
  up->add_flag("--json", as_json);

  auto* cn = app.add_subcommand("cone", "cone invariants");
  cn->add_option("--dim", dim, "dimension of the base");
  cn->add_option("--degree", degree, "degree of the base (rational)")->required();
  cn->add_option("--index", index, "index of the base");
  cn->add_option("--chi", chi, "chi(O) of the base");
  cn->add_option("--m", m, "L^m = omega^{-1}");
  cn->add_flag("--json", as_json);

  auto* sc = app.add_subcommand("scenario", "end-to-end scenario");
  sc->add_option("name", which, "scenario name (t237)");
  sc->add_flag("--json", as_json);
  sc->add_flag("--text", text);
  sc->add_flag("--supersingular", supersingular);
  sc->add_flag("--classical", classical);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*lat) return run_lattice(lo);
    if (*con) return run_contract(surface, curves, as_json);
    if (*pb) return run_pullback(config, reverse, as_json);
    if (*ch) return run_chi(surface, divisor, t, as_json);
    if (*hw) return run_hw(field, matrix, as_json);
    if (*wt) return run_witt(field, length, op, a, b, n, as_json);
    if (*up) return run_upsilon(group, as_json);
    if (*cn) return run_cone(dim, degree, index, chi, m, as_json);
    if (*sc) {
      if (supersingular && classical) throw Error("--supersingular and --classical are exclusive");
      if (as_json && text) throw Error("--json and --text are exclusive");
      return run_scenario(which, as_json, supersingular);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
