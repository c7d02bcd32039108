#pragma once

// Command implementations behind the `adjfol` executable. Each command writes
// its report to `out`, diagnostics to `err`, and returns the process exit code:
// 0 when every requested check passes, 1 when a check fails, 2 on bad input.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "adjfol/adjfol.hpp"

namespace adjfol::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  int max_classical_rank = 7;
  int samples = 10;
  int height = 100;
  bool json = false;

  void validate() const {
    if (max_classical_rank <= 0 || samples <= 0 || height <= 0)
      throw InvalidArgument("--max-classical-rank, --samples and --height must be positive");
  }
};

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2 };

namespace detail {

inline char type_letter(const std::string& t) {
  if (t.size() != 1) throw InvalidArgument("type must be a single letter A-G, got '" + t + "'");
  return static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
}

inline Weight parse_weight(const std::string& text, int rank) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("weight entries must be integers, got '" + item + "'");
    }
  }
  if (static_cast<int>(c.size()) != rank)
    throw InvalidArgument("weight has " + std::to_string(c.size()) + " coordinates, rank is " + std::to_string(rank));
  return Weight(c);
}

/// Emits collected failures and picks the exit code.
inline int finish(std::ostream& err, const std::vector<std::string>& failures) {
  for (const auto& f : failures) err << "failure: " << f << "\n";
  return failures.empty() ? kOk : kCheckFailed;
}

inline std::string h0_text(const H0Omega2& h) {
  if (h.exact) return h.value.str();
  std::string s = "[" + h.lower.str() + "," + h.upper.str() + "]";
  if (h.adjudicated) s += "->" + std::to_string(*h.adjudicated);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline int cmd_roots(const std::string& type, int rank, const RunConfig& cfg, std::ostream& out) {
  RootDatum d = build_datum(detail::type_letter(type), rank, std::max(cfg.max_classical_rank, rank));
  if (cfg.json) {
    Json roots = Json::array();
    for (std::size_t k = 0; k < d.num_positive_roots(); ++k)
      roots.push_back(Json{{"root", d.positive_roots()[k]},
                           {"weight", to_json(d.root_weight(k))},
                           {"coroot", d.coroot(k)}});
    Json cartan = Json::array();
    for (int i = 0; i < d.rank(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < d.rank(); ++j) row.push_back(d.cartan(i, j));
      cartan.push_back(row);
    }
    out << Json{{"schema", kSchemaVersion},
                {"datum", {{"type", std::string(1, d.type_letter())}, {"rank", d.rank()}}},
                {"cartan", cartan},
                {"dim", d.dim_lie_algebra()},
                {"positive_roots", roots}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << d.name() << ": " << d.num_positive_roots() << " positive roots, dim " << d.dim_lie_algebra() << "\n";
  out << "cartan:\n";
  for (int i = 0; i < d.rank(); ++i) {
    out << " ";
    for (int j = 0; j < d.rank(); ++j) out << std::setw(3) << d.cartan(i, j);
    out << "\n";
  }
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    const auto& r = d.positive_roots()[k];
    out << std::setw(4) << k + 1 << "  [";
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << "]  " << d.root_weight(k).pretty() << "\n";
  }
  return kOk;
}

inline int cmd_bbw(const std::string& type, int rank, int node, const std::string& weight, const RunConfig& cfg,
                   std::ostream& out) {
  RootDatum d = build_datum(detail::type_letter(type), rank, std::max(cfg.max_classical_rank, rank));
  MarkedDatum md(d, node);
  Weight w = detail::parse_weight(weight, rank);
  CohomologyResult c = cohomology(md, w);
  if (cfg.json) {
    Json j{{"schema", kSchemaVersion},
           {"datum", {{"type", std::string(1, d.type_letter())}, {"rank", d.rank()}}},
           {"node", node},
           {"weight", to_json(w)},
           {"dot", to_json(dot_classify(d, w))},
           {"cohomology", to_json(c)}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "E_{" << w.pretty() << "} on " << d.name() << "/P(" << node << "): ";
  if (c.zero()) out << "all cohomology vanishes (weight + delta is singular)\n";
  else out << "h^" << c.degree << " = " << c.dim << " (V_{" << c.top_weight.pretty() << "})\n";
  return kOk;
}

inline int cmd_adjoint(const std::string& type, int rank, int k, const RunConfig& cfg, std::ostream& out,
                       std::ostream& err) {
  AdjointData ad = adjoint_data(detail::type_letter(type), rank, std::max(cfg.max_classical_rank, rank));
  Decomposition dec = wedge2_Ddual_twisted(ad, k);
  H0Omega2 h0 = h0_omega2(ad, k);
  std::vector<std::string> failures;
  if (dec.total_dim() != static_cast<std::int64_t>(ad.m) * (2 * ad.m - 1)) failures.push_back("dimension-identity");
  if (c1_units(ad, dec) != expected_wedge2_c1(ad, k)) failures.push_back("c1-identity");
  if (cfg.json) {
    Json pieces = Json::array();
    for (const auto& p : dec.pieces)
      pieces.push_back(Json{{"ambient", to_json(dec.ambient_weight(p))}, {"weight", to_json(p.weight)},
                            {"twist", p.twist}, {"mult", p.mult}, {"dim", p.dim}});
    out << Json{{"schema", kSchemaVersion},
                {"adjoint", to_json(ad)},
                {"levi", to_json(levi_diagram(ad.md))},
                {"k", k},
                {"wedge2_Ddual", pieces},
                {"h0_omega2", to_json(h0)},
                {"failures", failures}}
               .dump(2)
        << "\n";
  } else {
    const RootDatum& d = ad.md.ambient();
    out << d.name() << " adjoint variety: node " << ad.md.marked_node() << ", lambda0 = " << ad.lambda0.pretty()
        << ", dim X = " << ad.dim_X << " (m = " << ad.m << "), -K_X = " << ad.index << " O_X(1)\n";
    if (!ad.note.empty()) out << "  " << ad.note << "\n";
    out << "  Levi: " << levi_diagram(ad.md).name() << "\n";
    out << "  D = E_{" << ad.D_weight.pretty() << "}, D^vee = E_{" << ad.Ddual_weight.pretty() << "}, c1(D) = " << ad.c1_D
        << " O_X(1)\n";
    out << "  wedge^2 D^vee(" << k << ") =";
    bool first = true;
    for (const auto& p : dec.pieces) {
      out << (first ? " " : " + ") << (p.mult > 1 ? std::to_string(p.mult) + " " : "") << "E_{"
          << dec.ambient_weight(p).pretty() << "} [dim " << p.dim << "]";
      first = false;
    }
    out << "\n  h^0(Omega^2(" << k << ")) = " << detail::h0_text(h0) << "\n";
    if (!h0.note.empty()) out << "  note: " << h0.note << "\n";
  }
  return detail::finish(err, failures);
}

inline int cmd_adjoint_table(bool compare, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  auto rows = adjoint_table(cfg.max_classical_rank, compare);
  std::vector<std::string> failures;
  for (const auto& r : rows) {
    if (!r.dimension_identity) failures.push_back(r.type + ": dimension-identity");
    if (!r.c1_identity) failures.push_back(r.type + ": c1-identity");
    if (!r.h0_k2.exact || r.h0_k2.value != r.dim_g) failures.push_back(r.type + ": h0(Omega^2(2)) != dim g");
    const bool k1_zero = r.h0_k1.exact ? r.h0_k1.value == 0 : (r.h0_k1.lower == 0 && r.h0_k1.adjudicated == 0);
    if (!k1_zero) failures.push_back(r.type + ": h0(Omega^2(1))");
    auto one = std::count_if(r.pieces.begin(), r.pieces.end(), [&](const TablePiece& p) {
      return p.ambient == r.data.lambda0 && p.mult == 1;
    });
    auto with_sections = std::count_if(r.pieces.begin(), r.pieces.end(), [](const TablePiece& p) { return p.h0 != 0; });
    if (one != 1 || with_sections != 1) failures.push_back(r.type + ": O_X(1) summand");
  }
  if (cfg.json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r, compare));
    out << Json{{"schema", kSchemaVersion}, {"max_classical_rank", cfg.max_classical_rank}, {"rows", arr},
                {"failures", failures}}
               .dump(2)
        << "\n";
    return detail::finish(err, failures);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"type", "node", "dim g", "Levi", "dim X", "wedge^2 D^vee(2)", "h0(O2(1))", "h0(O2(2))"};
  if (compare) {
    head.push_back("printed");
    head.push_back("agree");
  }
  cells.push_back(head);
  for (const auto& r : rows) {
    std::string pieces;
    for (const auto& p : r.pieces)
      pieces += (pieces.empty() ? "" : " + ") + std::string("E_{") + p.ambient.pretty() + "}";
    std::vector<std::string> row{r.type, std::to_string(r.adjoint_node), std::to_string(r.dim_g), r.levi,
                                 std::to_string(r.data.dim_X), pieces, detail::h0_text(r.h0_k1),
                                 detail::h0_text(r.h0_k2)};
    if (compare) {
      std::string printed;
      for (const auto& p : r.printed_pieces) printed += (printed.empty() ? "" : " + ") + p;
      row.push_back(r.compared ? printed : "-");
      row.push_back(r.compared ? (r.agree ? "agree" : "DISAGREE") : "-");
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
  if (compare)
    for (const auto& r : rows)
      for (const auto& n : r.notes) out << r.type << ": " << n << "\n";
  return detail::finish(err, failures);
}

// ---------------------------------------------------------------------------
// Foliations

struct FolSource {
  std::string builtin;  // empty when reading from a file
  std::string input;
  int n = 2;
};

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"pencil", "log4", "pullback-d0", "pullback-d1", "affine", "torus"};
  return names;
}

inline Form load_form(const FolSource& src, const RunConfig& cfg) {
  if (src.builtin.empty() == src.input.empty()) throw InvalidArgument("give exactly one of --builtin or --input");
  if (!src.input.empty()) {
    std::ifstream f(src.input);
    if (!f) throw InvalidArgument("cannot open " + src.input);
    std::stringstream ss;
    ss << f.rdbuf();
    Form w = parse_form(ss.str());
    if (!euler_contractions_vanish(w)) throw InvalidArgument(src.input + ": Euler contractions do not vanish");
    if (!form_bidegree(w)) throw InvalidArgument(src.input + ": form is zero or not bihomogeneous");
    return w;
  }
  if (src.n < 1 || fol_nvars(src.n) > kMaxVars) throw InvalidArgument("--n must be in 1..7");
  std::mt19937_64 rng(derive_seed(cfg.seed, 0));
  const std::string& b = src.builtin;
  if (b == "pencil") return builtin_pencil(src.n, rng, cfg.height);
  if (b == "log4") return builtin_log4(src.n, rng, cfg.height);
  if (b == "pullback-d0") return builtin_pullback(src.n, 0, rng, cfg.height);
  if (b == "pullback-d1") return builtin_pullback(src.n, 1, rng, cfg.height);
  if (b == "affine" || b == "torus") {
    if (src.n != 2) throw InvalidArgument("builtin " + b + " lives on the threefold, use --n 2");
    return b == "affine" ? builtin_affine().omega : builtin_torus().omega;
  }
  std::string all;
  for (const auto& s : builtin_names()) all += (all.empty() ? "" : ", ") + s;
  throw InvalidArgument("unknown builtin '" + b + "' (known: " + all + ")");
}

namespace detail {

inline Json degree_json(const TangencyDegree& d) { return d.minus_infinity ? Json("-inf") : Json(d.value); }

inline Json form_summary(const Form& w) {
  auto d = form_bidegree(w);
  return Json{{"n", fol_n(w.nvars())}, {"bidegree", d ? Json::array({d->a, d->b}) : Json(nullptr)}};
}

}  // namespace detail

inline int cmd_fol_check_integrable(const FolSource& src, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Form w = load_form(src, cfg);
  const bool integ = integrable(w), euler = euler_contractions_vanish(w), div = has_divisorial_singularities(w);
  std::vector<std::string> failures;
  if (!euler) failures.push_back("euler-contractions");
  if (!integ) failures.push_back("integrability");
  if (cfg.json) {
    Json j{{"schema", kSchemaVersion}, {"form", detail::form_summary(w)}, {"integrable", integ},
           {"euler_contractions_vanish", euler}, {"divisorial_singularities", div}, {"failures", failures}};
    out << j.dump(2) << "\n";
  } else {
    out << "integrable: " << (integ ? "yes" : "no") << "\n";
    out << "Euler contractions vanish: " << (euler ? "yes" : "no") << "\n";
    out << "divisorial singularities: " << (div ? "yes" : "no") << "\n";
  }
  return detail::finish(err, failures);
}

inline int cmd_fol_degree(const FolSource& src, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  Form w = load_form(src, cfg);
  std::vector<std::string> failures;
  Json fam = Json::object();
  std::string text = "(";
  for (int family : {1, 2}) {
    auto degs = sample_degrees(w, family, cfg.samples, cfg.seed, cfg.height);
    const bool constant = std::all_of(degs.begin(), degs.end(), [&](const TangencyDegree& d) { return d == degs.front(); });
    if (!constant) failures.push_back("H" + std::to_string(family) + ": degree differs across generic lines");
    Json samples = Json::array();
    for (const auto& d : degs) samples.push_back(detail::degree_json(d));
    fam["H" + std::to_string(family)] = Json{{"degree", detail::degree_json(degs.front())}, {"samples", samples}};
    text += (family == 1 ? "" : ",") + (constant ? degs.front().str() : std::string("mixed"));
  }
  text += ")";
  if (cfg.json) {
    auto bd = form_bidegree(w);
    Json j{{"schema", kSchemaVersion}, {"form", detail::form_summary(w)}, {"seed", cfg.seed}, {"families", fam}};
    if (bd) {
      auto num = foliation_numerics(*bd, fol_n(w.nvars()));
      j["predicted"] = Json{{"H1", num.deg_H1}, {"H2", num.deg_H2},
                            {"K_F", Json::array({num.K_F_bidegree.a, num.K_F_bidegree.b})}};
    }
    j["failures"] = failures;
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return detail::finish(err, failures);
}

/// Named surfaces for `fol invariant`: the two conic surfaces of the affine example
/// and the (1,0)/(0,1) coordinate hyperplanes.
inline Poly named_surface(const std::string& name, int n) {
  if (name == "conic-x") return aff_surface_h1(n);
  if (name == "conic-y") return aff_surface_h2(n);
  if (name == "x0") return xv(n, 0);
  if (name == "y0") return yv(n, 0);
  throw InvalidArgument("unknown surface '" + name + "' (known: conic-x, conic-y, x0, y0)");
}

inline int cmd_fol_invariant(const FolSource& src, const std::string& surface, const std::string& surface_file,
                             const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Form w = load_form(src, cfg);
  const int n = fol_n(w.nvars());
  Poly F;
  if (surface.empty() == surface_file.empty()) throw InvalidArgument("give exactly one of --surface or --surface-input");
  if (!surface.empty()) {
    F = named_surface(surface, n);
  } else {
    std::ifstream f(surface_file);
    if (!f) throw InvalidArgument("cannot open " + surface_file);
    std::stringstream ss;
    ss << f.rdbuf();
    Json j;
    try {
      j = Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("surface: malformed JSON: ") + e.what());
    }
    F = poly_from_json(j.is_object() && j.contains("terms") ? j["terms"] : j, n, "surface");
  }
  if (F.is_zero()) throw InvalidArgument("surface equation is zero");
  require_bidegree(F, n, "surface equation");
  const bool inv = is_invariant(w, F);
  std::vector<std::string> failures;
  if (!inv) failures.push_back("invariance");
  if (cfg.json)
    out << Json{{"schema", kSchemaVersion}, {"form", detail::form_summary(w)}, {"invariant", inv}, {"failures", failures}}
               .dump(2)
        << "\n";
  else
    out << "invariant: " << (inv ? "yes" : "no") << "\n";
  return detail::finish(err, failures);
}

inline int cmd_fol_build(const FolSource& src, const RunConfig& cfg, std::ostream& out) {
  Form w = load_form(src, cfg);
  out << form_to_json(w).dump(2) << "\n";
  return kOk;
}

}  // namespace adjfol::cli
