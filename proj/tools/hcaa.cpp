// Command-line front end. Every run prints one report
//   {"command": ..., "input_digest": ..., "results": ..., "status": ..., "exit": ...}
// and exits 0 when all checks pass, 1 on a failed check or mathematical
// error, 2 on usage or parse errors.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "hcaa/classify.hpp"
#include "hcaa/cohomology.hpp"
#include "hcaa/hypercomplex.hpp"
#include "hcaa/io.hpp"
#include "hcaa/lifts.hpp"

using namespace hcaa;

namespace {

struct Run {
  std::string command;
  std::uint64_t digest = fnv1a("");
  Json results = Json::object();
  bool ok = true;

  void mix(std::string_view bytes) {
    digest = fnv1a(bytes, digest);
    digest = fnv1a(std::string_view("\0", 1), digest);
  }
  Json load(const std::string& path) {
    const Json j = read_json_file(path);
    mix(j.dump());
    return j;
  }
  void check(Json& list, const std::string& name, bool passed, Json detail = nullptr) {
    Json entry = {{"name", name}, {"passed", passed}};
    if (!detail.is_null()) entry["detail"] = std::move(detail);
    list.push_back(std::move(entry));
    ok = ok && passed;
  }
};

Json integers(const std::vector<Int>& xs) {
  Json out = Json::array();
  for (const Int& x : xs) out.push_back(x.convert_to<long long>());
  return out;
}

RatMat load_matrix(Run& run, const std::string& path) {
  const Json j = run.load(path);
  if (j.is_object()) {
    for (const char* key : {"matrix", "E", "A"})
      if (j.contains(key)) return matrix_from_json(j[key]);
    throw Error(ErrorKind::ParseError, path + ": expected a matrix");
  }
  return matrix_from_json(j);
}

struct Input {
  LieAlgebra algebra;
  std::optional<HypercomplexTriple> triple;
  std::optional<AlmostAbelianSpec> spec;
};

/// A spec ({"n": ...}) or an algebra ({"dim": ...}, optional "triple").
Input load_input(Run& run, const std::string& path) {
  const Json j = run.load(path);
  Input in;
  if (j.is_object() && j.contains("n")) {
    in.spec = spec_from_json(j);
    auto [l, t] = build_hypercomplex_aa(*in.spec);
    in.algebra = std::move(l);
    in.triple = std::move(t);
  } else {
    in.algebra = algebra_from_json(j);
    if (j.contains("triple")) in.triple = triple_from_json(j["triple"]);
  }
  return in;
}

FamilyTag family_from_text(const std::string& name, const std::string& lambda, const std::string& s) {
  auto param = [](const std::string& text, const char* what) {
    if (text.empty()) throw Error(ErrorKind::ParseError, std::string("family needs --") + what);
    return parse_rational(text);
  };
  if (name == "abelian") return FamilyTag{};
  if (name == "g1") return FamilyTag::g1();
  if (name == "g2") return FamilyTag::g2(param(lambda, "lambda"));
  if (name == "g3") return FamilyTag::g3();
  if (name == "g4") return FamilyTag::g4();
  if (name == "g5") return FamilyTag::g5();
  if (name == "g6") return FamilyTag::g6(param(s, "s"));
  if (name == "g7") return FamilyTag::g7(param(lambda, "lambda"), param(s, "s"));
  throw Error(ErrorKind::ParseError, "unknown family " + name);
}

// ---------------------------------------------------------------------------

void cmd_verify(Run& run, const std::string& path) {
  Input in = load_input(run, path);
  const LieAlgebra& l = in.algebra;
  Json checks = Json::array();
  const auto violations = jacobi_check(l);
  Json first = nullptr;
  if (!violations.empty()) {
    const auto& v = violations.front();
    first = {{"i", v.i}, {"j", v.j}, {"k", v.k}, {"value", vector_to_json(v.value)}};
  }
  run.check(checks, "jacobi", violations.empty(), first);
  run.results["dim"] = l.dim();
  if (!in.triple) {
    run.results["note"] = "no hypercomplex triple supplied";
  } else if (violations.empty()) {
    const auto& t = *in.triple;
    require(t.dim() == l.dim(), ErrorKind::InvalidInput, "triple does not act on the algebra");
    const auto h = verify_hypercomplex(l, t);
    run.check(checks, "squares", h.squares);
    run.check(checks, "quaternion_relations", h.quaternion_relations);
    for (int a = 1; a <= 3; ++a) run.check(checks, "integrable_J" + std::to_string(a), h.integrable[a - 1]);
    if (h.passed()) {
      const Connection c = obata(l, t);
      run.check(checks, "obata_torsion_free", torsion_free(c, l));
      run.check(checks, "obata_flat", curvature(c, l).flat);
      for (int a = 1; a <= 3; ++a) run.check(checks, "obata_parallel_J" + std::to_string(a), is_parallel(c, t[a]));
    }
  }
  run.results["checks"] = std::move(checks);
  if (violations.empty()) {
    run.results["unimodular"] = unimodular(l);
    run.results["nilpotent"] = nilpotency_data(l).nilpotent;
  }
}

void cmd_betti(Run& run, const std::string& family, const std::string& lambda, const std::string& s,
               const std::string& spec_path, const std::string& algebra_path, int diagonal) {
  LieAlgebra l;
  const int given = !family.empty() + !spec_path.empty() + !algebra_path.empty() + (diagonal > 0);
  if (given != 1)
    throw Error(ErrorKind::ParseError, "betti needs exactly one of --family, --spec, --algebra, --diagonal");
  if (!family.empty()) {
    const FamilyTag tag = family_from_text(family, lambda, s);
    run.mix(tag.str());
    run.results["family"] = tag.str();
    l = family_algebra(tag).first;
  } else if (diagonal > 0) {
    run.mix("diagonal " + std::to_string(diagonal));
    l = build_hypercomplex_aa(diagonal_family_spec(diagonal)).first;
  } else {
    l = load_input(run, spec_path.empty() ? algebra_path : spec_path).algebra;
  }
  require(jacobi_check(l).empty(), ErrorKind::InvalidInput, "input is not a Lie algebra");
  const BettiVector b = betti(l);
  const bool uni = unimodular(l);
  run.results["dim"] = l.dim();
  run.results["betti"] = integers(b);
  run.results["poincare_dual"] = poincare_dual(b);
  if (l.dim() % 4 == 0) {
    const int p = static_cast<int>(l.dim() / 4);
    run.results["salamon"] = {{"p", p}, {"holds", salamon_check(b, p)}};
  }
  run.results["wakakuwa"] = wakakuwa_check(b);
  if (diagonal > 0) {
    const bool match = b == betti_closed_form(diagonal);
    run.results["closed_form_agrees"] = match;
    run.ok = run.ok && match;
  }
  run.results["unimodular"] = uni;
  // A unimodular algebra has Poincaré duality in its cohomology.
  if (uni) run.ok = run.ok && poincare_dual(b);
}

void cmd_classify8(Run& run, const std::string& spec_path, const std::string& matrix_path) {
  if (spec_path.empty() == matrix_path.empty())
    throw Error(ErrorKind::ParseError, "classify8 needs exactly one of --spec, --matrix");
  FamilyTag tag;
  if (!spec_path.empty()) {
    tag = classify8(spec_from_json(run.load(spec_path)));
  } else {
    tag = classify8_matrix(load_matrix(run, matrix_path));
  }
  const auto adm = lattice_admissibility(tag);
  run.results["family"] = std::string(family_name(tag.family));
  if (tag.has_lambda()) run.results["lambda"] = to_string(tag.lambda);
  if (tag.has_s()) run.results["s"] = tag.s_str();
  run.results["tag"] = tag.str();
  run.results["unimodular"] = is_unimodular_family(tag);
  run.results["lattices"] = std::string(to_string(adm.verdict));
  run.results["reason"] = adm.reason;
}

SpecialTime parse_time(const std::string& text) {
  if (!text.empty() && text.front() == '{') return time_from_json(parse_json(text));
  return time_from_json(Json(text));
}

void cmd_lattice_verify(Run& run, const std::string& e_path, const std::string& time, const std::string& a_path) {
  const RatMat e = load_matrix(run, e_path);
  const RatMat a = load_matrix(run, a_path);
  const SpecialTime t = parse_time(time);
  run.mix(t.str());
  const auto cert = verify_lattice_witness(a, t, e);
  run.results["time"] = to_json(t);
  run.results["certificate"] = to_json(cert);
  run.results["abelianization"] = to_json(abelianization(e));
  const auto order = holonomy_order(e);
  run.results["holonomy"] = order ? Json(order->str()) : Json("infinite");
  run.ok = cert.conjugate;
}

void cmd_lattice_census(Run& run) {
  run.mix("census");
  Json rows = Json::array();
  for (const auto& r : flat_hk_census())
    rows.push_back({{"name", r.name},
                    {"t0", SpecialTime::two_pi_over(r.m).str()},
                    {"holonomy", r.holonomy.str()},
                    {"H1", r.h1.str()},
                    {"certified", r.certificate.conjugate}});
  run.results["table"] = std::move(rows);
}

void cmd_lattice_abelianization(Run& run, const std::string& e_path) {
  const RatMat e = load_matrix(run, e_path);
  run.results["abelianization"] = to_json(abelianization(e));
  const auto order = holonomy_order(e);
  run.results["holonomy"] = order ? Json(order->str()) : Json("infinite");
}

void cmd_lattice_family(Run& run, const std::string& kind, long k, int n) {
  LatticeData d;
  if (kind == "g3") {
    run.mix("g3 " + std::to_string(k));
    d = g3_lattice(k);
  } else {
    run.mix("diagonal " + std::to_string(n) + " " + std::to_string(k));
    d = diagonal_family_lattice(n, k);
  }
  run.results["E"] = to_json(d.E);
  run.results["abelianization"] = to_json(d.h1);
}

void cmd_connection(Run& run, const std::string& kind, const std::string& path, const std::string& metric_path,
                    int structure) {
  Input in = load_input(run, path);
  run.mix(kind + " " + std::to_string(structure));
  const LieAlgebra& l = in.algebra;
  require(jacobi_check(l).empty(), ErrorKind::InvalidInput, "input is not a Lie algebra");
  Metric g = Metric::standard(l.dim());
  if (!metric_path.empty()) g.gram = load_matrix(run, metric_path);
  g.validate();
  Json report = Json::object();
  Connection c;
  std::optional<ThreeForm> torsion_form;
  if (kind == "obata") {
    require(in.triple.has_value(), ErrorKind::NotHypercomplex, "obata needs a hypercomplex triple");
    c = obata(l, *in.triple);
  } else if (kind == "lc") {
    c = levi_civita(l, g);
  } else {
    require(in.triple.has_value(), ErrorKind::NotHermitian, "bismut needs a complex structure");
    const auto bd = bismut(l, (*in.triple)[structure], g);
    c = bd.connection;
    torsion_form = bd.c;
  }
  const auto curv = curvature(c, l);
  const bool tf = torsion_free(c, l);
  report["torsion_zero"] = tf;
  report["flat"] = curv.flat;
  report["metric"] = is_metric(c, g);
  if (in.triple) {
    Json par = Json::array();
    for (int a = 1; a <= 3; ++a) par.push_back(is_parallel(c, (*in.triple)[a]));
    report["parallel_structures"] = std::move(par);
  }
  if (torsion_form) {
    report["c_form"] = to_json(*torsion_form);
    report["strong"] = strong_hkt(l, *torsion_form);
  }
  const RatMat r = ricci_operator(c, g, l);
  Json diag = Json::array();
  for (Index i = 0; i < r.rows(); ++i) diag.push_back(to_string(r(i, i)));
  report["ricci_diag"] = std::move(diag);
  report["ricci_diagonal"] = r == RatMat(r.diagonal().asDiagonal());
  if (kind == "obata") {
    bool par = true;
    for (int a = 1; a <= 3; ++a) par = par && is_parallel(c, (*in.triple)[a]);
    run.ok = tf && curv.flat && par;
  } else if (kind == "lc") {
    run.ok = tf && report["metric"].get<bool>();
  } else {
    run.ok = report["metric"].get<bool>() && is_parallel(c, (*in.triple)[structure]);
    if (in.triple && in.triple->dim() == l.dim()) report["hkt"] = hkt_check(l, *in.triple, g).hkt;
  }
  run.results["kind"] = kind;
  run.results["connection_report"] = std::move(report);
}

void cmd_lift(Run& run, const std::string& path, int iterations) {
  Input in = load_input(run, path);
  run.mix("iterations " + std::to_string(iterations));
  require(in.triple.has_value(), ErrorKind::NotHypercomplex, "lift needs a hypercomplex triple");
  const Connection c = obata(in.algebra, *in.triple);
  const auto chain = iterate_lift(in.algebra, c, *in.triple, iterations);
  Json levels = Json::array();
  for (const auto& lift : chain) {
    Json checks = Json::array();
    run.check(checks, "jacobi", jacobi_check(lift.total).empty());
    run.check(checks, "hypercomplex", verify_hypercomplex(lift.total, lift.triple).passed());
    const auto cl = clifford_verify(lift.clifford);
    run.check(checks, "clifford", cl.passed(), {{"order", cl.order}, {"span_dim", cl.span_dim}});
    run.check(checks, "torsion_free", torsion_free(lift.connection, lift.total));
    run.check(checks, "flat", curvature(lift.connection, lift.total).flat);
    bool par = true;
    for (int a = 1; a <= 3; ++a) par = par && is_parallel(lift.connection, lift.triple[a]);
    for (const auto& k : lift.clifford) par = par && is_parallel(lift.connection, k);
    run.check(checks, "parallel", par);
    if (in.spec) run.check(checks, "ad_matrix", ad_matrix_check(lift, *in.spec));
    levels.push_back({{"level", lift.level},
                      {"dim", lift.total.dim()},
                      {"unimodular", unimodular(lift.total)},
                      {"checks", std::move(checks)}});
  }
  run.results["levels"] = std::move(levels);
  run.results["algebra"] = to_json(chain.back().total);
  run.results["triple"] = to_json(chain.back().triple);
}

// ---------------------------------------------------------------------------
// Table rendering

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_rows(std::ostream& os, const Json& rows) {
  std::vector<std::string> keys;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
  std::vector<size_t> width;
  for (const auto& k : keys) {
    size_t w = k.size();
    for (const auto& r : rows) w = std::max(w, scalar_text(r.value(k, Json())).size());
    width.push_back(w);
  }
  auto line = [&](auto cell) {
    for (size_t c = 0; c < keys.size(); ++c) {
      const std::string s = cell(c);
      os << s << std::string(width[c] - s.size() + (c + 1 < keys.size() ? 2 : 0), ' ');
    }
    os << '\n';
  };
  line([&](size_t c) { return keys[c]; });
  for (const auto& r : rows) line([&](size_t c) { return scalar_text(r.value(keys[c], Json())); });
}

bool is_table(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& r : j) {
    if (!r.is_object()) return false;
    for (const auto& v : r) if (v.is_structured()) return false;
  }
  return true;
}

void render(std::ostream& os, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
  } else if (is_table(j)) {
    os << prefix << ":\n";
    render_rows(os, j);
  } else if (j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    os << prefix << ":";
    for (const auto& x : j) os << ' ' << scalar_text(x);
    os << '\n';
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) render(os, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    os << prefix << ": " << scalar_text(j) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on hypercomplex almost abelian Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "table"}));

  Run run;
  std::function<void()> action;

  std::string path, spec_path, algebra_path, matrix_path, a_path, time, family, lambda, s, kind = "obata",
                                                                                        metric_path;
  int diagonal = 0, structure = 1, iterations = 1, n = 1;
  long k = 1;

  auto* verify = app.add_subcommand("verify", "Check Jacobi, the hypercomplex triple and the Obata connection");
  verify->add_option("path", path, "Spec or algebra JSON")->required();
  verify->callback([&] { action = [&] { cmd_verify(run, path); }; });

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the Lie algebra");
  betti_cmd->add_option("--family", family, "abelian, g1, ..., g7");
  betti_cmd->add_option("--lambda", lambda);
  betti_cmd->add_option("--s", s);
  betti_cmd->add_option("--spec", spec_path);
  betti_cmd->add_option("--algebra", algebra_path);
  betti_cmd->add_option("--diagonal", diagonal, "Diagonal family of dimension 8n+4")->check(CLI::PositiveNumber);
  betti_cmd->callback(
      [&] { action = [&] { cmd_betti(run, family, lambda, s, spec_path, algebra_path, diagonal); }; });

  auto* classify_cmd = app.add_subcommand("classify8", "Family of an 8-dimensional algebra");
  classify_cmd->add_option("--spec", spec_path);
  classify_cmd->add_option("--matrix", matrix_path, "7x7 matrix A");
  classify_cmd->callback([&] { action = [&] { cmd_classify8(run, spec_path, matrix_path); }; });

  auto* lattice = app.add_subcommand("lattice", "Lattice witnesses and first homology");
  lattice->require_subcommand(1);
  auto* lv = lattice->add_subcommand("verify", "Certify exp(t0 A) ~ E");
  lv->add_option("--matrix", matrix_path, "Integer matrix E")->required();
  lv->add_option("--time", time, "2pi/m, hyperlog/m, a rational, or a JSON time")->required();
  lv->add_option("--A", a_path, "Matrix A")->required();
  lv->callback([&] { action = [&] { cmd_lattice_verify(run, matrix_path, time, a_path); }; });
  auto* lc = lattice->add_subcommand("census", "Lattices of the flat hyper-Kähler group in dimension 8");
  lc->callback([&] { action = [&] { cmd_lattice_census(run); }; });
  auto* la = lattice->add_subcommand("abelianization", "H1 of Z ⋉_E Z^d");
  la->add_option("--matrix", matrix_path)->required();
  la->callback([&] { action = [&] { cmd_lattice_abelianization(run, matrix_path); }; });
  auto* lf = lattice->add_subcommand("family", "Lattices of the nilpotent and diagonal examples");
  lf->add_option("--kind", kind)->check(CLI::IsMember({"g3", "diagonal"}))->required();
  lf->add_option("--k", k, "Parameter k (g3) or m (diagonal)")->check(CLI::PositiveNumber);
  lf->add_option("--n", n)->check(CLI::PositiveNumber);
  lf->callback([&] { action = [&] { cmd_lattice_family(run, kind, k, n); }; });

  auto* conn = app.add_subcommand("connection", "Obata, Levi-Civita or Bismut connection report");
  conn->add_option("--kind", kind)->check(CLI::IsMember({"obata", "lc", "bismut"}));
  conn->add_option("--spec", spec_path, "Spec or algebra JSON")->required();
  conn->add_option("--metric", metric_path, "Gram matrix (default: standard)");
  conn->add_option("--structure", structure, "Complex structure for bismut")->check(CLI::Range(1, 3));
  conn->callback([&] { action = [&] { cmd_connection(run, kind, spec_path, metric_path, structure); }; });

  auto* lift = app.add_subcommand("lift", "Iterated tangent algebras with the Obata connection");
  lift->add_option("--spec", spec_path, "Spec or algebra JSON")->required();
  lift->add_option("--iterations", iterations)->check(CLI::Range(1, 30));
  lift->callback([&] { action = [&] { cmd_lift(run, spec_path, iterations); }; });

  auto* census = app.add_subcommand("census", "Same as lattice census");
  census->callback([&] { action = [&] { cmd_lattice_census(run); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto* sub : app.get_subcommands()) {
    run.command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) run.command += " " + inner->get_name();
  }
  run.mix(run.command);

  int code = 0;
  try {
    action();
    code = run.ok ? 0 : 1;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) {
      std::cerr << "error: " << e.message() << '\n';
      return 2;
    }
    run.results["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.message()}};
    code = 1;
  }

  Json report = {{"command", run.command},
                 {"input_digest", hex64(run.digest)},
                 {"results", std::move(run.results)},
                 {"status", code == 0 ? "pass" : "fail"},
                 {"exit", code}};
  if (output == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    render(std::cout, report, "");
  }
  return code;
}
