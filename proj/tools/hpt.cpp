#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpt/errors.hpp"
#include "hpt/generator_table.hpp"
#include "hpt/homology_db.hpp"
#include "hpt/les_engine.hpp"
#include "hpt/pipeline.hpp"
#include "hpt/poly_text.hpp"
#include "hpt/ss_engine.hpp"

namespace {

using hpt::Count;
using hpt::FamilyPoincare;
using hpt::Poincare;
using Json = nlohmann::ordered_json;

constexpr int kExitMismatch = 1;
constexpr int kExitAmbiguous = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DbOptions {
  std::string file;
  bool allow_shadow = false;
};

// A polynomial given inline, in a file, or by record name.
struct PolySource {
  std::string label;
  std::string inline_text;
  std::string file;
  std::string name;

  void bind(CLI::App* app, const std::string& flag, const std::string& what, bool positional = false) {
    label = flag;
    if (positional)
      app->add_option(flag, inline_text, what + " (inline polynomial)");
    else
      app->add_option("--" + flag, inline_text, what + " (inline polynomial)");
    app->add_option("--" + flag + "-file", file, what + " (file)");
    app->add_option("--" + flag + "-name", name, what + " (database record)");
  }

  bool given() const { return !inline_text.empty() || !file.empty() || !name.empty(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hpt::DataError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

hpt::Database open_db(const DbOptions& o, std::vector<std::string>* warnings) {
  hpt::Database db = hpt::Database::with_defaults();
  if (!o.file.empty()) db.load_file(o.file, o.allow_shadow, warnings);
  return db;
}

void bind_db(CLI::App* app, DbOptions& o) {
  app->add_option("--db", o.file, "record file layered over the embedded database");
  app->add_flag("--allow-shadow", o.allow_shadow, "let records in --db replace embedded ones");
}

std::string source_text(const PolySource& s, const hpt::Database& db) {
  int count = !s.inline_text.empty() + !s.file.empty() + !s.name.empty();
  if (count == 0) throw UsageError("missing " + s.label + " polynomial");
  if (count > 1) throw UsageError(s.label + " given more than once (inline, file and record name are exclusive)");
  if (!s.file.empty()) return read_file(s.file);
  if (!s.name.empty()) return db.get(s.name).value_text();
  return s.inline_text;
}

FamilyPoincare load_family(const PolySource& s, const hpt::Database& db) {
  if (!s.name.empty() && s.inline_text.empty() && s.file.empty()) return db.get(s.name).family();
  return hpt::parse_family(source_text(s, db));
}

Poincare load_plain(const PolySource& s, const hpt::Database& db, std::optional<int> rank) {
  FamilyPoincare f = load_family(s, db);
  if (auto p = f.as_poincare()) return *p;
  if (!rank) throw hpt::DataError(s.label + " carries [N+c] strings; pass --N to evaluate them");
  return hpt::evaluate(f, *rank);
}

struct Output {
  bool json = false;
  Json doc = Json::object();
  std::vector<std::string> lines;

  void field(const std::string& key, const std::string& value) {
    doc[key] = value;
    lines.push_back(key + ": " + value);
  }
  void line(const std::string& l) { lines.push_back(l); }
  void emit() const {
    if (json)
      std::cout << doc.dump(2) << "\n";
    else
      for (const auto& l : lines) std::cout << l << "\n";
  }
};

hpt::Grading parse_grading(const std::string& g, std::optional<int> rank) {
  if (g == "homfly") return hpt::Grading::homfly();
  if (g == "t") return hpt::Grading::t_only();
  if (g == "sl") {
    if (!rank) throw UsageError("grading sl needs --N");
    return hpt::Grading::sl(*rank);
  }
  throw UsageError("unknown grading '" + g + "' (homfly, sl, t)");
}

hpt::DifferentialFamily parse_differential(const std::string& spec, std::optional<int> rank) {
  if (spec == "d(-1)" || spec == "-1") return hpt::DifferentialFamily::minus_one();
  if (spec == "d(N)" || spec == "N") {
    if (!rank) throw UsageError("family d(N) needs --N");
    return hpt::DifferentialFamily::sl(*rank);
  }
  std::string body = spec;
  if (body.size() > 3 && body.rfind("d(", 0) == 0 && body.back() == ')') body = body.substr(2, body.size() - 3);
  try {
    std::size_t used = 0;
    int n = std::stoi(body, &used);
    if (used == body.size() && n >= 1) return hpt::DifferentialFamily::sl(n);
  } catch (const std::exception&) {
  }
  throw UsageError("unknown differential family '" + spec + "' (d(N), d(<n>), d(-1))");
}

int exit_for(hpt::StageStatus s) {
  switch (s) {
    case hpt::StageStatus::Pass:
      return 0;
    case hpt::StageStatus::Ambiguous:
      return kExitAmbiguous;
    case hpt::StageStatus::Fail:
      return kExitMismatch;
  }
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HOMFLY-PT homology toolkit: graded polynomials, exact sequences, spectral sequences"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output")->configurable(false);

  // calc
  auto* calc = app.add_subcommand("calc", "evaluate and transform a polynomial");
  PolySource calc_in, calc_add, calc_mul;
  DbOptions calc_db;
  bool calc_psi = false, calc_euler = false, calc_dim = false;
  std::optional<int> calc_eval, calc_sl;
  calc_in.bind(calc, "poly", "input", true);
  calc_add.bind(calc, "add", "summand");
  calc_mul.bind(calc, "mul", "factor");
  calc->add_flag("--psi", calc_psi, "apply psi(a,q,t) = (1/a,1/q,1/t)");
  calc->add_option("--eval", calc_eval, "evaluate [N+c] strings at this N");
  calc->add_option("--sl", calc_sl, "sl(N) specialization a -> q^N (evaluates strings first)");
  calc->add_flag("--euler", calc_euler, "Euler characteristic t -> -1");
  calc->add_flag("--dim", calc_dim, "total dimension");
  bind_db(calc, calc_db);

  // euler
  auto* euler = app.add_subcommand("euler", "Euler characteristic of a homology");
  PolySource euler_in;
  DbOptions euler_db;
  euler_in.bind(euler, "poly", "homology", true);
  euler->add_option("--name", euler_in.name, "database record");
  bind_db(euler, euler_db);

  // sl
  auto* sl = app.add_subcommand("sl", "sl(N) specialization a -> q^N");
  PolySource sl_in;
  DbOptions sl_db;
  int sl_n = 2;
  sl_in.bind(sl, "poly", "homology", true);
  sl->add_option("--name", sl_in.name, "database record");
  sl->add_option("--N", sl_n, "rank")->required();
  bind_db(sl, sl_db);

  // db
  auto* dbc = app.add_subcommand("db", "inspect the homology database");
  DbOptions db_db;
  std::string db_show;
  bool db_list = false;
  dbc->add_flag("--list", db_list, "list record names (default)");
  dbc->add_option("--show", db_show, "print one record");
  bind_db(dbc, db_db);

  // les-solve
  auto* les = app.add_subcommand("les-solve", "solve the unknown first node of an exact triangle");
  std::string les_spec = "LES";
  PolySource les_b, les_c;
  DbOptions les_db;
  std::optional<int> les_n;
  les->add_option("--spec", les_spec, "TOTRED, LES or KTOTRED");
  les_b.bind(les, "b", "second node");
  les_c.bind(les, "c", "third node");
  les->add_option("B_FILE", les_b.file, "second node (file)");
  les->add_option("C_FILE", les_c.file, "third node (file)");
  les->add_option("--N", les_n, "compare degrees in sl(N) grading");
  bind_db(les, les_db);

  // ss-check
  auto* ss = app.add_subcommand("ss-check", "can a spectral sequence collapse the input onto the target");
  std::string ss_family = "d(N)", ss_grading;
  std::optional<int> ss_n, ss_max_pages;
  int ss_first_page = 1;
  PolySource ss_in, ss_target;
  DbOptions ss_db;
  ss->add_option("--family", ss_family, "d(N), d(<n>) or d(-1)");
  ss->add_option("--N", ss_n, "rank for d(N); also evaluates [N+c] strings");
  ss->add_option("--max-pages", ss_max_pages, "last page allowed to cancel");
  ss->add_option("--first-page", ss_first_page, "first page allowed to cancel");
  ss->add_option("--grading", ss_grading, "target grading: homfly, sl or t (default sl for d(N), t for d(-1))");
  ss_in.bind(ss, "input", "E_1 page");
  ss_target.bind(ss, "target", "expected limit");
  ss->add_option("INPUT_FILE", ss_in.file, "E_1 page (file)");
  ss->add_option("TARGET_FILE", ss_target.file, "expected limit (file)");
  bind_db(ss, ss_db);

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "replay the KT / Conway computation stage by stage");
  std::string vp_knot = "both", vp_report;
  bool vp_strict = false, vp_no_kh = false;
  DbOptions vp_db;
  vp->add_option("--knot", vp_knot, "kt, conway or both")->check(CLI::IsMember({"kt", "conway", "both"}));
  vp->add_option("--report", vp_report, "also write the report to this file");
  vp->add_flag("--strict", vp_strict, "also assert the d(-1) readings");
  vp->add_flag("--no-khovanov-filter", vp_no_kh, "drop the Khovanov constraint from the promotion search");
  bind_db(vp, vp_db);

  for (auto* sub : {calc, euler, sl, dbc, les, ss, vp}) sub->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Output out;
  out.json = json;
  std::vector<std::string> warnings;
  try {
    if (calc->parsed()) {
      hpt::Database db = open_db(calc_db, &warnings);
      const std::string text = source_text(calc_in, db);
      std::optional<hpt::LaurentPoly> laurent;
      FamilyPoincare f;
      try {
        f = load_family(calc_in, db);
      } catch (const hpt::SyntaxError&) {
        // Signed input is a HOMFLY-PT polynomial; report the original error
        // if it is not one either.
        auto original = std::current_exception();
        try {
          laurent = hpt::parse_laurent(text);
        } catch (const hpt::SyntaxError&) {
          std::rethrow_exception(original);
        }
      }
      if (laurent) {
        if (calc_psi || calc_eval || calc_sl || calc_euler || calc_dim)
          throw UsageError("signed polynomials support only --add and --mul");
        if (calc_add.given()) *laurent = *laurent + hpt::parse_laurent(source_text(calc_add, db));
        if (calc_mul.given()) *laurent = *laurent * hpt::parse_laurent(source_text(calc_mul, db));
        out.field("result", hpt::format(*laurent));
      } else {
        if (calc_psi) f = hpt::psi_dual(f);
        if (calc_add.given()) f = f + load_family(calc_add, db);
        if (calc_mul.given()) f = hpt::mul(f, load_family(calc_mul, db));
        std::optional<int> rank = calc_sl ? calc_sl : calc_eval;
        if (calc_eval && calc_sl && *calc_eval != *calc_sl) throw UsageError("--eval and --sl disagree on N");
        Poincare p;
        bool plain = false;
        if (rank) {
          p = hpt::evaluate(f, *rank);
          if (calc_sl) p = hpt::sl_specialize(p, *calc_sl);
          plain = true;
        } else if (auto q = f.as_poincare()) {
          p = *q;
          plain = true;
        }
        if (calc_euler) {
          if (!plain) throw hpt::DataError("Euler characteristic of a family needs --eval or --sl");
          out.field("result", hpt::format(hpt::euler_specialize(p)));
        } else {
          out.field("result", plain && rank ? hpt::format(p) : hpt::format(hpt::canonical(f)));
        }
        if (calc_dim) {
          if (!plain) throw hpt::DataError("dimension of a family needs --eval or --sl");
          out.field("dim", hpt::total_dim(p).str());
        }
      }
    } else if (euler->parsed()) {
      hpt::Database db = open_db(euler_db, &warnings);
      if (!euler_in.name.empty() && db.get(euler_in.name).kind == hpt::RecordKind::HomflyPolynomial &&
          euler_in.inline_text.empty() && euler_in.file.empty()) {
        out.field("result", hpt::format(db.get(euler_in.name).laurent()));
      } else {
        out.field("result", hpt::format(hpt::euler_specialize(load_plain(euler_in, db, std::nullopt))));
      }
    } else if (sl->parsed()) {
      hpt::Database db = open_db(sl_db, &warnings);
      if (sl_n < 1) throw UsageError("--N must be positive");
      out.field("result", hpt::format(hpt::sl_specialize(load_plain(sl_in, db, sl_n), sl_n)));
    } else if (dbc->parsed()) {
      hpt::Database db = open_db(db_db, &warnings);
      if (!db_show.empty()) {
        const auto& r = db.get(db_show);
        out.doc["name"] = r.name;
        out.doc["kind"] = std::string(hpt::kind_name(r.kind));
        out.doc["provenance"] = r.provenance;
        out.doc["value"] = r.value_text();
        out.line(hpt::format_record(r));
      } else {
        Json names = Json::array();
        for (const auto& n : db.names()) {
          names.push_back(n);
          out.line(n + "  (" + std::string(hpt::kind_name(db.get(n).kind)) + ")");
        }
        out.doc["records"] = names;
      }
    } else if (les->parsed()) {
      hpt::Database db = open_db(les_db, &warnings);
      auto spec = hpt::LesSpec::builtin(les_spec);
      if (!spec) throw UsageError("unknown sequence '" + les_spec + "' (TOTRED, LES, KTOTRED)");
      const Poincare b = load_plain(les_b, db, les_n), c = load_plain(les_c, db, les_n);
      const hpt::Grading gr = les_n ? hpt::Grading::sl(*les_n) : hpt::Grading::homfly();
      hpt::CornerSolution sol = hpt::solve_corner(*spec, b, c, gr);
      out.field("spec", spec->name);
      out.field("grading", gr.name());
      out.field("guaranteed", hpt::format(sol.guaranteed));
      Json pairs = Json::array();
      for (const auto& p : sol.pairs) {
        std::string l = hpt::format(Poincare::monomial(sol.source_unit(p))) + " + " +
                        hpt::format(Poincare::monomial(sol.target_unit(p))) + " (x" + p.capacity.str() + ")";
        out.line("ambiguous: " + l);
        pairs.push_back(Json{{"source", hpt::format(Poincare::monomial(sol.source_unit(p)))},
                             {"target", hpt::format(Poincare::monomial(sol.target_unit(p)))},
                             {"capacity", p.capacity.str()}});
      }
      out.doc["ambiguous"] = pairs;
    } else if (ss->parsed()) {
      hpt::Database db = open_db(ss_db, &warnings);
      const hpt::DifferentialFamily fam = parse_differential(ss_family, ss_n);
      hpt::CollapseOptions o;
      o.first_page = ss_first_page;
      o.last_page = ss_max_pages;
      if (ss_grading.empty())
        o.target_grading = fam.is_minus_one() ? hpt::Grading::t_only() : hpt::Grading::sl(fam.rank());
      else
        o.target_grading = parse_grading(ss_grading, fam.is_minus_one() ? ss_n : std::optional<int>(fam.rank()));
      const Poincare e1 = load_plain(ss_in, db, ss_n), target = load_plain(ss_target, db, ss_n);
      auto w = hpt::collapse_earliest(e1, target, fam, o);
      out.field("family", fam.name());
      out.field("feasible", w ? "yes" : "no");
      if (w) {
        Json pages = Json::object();
        for (const auto& [k, p] : w->pages) {
          out.line("page " + std::to_string(k) + ": " + p.total_dim().str() + " pairs, lower ends " + hpt::format(p));
          pages[std::to_string(k)] = hpt::format(p);
        }
        out.doc["pages"] = pages;
        out.field("survivors", hpt::format(w->survivors));
      }
      for (const auto& wline : warnings) std::cerr << "warning: " << wline << "\n";
      out.emit();
      return w ? 0 : kExitMismatch;
    } else if (vp->parsed()) {
      hpt::Database db = open_db(vp_db, &warnings);
      hpt::PipelineOptions po;
      po.strict = vp_strict;
      po.khovanov_filter = !vp_no_kh;
      hpt::Pipeline pipe(db, po);
      hpt::Report rep = vp_knot == "kt" ? pipe.run_kt() : vp_knot == "conway" ? pipe.run_conway() : pipe.run_all();
      const std::string body = json ? rep.json() : rep.text();
      for (const auto& wline : warnings) std::cerr << "warning: " << wline << "\n";
      std::cout << body;
      if (!vp_report.empty()) {
        std::ofstream f(vp_report, std::ios::binary);
        if (!f) throw hpt::DataError("cannot write " + vp_report);
        f << body;
      }
      return exit_for(rep.overall());
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hpt::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const hpt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  for (const auto& wline : warnings) std::cerr << "warning: " << wline << "\n";
  out.emit();
  return 0;
}
