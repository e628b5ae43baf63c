#include "gtrim/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gtrim/report.hpp"

namespace gtrim {

namespace {

struct Options {
  std::uint64_t characteristic = kDefaultCharacteristic;
  std::string order = "grevlex";
  std::string format = "json";
  std::string out_path;
  bool char_given = false;
  bool order_given = false;

  int m = 0;
  std::string trim;
  std::string ideal_path;
  std::string range;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidArgument("bad m range '" + text + "', expected A..B");
    }
    return std::stoi(s);
  };
  if (dots == std::string::npos) {
    const int m = to_int(text);
    return {m, m};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw InvalidArgument("empty m range '" + text + "'");
  return {lo, hi};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <CoefficientField K>
std::string cmd_gen(const Options& o, FieldSpec field, MonomialOrder order) {
  if (o.m < 1) throw InvalidArgument("--m must be >= 1, got " + std::to_string(o.m));
  const auto fam = build_family<K>(o.m, field, order);
  Json j = family_json(fam, field, order);
  std::vector<Polynomial<K>> gens = fam.canonical_gens;
  if (!o.trim.empty()) {
    const TrimChoice choice = TrimChoice::parse(o.m, o.trim);
    const Ideal<K> a = trim_gm<K>(choice, field, order);
    gens = a.generators();
    j["generators"] = polys_json(gens);
    Json t;
    t["selector"] = choice.token();
    t["g"] = trimmed_generator<K>(choice, field, order).to_string();
    j["trim"] = std::move(t);
  }
  if (o.format == "json") return dump(j);
  std::ostringstream s;
  if (o.format == "csv") {
    s << "index,generator\n";
    for (std::size_t i = 0; i < gens.size(); ++i) s << i << ",\"" << gens[i].to_string() << "\"\n";
  } else {
    s << "m = " << o.m << "\nd = " << fam.d.to_string() << "\n";
    for (const auto& g : gens) s << g.to_string() << "\n";
  }
  return s.str();
}

template <CoefficientField K>
std::string render_classification(const Options& o, const Ideal<K>& ideal) {
  const HomologyAlgebra<K> h(ideal);
  const TorClass cls = classify(h);
  const HilbertData hilbert = hilbert_function(ideal);
  if (o.format == "json") return dump(classification_json(cls, hilbert));
  if (o.format == "text") return classification_text(cls, hilbert);
  std::ostringstream s;
  s << "mu,type,r0,r1,r2,r3,p,q,r,class\n"
    << cls.inv.mu << "," << cls.inv.type_rank << "," << cls.inv.ranks[0] << "," << cls.inv.ranks[1] << ","
    << cls.inv.ranks[2] << "," << cls.inv.ranks[3] << "," << cls.inv.p << "," << cls.inv.q << ","
    << cls.inv.r << ",\"" << cls.label() << "\"\n";
  return s.str();
}

template <CoefficientField K>
std::string cmd_classify_family(const Options& o, FieldSpec field, MonomialOrder order) {
  if (o.m < 1) throw InvalidArgument("--m must be >= 1, got " + std::to_string(o.m));
  if (o.trim.empty()) return render_classification(o, gorenstein_ideal<K>(o.m, field, order));
  return render_classification(o, trim_gm<K>(TrimChoice::parse(o.m, o.trim), field, order));
}

template <CoefficientField K>
std::string cmd_table(const Options& o, FieldSpec field, MonomialOrder order) {
  const auto [lo, hi] = parse_range(o.range);
  if (lo < 2) throw InvalidArgument("table needs m >= 2 (g_1 is not contained in n^2)");
  std::vector<TableRow> rows;
  for (int m = lo; m <= hi; ++m) {
    for (const TrimChoice& c : TrimChoice::all(m)) {
      const HomologyAlgebra<K> h(trim_gm<K>(c, field, order));
      rows.push_back(TableRow{m, c.token(), trimmed_generator<K>(c, field, order).to_string(), classify(h)});
    }
  }
  if (o.format == "json") return dump(table_json(rows));
  if (o.format == "csv") return table_csv(rows);
  return table_text(rows);
}

template <CoefficientField K>
std::string cmd_hilbert(const Options& o, FieldSpec field, MonomialOrder order) {
  if (o.m < 2) throw InvalidArgument("hilbert needs m >= 2, got " + std::to_string(o.m));
  const HilbertData computed = hilbert_function(gorenstein_ideal<K>(o.m, field, order));
  const HilbertData formula = gorenstein_hilbert_formula(o.m);
  if (o.format == "json") {
    Json j;
    j["m"] = o.m;
    j["hilbert"] = hilbert_json(computed);
    j["closed_form"] = hilbert_json(formula);
    j["total"] = computed.total();
    j["agrees"] = computed == formula;
    return dump(j);
  }
  std::ostringstream s;
  if (o.format == "csv") {
    s << "degree,dim,closed_form\n";
    for (std::size_t d = 0; d < computed.coefficients.size(); ++d) {
      s << d << "," << computed.coefficients[d] << ","
        << (d < formula.coefficients.size() ? formula.coefficients[d] : 0) << "\n";
    }
  } else {
    for (std::size_t d = 0; d < computed.coefficients.size(); ++d) s << (d ? " " : "") << computed.coefficients[d];
    s << "\n";
  }
  return s.str();
}

template <CoefficientField K>
using Command = std::string (*)(const Options&, FieldSpec, MonomialOrder);

std::string dispatch(const Options& o, FieldSpec field, MonomialOrder order,
                     Command<Zp> zp, Command<Rational> q) {
  return field.is_rational() ? q(o, field, order) : zp(o, field, order);
}

template <CoefficientField K>
std::string classify_ideal_file(const Options& o, const IdealDocument& doc, FieldSpec field,
                                MonomialOrder order) {
  return render_classification(o, build_ideal<K>(doc, field, order));
}

std::string run_classify(const Options& o, FieldSpec field, MonomialOrder order) {
  if (o.ideal_path.empty()) {
    if (o.m == 0) throw InvalidArgument("classify needs --ideal FILE or --m M [--trim SEL]");
    return dispatch(o, field, order, cmd_classify_family<Zp>, cmd_classify_family<Rational>);
  }
  const IdealDocument doc = parse_ideal_document(read_file(o.ideal_path));
  if (doc.field) {
    if (o.char_given && !(*doc.field == field)) {
      throw InvalidArgument("--char disagrees with the field of '" + o.ideal_path + "'");
    }
    field = *doc.field;
  }
  if (doc.order) {
    if (o.order_given && *doc.order != order) {
      throw InvalidArgument("--order disagrees with the order of '" + o.ideal_path + "'");
    }
    order = *doc.order;
  }
  return field.is_rational() ? classify_ideal_file<Rational>(o, doc, field, order)
                             : classify_ideal_file<Zp>(o, doc, field, order);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Trimmed Pfaffian Gorenstein ideals and their Koszul homology algebras", "gtrim"};
  app.require_subcommand(1);
  auto* char_opt = app.add_option("--char", o.characteristic, "Field characteristic (0 = QQ)")
                       ->capture_default_str();
  auto* order_opt = app.add_option("--order", o.order, "Monomial order")
                        ->check(CLI::IsMember({"grevlex", "grlex", "lex"}))
                        ->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", o.out_path, "Write output to this file");

  auto* gen = app.add_subcommand("gen", "Matrices, d_m, Pfaffians and generators of g_m");
  gen->add_option("--m", o.m, "Family index m >= 1")->required();
  gen->add_option("--trim", o.trim, "Trim selector: x0, y0, d, xI, yI");

  auto* cls = app.add_subcommand("classify", "Tor-algebra class of Q/a");
  auto* ideal_opt = cls->add_option("--ideal", o.ideal_path, "Ideal JSON file");
  auto* cls_m = cls->add_option("--m", o.m, "Family index m");
  cls->add_option("--trim", o.trim, "Trim selector: x0, y0, d, xI, yI")->needs(cls_m);
  ideal_opt->excludes(cls_m);

  auto* table = app.add_subcommand("table", "Classes of all trims of g_m for a range of m");
  table->add_option("--m", o.range, "Range A..B")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of Q/g_m");
  hilbert->add_option("--m", o.m, "Family index m >= 2")->required();

  for (auto* sub : {gen, cls, table, hilbert}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.char_given = char_opt->count() > 0;
  o.order_given = order_opt->count() > 0;

  try {
    const FieldSpec field = FieldSpec::from_characteristic(o.characteristic);
    const MonomialOrder order = parse_order(o.order);
    std::string text;
    if (gen->parsed()) {
      text = dispatch(o, field, order, cmd_gen<Zp>, cmd_gen<Rational>);
    } else if (cls->parsed()) {
      text = run_classify(o, field, order);
    } else if (table->parsed()) {
      text = dispatch(o, field, order, cmd_table<Zp>, cmd_table<Rational>);
    } else {
      text = dispatch(o, field, order, cmd_hilbert<Zp>, cmd_hilbert<Rational>);
    }
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path);
      if (!file) throw InvalidArgument("cannot write '" + o.out_path + "'");
      file << text;
    }
    return kExitOk;
  } catch (const PreconditionError& e) {
    err << "gtrim: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InvalidArgument& e) {
    err << "gtrim: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gtrim
