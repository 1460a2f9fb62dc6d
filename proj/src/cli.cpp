#include "wciforge/cli.hpp"

#include "wciforge/classify.hpp"
#include "wciforge/document.hpp"
#include "wciforge/enumerate.hpp"
#include "wciforge/geometry.hpp"
#include "wciforge/presentation.hpp"
#include "wciforge/series.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace wciforge {

namespace {

constexpr int kLabelWidth = 22;

std::string read_document_text(const std::vector<std::string>& tokens, std::istream& in) {
  if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "-")) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::string joined;
  for (const auto& t : tokens) {
    joined += joined.empty() ? t : " " + t;
  }
  return joined;
}

// Series coefficients as JSON: numbers while they fit 64 bits, decimal
// strings beyond that.
Json coefficients_json(const SeriesPrefix& coefficients) {
  Json out = Json::array();
  for (const auto& c : coefficients) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      out.push_back(static_cast<std::int64_t>(c));
    } else {
      out.push_back(c.str());
    }
  }
  return out;
}

std::string join_coefficients(const SeriesPrefix& coefficients, const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i > 0) {
      out += separator;
    }
    out += coefficients[i].str();
  }
  return out;
}

std::string join_values(const std::vector<std::int64_t>& values) {
  if (values.empty()) {
    return "(none)";
  }
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(values[i]);
  }
  return out;
}

void line(std::ostream& out, const std::string& label, const std::string& value) {
  out << std::left << std::setw(kLabelWidth) << label << value << '\n';
}

const char* boolean(bool value) { return value ? "true" : "false"; }

// ---- analyze ---------------------------------------------------------------

Json analyze_report(const PresentationDocument& doc) {
  const Presentation& p = doc.presentation;
  const auto inv = invariants(p);
  const Presentation canonical = canonical_form(p);
  const auto qs = quasi_smooth_details(p);
  const TriState smooth = smooth_general(p);
  const Verdict verdict = aut_verdict(p);

  if (!ratios_equal(poincare(p), poincare(canonical))) {
    throw ConsistencyError("canonical form changed the Poincare series of " + to_inline(p));
  }

  Json report;
  report["input"] = doc.source;
  report["presentation"] = to_json(p);
  report["invariants"] = {{"N", inv.ambient_dim},     {"k", inv.codim},
                          {"n", inv.dim},             {"i", inv.index},
                          {"canonical_degree", inv.canonical_degree},
                          {"kind", to_string(inv.kind)}};
  report["linear_cone_pairs"] = linear_cone_pairs(p);
  report["canonical_form"] = to_json(canonical);
  report["well_formed"] = {{"ambient", ambient_well_formed(p.weights())},
                           {"general", well_formed_general(p)}};
  Json strata = Json::array();
  for (const auto& s : stratum_reports(p)) {
    strata.push_back({{"prime", s.prime},
                      {"m_p", s.divisible_weights},
                      {"attainable_degrees", s.attainable_degrees},
                      {"general_dimension", s.general_dimension}});
  }
  report["strata"] = strata;
  report["avoids_singular_locus"] = avoids_singular_locus(p);
  report["quasi_smooth"] = {{"tier", to_string(qs.tier)}, {"value", to_string(qs.value)}};
  report["smooth_general"] = to_string(smooth);

  const bool fano_smooth = inv.index > 0 && smooth == TriState::True;
  report["fano_index"] = fano_smooth ? Json(fano_index(p)) : Json(nullptr);
  if (fano_smooth && inv.dim >= 2) {
    const auto cls = index_class(p);
    report["index_class"] = {{"value", to_string(cls.value)},
                             {"family", cls.family ? Json(to_string(*cls.family)) : Json(nullptr)}};
  } else {
    report["index_class"] = nullptr;
  }
  report["verdict"] = {{"outcome", to_string(verdict.outcome)},
                       {"branch", to_string(verdict.branch)}};
  return report;
}

void print_analyze_text(const Json& r, const Presentation& p, std::ostream& out) {
  const auto inv = invariants(p);
  line(out, "input", r["input"].dump());
  line(out, "presentation", to_inline(p));
  line(out, "dimension", std::to_string(inv.dim));
  line(out, "ambient dimension", std::to_string(inv.ambient_dim));
  line(out, "codimension", std::to_string(inv.codim));
  line(out, "index", std::to_string(inv.index));
  line(out, "canonical degree", std::to_string(inv.canonical_degree));
  line(out, "kind", to_string(inv.kind));
  line(out, "linear cone pairs", join_values(linear_cone_pairs(p)));
  line(out, "canonical form", to_inline(canonical_form(p)));
  line(out, "ambient well formed", boolean(r["well_formed"]["ambient"].get<bool>()));
  line(out, "well formed", boolean(r["well_formed"]["general"].get<bool>()));
  for (const auto& s : r["strata"]) {
    std::ostringstream value;
    value << "m=" << s["m_p"].get<int>() << " attainable=" << s["attainable_degrees"].get<int>()
          << " dim=" << s["general_dimension"].get<int>();
    line(out, "stratum p=" + std::to_string(s["prime"].get<std::int64_t>()), value.str());
  }
  line(out, "avoids Sing P", boolean(r["avoids_singular_locus"].get<bool>()));
  line(out, "quasi-smooth", r["quasi_smooth"]["value"].get<std::string>() + " (" +
                                r["quasi_smooth"]["tier"].get<std::string>() + ")");
  line(out, "smooth", r["smooth_general"].get<std::string>());
  line(out, "fano index",
       r["fano_index"].is_null() ? "-" : std::to_string(r["fano_index"].get<std::int64_t>()));
  if (r["index_class"].is_null()) {
    line(out, "index class", "-");
  } else {
    std::string value = r["index_class"]["value"].get<std::string>();
    if (!r["index_class"]["family"].is_null()) {
      value += " " + r["index_class"]["family"].get<std::string>();
    }
    line(out, "index class", value);
  }
  line(out, "verdict", r["verdict"]["outcome"].get<std::string>() + "/" +
                           r["verdict"]["branch"].get<std::string>());
}

// ---- enumerate / tables ----------------------------------------------------

Json presentations_json(const std::vector<Presentation>& list) {
  Json out = Json::array();
  for (const auto& p : list) {
    out.push_back(to_json(p));
  }
  return out;
}

Json caps_json(const SearchCaps& caps) {
  return {{"max_codim", caps.max_codim},
          {"max_degree", caps.max_degree},
          {"max_weight", caps.max_weight}};
}

Json comparison_json(const TableComparison& cmp) {
  Json out;
  out["pass"] = cmp.pass();
  out["found"] = presentations_json(cmp.found);
  out["missing"] = cmp.missing;
  out["unexpected"] = presentations_json(cmp.unexpected);
  out["undecided"] = presentations_json(cmp.undecided);
  return out;
}

void print_comparison(const TableComparison& cmp, std::ostream& out) {
  out << cmp.name << ": " << (cmp.pass() ? "PASS" : "FAIL") << " (" << cmp.found.size()
      << " found)\n";
  for (const auto& m : cmp.missing) {
    out << "  missing: " << m << '\n';
  }
  for (const auto& p : cmp.unexpected) {
    out << "  unexpected: " << to_inline(p) << '\n';
  }
  for (const auto& p : cmp.undecided) {
    out << "  undecided: " << to_inline(p) << '\n';
  }
}

void print_table(const char* title, const std::vector<TableRow>& table, std::ostream& out) {
  out << title << '\n';
  for (const auto& r : table) {
    out << "  " << r.label << "  " << to_inline(r.presentation) << '\n';
  }
}

struct CapFlags {
  int codim = 0;
  int degree = 0;
  int weight = 0;

  void attach(CLI::App& cmd) {
    cmd.add_option("--max-codim", codim, "Largest codimension searched")
        ->check(CLI::Range(1, 1000));
    cmd.add_option("--max-degree", degree, "Largest equation degree searched")
        ->check(CLI::Range(1, 1000));
    cmd.add_option("--max-weight", weight, "Largest weight searched")->check(CLI::Range(1, 1000));
  }

  SearchCaps resolve(const std::optional<std::string>& env) const {
    SearchCaps caps = env ? parse_caps(*env) : SearchCaps{};
    if (codim > 0) {
      caps.max_codim = codim;
    }
    if (degree > 0) {
      caps.max_degree = degree;
    }
    if (weight > 0) {
      caps.max_weight = weight;
    }
    return caps;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, const CliStreams& io) {
  CLI::App app{"Weighted complete intersection presentations: invariants, Poincare series, "
               "classification and automorphism verdicts"};
  app.name("wciforge");
  app.require_subcommand(1);

  bool json = false;
  std::vector<std::string> doc_tokens;
  std::vector<std::string> pair_tokens;
  std::int64_t order = -1;
  int dim = 0;
  std::int64_t index = 0;
  bool calabi_yau = false;
  bool reproduce = false;
  CapFlags caps_flags;

  auto* analyze = app.add_subcommand("analyze", "Report invariants, checks and verdict");
  analyze->add_flag("--json", json, "Emit JSON");
  analyze->add_option("document", doc_tokens, "JSON document or inline 'w=... d=...' (stdin if absent)");

  auto* hilbert = app.add_subcommand("hilbert", "Poincare series coefficients 0..M");
  hilbert->add_flag("--json", json, "Emit JSON");
  hilbert->add_option("--m", order, "Highest order M")->required()->check(CLI::Range(0, 1000000));
  hilbert->add_option("document", doc_tokens, "JSON document or inline form (stdin if absent)");

  auto* equiv = app.add_subcommand("equiv", "Compare two presentations");
  equiv->add_flag("--json", json, "Emit JSON");
  equiv->add_option("--m", order, "Length of the printed shared prefix (default 10)")
      ->check(CLI::Range(0, 1000000));
  equiv->add_option("documents", pair_tokens, "Two documents")->required()->expected(2);

  auto* enumerate = app.add_subcommand("enumerate", "List smooth cone-free families");
  enumerate->add_flag("--json", json, "Emit JSON");
  enumerate->add_option("--dim", dim, "Dimension n")->required()->check(CLI::Range(1, 64));
  auto* index_opt = enumerate->add_option("--index", index, "Index i = sum(a) - sum(d)");
  auto* cy_opt = enumerate->add_flag("--calabi-yau", calabi_yau, "Shorthand for --index 0");
  index_opt->excludes(cy_opt);
  caps_flags.attach(*enumerate);

  auto* tables = app.add_subcommand("tables", "Print or re-derive the dimension 1-2 tables");
  tables->add_flag("--json", json, "Emit JSON");
  tables->add_flag("--reproduce", reproduce, "Enumerate and compare against the listings");
  caps_flags.attach(*tables);

  std::vector<std::string> argv_storage{"wciforge"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) {
    argv.push_back(a.data());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    io.err << "wciforge: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (analyze->parsed()) {
      const auto doc = parse_document(read_document_text(doc_tokens, io.in));
      const Json report = analyze_report(doc);
      if (json) {
        io.out << report.dump() << '\n';
      } else {
        print_analyze_text(report, doc.presentation, io.out);
      }
      return kExitOk;
    }

    if (hilbert->parsed()) {
      const auto doc = parse_document(read_document_text(doc_tokens, io.in));
      const auto coefficients = expand(poincare(doc.presentation), order);
      if (json) {
        io.out << coefficients_json(coefficients).dump() << '\n';
      } else {
        io.out << join_coefficients(coefficients, "\n") << '\n';
      }
      return kExitOk;
    }

    if (equiv->parsed()) {
      const auto lhs = parse_document(pair_tokens[0]);
      const auto rhs = parse_document(pair_tokens[1]);
      const bool same = equivalent(lhs.presentation, rhs.presentation);
      if (same != ratios_equal(poincare(lhs.presentation), poincare(rhs.presentation))) {
        throw ConsistencyError("canonical forms and Poincare series disagree on equivalence");
      }
      const auto prefix_order = order < 0 ? 10 : order;
      const Presentation lc = canonical_form(lhs.presentation);
      const Presentation rc = canonical_form(rhs.presentation);
      if (json) {
        Json out;
        out["equivalent"] = same;
        out["canonical"] = Json::array({to_json(lc), to_json(rc)});
        out["poincare_prefix"] =
            same ? coefficients_json(expand(poincare(lc), prefix_order)) : Json(nullptr);
        io.out << out.dump() << '\n';
      } else {
        line(io.out, "canonical A", to_inline(lc));
        line(io.out, "canonical B", to_inline(rc));
        line(io.out, "equivalent", boolean(same));
        if (same) {
          line(io.out, "poincare prefix", join_coefficients(expand(poincare(lc), prefix_order), ","));
        }
      }
      return same ? kExitOk : kExitNegative;
    }

    if (enumerate->parsed()) {
      if (!calabi_yau && index_opt->count() == 0) {
        io.err << "wciforge: enumerate needs --index or --calabi-yau\n";
        return kExitInputError;
      }
      const std::int64_t target = calabi_yau ? 0 : index;
      const SearchCaps caps = caps_flags.resolve(io.caps_env);
      const auto result = enumerate_wcis(dim, target, caps);
      if (json) {
        Json out;
        out["dim"] = dim;
        out["index"] = target;
        out["caps"] = caps_json(caps);
        out["found"] = presentations_json(result.found);
        out["undecided"] = presentations_json(result.undecided);
        out["warnings"] = result.warnings;
        io.out << out.dump() << '\n';
      } else {
        for (const auto& p : result.found) {
          io.out << to_inline(p) << '\n';
        }
        if (!result.undecided.empty()) {
          io.out << "undecided:\n";
          for (const auto& p : result.undecided) {
            io.out << to_inline(p) << '\n';
          }
        }
        for (const auto& w : result.warnings) {
          io.err << "warning: " << w << '\n';
        }
      }
      return result.undecided.empty() ? kExitOk : kExitUndecided;
    }

    if (tables->parsed()) {
      if (!reproduce) {
        if (json) {
          Json out;
          for (const auto& [name, table] :
               {std::pair{"fano", &fano_table()}, std::pair{"calabi-yau", &calabi_yau_table()}}) {
            Json rows = Json::array();
            for (const auto& r : *table) {
              rows.push_back({{"row", r.label}, {"dim", r.dim}, {"presentation", to_json(r.presentation)}});
            }
            out[name] = rows;
          }
          io.out << out.dump() << '\n';
        } else {
          print_table("fano", fano_table(), io.out);
          print_table("calabi-yau", calabi_yau_table(), io.out);
        }
        return kExitOk;
      }
      const SearchCaps caps = caps_flags.resolve(io.caps_env);
      const auto report = reproduce_tables(caps);
      if (json) {
        Json out;
        out["pass"] = report.pass();
        out["caps"] = caps_json(caps);
        out["fano"] = comparison_json(report.fano);
        out["calabi_yau"] = comparison_json(report.calabi_yau);
        out["warnings"] = report.warnings;
        io.out << out.dump() << '\n';
      } else {
        io.out << "caps: codim " << caps.max_codim << ", degree " << caps.max_degree
               << ", weight " << caps.max_weight << '\n';
        print_comparison(report.fano, io.out);
        print_comparison(report.calabi_yau, io.out);
        io.out << (report.pass() ? "PASS" : "FAIL") << '\n';
        for (const auto& w : report.warnings) {
          io.err << "warning: " << w << '\n';
        }
      }
      return report.pass() ? kExitOk : kExitNegative;
    }
  } catch (const InputError& e) {
    io.err << "wciforge: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    io.err << "wciforge: internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInputError;
}

}  // namespace wciforge
