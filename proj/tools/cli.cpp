#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wq/errors.hpp"
#include "wq/poisson.hpp"
#include "wq/render.hpp"
#include "wq/tseries.hpp"
#include "wq/verify.hpp"

namespace wq::cli {
namespace {

using nlohmann::json;

constexpr int kSchema = 1;

const std::vector<std::string> kCommands{"matrices", "lambda",  "verify-cartan", "bracket",
                                         "closure",  "dual",    "emit-t2",       "verify-all"};

json envelope(const AlgebraPreset& p, const std::string& command) {
  return {{"schema", kSchema}, {"algebra", p.id.name()}, {"command", command}};
}

json outcome_json(const VerificationOutcome& o) {
  return {{"check", o.check}, {"passed", o.passed}, {"failures", o.failures}, {"notes", o.notes}};
}

void outcome_text(std::ostream& os, const VerificationOutcome& o) {
  os << (o.passed ? "PASS " : "FAIL ") << o.check << "\n";
  for (const auto& f : o.failures) os << "  mismatch: " << f << "\n";
  for (const auto& n : o.notes) os << "  note: " << n << "\n";
}

int status(const VerificationOutcome& o) { return o.passed ? kOk : kMismatch; }

void warn_non_unit(std::ostream& err, const std::string& what, const SeriesExpr& s) {
  const auto odd = non_unit_terms(s);
  if (!odd.empty())
    err << "warning: " << what << " has " << odd.size() << " terms with coefficient != 1 (first: "
        << odd.front().second.get_str() << " " << to_text(odd.front().first) << ")\n";
}

int cmd_matrices(const RunConfig& c, const AlgebraPreset& p, std::ostream& os) {
  switch (c.format) {
    case Format::Json: {
      json j = envelope(p, c.command);
      j["M"] = to_json(p.m);
      j["D"] = to_json(p.d);
      j["Mtilde"] = to_json(p.expected_mtilde);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      os << "M(t) = " << to_latex(p.m) << "\n\n"
         << "D(t) = " << to_latex(p.d) << "\n\n"
         << "\\widetilde{M}(t) = " << to_latex(p.expected_mtilde) << "\n";
      break;
    case Format::Text:
      os << p.id.name() << "\nM(t) =\n"
         << to_text(p.m) << "D(t) =\n"
         << to_text(p.d) << "Mtilde(t) =\n"
         << to_text(p.expected_mtilde);
      break;
  }
  return kOk;
}

int cmd_verify_cartan(const RunConfig& c, const AlgebraPreset& p, std::ostream& os) {
  const auto outcome = verify_cartan(p);
  const FieldMatrix computed = p.d * inverse(p.m) * p.d;
  switch (c.format) {
    case Format::Json: {
      json j = envelope(p, c.command);
      j["outcome"] = outcome_json(outcome);
      j["computedMtilde"] = to_json(computed);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      os << "\\widetilde{M}(t) = D(t)M(t)^{-1}D(t) = " << to_latex(computed) << "\n";
      break;
    case Format::Text:
      outcome_text(os, outcome);
      os << "D(t) M(t)^-1 D(t) =\n" << to_text(computed);
      break;
  }
  return status(outcome);
}

int cmd_lambda(const RunConfig& c, const AlgebraPreset& p, std::ostream& os) {
  const SeriesExpr t1 = build_t1(p);
  switch (c.format) {
    case Format::Json: {
      json j = envelope(p, c.command);
      j["lambdas"] = json::array();
      for (const auto& l : p.lambdas) j["lambdas"].push_back(to_json(l));
      j["T1"] = to_json(t1);
      if (p.t2_definition) j["T2"] = to_json(*p.t2_definition);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      os << "\\begin{align*}\n";
      for (std::size_t i = 0; i < p.lambdas.size(); ++i)
        os << "\\Lambda_{" << i + 1 << "}(z) = & " << to_latex(p.lambdas[i])
           << (i + 1 < p.lambdas.size() ? ", \\\\\n" : ".\n");
      os << "\\end{align*}\n";
      break;
    case Format::Text:
      for (std::size_t i = 0; i < p.lambdas.size(); ++i)
        os << "Lambda_" << i + 1 << "(z) = " << to_text(p.lambdas[i]) << "\n";
      os << "T1(z) has " << t1.size() << " terms\n";
      if (p.t2_definition) os << "T2(z) has " << p.t2_definition->size() << " terms\n";
      break;
  }
  return kOk;
}

int cmd_bracket(const RunConfig& c, const AlgebraPreset& p, std::ostream& os) {
  const auto [i, j] = *c.pair;
  const int count = static_cast<int>(p.lambdas.size());
  if (i < 1 || j < 1 || i > count || j > count)
    throw UsageError("Lambda indices must lie in 1.." + std::to_string(count));
  const auto sym = symbol(p.lambda(i), p.lambda(j), p);
  const auto dec = decompose(sym, p);
  std::string deltas;
  for (const auto& [a, coeff] : dec.deltas)
    deltas += (deltas.empty() ? "" : ", ") + std::to_string(a) + ": " + (coeff > 0 ? "+" : "") + coeff.get_str();
  switch (c.format) {
    case Format::Json: {
      json out = envelope(p, c.command);
      out["i"] = i;
      out["j"] = j;
      out["symbol"] = to_json(sym.value);
      out["baseCoeff"] = to_json(dec.base_coeff);
      out["deltas"] = json::array();
      for (const auto& [a, coeff] : dec.deltas) out["deltas"].push_back({{"shift", a}, {"coeff", to_json(coeff)}});
      os << out.dump(2) << "\n";
      break;
    }
    case Format::Latex: {
      os << "\\{\\Lambda_{" << i << "}(z), \\Lambda_{" << j << "}(w)\\} = ";
      if (dec.base_coeff != 0)
        os << (dec.base_coeff == 1 ? "" : dec.base_coeff.get_str() + " ") << "\\mathcal{M}_{11}\\left(\\frac{w}{z}\\right) "
           << "\\Lambda_{" << i << "}(z)\\Lambda_{" << j << "}(w)";
      for (const auto& [a, coeff] : dec.deltas)
        os << (coeff > 0 ? " + " : " - ") << (abs(coeff) == 1 ? "" : mpq_class(abs(coeff)).get_str() + " ")
           << delta_latex(a) << " \\Lambda_{" << i << "}(z)\\Lambda_{" << j << "}(w)";
      os << "\n";
      break;
    }
    case Format::Text:
      os << p.id.name() << " {Lambda_" << i << "(z), Lambda_" << j << "(w)}\n"
         << "symbol: " << to_text(sym.value) << "\n"
         << "decomposition: (" << dec.base_coeff.get_str() << ", {" << deltas << "})\n";
      for (const auto& [a, coeff] : dec.deltas) os << "  " << coeff.get_str() << " * " << delta_text(a) << "\n";
      break;
  }
  return kOk;
}

int cmd_closure(const RunConfig& c, const AlgebraPreset& p, std::ostream& os, std::ostream& err) {
  const auto res = verify_closure(p);
  const auto& r = res.report;
  if (p.id.kind == AlgebraKind::E6 && res.t2_shift) warn_non_unit(err, "derived E6 T2", res.t2);
  switch (c.format) {
    case Format::Json: {
      json j = envelope(p, c.command);
      j["baseCoeff"] = to_json(r.base_coeff);
      j["deltas"] = json::array();
      for (const auto& [a, series] : r.delta_terms) {
        json d{{"shift", a}, {"terms", series.size()}, {"series", to_json(series)}};
        if (auto it = r.labels.find(a); it != r.labels.end()) d["label"] = it->second;
        j["deltas"].push_back(std::move(d));
      }
      j["outcome"] = outcome_json(res.outcome);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Latex: {
      os << "\\{ T_1(z),T_1(w) \\} &= \\mathcal{M}_{11} \\left( \\frac{w}{z} \\right) T_1(z) T_1(w)";
      // Paired by magnitude, as the closure formulas are usually written.
      std::vector<int> order = r.support();
      std::stable_sort(order.begin(), order.end(), [](int x, int y) { return std::abs(x) < std::abs(y); });
      for (int a : order) {
        const SeriesExpr& series = r.delta_terms.at(a);
        auto it = r.labels.find(a);
        std::string label = it != r.labels.end() ? it->second : "(" + to_latex(series) + ")";
        const bool negative = !label.empty() && label.front() == '-';
        if (negative) label.erase(0, 1);
        os << "\n  " << (negative ? "- " : "+ ") << delta_latex(a);
        if (label != "1") os << " " << label;
      }
      os << ".\n";
      break;
    }
    case Format::Text: {
      os << "{T1(z), T1(w)} over " << p.id.name() << "\n"
         << "base: " << r.base_coeff.get_str() << " * M11(w/z) T1(z)T1(w)\n";
      for (const auto& [a, series] : r.delta_terms) {
        auto it = r.labels.find(a);
        os << "  shift " << a << ": " << delta_text(a) << " * "
           << (it != r.labels.end() ? it->second : "<" + std::to_string(series.size()) + " terms>") << "  ["
           << series.size() << " terms]\n";
      }
      outcome_text(os, res.outcome);
      break;
    }
  }
  return status(res.outcome);
}

int cmd_dual(const RunConfig& c, const AlgebraPreset& p, std::ostream& os) {
  const auto outcome = verify_duality(p);
  const SeriesExpr dual = dual_transform(build_t1(p));
  switch (c.format) {
    case Format::Json: {
      json j = envelope(p, c.command);
      j["dualT1"] = to_json(dual);
      if (p.id.kind == AlgebraKind::E6) j["T5"] = to_json(build_t5_e6(p));
      j["outcome"] = outcome_json(outcome);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      os << to_latex(dual) << "\n";
      break;
    case Format::Text:
      os << "dual_transform(T1) = " << to_text(dual) << "\n";
      outcome_text(os, outcome);
      break;
  }
  return status(outcome);
}

int cmd_emit_t2(const RunConfig& c, const AlgebraPreset& p, std::ostream& os, std::ostream& err) {
  const bool derived = p.id.kind == AlgebraKind::E6;
  const SeriesExpr t2 = derived ? extract_t2_e6(p) : build_t2(p);
  mpq_class weight = 0;
  for (const auto& [m, coeff] : t2.terms()) weight += coeff;
  if (derived) warn_non_unit(err, "derived E6 T2", t2);
  switch (c.format) {
    case Format::Json: {
      json j = envelope(p, c.command);
      j["derived"] = derived;
      j["terms"] = t2.size();
      j["weight"] = to_json(weight);
      j["T2"] = to_json(t2);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      os << "T_2(z) = " << to_latex(t2) << "\n";
      break;
    case Format::Text:
      os << "T2(z) for " << p.id.name() << (derived ? " (extracted from {T1, T1})" : "") << ": " << t2.size()
         << " distinct terms, total weight " << weight.get_str() << "\n";
      for (const auto& [m, coeff] : t2.terms())
        os << "  " << (coeff == 1 ? "" : coeff.get_str() + " ") << to_text(m) << "\n";
      break;
  }
  return kOk;
}

int report_outcomes(const RunConfig& c, const std::vector<std::pair<std::string, std::vector<VerificationOutcome>>>& all,
                    std::ostream& os) {
  bool ok = true;
  for (const auto& [name, outcomes] : all)
    for (const auto& o : outcomes) ok = ok && o.passed;
  if (c.format == Format::Json) {
    json j{{"schema", kSchema}, {"command", c.command}, {"passed", ok}, {"algebras", json::array()}};
    for (const auto& [name, outcomes] : all) {
      json a{{"algebra", name}, {"outcomes", json::array()}};
      for (const auto& o : outcomes) a["outcomes"].push_back(outcome_json(o));
      j["algebras"].push_back(std::move(a));
    }
    os << j.dump(2) << "\n";
  } else {
    for (const auto& [name, outcomes] : all)
      for (const auto& o : outcomes) outcome_text(os, o);
    os << (ok ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << "\n";
  }
  return ok ? kOk : kMismatch;
}

int dispatch(const RunConfig& c, const AlgebraPreset& p, std::ostream& os, std::ostream& err) {
  if (c.command == "matrices") return cmd_matrices(c, p, os);
  if (c.command == "verify-cartan") return cmd_verify_cartan(c, p, os);
  if (c.command == "lambda") return cmd_lambda(c, p, os);
  if (c.command == "bracket") return cmd_bracket(c, p, os);
  if (c.command == "closure") return cmd_closure(c, p, os, err);
  if (c.command == "dual") return cmd_dual(c, p, os);
  if (c.command == "emit-t2") return cmd_emit_t2(c, p, os, err);
  if (c.command == "verify-all") return report_outcomes(c, {{p.id.name(), verify_all(p)}}, os);
  throw UsageError("unknown command '" + c.command + "'");
}

// Buffers the report so --out receives exactly what stdout would.
int with_sink(const RunConfig& c, std::ostream& out, std::ostream& err, const std::function<int(std::ostream&)>& body) {
  try {
    std::ostringstream buffer;
    const int code = body(buffer);
    if (c.output_path) {
      std::ofstream file(*c.output_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << *c.output_path << " for writing\n";
        return kUsage;
      }
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const NoExplicitDefinition& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace

void validate(const RunConfig& c) {
  if (std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end())
    throw UsageError("unknown command '" + c.command + "'");
  if (c.algebra == "all") {
    if (c.command != "verify-all") throw UsageError("--algebra all is only valid for verify-all");
    if (c.n) throw UsageError("--n is not used with --algebra all");
  } else {
    const AlgebraKind kind = [&] {
      try {
        return parse_kind(c.algebra);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    if (kind == AlgebraKind::Dn && !c.n) throw UsageError("--n is required for --algebra dn");
    if (kind != AlgebraKind::Dn && c.n) throw UsageError("--n is only valid for --algebra dn");
    if (c.n && *c.n < 4) throw UsageError("--n must be at least 4");
  }
  if ((c.command == "bracket") != c.pair.has_value())
    throw UsageError(c.command == "bracket" ? "bracket requires --i and --j" : "--i/--j are only valid for bracket");
}

int run_with_preset(const RunConfig& config, const AlgebraPreset& preset, std::ostream& out, std::ostream& err) {
  return with_sink(config, out, err, [&](std::ostream& os) {
    validate(config);
    return dispatch(config, preset, os, err);
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return with_sink(config, out, err, [&](std::ostream& os) {
    validate(config);
    if (config.algebra == "all") {
      std::vector<std::pair<std::string, std::vector<VerificationOutcome>>> all;
      std::vector<AlgebraPreset> presets;
      for (int n = 4; n <= 8; ++n) presets.push_back(build_preset(AlgebraKind::Dn, n));
      presets.push_back(build_preset(AlgebraKind::E6));
      presets.push_back(build_preset(AlgebraKind::G2));
      for (const auto& p : presets) all.emplace_back(p.id.name(), verify_all(p));
      return report_outcomes(config, all, os);
    }
    return dispatch(config, build_preset(config.algebra, config.n), os, err);
  });
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for Poisson brackets of deformed W-algebras of types D_n, E6, G2"};
  RunConfig config;
  std::string format = "text";
  std::optional<int> i;
  std::optional<int> j;
  app.add_option("command", config.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("--algebra", config.algebra, "dn, e6 or g2 (verify-all also accepts all)")->required();
  app.add_option("--n", config.n, "Rank for --algebra dn (n >= 4)");
  app.add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--i", i, "First Lambda index (bracket)");
  app.add_option("--j", j, "Second Lambda index (bracket)");
  app.add_option("--out", config.output_path, "Write the report to FILE instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  config.format = format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text;
  if (i || j) {
    if (!i || !j) {
      err << "usage error: --i and --j must be given together\n";
      return kUsage;
    }
    config.pair = std::make_pair(*i, *j);
  }
  return run(config, out, err);
}

}  // namespace wq::cli
