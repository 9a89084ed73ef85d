#include "gl/cli.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "gl/classify.hpp"
#include "gl/fixedpoint.hpp"
#include "gl/formula.hpp"
#include "gl/prover.hpp"
#include "gl/trace.hpp"

namespace gl::cli {

namespace {

using nlohmann::ordered_json;

ordered_json model_json(const KripkeModel& m) {
  ordered_json j;
  ordered_json worlds = ordered_json::array();
  for (std::size_t w = 0; w < m.world_count; ++w)
    worlds.push_back("w" + std::to_string(w));
  j["worlds"] = std::move(worlds);
  ordered_json rel = ordered_json::array();
  for (const auto& [a, b] : m.relation)
    rel.push_back({"w" + std::to_string(a), "w" + std::to_string(b)});
  j["relation"] = std::move(rel);
  ordered_json val = ordered_json::object();
  for (std::size_t w = 0; w < m.world_count; ++w)
    val["w" + std::to_string(w)] = m.valuation[w];
  j["valuation"] = std::move(val);
  j["root"] = "w" + std::to_string(m.root);
  return j;
}

ordered_json outcome_json(const ProofOutcome& o) {
  ordered_json j;
  j["verdict"] = o.provable() ? "Provable" : "Refuted";
  if (!o.provable()) j["countermodel"] = model_json(*o.countermodel);
  return j;
}

ordered_json trace_json(const Trace& t) {
  ordered_json j;
  j["values"] = t.values;
  j["tail"] = t.tail();
  return j;
}

ordered_json category_json(const Category& c) {
  ordered_json j;
  switch (c.kind) {
    case CategoryKind::Alpha: j["name"] = "Alpha"; return j;
    case CategoryKind::BetaPlus: j["name"] = "BetaPlus"; break;
    case CategoryKind::Gamma: j["name"] = "Gamma"; break;
    case CategoryKind::MixedFalse: j["name"] = "MixedFalse"; break;
  }
  j["m"] = c.m;
  return j;
}

ordered_json classification_json(const Classification& c) {
  ordered_json j;
  j["classically_true"] = c.classically_true;
  j["constructively_true"] = c.constructively_true;
  if (c.smallest_n) j["smallest_n"] = *c.smallest_n;
  else j["smallest_n"] = nullptr;
  j["category"] = category_json(c.category);
  j["trace"] = trace_json(c.trace);
  j["normal_form"] = render(c.normal_form);
  return j;
}

ordered_json rosser_json(const RosserStatus& r) {
  ordered_json j;
  if (r.n_rosser) j["n_rosser"] = *r.n_rosser;
  else j["n_rosser"] = nullptr;
  if (r.weak_rosser_n) j["weak_rosser_n"] = *r.weak_rosser_n;
  else j["weak_rosser_n"] = nullptr;
  return j;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string opt_to_string(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "none";
}

void print_classification(std::ostringstream& out, const Classification& c) {
  out << "classically true: " << yes_no(c.classically_true) << "\n"
      << "constructively true: " << yes_no(c.constructively_true) << "\n"
      << "smallest n: " << opt_to_string(c.smallest_n) << "\n"
      << "category: " << to_string(c.category) << "\n"
      << "trace: " << c.trace.to_string() << "\n"
      << "normal form: " << render(c.normal_form) << "\n";
}

std::string indent_lines(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += "  " + line + "\n";
  return out;
}

// Maps the library's error types onto the documented exit codes.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {2, std::string(e.what()) + "\n", std::nullopt};
  } catch (const NotLetterless& e) {
    return {2,
            std::string(e.what()) +
                "; use `prove` or `probe` for formulas with atoms\n",
            std::nullopt};
  } catch (const NotModalized& e) {
    return {2, std::string(e.what()) + "\n", std::nullopt};
  } catch (const ResourceLimit& e) {
    return {3, std::string(e.what()) + "\n", std::nullopt};
  } catch (const BudgetExceeded& e) {
    return {3, std::string(e.what()) + "\n", std::nullopt};
  } catch (const NoConvergence& e) {
    return {3, std::string(e.what()) + "\n", std::nullopt};
  } catch (const std::invalid_argument& e) {
    return {2, std::string(e.what()) + "\n", std::nullopt};
  }
}

ProverOptions prover_options(const CliOptions& opts) {
  return ProverOptions{opts.budget};
}

}  // namespace

CommandResult cmd_prove(std::string_view formula_text, const CliOptions& opts) {
  return guarded([&]() -> CommandResult {
    const FormulaPtr f = parse(formula_text);
    const ProofOutcome outcome = decide(f, prover_options(opts));
    ordered_json j;
    j["command"] = "prove";
    j["formula"] = render(f);
    j.update(outcome_json(outcome));
    if (outcome.provable()) return {0, "Provable\n", j};
    return {1, "Refuted\n" + serialize_model(*outcome.countermodel), j};
  });
}

CommandResult cmd_classify(std::string_view formula_text,
                           const CliOptions& opts) {
  (void)opts;
  return guarded([&]() -> CommandResult {
    const FormulaPtr f = parse(formula_text);
    const Classification c = classify(f);
    const RosserStatus r = rosser_status(f);
    std::ostringstream out;
    out << "formula: " << render(f) << "\n";
    print_classification(out, c);
    out << "n-Rosser: " << opt_to_string(r.n_rosser) << "\n"
        << "weak n-Rosser: " << opt_to_string(r.weak_rosser_n) << "\n";
    ordered_json j;
    j["command"] = "classify";
    j["formula"] = render(f);
    j["classification"] = classification_json(c);
    j["rosser_status"] = rosser_json(r);
    return {c.constructively_true ? 0 : 1, out.str(), j};
  });
}

CommandResult cmd_nf(std::string_view formula_text, const CliOptions& opts) {
  (void)opts;
  return guarded([&]() -> CommandResult {
    const FormulaPtr f = parse(formula_text);
    const FormulaPtr nf = normal_form(f);
    ordered_json j;
    j["command"] = "nf";
    j["formula"] = render(f);
    j["normal_form"] = render(nf);
    return {0, render(nf) + "\n", j};
  });
}

CommandResult cmd_trace(std::string_view formula_text, const CliOptions& opts) {
  (void)opts;
  return guarded([&]() -> CommandResult {
    const FormulaPtr f = parse(formula_text);
    const Trace t = compute_trace(f);
    ordered_json j;
    j["command"] = "trace";
    j["formula"] = render(f);
    j["trace"] = trace_json(t);
    return {0, "trace: " + t.to_string() + "\n", j};
  });
}

CommandResult cmd_liar(int n, const CliOptions& opts) {
  return guarded([&]() -> CommandResult {
    if (n < 1) throw std::invalid_argument("liar requires n >= 1");
    FixedPointOptions fp_opts;
    fp_opts.max_iterations = opts.max_iter;
    fp_opts.prover = prover_options(opts);
    // Same composition as liar(), kept unrolled so the certificate status of
    // the underlying fixed point can be reported.
    const FormulaPtr tmpl =
        Formula::imp(Formula::box(Formula::atom("p")), box_tower(n));
    const FixedPointResult fp = fixed_point(tmpl, "p", fp_opts);
    const FormulaPtr f = normal_form(fp.fixed_point);
    const Classification c = classify(f);
    const Classification neg_c = classify(Formula::neg(f));
    std::ostringstream out;
    out << "liar(" << n << "): " << render(f) << "\n"
        << "certificate: " << (fp.certificate_checked ? "checked" : "unchecked")
        << "\n";
    print_classification(out, c);
    out << "negation smallest n: " << opt_to_string(neg_c.smallest_n) << "\n";
    ordered_json j;
    j["command"] = "liar";
    j["n"] = n;
    j["fixed_point"] = render(f);
    j["iterations"] = fp.iterations;
    j["certificate_checked"] = fp.certificate_checked;
    j["classification"] = classification_json(c);
    j["negation_classification"] = classification_json(neg_c);
    return {0, out.str(), j};
  });
}

CommandResult cmd_fixedpoint(std::string_view template_text,
                             std::string_view atom, const CliOptions& opts) {
  return guarded([&]() -> CommandResult {
    const FormulaPtr tmpl = parse(template_text);
    const FormulaPtr probe = parse(atom);
    if (probe->kind() != Kind::Atom) {
      throw std::invalid_argument("second argument must be an atom");
    }
    FixedPointOptions fp_opts;
    fp_opts.max_iterations = opts.max_iter;
    fp_opts.prover = prover_options(opts);
    const FixedPointResult r = fixed_point(tmpl, probe->name(), fp_opts);
    std::ostringstream out;
    out << "fixed point: " << render(r.fixed_point) << "\n"
        << "iterations: " << r.iterations << "\n"
        << "certificate: " << (r.certificate_checked ? "checked" : "unchecked")
        << "\n";
    ordered_json j;
    j["command"] = "fixedpoint";
    j["template"] = render(tmpl);
    j["atom"] = probe->name();
    j["fixed_point"] = render(r.fixed_point);
    j["iterations"] = r.iterations;
    j["certificate_checked"] = r.certificate_checked;
    if (is_letterless(r.fixed_point)) {
      const Classification c = classify(r.fixed_point);
      print_classification(out, c);
      j["classification"] = classification_json(c);
    } else {
      out << "classification: none (fixed point contains atoms)\n";
      j["classification"] = nullptr;
    }
    return {0, out.str(), j};
  });
}

namespace {

struct TableEntry {
  FormulaPtr formula;
  std::string label;
  bool needs_certificate = false;
  bool certificate_ok = true;
};

}  // namespace

CommandResult cmd_table(int max_n, const CliOptions& opts) {
  return guarded([&]() -> CommandResult {
    if (max_n < 1 || max_n > 8) {
      throw std::invalid_argument("table requires 1 <= max_n <= 8");
    }
    FixedPointOptions fp_opts;
    fp_opts.max_iterations = opts.max_iter;
    fp_opts.prover = prover_options(opts);

    std::ostringstream out;
    ordered_json rows = ordered_json::array();
    out << "letterless representatives by smallest n (verified)\n";
    for (int n = 1; n <= max_n; ++n) {
      std::vector<TableEntry> truths;
      std::vector<TableEntry> falsities;
      if (n == 1) {
        truths.push_back({Formula::neg(box_tower(1)),
                          "family ~[]^m bot, m >= 1 (witness m = 1)"});
        falsities.push_back({Formula::falsum(), "[]^0 bot"});
        falsities.push_back(
            {Formula::conj(box_tower(2), Formula::neg(box_tower(1))),
             "family []^m bot & ~[]^(k-1) bot, m >= k >= 2 (witness m = k = "
             "2)"});
      } else {
        auto [fp, fp_class] = liar(n - 1, fp_opts);
        (void)fp_class;
        truths.push_back({fp, "liar(" + std::to_string(n - 1) + ")", true,
                          true});
        truths.push_back(
            {Formula::imp(box_tower(n), box_tower(n - 1)),
             "family []^m bot -> []^" + std::to_string(n - 1) +
                 " bot, m >= " + std::to_string(n) + " (witness m = " +
                 std::to_string(n) + ")"});
        falsities.push_back({box_tower(n - 1),
                             "[]^" + std::to_string(n - 1) + " bot"});
      }

      ordered_json row;
      row["n"] = n;
      ordered_json true_cell = ordered_json::array();
      ordered_json false_cell = ordered_json::array();
      out << "n = " << n << "\n";

      auto emit = [&](std::vector<TableEntry>& cell, bool column_true,
                      ordered_json& cell_json,
                      const char* heading) -> std::optional<CommandResult> {
        out << "  " << heading << ":\n";
        for (TableEntry& e : cell) {
          const Classification c = classify(e.formula);
          const bool ok = c.classically_true == column_true &&
                          c.smallest_n == std::optional<int>(n) &&
                          e.certificate_ok;
          if (!ok) {
            std::ostringstream err;
            err << "table verification failed for " << render(e.formula)
                << " (" << e.label << ") at n = " << n << ": got "
                << "classically " << (c.classically_true ? "true" : "false")
                << ", smallest n " << opt_to_string(c.smallest_n) << "\n";
            return CommandResult{3, err.str(), std::nullopt};
          }
          out << "    " << render(e.formula) << "    [" << e.label << "]\n";
          ordered_json je;
          je["formula"] = render(e.formula);
          je["label"] = e.label;
          cell_json.push_back(std::move(je));
        }
        return std::nullopt;
      };

      if (auto bad = emit(truths, true, true_cell, "classically true"))
        return *bad;
      if (auto bad = emit(falsities, false, false_cell, "classically false"))
        return *bad;
      row["classically_true"] = std::move(true_cell);
      row["classically_false"] = std::move(false_cell);
      rows.push_back(std::move(row));
    }
    const std::string note =
        "Rosser-style sentences are omitted: they are not letterless and are "
        "out of scope here.";
    out << "note: " << note << "\n";
    ordered_json j;
    j["command"] = "table";
    j["max_n"] = max_n;
    j["rows"] = std::move(rows);
    j["note"] = note;
    return {0, out.str(), j};
  });
}

CommandResult cmd_audit(int max_depth, const CliOptions& opts) {
  return guarded([&]() -> CommandResult {
    const AuditReport report = audit(max_depth, prover_options(opts));
    ordered_json j;
    j["command"] = "audit";
    j["max_depth"] = report.max_depth;
    ordered_json claims = ordered_json::array();
    for (const AuditClaim& c : report.claims) {
      ordered_json jc;
      jc["claim"] = c.claim;
      jc["description"] = c.description;
      jc["instances_checked"] = c.instances_checked;
      jc["confirmations"] = c.confirmations;
      ordered_json cxs = ordered_json::array();
      for (const AuditCounterexample& cx : c.counterexamples) {
        ordered_json jx;
        jx["formula"] = render(cx.formula);
        jx["note"] = cx.note;
        jx["classification"] = classification_json(cx.classification);
        cxs.push_back(std::move(jx));
      }
      jc["counterexamples"] = std::move(cxs);
      claims.push_back(std::move(jc));
    }
    j["claims"] = std::move(claims);
    j["notes"] = report.notes;
    return {0, report.to_string(), j};
  });
}

CommandResult cmd_probe(std::string_view formula_text, int max_n,
                        const CliOptions& opts) {
  return guarded([&]() -> CommandResult {
    if (max_n < 1) throw std::invalid_argument("probe requires N >= 1");
    if (max_n > 16) {
      throw BudgetExceeded("probe depth guard is 16, got " +
                           std::to_string(max_n));
    }
    const FormulaPtr f = parse(formula_text);
    const ProbeReport report = independence_probe(f, max_n, prover_options(opts));
    std::ostringstream out;
    ordered_json entries = ordered_json::array();
    for (const ProbeEntry& e : report.entries) {
      const FormulaPtr f_query =
          Formula::imp(Formula::box(f), box_tower(e.n));
      const FormulaPtr n_query =
          Formula::imp(Formula::box(Formula::neg(f)), box_tower(e.n));
      out << render(f_query) << ": "
          << (e.formula_outcome.provable() ? "Provable" : "Refuted") << "\n";
      if (!e.formula_outcome.provable())
        out << indent_lines(serialize_model(*e.formula_outcome.countermodel));
      out << render(n_query) << ": "
          << (e.negation_outcome.provable() ? "Provable" : "Refuted") << "\n";
      if (!e.negation_outcome.provable())
        out << indent_lines(serialize_model(*e.negation_outcome.countermodel));
      ordered_json je;
      je["n"] = e.n;
      je["formula_outcome"] = outcome_json(e.formula_outcome);
      je["negation_outcome"] = outcome_json(e.negation_outcome);
      entries.push_back(std::move(je));
    }
    if (report.extreme_schema_witness) {
      out << "schema witness for extreme independence\n";
    } else if (report.strong_schema_witness) {
      out << "schema witness for strong independence (formula side)\n";
    } else {
      out << "not an independence schema witness\n";
    }
    ordered_json j;
    j["command"] = "probe";
    j["formula"] = render(f);
    j["max_n"] = max_n;
    j["entries"] = std::move(entries);
    j["strong_schema_witness"] = report.strong_schema_witness;
    j["extreme_schema_witness"] = report.extreme_schema_witness;
    return {0, out.str(), j};
  });
}

}  // namespace gl::cli
