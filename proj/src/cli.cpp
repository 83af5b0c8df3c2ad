#include "ratjones/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>

#include "ratjones/jones.hpp"
#include "ratjones/report.hpp"

namespace ratjones::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Rat fraction_arg(const std::string& text) { return as_usage([&] { return parse_fraction(text); }); }
IntSeq seq_arg(const std::string& text) { return as_usage([&] { return parse_seq(text); }); }

std::vector<StarFlag> star_flags(const std::string& text) {
  std::vector<StarFlag> out;
  for (const auto& s : split(text, ',')) out.push_back(as_usage([&] { return parse_star_flag(s); }));
  return out;
}

std::vector<ArrowFlag> arrow_flags(const std::string& text) {
  std::vector<ArrowFlag> out;
  for (const auto& s : split(text, ',')) out.push_back(as_usage([&] { return parse_arrow_flag(s); }));
  return out;
}

std::vector<IntSeq> seq_list(const std::string& text) {
  std::vector<IntSeq> out;
  for (const auto& s : split(text, ';')) out.push_back(seq_arg(s));
  return out;
}

TemplateInstance template_instance(const Command& cmd) {
  TemplateInstance t;
  if (cmd.template_kind == "one") {
    t.kind = TemplateKind::TemplateI;
    t.base = seq_arg(cmd.base);
    t.ds = seq_arg(cmd.ds);
    t.eps = star_flags(cmd.eps);
  } else if (cmd.template_kind == "two") {
    t.kind = TemplateKind::TemplateII;
    t.base = seq_arg(cmd.base);
    t.ds = seq_arg(cmd.ds);
    t.ms = seq_arg(cmd.ms);
    t.arrows_eps = arrow_flags(cmd.eps);
    t.arrows_phi = arrow_flags(cmd.phis);
  } else {
    t.kind = TemplateKind::Pivot;
    t.seqs = seq_list(cmd.seqs);
    t.ds = seq_arg(cmd.ds);
    t.eps = star_flags(cmd.eps);
  }
  return t;
}

// Sign-normalized (p, q) with p >= 0 for a knot fraction.
std::pair<std::int64_t, std::int64_t> knot_pq(const Rat& r) {
  if (r.is_infinite()) return {1, 0};
  if (r.p() < 0) return {-r.p(), -r.q()};
  return {r.p(), r.q()};
}

KnotClass class_arg(const Rat& r) {
  const auto [p, q] = knot_pq(r);
  if (p == 0) throw Error(ErrorKind::NotAKnot, "numerator 0 closes to a link");
  return schubert_canonical(p, q);
}

void add_budget_options(CLI::App* sub, Command& cmd) {
  sub->add_option("--max-base-len", cmd.budget.max_base_len, "Longest base sequence")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-entry", cmd.budget.max_entry, "Largest |entry| of base sequences")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--max-k", cmd.budget.max_k, "Largest number of d-values")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-param", cmd.budget.max_param, "Largest |d| and |m|")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-stratum-work", cmd.budget.max_stratum_work, "Skip strata with more leaves than this");
}

}  // namespace

Command parse_args(const std::vector<std::string>& argv) {
  Command cmd;
  CLI::App app{"Jones polynomials of two-bridge knots and their coincidences", "ratjones"};
  app.require_subcommand(1);

  auto* jones = app.add_subcommand("jones", "Jones polynomial of K(p/q), or of the closure of R(seq) with --seq");
  jones->add_option("fraction", cmd.args, "p/q with p odd");
  jones->add_option("--seq", cmd.seq, "Integer sequence in display order, e.g. 2,3,2");

  auto* cf = app.add_subcommand("cf", "Even continued fraction of p/q (p odd, q even)");
  cf->add_option("fraction", cmd.args, "p/q")->required();
  cf->add_flag("--knot", cmd.knot_form, "Replace q by an even representative first");

  auto* eval = app.add_subcommand("eval-cf", "Evaluate a continued fraction sequence to p/q");
  eval->add_option("sequence", cmd.args, "Comma-separated integers")->required();

  auto* canon = app.add_subcommand("canon", "Schubert class of K(p/q)");
  canon->add_option("fraction", cmd.args, "p/q")->required();

  auto* verify = app.add_subcommand("verify", "Compare the Jones polynomials of two knots");
  verify->add_option("fractions", cmd.args, "p/q p'/q'")->required()->expected(2);

  auto* tmpl = app.add_subcommand("template", "Generate a pair from a template and check its Jones polynomials");
  tmpl->add_option("kind", cmd.template_kind, "one, two or pivot")
      ->required()
      ->check(CLI::IsMember({"one", "two", "pivot"}));
  tmpl->add_option("--base", cmd.base, "Base sequence n");
  tmpl->add_option("--seqs", cmd.seqs, "Pivot blocks separated by ';'");
  tmpl->add_option("--ds", cmd.ds, "d-values");
  tmpl->add_option("--ms", cmd.ms, "m-values (template two)");
  tmpl->add_option("--eps", cmd.eps, "Flags: 1/* (one, pivot) or >/< (two)");
  tmpl->add_option("--phis", cmd.phis, "Arrow flags >/< (template two)");

  auto* classify = app.add_subcommand("classify", "Search for a template explaining a coincidence");
  classify->add_option("fractions", cmd.args, "p/q p'/q'")->required()->expected(2);
  classify->add_option("--jobs", cmd.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_budget_options(classify, cmd);

  auto* search = app.add_subcommand("search", "Census of Jones coincidences below a determinant bound");
  search->add_option("--max-det", cmd.max_det, "Exclusive determinant bound")->check(CLI::Range(3, 1 << 20));
  search->add_option("--format", cmd.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  search->add_option("--jobs", cmd.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", cmd.out, "Output file (default: stdout)");
  bool no_classify = false;
  search->add_flag("--no-classify", no_classify, "Skip template classification");
  add_budget_options(search, cmd);

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    cmd.help = true;
    const auto subs = app.get_subcommands();
    cmd.help_text = subs.empty() ? app.help() : subs.front()->help();
    return cmd;
  } catch (const CLI::CallForAllHelp&) {
    cmd.help = true;
    cmd.help_text = app.help("", CLI::AppFormatMode::All);
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  cmd.sub = app.get_subcommands().front()->get_name();
  cmd.classify = !no_classify;

  // Validate argument syntax up front so malformed input is a usage error.
  if (cmd.sub == "jones") {
    if (cmd.args.size() + (cmd.seq.empty() ? 0 : 1) != 1) {
      throw UsageError("jones takes exactly one of a fraction p/q or --seq");
    }
    if (!cmd.args.empty()) fraction_arg(cmd.args[0]);
    if (!cmd.seq.empty()) seq_arg(cmd.seq);
  } else if (cmd.sub == "cf" || cmd.sub == "canon" || cmd.sub == "verify" || cmd.sub == "classify") {
    for (const auto& a : cmd.args) fraction_arg(a);
  } else if (cmd.sub == "eval-cf") {
    seq_arg(cmd.args.at(0));
  } else if (cmd.sub == "template") {
    const bool pivot = cmd.template_kind == "pivot";
    if (pivot ? cmd.seqs.empty() : cmd.base.empty()) {
      throw UsageError(pivot ? "template pivot needs --seqs" : "template needs --base");
    }
    if (cmd.eps.empty()) throw UsageError("template needs --eps");
    if (cmd.template_kind == "two" && (cmd.ms.empty() || cmd.phis.empty())) {
      throw UsageError("template two needs --ms and --phis");
    }
    template_instance(cmd);
  }
  return cmd;
}

namespace {

void print_pair(std::ostream& out, const SeqPair& pair) {
  auto line = [&](const char* label, const IntSeq& s) {
    out << label << " (" << to_string(s) << ") = " << to_string(eval_cf(s)) << "\n";
  };
  line("A:", pair.first);
  line("B:", pair.second);
}

int run_search(const Command& cmd, std::ostream& out, std::ostream& err) {
  const unsigned jobs = cmd.jobs ? cmd.jobs : default_jobs();
  const auto groups = find_coincidences(cmd.max_det, jobs);
  std::vector<ClassifiedGroup> report;
  if (cmd.classify) {
    report = classify_groups(groups, cmd.budget, jobs);
  } else {
    for (const auto& g : groups) report.push_back({g, {}});
  }
  const ReportFormat format = parse_report_format(cmd.format);
  if (cmd.out.empty()) {
    emit_report(report, format, out);
  } else {
    std::ofstream file(cmd.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + cmd.out);
    emit_report(report, format, file);
  }
  err << groups.size() << " groups below determinant " << cmd.max_det << "\n";
  return kOk;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.help) {
      out << cmd.help_text;
      return kOk;
    }
    if (cmd.sub == "jones") {
      if (!cmd.seq.empty()) {
        out << to_string(jones_general(parse_seq(cmd.seq))) << "\n";
      } else {
        const auto [p, q] = knot_pq(parse_fraction(cmd.args[0]));
        if (p % 2 == 0) throw Error(ErrorKind::NotAKnot, "even numerator " + std::to_string(p) + " closes to a link");
        out << to_string(jones_knot(p, q)) << "\n";
      }
    } else if (cmd.sub == "cf") {
      Rat r = parse_fraction(cmd.args[0]);
      if (cmd.knot_form) {
        const auto [p, q] = knot_pq(r);
        r = make_q_even(p, q);
      }
      out << to_string(even_cf(r)) << "\n";
    } else if (cmd.sub == "eval-cf") {
      out << to_string(eval_cf(parse_seq(cmd.args[0]))) << "\n";
    } else if (cmd.sub == "canon") {
      const KnotClass k = class_arg(parse_fraction(cmd.args[0]));
      out << to_string(k) << (k.amphicheiral ? " amphicheiral" : " chiral") << "\n";
    } else if (cmd.sub == "verify") {
      const auto [p1, q1] = knot_pq(parse_fraction(cmd.args[0]));
      const auto [p2, q2] = knot_pq(parse_fraction(cmd.args[1]));
      const LaurentT v1 = jones_knot(p1, q1), v2 = jones_knot(p2, q2);
      out << (v1 == v2 ? "EQUAL" : "DIFFER") << "\n";
      out << cmd.args[0] << ": " << to_string(v1) << "\n";
      out << cmd.args[1] << ": " << to_string(v2) << "\n";
    } else if (cmd.sub == "template") {
      const SeqPair pair = generate(template_instance(cmd));
      print_pair(out, pair);
      const LaurentT va = jones_general(pair.first), vb = jones_general(pair.second);
      if (va != vb) {
        out << "Jones: DIFFER\n";
        throw Error(ErrorKind::IntegralityViolation, "template produced different Jones polynomials");
      }
      out << "Jones: EQUAL\n" << to_string(va) << "\n";
    } else if (cmd.sub == "classify") {
      const KnotClass a = class_arg(parse_fraction(cmd.args[0]));
      const KnotClass b = class_arg(parse_fraction(cmd.args[1]));
      if (a.p != b.p || jones_knot(a.p, a.q) != jones_knot(b.p, b.q)) {
        throw Error(ErrorKind::InvalidArgument, "classify needs two knots with the same Jones polynomial");
      }
      const auto res = classify_pair(a, b, cmd.budget, cmd.jobs ? cmd.jobs : default_jobs());
      out << to_string(res.kind);
      if (res.witness) {
        out << " " << describe(*res.witness) << "\n";
        print_pair(out, generate(*res.witness));
      } else {
        out << "\n";
      }
    } else if (cmd.sub == "search") {
      return run_search(cmd, out, err);
    } else {
      err << "error: unknown subcommand '" << cmd.sub << "'\n";
      return kUsage;
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_internal(e.kind()) ? kInternal : kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(argv);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return run(cmd, out, err);
}

}  // namespace ratjones::cli
