#include "ratjones/report.hpp"

namespace ratjones {

using nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  throw Error(ErrorKind::InvalidArgument, "unknown report format '" + std::string(text) + "'");
}

ordered_json to_json(const LaurentT& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : v.terms()) arr.push_back(ordered_json::array({t.exp, t.coef}));
  return arr;
}

namespace {

template <class Flag>
ordered_json flags_json(const std::vector<Flag>& flags) {
  ordered_json arr = ordered_json::array();
  for (Flag f : flags) arr.push_back(std::string(to_string(f)));
  return arr;
}

ordered_json seq_json(const IntSeq& s) {
  ordered_json arr = ordered_json::array();
  for (std::int64_t x : s) arr.push_back(x);
  return arr;
}

}  // namespace

ordered_json to_json(const TemplateInstance& w) {
  ordered_json j;
  switch (w.kind) {
    case TemplateKind::TemplateI:
      j["n"] = seq_json(w.base);
      j["ds"] = seq_json(w.ds);
      j["eps"] = flags_json(w.eps);
      break;
    case TemplateKind::TemplateII:
      j["n"] = seq_json(w.base);
      j["ms"] = seq_json(w.ms);
      j["ds"] = seq_json(w.ds);
      j["eps"] = flags_json(w.arrows_eps);
      j["phis"] = flags_json(w.arrows_phi);
      break;
    case TemplateKind::Pivot: {
      ordered_json seqs = ordered_json::array();
      for (const auto& s : w.seqs) seqs.push_back(seq_json(s));
      j["seqs"] = seqs;
      j["ds"] = seq_json(w.ds);
      j["eps"] = flags_json(w.eps);
      break;
    }
  }
  const SeqPair pair = generate(w);
  j["sequences"] = ordered_json::array({seq_json(pair.first), seq_json(pair.second)});
  return j;
}

ordered_json to_json(const ClassifiedGroup& g) {
  ordered_json j;
  j["det"] = g.group.det;
  ordered_json members = ordered_json::array();
  for (const auto& m : g.group.members) members.push_back(ordered_json{{"p", m.p}, {"q", m.q}});
  j["members"] = members;
  j["jones"] = to_json(g.group.jones);
  j["span"] = g.group.span;
  ordered_json amph = ordered_json::array();
  for (const auto& m : g.group.members) amph.push_back(m.amphicheiral);
  j["amphicheiral"] = amph;
  ordered_json cls = ordered_json::array();
  for (const auto& [ij, res] : g.pairs) {
    ordered_json c;
    c["pair"] = ordered_json::array({ij.first, ij.second});
    c["kind"] = std::string(to_string(res.kind));
    c["witness"] = res.witness ? to_json(*res.witness) : ordered_json::object();
    cls.push_back(c);
  }
  j["classification"] = cls;
  return j;
}

std::string csv_header() { return "det,members,jones,span,amphicheiral,classification,witnesses"; }

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_row(const ClassifiedGroup& g) {
  std::string members, amph, kinds, witnesses;
  for (std::size_t i = 0; i < g.group.members.size(); ++i) {
    const auto& m = g.group.members[i];
    if (i) {
      members += ";";
      amph += ";";
    }
    members += std::to_string(m.p) + "/" + std::to_string(m.q);
    amph += m.amphicheiral ? "true" : "false";
  }
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    const auto& [ij, res] = g.pairs[i];
    if (i) {
      kinds += ";";
      witnesses += ";";
    }
    const std::string tag = std::to_string(ij.first) + "-" + std::to_string(ij.second) + ":";
    kinds += tag + std::string(to_string(res.kind));
    witnesses += tag + (res.witness ? describe(*res.witness) : std::string());
  }
  return std::to_string(g.group.det) + "," + members + "," + to_string(g.group.jones) + "," +
         std::to_string(g.group.span) + "," + amph + "," + kinds + "," + csv_quote(witnesses);
}

void emit_report(const std::vector<ClassifiedGroup>& groups, ReportFormat format, std::ostream& sink) {
  if (format == ReportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : groups) arr.push_back(to_json(g));
    sink << (groups.empty() ? std::string("[]") : arr.dump(2)) << "\n";
  } else {
    sink << csv_header() << "\n";
    for (const auto& g : groups) sink << csv_row(g) << "\n";
  }
  if (!sink) throw std::runtime_error("failed to write report");
}

}  // namespace ratjones
