#include "ratjones/templates.hpp"

#include <algorithm>

#include "ratjones/tangle.hpp"

namespace ratjones {

StarFlag parse_star_flag(std::string_view text) {
  if (text == "1") return StarFlag::One;
  if (text == "*") return StarFlag::Star;
  throw Error(ErrorKind::InvalidArgument, "star flag must be '1' or '*', got '" + std::string(text) + "'");
}

ArrowFlag parse_arrow_flag(std::string_view text) {
  if (text == ">") return ArrowFlag::Forward;
  if (text == "<") return ArrowFlag::Backward;
  throw Error(ErrorKind::InvalidArgument, "arrow flag must be '>' or '<', got '" + std::string(text) + "'");
}

std::string_view to_string(StarFlag f) { return f == StarFlag::One ? "1" : "*"; }
std::string_view to_string(ArrowFlag f) { return f == ArrowFlag::Forward ? ">" : "<"; }

std::string_view to_string(TemplateKind k) {
  switch (k) {
    case TemplateKind::TemplateI: return "TemplateI";
    case TemplateKind::TemplateII: return "TemplateII";
    default: return "Pivot";
  }
}

IntSeq seq_reverse(const IntSeq& n) { return IntSeq(n.rbegin(), n.rend()); }

IntSeq seq_star(const IntSeq& n) {
  IntSeq out;
  out.reserve(n.size());
  for (auto it = n.rbegin(); it != n.rend(); ++it) out.push_back(checked::neg(*it));
  return out;
}

IntSeq apply(const IntSeq& n, StarFlag f) { return f == StarFlag::Star ? seq_star(n) : n; }
IntSeq apply(const IntSeq& n, ArrowFlag f) { return f == ArrowFlag::Backward ? seq_reverse(n) : n; }

namespace {

void append(IntSeq& out, const IntSeq& block) { out.insert(out.end(), block.begin(), block.end()); }

IntSeq negated(IntSeq n) {
  for (auto& x : n) x = checked::neg(x);
  return n;
}

// (b_0, d_1, b_1, ..., d_k, b_k)
IntSeq join(const std::vector<IntSeq>& blocks, const IntSeq& ds) {
  IntSeq out;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j > 0) out.push_back(ds[j - 1]);
    append(out, blocks[j]);
  }
  return out;
}

// (b_k, d_k, ..., d_1, b_0)
IntSeq join_reversed(const std::vector<IntSeq>& blocks, const IntSeq& ds) {
  IntSeq out;
  for (std::size_t j = blocks.size(); j-- > 0;) {
    append(out, blocks[j]);
    if (j > 0) out.push_back(ds[j - 1]);
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace

SeqPair template_one(const IntSeq& n, const IntSeq& ds, const std::vector<StarFlag>& eps) {
  require(eps.size() == ds.size() + 1, "template I needs one more flag than d-values");
  std::vector<IntSeq> blocks;
  for (StarFlag f : eps) blocks.push_back(apply(n, f));
  return {join(blocks, ds), join_reversed(blocks, ds)};
}

SeqPair template_two(const IntSeq& n, const IntSeq& ms, const IntSeq& ds, const std::vector<ArrowFlag>& eps,
                     const std::vector<ArrowFlag>& phis) {
  require(ms.size() == ds.size() + 1 && eps.size() == ms.size() && phis.size() == ms.size(),
          "template II needs |ms| = |eps| = |phis| = |ds| + 1");
  auto build = [&](const IntSeq& x) {
    std::vector<IntSeq> blocks;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      IntSeq b = apply(x, eps[j]);
      b.push_back(ms[j]);
      append(b, negated(apply(x, phis[j])));
      blocks.push_back(std::move(b));
    }
    return join(blocks, ds);
  };
  return {build(n), build(seq_star(n))};
}

LaurentU alpha_of(const IntSeq& n) { return b_product(n).a11; }

bool pivot_check(const IntSeq& n1, const IntSeq& n2) {
  const LaurentU a1 = alpha_of(n1), a2 = alpha_of(n2);
  return bar_u(a1) * a2 == a1 * bar_u(a2);
}

IntSeq pivot_generate(const IntSeq& n, std::int64_t m) {
  IntSeq out = n;
  out.push_back(m);
  append(out, n);
  return out;
}

SeqPair template_pivot(const std::vector<IntSeq>& seqs, const IntSeq& ds, const std::vector<StarFlag>& eps) {
  require(!seqs.empty() && seqs.size() == ds.size() + 1 && eps.size() == seqs.size(),
          "pivot template needs |seqs| = |eps| = |ds| + 1");
  std::vector<LaurentU> alphas;
  for (const auto& s : seqs) alphas.push_back(alpha_of(s));
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (std::size_t j = i + 1; j < seqs.size(); ++j) {
      if (bar_u(alphas[i]) * alphas[j] != alphas[i] * bar_u(alphas[j])) {
        throw Error(ErrorKind::NotPivotEquivalent,
                    "(" + to_string(seqs[i]) + ") and (" + to_string(seqs[j]) + ") are not a pivoting pair");
      }
    }
  }
  std::vector<IntSeq> blocks;
  for (std::size_t j = 0; j < seqs.size(); ++j) blocks.push_back(apply(seqs[j], eps[j]));
  return {join(blocks, ds), join_reversed(blocks, ds)};
}

SeqPair generate(const TemplateInstance& inst) {
  switch (inst.kind) {
    case TemplateKind::TemplateI: return template_one(inst.base, inst.ds, inst.eps);
    case TemplateKind::TemplateII:
      return template_two(inst.base, inst.ms, inst.ds, inst.arrows_eps, inst.arrows_phi);
    default: return template_pivot(inst.seqs, inst.ds, inst.eps);
  }
}

namespace {

template <class Flag>
std::string flags_text(const std::vector<Flag>& flags) {
  std::string s = "(";
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) s += ",";
    s += to_string(flags[i]);
  }
  return s + ")";
}

}  // namespace

std::string describe(const TemplateInstance& inst) {
  switch (inst.kind) {
    case TemplateKind::TemplateI:
      return "n=(" + to_string(inst.base) + ") ds=(" + to_string(inst.ds) + ") eps=" + flags_text(inst.eps);
    case TemplateKind::TemplateII:
      return "n=(" + to_string(inst.base) + ") ms=(" + to_string(inst.ms) + ") ds=(" + to_string(inst.ds) +
             ") eps=" + flags_text(inst.arrows_eps) + " phis=" + flags_text(inst.arrows_phi);
    default: {
      std::string s = "seqs=(";
      for (std::size_t i = 0; i < inst.seqs.size(); ++i) {
        if (i) s += ";";
        s += to_string(inst.seqs[i]);
      }
      return s + ") ds=(" + to_string(inst.ds) + ") eps=" + flags_text(inst.eps);
    }
  }
}

}  // namespace ratjones
