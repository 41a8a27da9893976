#include "interlace_kit/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <sstream>

namespace ikit {

using nlohmann::json;

namespace {

std::string entry_text(int row, int col) { return "a(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")"; }

json entry_json(int row, int col) { return json::array({row + 1, col + 1}); }

json js_json(const JsWitness& w) {
  json entries = json::array();
  for (auto [r, c] : w.entries) entries.push_back(entry_json(r, c));
  return {{"type", w.zero_entry ? "zero-entry" : "sign-cycle"}, {"entries", entries}};
}

std::string js_text(const JsWitness& w) {
  if (w.zero_entry) return "zero entry " + entry_text(w.entries[0].first, w.entries[0].second);
  std::string s = "sign cycle";
  for (auto [r, c] : w.entries) s += " " + entry_text(r, c);
  return s;
}

std::string inner(const IndexSet& s) {
  const std::string t = s.to_string();
  return t.substr(1, t.size() - 2);
}

std::string witness_text(const Witness& w, bool decimal) {
  if (const auto* m = std::get_if<MinorWitness>(&w)) {
    return "minor A(" + inner(m->rows) + ";" + inner(m->cols) + ") = " + format_scalar(m->value, decimal);
  }
  if (const auto* e = std::get_if<EntryWitness>(&w)) return "entry " + entry_text(e->row, e->col) + " = " + format_scalar(e->value, decimal);
  if (const auto* j = std::get_if<JsWitness>(&w)) return js_text(*j);
  const auto& c = std::get<CompoundWitness>(w);
  return "compound of order " + std::to_string(c.order) + " of A" + c.principal.to_string() + ": " + js_text(c.inner);
}

std::string lvalue_text(const LValue& l, bool decimal) {
  return is_infinite(l) ? std::string("inf") : root_text(std::get<IsolatedRoot>(l), decimal);
}

json violation_json(const std::variant<std::monostate, LatticeViolation, RootViolation>& v, bool decimal) {
  if (const auto* l = std::get_if<LatticeViolation>(&v)) {
    return {{"type", "lattice"},
            {"alpha", index_json(l->alpha)},
            {"beta", l->beta ? index_json(*l->beta) : json(nullptr)},
            {"l_alpha", lvalue_json(l->l_alpha, decimal)},
            {"l_beta", l->l_beta ? lvalue_json(*l->l_beta, decimal) : json(nullptr)},
            {"reason", l->reason},
            {"equality", l->equality}};
  }
  if (const auto* r = std::get_if<RootViolation>(&v)) {
    json values = json::array();
    for (const NamedRoot& nr : r->values) {
      values.push_back({{"name", nr.name}, {"value", nr.value ? root_json(*nr.value, decimal) : json(nullptr)}});
    }
    return {{"type", "eigenvalue"}, {"index", r->index},       {"j", r->j},
            {"relation", r->relation}, {"reason", r->reason}, {"values", values},
            {"equality", r->equality}};
  }
  return nullptr;
}

/// Six decimals from a copy refined well below the display precision.
std::string approx_text(const IsolatedRoot& r) {
  IsolatedRoot fine = r;
  fine.refine_to(Rational(1, 100000000));
  return to_decimal(fine.midpoint(), 6);
}

std::string root_violation_text(const RootViolation& r, bool decimal) {
  std::string s = r.relation + ": " + r.reason;
  for (const NamedRoot& nr : r.values) {
    s += "\n    " + nr.name + " = " + (nr.value ? root_text(*nr.value, decimal) : std::string("(none)"));
  }
  return s;
}

std::string violation_text(const std::variant<std::monostate, LatticeViolation, RootViolation>& v, bool decimal) {
  if (const auto* l = std::get_if<LatticeViolation>(&v)) {
    std::string s = "alpha = " + l->alpha.to_string();
    if (l->beta) s += ", beta = " + l->beta->to_string();
    s += ": " + l->reason + "\n    l(A(alpha)) = " + lvalue_text(l->l_alpha, decimal);
    if (l->l_beta) s += "\n    l(A(beta)) = " + lvalue_text(*l->l_beta, decimal);
    return s;
  }
  if (const auto* r = std::get_if<RootViolation>(&v)) return root_violation_text(*r, decimal);
  return "";
}

json roots_json(const std::vector<IsolatedRoot>& roots, bool decimal) {
  json out = json::array();
  for (const IsolatedRoot& r : roots) out.push_back(root_json(r, decimal));
  return out;
}

std::string verdict_text(bool holds, bool equality) {
  if (holds) return "holds";
  return equality ? "violated (exact tie)" : "violated";
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

std::string_view format_name(MatrixFormat f) { return f == MatrixFormat::Json ? "json" : "text"; }

json index_json(const IndexSet& s) { return s.one_based(); }

json root_json(const IsolatedRoot& r, bool decimal) {
  return {{"lo", format_scalar(r.lo(), decimal)},
          {"hi", format_scalar(r.hi(), decimal)},
          {"approx", approx_text(r)},
          {"multiplicity", r.multiplicity()}};
}

json lvalue_json(const LValue& l, bool decimal) {
  return is_infinite(l) ? json("inf") : root_json(std::get<IsolatedRoot>(l), decimal);
}

json witness_json(const Witness& w, bool decimal) {
  if (const auto* m = std::get_if<MinorWitness>(&w)) {
    return {{"type", "minor"}, {"rows", index_json(m->rows)}, {"cols", index_json(m->cols)}, {"value", format_scalar(m->value, decimal)}};
  }
  if (const auto* e = std::get_if<EntryWitness>(&w)) {
    return {{"type", "entry"}, {"entry", entry_json(e->row, e->col)}, {"value", format_scalar(e->value, decimal)}};
  }
  if (const auto* j = std::get_if<JsWitness>(&w)) return js_json(*j);
  const auto& c = std::get<CompoundWitness>(w);
  return {{"type", "compound"}, {"order", c.order}, {"principal", index_json(c.principal)}, {"inner", js_json(c.inner)}};
}

json class_report_json(const ClassReport& r, bool decimal) {
  json classes = json::array();
  for (const ClassResult& c : r.results) {
    json item = {{"class", class_name(c.cls)}, {"verdict", verdict_name(c.verdict)}};
    item["witness"] = c.witness ? witness_json(*c.witness, decimal) : json(nullptr);
    if (c.pattern && c.verdict == Verdict::Member) item["J"] = index_json(c.pattern->J);
    classes.push_back(item);
  }
  return {{"classes", classes}, {"findings", r.findings}};
}

json interlace_report_json(const InterlaceReport& r, bool decimal) {
  json chains = json::array();
  for (const ChainResult& c : r.chains) {
    chains.push_back({{"r", c.r},
                      {"asserted", c.asserted},
                      {"holds", c.holds},
                      {"mu", roots_json(c.mu, decimal)},
                      {"violation", c.violation ? violation_json(*c.violation, decimal) : json(nullptr)}});
  }
  return {{"property", r.property},
          {"holds", r.holds},
          {"equality", r.equality},
          {"checked_pairs", r.checked_pairs},
          {"counterexample", violation_json(r.counterexample, decimal)},
          {"eigenvalues", roots_json(r.eigenvalues, decimal)},
          {"chains", chains}};
}

json pipeline_json(const KotelyanskyPipeline& p, const DescartesResult& d, bool decimal) {
  json products = json::array();
  for (const Poly& q : p.hypothesis.products) products.push_back(q.to_string());
  json hyp = {{"holds", p.hypothesis.holds},
              {"failing_k", p.hypothesis.failing_k ? json(*p.hypothesis.failing_k) : json(nullptr)},
              {"reason", p.hypothesis.reason},
              {"products", products}};
  json conclusion = nullptr;
  if (p.conclusion) {
    json roots = json::array();
    for (const auto& rs : p.conclusion->roots) roots.push_back(roots_json(rs, decimal));
    conclusion = {{"holds", p.conclusion->holds},
                  {"failing_k", p.conclusion->failing_k ? json(*p.conclusion->failing_k) : json(nullptr)},
                  {"reason", p.conclusion->reason},
                  {"roots", roots}};
  }
  json entries = json::array();
  for (const DescartesEntry& e : d.entries) {
    entries.push_back({{"rows", index_json(e.rows)},
                       {"cols", index_json(e.cols)},
                       {"minor", e.minor.to_string()},
                       {"variations", e.variations}});
  }
  return {{"property", "kotelyansky"},
          {"holds", p.holds()},
          {"zigzag", p.zigzag_applied},
          {"matrix", matrix_to_json(p.matrix, decimal)},
          {"alpha", format_scalar(p.alpha, decimal)},
          {"beta", format_scalar(p.beta, decimal)},
          {"hypothesis", hyp},
          {"conclusion", conclusion},
          {"descartes", {{"holds", d.holds}, {"entries", entries}}}};
}

json search_json(const SearchResult& r, bool decimal) {
  json hit = nullptr;
  if (r.hit) {
    hit = {{"sample", r.hit->sample},
           {"seed", r.hit->seed},
           {"matrix", matrix_to_json(r.hit->matrix, decimal)},
           {"r", r.hit->r},
           {"j", r.hit->j},
           {"violation", violation_json(r.hit->violation, decimal)},
           {"reverified", r.hit->reverified}};
  }
  return {{"target", "interior-counterexample"},
          {"config",
           {{"seed", r.config.seed}, {"budget", r.config.budget}, {"sizes", r.config.sizes}, {"class", target_name(r.config.target)}}},
          {"samples", r.samples},
          {"skipped", r.skipped},
          {"interior_chains", r.interior_chains},
          {"border_failures", r.border_failures},
          {"hit", hit}};
}

json generated_json(const SearchConfig& config, const std::vector<GeneratedInstance>& instances, long skipped,
                    bool decimal) {
  json items = json::array();
  for (const GeneratedInstance& g : instances) {
    items.push_back({{"sample", g.sample}, {"seed", g.seed}, {"member", g.member}, {"matrix", matrix_to_json(g.matrix, decimal)}});
  }
  return {{"target", target_name(config.target)},
          {"config", {{"seed", config.seed}, {"budget", config.budget}, {"sizes", config.sizes}}},
          {"skipped", skipped},
          {"instances", items}};
}

json envelope(std::string_view command, const MatrixFile* input, json result, double elapsed_ms) {
  json out = {{"schema_version", kSchemaVersion},
              {"tool", "interlace-kit"},
              {"version", kToolVersion},
              {"command", command},
              {"result", std::move(result)},
              {"timing", {{"elapsed_ms", elapsed_ms}}}};
  if (input != nullptr) {
    out["input"] = {{"path", input->path},
                    {"sha256", sha256_hex(input->contents)},
                    {"format", format_name(input->format)},
                    {"rows", input->matrix.rows()},
                    {"cols", input->matrix.cols()}};
  } else {
    out["input"] = nullptr;
  }
  return out;
}

std::string root_text(const IsolatedRoot& r, bool decimal) {
  if (r.is_rational()) return format_scalar(r.lo(), decimal);
  return "[" + format_scalar(r.lo(), decimal) + ", " + format_scalar(r.hi(), decimal) + "] ~ " + approx_text(r);
}

std::string class_report_text(const ClassReport& r, bool decimal) {
  std::ostringstream out;
  for (const ClassResult& c : r.results) {
    std::string name(class_name(c.cls));
    std::string verdict(verdict_name(c.verdict));
    name.resize(10, ' ');
    std::string detail;
    if (c.witness) {
      detail = witness_text(*c.witness, decimal);
    } else if (c.pattern && c.verdict == Verdict::Member) {
      detail = "J = " + c.pattern->J.to_string();
    }
    if (!detail.empty()) verdict.resize(16, ' ');
    out << name << verdict << detail;
    out << '\n';
  }
  for (const std::string& f : r.findings) out << "finding: " << f << '\n';
  return out.str();
}

std::string interlace_report_text(const InterlaceReport& r, bool decimal) {
  std::ostringstream out;
  out << "property: " << r.property << '\n';
  out << "verdict: " << verdict_text(r.holds, r.equality) << '\n';
  out << "comparisons: " << r.checked_pairs << '\n';
  if (!r.eigenvalues.empty()) {
    out << "eigenvalues:\n";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      out << "  lambda_" << i + 1 << " = " << root_text(r.eigenvalues[i], decimal) << '\n';
    }
  }
  for (const ChainResult& c : r.chains) {
    out << "chain r = " << c.r << (c.asserted ? " (asserted): " : " (recorded): ") << (c.holds ? "holds" : "fails") << '\n';
    for (std::size_t i = 0; i < c.mu.size(); ++i) {
      out << "  mu_" << i + 1 << " = " << root_text(c.mu[i], decimal) << '\n';
    }
    if (c.violation && !c.asserted) out << "  " << root_violation_text(*c.violation, decimal) << '\n';
  }
  if (!r.holds) out << "counterexample: " << violation_text(r.counterexample, decimal) << '\n';
  return out.str();
}

std::string pipeline_text(const KotelyanskyPipeline& p, const DescartesResult& d, bool decimal) {
  std::ostringstream out;
  out << "property: kotelyansky\n";
  out << "verdict: " << (p.holds() ? "holds" : "violated") << '\n';
  out << "zigzag: " << (p.zigzag_applied ? "applied" : "not applied") << '\n';
  out << "bracket: [" << format_scalar(p.alpha, decimal) << ", " << format_scalar(p.beta, decimal) << "]\n";
  if (p.hypothesis.holds) {
    out << "hypothesis: holds\n";
  } else {
    out << "hypothesis: fails at k = " << *p.hypothesis.failing_k << ": " << p.hypothesis.reason << '\n';
  }
  for (std::size_t k = 0; k < p.hypothesis.products.size(); ++k) {
    out << "  p_" << k + 1 << "(x) = " << p.hypothesis.products[k].to_string() << '\n';
  }
  if (!p.conclusion) {
    out << "conclusion: not evaluated\n";
  } else {
    if (p.conclusion->holds) {
      out << "conclusion: holds\n";
    } else {
      out << "conclusion: fails at k = " << *p.conclusion->failing_k << ": " << p.conclusion->reason << '\n';
    }
    for (std::size_t k = 0; k < p.conclusion->roots.size(); ++k) {
      out << "  minor " << k + 1 << " roots:";
      const auto& roots = p.conclusion->roots[k];
      for (std::size_t i = 0; i < roots.size(); ++i) out << (i == 0 ? " " : ", ") << root_text(roots[i], decimal);
      out << '\n';
    }
  }
  out << "border minors, Descartes check: " << (d.holds ? "holds" : "fails") << " (" << d.entries.size() << " minors)\n";
  return out.str();
}

std::string search_text(const SearchResult& r, bool decimal) {
  std::ostringstream out;
  out << "target: interior-counterexample\n";
  out << "class: " << target_name(r.config.target) << "\n";
  out << "sizes:";
  for (int n : r.config.sizes) out << ' ' << n;
  out << "\nseed: " << r.config.seed << "\nbudget: " << r.config.budget << '\n';
  out << "samples: " << r.samples << "\nskipped: " << r.skipped << "\ninterior chains: " << r.interior_chains
      << "\nborder failures: " << r.border_failures << '\n';
  if (!r.hit) {
    out << "hit: none found within budget\n";
    return out.str();
  }
  out << "hit: sample " << r.hit->sample << " (seed " << r.hit->seed << "), r = " << r.hit->r << ", j = " << r.hit->j << '\n';
  out << "  " << root_violation_text(r.hit->violation, decimal) << '\n';
  out << "reverified: " << (r.hit->reverified ? "yes" : "no") << '\n';
  out << "matrix:\n" << format_matrix_text(r.hit->matrix, decimal);
  return out.str();
}

std::string generated_text(const SearchConfig& config, const std::vector<GeneratedInstance>& instances, long skipped,
                           bool decimal) {
  std::ostringstream out;
  out << "target: " << target_name(config.target) << "\nseed: " << config.seed << "\nbudget: " << config.budget << "\nskipped: " << skipped
      << '\n';
  for (const GeneratedInstance& g : instances) {
    out << "\n# sample " << g.sample << " seed " << g.seed << (g.member ? "" : " (target check failed)") << '\n';
    out << format_matrix_text(g.matrix, decimal);
  }
  return out.str();
}

}  // namespace ikit
