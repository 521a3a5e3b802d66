#include "commands.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "lsawb/catalog.hpp"
#include "lsawb/cohomology.hpp"
#include "lsawb/error.hpp"
#include "lsawb/lie.hpp"
#include "lsawb/mu.hpp"
#include "lsawb/radicals.hpp"
#include "lsawb/simplicity.hpp"
#include "lsawb/trees.hpp"
#include "lsawb/witt.hpp"
#include "lsawb/words.hpp"

namespace lsawb::cli {

namespace {

constexpr std::string_view kCatalogPrefix = "catalog:";

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json predicate_json(const std::optional<Triple>& violation) {
  Json j = {{"holds", !violation}};
  if (violation) j["witness"] = triple_json(*violation);
  return j;
}

Json identities_json(const Algebra& a) {
  Json j = {
      {"left_symmetric", predicate_json(left_symmetry_violation(a))},
      {"right_symmetric", predicate_json(right_symmetry_violation(a))},
      {"novikov", predicate_json(novikov_violation(a))},
      {"associative", predicate_json(associativity_violation(a))},
  };
  try {
    commutator_lie(a);
    j["lie_admissible"] = {{"holds", true}};
  } catch (const IdentityViolation& e) {
    j["lie_admissible"] = predicate_json(Triple{e.i(), e.j(), e.k()});
  }
  return j;
}

Json bracket_lines(const LieAlgebra& g) {
  Json lines = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!is_zero(g.bracket(i, j)))
        lines.push_back("[e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + "] = " +
                        vector_text(g.bracket(i, j)));
  return lines;
}

Json lie_json(const LieAlgebra& g) {
  const auto props = lie_properties(g);
  Json j = {
      {"abelian", props.abelian},
      {"nilpotent", props.nilpotent},
      {"solvable", props.solvable},
      {"center", subspace_json(props.center)},
      {"lower_central_dims", props.lower_central_dims},
      {"derived_dims", props.derived_dims},
      {"brackets", bracket_lines(g)},
  };
  j["nilpotency_class"] = props.nilpotency_class ? Json(*props.nilpotency_class) : Json(nullptr);
  j["derived_length"] = props.derived_length ? Json(*props.derived_length) : Json(nullptr);
  return j;
}

Json radical_json(const RadicalResult& r) {
  Json j = subspace_json(r.space);
  j["status"] = to_string(r.status);
  j["reason"] = r.reason;
  return j;
}

Json verdict_json(const Algebra& a, const SimplicityVerdict& v) {
  Json j = {{"verdict", to_string(v.verdict)}, {"elements_tried", v.elements_tried}, {"note", v.note}};
  j["witness"] = v.witness ? subspace_json(*v.witness) : Json(nullptr);
  if (v.certificate) {
    const auto& c = *v.certificate;
    j["certificate"] = {
        {"schedule_index", c.schedule_index},
        {"element", matrix_json(c.element)},
        {"factor", to_string(c.factor)},
        {"kernel_dim", c.kernel_dim},
        {"verified", verify_certificate(a, c)},
    };
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json cohomology_json(const Algebra& a, std::size_t cap) {
  Json rows = Json::array();
  for (std::size_t p = 1; p <= std::min<std::size_t>(cap, kMaxLsaDegree); ++p) {
    const auto h = lsa_cohomology(a, p);
    rows.push_back({{"degree", h.degree}, {"dim_c", h.dim_c}, {"dim_z", h.dim_z}, {"dim_b", h.dim_b}, {"dim_h", h.dim_h}});
  }
  return rows;
}

Json fingerprint_json(const Fingerprint& f) {
  return {
      {"dim", f.dim},
      {"complete", f.complete},
      {"dim_trace_subspace", f.dim_trace_subspace},
      {"dim_koszul", f.dim_koszul},
      {"dim_trace_form", f.dim_trace_form},
      {"dim_solvable", f.dim_solvable},
      {"dim_nil", f.dim_nil},
      {"lie_abelian", f.lie_abelian},
      {"lie_nilpotent", f.lie_nilpotent},
      {"lie_solvable", f.lie_solvable},
      {"lower_central_dims", f.lower_central_dims},
      {"derived_dims", f.derived_dims},
      {"center_dim", f.center_dim},
      {"simplicity", to_string(f.simplicity)},
      {"dim_derivations", f.dim_derivations},
      {"cohomology_dims", f.cohomology_dims},
  };
}

// Rejects non-LSA input with the violating triple.
std::optional<Report> require_lsa(const std::string& command, const Algebra& a) {
  if (auto t = left_symmetry_violation(a)) {
    Report r{command, kPropertyFailure};
    r.result = {{"name", a.name()},
                {"error", "not left-symmetric: (x,y,z) != (y,x,z) at " + triple_text(*t)},
                {"witness", triple_json(*t)}};
    return r;
  }
  return std::nullopt;
}

std::vector<std::size_t> ints_or_empty(const std::vector<std::size_t>& v, std::size_t expected, const char* flag) {
  if (!v.empty() && v.size() != expected)
    throw DomainError(std::string(flag) + " expects " + std::to_string(expected) + " values");
  return v;
}

}  // namespace

AlgebraDocument load_document(const std::string& source) {
  if (source.rfind(kCatalogPrefix, 0) == 0) return catalog_entry(source.substr(kCatalogPrefix.size()));
  std::string text;
  if (source == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw ParseError("cannot open file", source);
    text = read_all(in);
  }
  try {
    return parse_document(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), source);
  }
}

Report cmd_check(const GlobalOptions&, const std::string& source, std::optional<Kind> kind_override) {
  const auto doc = load_document(source);
  const Kind kind = kind_override.value_or(doc.kind);
  const Algebra a = to_algebra(doc);
  Report r{"check"};
  r.result = {{"name", doc.name}, {"kind", to_string(kind)}, {"dim", doc.dim}, {"identities", identities_json(a)}};
  std::optional<Triple> failure;
  std::string identity;
  switch (kind) {
    case Kind::Lsa: failure = left_symmetry_violation(a); identity = "left-symmetry"; break;
    case Kind::Rsa: failure = right_symmetry_violation(a); identity = "right-symmetry"; break;
    case Kind::Lie:
      failure = jacobi_violation(a);
      identity = "Jacobi";
      r.result["identities"]["jacobi"] = predicate_json(failure);
      break;
    case Kind::Plain: identity = "none"; break;
  }
  r.result["declared_identity"] = identity;
  r.result["holds"] = !failure;
  if (failure) {
    r.exit_code = kPropertyFailure;
    r.result["witness"] = triple_json(*failure);
    r.text = doc.name + ": " + identity + " fails at " + triple_text(*failure) + "\n";
  } else {
    r.text = doc.name + ": " + identity + (kind == Kind::Plain ? " declared\n" : " holds\n");
  }
  return r;
}

Report cmd_analyze_one(const GlobalOptions& g, const std::string& source) {
  const auto doc = load_document(source);
  const Algebra a = to_algebra(doc);
  if (auto rejected = require_lsa("analyze", a)) return *rejected;
  const ProbeOptions probe{g.seed, g.samples};
  const auto tower = radical_tower(a, probe);
  const auto koszul = koszul_radical(a);
  const auto completeness = is_complete(a, probe);
  const auto clan = clan_check(a, probe);
  const auto verdict = is_simple(a, g.seed);
  const auto sol = solvable_radical(a, probe);
  const auto nil = nil_radical(a, probe);
  const auto fingerprint = structural_fingerprint(a, {g.seed, g.samples, g.degree_cap});

  Json traces = Json::array();
  for (const auto& t : completeness.basis_traces) traces.push_back(to_string(t));
  Json koszul_json = subspace_json(koszul.radical);
  koszul_json["right_ideal"] = koszul.right_ideal;
  koszul_json["two_sided"] = koszul.two_sided;
  koszul_json["status"] = to_string(tower.koszul_status);
  Json trace_json = subspace_json(tower.trace_subspace);
  trace_json["status"] = to_string(tower.trace_status);
  Json form_json = subspace_json(tower.trace_form);
  form_json["status"] = to_string(tower.trace_form_status);
  Json s_members = Json::array();
  for (const auto& v : tower.s_probe_members) s_members.push_back(vector_text(v));

  Report r{"analyze"};
  r.result = {
      {"name", doc.name},
      {"dim", a.dim()},
      {"identities", identities_json(a)},
      {"radicals",
       {{"trace_subspace", trace_json},
        {"koszul", koszul_json},
        {"trace_form", form_json},
        {"solvable", radical_json(sol)},
        {"nil", radical_json(nil)},
        {"inclusions_hold", tower.inclusions_hold},
        {"s_probe", {{"members", s_members.size()}, {"span", subspace_json(Subspace::span(a.dim(), tower.s_probe_members))}}}}},
      {"completeness",
       {{"complete", completeness.complete},
        {"basis_traces", traces},
        {"basis_right_nilpotent", completeness.basis_right_nilpotent},
        {"unit_shift_invertible", completeness.unit_shift_invertible},
        {"unit_shift_checks", completeness.unit_shift_checks}}},
      {"clan",
       {{"form_symmetric", clan.form_symmetric},
        {"form_positive", clan.form_positive},
        {"eigen_real_probe", clan.eigen_real_probe},
        {"unit", clan.unit ? Json(vector_text(*clan.unit)) : Json(nullptr)}}},
      {"simplicity", verdict_json(a, verdict)},
      {"lie", lie_json(commutator_lie(a))},
      {"cohomology", cohomology_json(a, g.degree_cap)},
      {"fingerprint", fingerprint_json(fingerprint)},
      {"probe", {{"seed", g.seed}, {"samples", g.samples}}},
  };
  if (!tower.inclusions_hold) r.exit_code = kPropertyFailure;
  return r;
}

std::vector<Report> cmd_analyze(const GlobalOptions& g, const std::vector<std::string>& sources,
                                std::size_t threads) {
  std::vector<Report> out(sources.size());
  auto run = [&](std::size_t i) {
    try {
      out[i] = cmd_analyze_one(g, sources[i]);
    } catch (const std::exception& e) {
      out[i] = error_report("analyze", e);
    }
    out[i].result["source"] = sources[i];
  };
  threads = std::max<std::size_t>(1, std::min(threads, sources.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < sources.size(); ++i) run(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < sources.size(); i = next++) run(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

Report cmd_cohomology(const GlobalOptions& g, const std::string& source) {
  const auto doc = load_document(source);
  const Algebra a = to_algebra(doc);
  if (auto rejected = require_lsa("cohomology", a)) return *rejected;
  Report r{"cohomology"};
  r.result = {{"name", doc.name}, {"dim", a.dim()}, {"cohomology", cohomology_json(a, g.degree_cap)},
              {"derivations_dim", derivations(a).dim()}};
  std::ostringstream text;
  text << doc.name << "\n";
  for (const auto& row : r.result["cohomology"])
    text << "H^" << row["degree"].get<std::size_t>() << ": dim C = " << row["dim_c"].get<std::size_t>()
         << ", dim Z = " << row["dim_z"].get<std::size_t>() << ", dim B = " << row["dim_b"].get<std::size_t>()
         << ", dim H = " << row["dim_h"].get<std::size_t>() << "\n";
  text << "dim Der = " << r.result["derivations_dim"].get<std::size_t>() << "\n";
  r.text = text.str();
  return r;
}

Report cmd_simple(const GlobalOptions& g, const std::string& source) {
  const auto doc = load_document(source);
  const Algebra a = to_algebra(doc);
  const auto v = is_simple(a, g.seed);
  Report r{"simple"};
  r.result = verdict_json(a, v);
  r.result["name"] = doc.name;
  r.result["dim"] = a.dim();
  std::string text = doc.name + ": " + to_string(v.verdict) + "\n";
  if (v.witness) text += "proper ideal: " + r.result["witness"]["span"].get<std::string>() + "\n";
  if (v.certificate)
    text += "certificate: element #" + std::to_string(v.certificate->schedule_index) + ", factor " +
            to_string(v.certificate->factor) + ", kernel dim " + std::to_string(v.certificate->kernel_dim) +
            (r.result["certificate"]["verified"].get<bool>() ? " (verified)\n" : " (NOT verified)\n");
  if (!v.note.empty()) text += "note: " + v.note + "\n";
  r.text = text;
  if (v.certificate && !r.result["certificate"]["verified"].get<bool>()) r.exit_code = kInternal;
  return r;
}

Report cmd_mu(const GlobalOptions&, const MuArgs& args) {
  Report r{"mu"};
  std::string text;
  bool any = false;
  if (!ints_or_empty(args.pair, 2, "--pair").empty()) {
    any = true;
    const auto b = mu_bound_report(args.pair[0], args.pair[1]);
    r.result["pair"] = {{"n", b.n},
                        {"k", b.k},
                        {"reed", b.reed.get_str()},
                        {"de_graaf", b.de_graaf.get_str()},
                        {"p", b.p.get_str()},
                        {"ordered", b.ordered}};
    text += b.reed.get_str() + " " + b.de_graaf.get_str() + " " + b.p.get_str() + "\n";
  }
  if (args.table) {
    any = true;
    const MuTable table(*args.table);
    Json rows = Json::array();
    for (std::size_t n = 1; n <= table.n_max(); ++n) {
      Json p = Json::array(), b = Json::array(), reed = Json::array();
      for (std::size_t k = 1; k <= n; ++k) {
        p.push_back(table.p(n, k).get_str());
        b.push_back(table.b(n, k).get_str());
        reed.push_back(table.reed(n, k).get_str());
      }
      rows.push_back({{"n", n}, {"p", p}, {"b", b}, {"reed", reed}});
      text += "n=" + std::to_string(n) + " p:";
      for (const auto& x : p) text += " " + x.get<std::string>();
      text += "\n";
    }
    Json parts = Json::array();
    for (const auto& x : table.partitions()) parts.push_back(x.get_str());
    const auto violation = table.recursion_violation();
    r.result["table"] = {{"rows", rows}, {"partitions", parts}, {"recursion_holds", !violation}};
    if (violation) r.exit_code = kPropertyFailure;
  }
  if (!args.unimodal.empty()) {
    any = true;
    if (args.unimodal.size() > 2) throw DomainError("--unimodal expects N or LO HI");
    const std::size_t lo = args.unimodal[0];
    const std::size_t hi = args.unimodal.size() == 2 ? args.unimodal[1] : lo;
    if (lo > hi) throw DomainError("--unimodal range is empty");
    Json rows = Json::array();
    bool all = true;
    for (std::size_t n = lo; n <= hi; ++n) {
      const auto u = unimodality_check(n);
      Json values = Json::array();
      for (const auto& x : u.values) values.push_back(x.get_str());
      rows.push_back({{"n", n}, {"peak", u.peak}, {"monotone_up", u.monotone_up},
                      {"monotone_down", u.monotone_down}, {"values", values}});
      all = all && u.holds();
    }
    r.result["unimodality"] = {{"rows", rows}, {"all_hold", all}};
    text += "unimodality n=" + std::to_string(lo) + ".." + std::to_string(hi) + ": " + (all ? "holds" : "FAILS") + "\n";
    if (!all) r.exit_code = kPropertyFailure;
  }
  if (!ints_or_empty(args.asymptotic, 2, "--asymptotic").empty()) {
    any = true;
    const auto rep = asymptotic_bounds_check(args.asymptotic[0], args.asymptotic[1]);
    Json families = Json::object();
    for (BoundFamily f : {BoundFamily::TwoPower, BoundFamily::ExpDiagonal, BoundFamily::ExpSubdiagonal,
                          BoundFamily::PartialProduct}) {
      bool holds = true;
      for (const auto& c : rep.checks)
        if (c.family == f && !c.holds) holds = false;
      families[to_string(f)] = {{"checked", rep.count(f)}, {"holds", holds}};
      text += to_string(f) + ": " + std::to_string(rep.count(f)) + " checks, " + (holds ? "all hold" : "FAILURES") + "\n";
    }
    Json enclosures = Json::array();
    Json failures = Json::array();
    for (const auto& c : rep.checks) {
      Json row = {{"family", to_string(c.family)}, {"n", c.n}, {"k", c.k}, {"lhs", c.lhs.get_str()},
                  {"exact", c.exact}, {"holds", c.holds}};
      if (!c.rhs_lower.empty()) {
        row["interval_lower"] = c.rhs_lower;
        row["interval_upper"] = c.rhs_upper;
        row["precision_bits"] = c.precision;
      }
      if (c.family == BoundFamily::ExpDiagonal || c.family == BoundFamily::ExpSubdiagonal) enclosures.push_back(row);
      if (!c.holds) failures.push_back(row);
    }
    r.result["asymptotic"] = {{"n_lo", rep.n_lo}, {"n_hi", rep.n_hi}, {"families", families},
                              {"exponential_enclosures", enclosures}, {"failures", failures},
                              {"all_hold", rep.all_hold()}};
    if (!rep.all_hold()) r.exit_code = kPropertyFailure;
  }
  if (!args.formula.empty()) {
    any = true;
    if (args.formula.size() != 2) throw DomainError("--formula expects KIND PARAMETER");
    std::size_t param = 0;
    try {
      param = std::stoul(args.formula[1]);
    } catch (const std::exception&) {
      throw DomainError("--formula parameter must be a positive integer");
    }
    const auto f = mu_formula(parse_mu_kind(args.formula[0]), param);
    Json j = {{"kind", to_string(f.kind)}, {"parameter", f.parameter}, {"value", f.value}};
    if (!f.witness.empty())
      j["witness"] = {{"degree", f.witness.front().rows()}, {"dimension", f.witness.size()}};
    r.result["formula"] = j;
    text += to_string(f.kind) + "(" + std::to_string(param) + ") = " + std::to_string(f.value) + "\n";
  }
  if (!any) throw DomainError("mu needs one of --pair, --table, --unimodal, --asymptotic, --formula");
  r.text = text;
  return r;
}

Report cmd_trees(const GlobalOptions&, const TreeArgs& args) {
  Report r{"trees"};
  std::string text;
  bool any = false;
  auto trees = [](const std::vector<std::string>& v) {
    std::vector<RootedTree> out;
    for (const auto& s : v) out.push_back(parse_tree(s));
    return out;
  };
  if (args.count) {
    any = true;
    const auto n = enumerate_trees(*args.count).size();
    r.result["count"] = {{"order", *args.count}, {"trees", n}};
    text += std::to_string(n) + "\n";
  }
  if (args.list) {
    any = true;
    Json list = Json::array();
    for (const auto& t : enumerate_trees(*args.list)) {
      list.push_back(to_string(t));
      text += to_string(t) + "\n";
    }
    r.result["list"] = list;
  }
  auto binary = [&](const std::vector<std::string>& v, const char* key, auto op) {
    if (v.empty()) return;
    if (v.size() != 2) throw DomainError(std::string("--") + key + " expects two trees");
    any = true;
    const auto t = trees(v);
    const std::string s = op(t[0], t[1]);
    r.result[key] = s;
    text += s + "\n";
  };
  binary(args.graft, "graft", [](const RootedTree& a, const RootedTree& b) { return to_string(graft_product(a, b)); });
  binary(args.bullet, "bullet", [](const RootedTree& a, const RootedTree& b) { return to_string(labelled_bullet(a, b)); });
  binary(args.circ, "circ", [](const RootedTree& a, const RootedTree& b) { return to_string(labelled_circ(a, b)); });
  if (!args.assoc.empty()) {
    if (args.assoc.size() != 3) throw DomainError("--assoc expects three trees");
    any = true;
    const auto t = trees(args.assoc);
    const auto s = to_string(graft_associator(TreeSum(t[0]), TreeSum(t[1]), TreeSum(t[2])));
    r.result["assoc"] = s;
    text += s + "\n";
  }
  if (!any) throw DomainError("trees needs one of --count, --list, --graft, --assoc, --bullet, --circ");
  r.text = text;
  return r;
}

Report cmd_words(const GlobalOptions&, const WordArgs& args) {
  Report r{"words"};
  std::string text;
  bool any = false;
  if (!args.prod.empty()) {
    if (args.prod.size() != 2) throw DomainError("--prod expects two words");
    any = true;
    const Word x = parse_word(args.prod[0]), y = parse_word(args.prod[1]);
    const std::string s = format_terms(insertion_terms(x, y), args.pretty);
    r.result["prod"] = {{"x", format_word(x, args.pretty)}, {"y", format_word(y, args.pretty)}, {"value", s}};
    text += s + "\n";
  }
  if (!args.assoc.empty()) {
    if (args.assoc.size() != 3) throw DomainError("--assoc expects three words");
    any = true;
    const auto s = to_string(word_associator(WordSum(parse_word(args.assoc[0])), WordSum(parse_word(args.assoc[1])),
                                             WordSum(parse_word(args.assoc[2]))),
                             args.pretty);
    r.result["assoc"] = s;
    text += s + "\n";
  }
  if (!any) throw DomainError("words needs --prod X Y or --assoc X Y Z");
  r.text = text;
  return r;
}

Report cmd_witt(const GlobalOptions&, std::size_t nvars, std::size_t cap) {
  Report r{"witt"};
  auto sweep_json = [](const TripleSweep& s) {
    Json j = {{"holds", s.holds}, {"checked", s.checked}, {"skipped", s.skipped}};
    if (s.witness) j["witness"] = Json::array({to_string((*s.witness)[0]), to_string((*s.witness)[1]), to_string((*s.witness)[2])});
    return j;
  };
  const auto closed = check_associator_closed_form(nvars, cap);
  const auto right = check_witt_right_symmetry(nvars, cap);
  const auto novikov = check_novikov_truncated(nvars, cap);
  const auto bracket = check_witt_bracket(nvars, cap);
  const bool novikov_expected = nvars == 1;
  r.result = {{"nvars", nvars},
              {"cap", cap},
              {"associator_closed_form", sweep_json(closed)},
              {"right_symmetry", sweep_json(right)},
              {"novikov", sweep_json(novikov)},
              {"novikov_expected", novikov_expected},
              {"commutator_bracket", sweep_json(bracket)}};
  if (!closed.holds || !right.holds || !bracket.holds || novikov.holds != novikov_expected)
    r.exit_code = kPropertyFailure;
  return r;
}

Report cmd_catalog(const GlobalOptions& g, const std::string& action, const std::vector<std::string>& names) {
  Report r{"catalog"};
  if (action == "list") {
    Json list = Json::array();
    std::string text;
    for (const auto& d : catalog()) {
      list.push_back({{"name", d.name}, {"kind", to_string(d.kind)}, {"dim", d.dim}});
      text += d.name + "\t" + to_string(d.kind) + "\t" + std::to_string(d.dim) + "\n";
    }
    r.result["algebras"] = list;
    r.text = text;
    return r;
  }
  if (action == "dump") {
    if (names.empty()) {
      r.text = serialize(catalog());
    } else if (names.size() == 1) {
      r.text = serialize(catalog_entry(names.front()));
    } else {
      std::vector<AlgebraDocument> docs;
      for (const auto& n : names) docs.push_back(catalog_entry(n));
      r.text = serialize(docs);
    }
    r.result["document"] = Json::parse(r.text);
    if (g.json) r.text.clear();
    return r;
  }
  throw DomainError("catalog action must be 'list' or 'dump'");
}

Report error_report(const std::string& command, const std::exception& e) {
  Report r{command};
  r.result = {{"error", e.what()}};
  if (const auto* v = dynamic_cast<const IdentityViolation*>(&e)) {
    r.exit_code = kPropertyFailure;
    r.result["witness"] = triple_json(Triple{v->i(), v->j(), v->k()});
  } else if (dynamic_cast<const InternalInconsistency*>(&e)) {
    r.exit_code = kInternal;
    r.result["error_kind"] = "internal-inconsistency";
  } else if (dynamic_cast<const ParseError*>(&e)) {
    r.exit_code = kUsage;
    r.result["error_kind"] = "parse";
  } else if (dynamic_cast<const Error*>(&e)) {
    r.exit_code = kUsage;
    r.result["error_kind"] = dynamic_cast<const DimensionError*>(&e) ? "dimension" : "domain";
  } else {
    r.exit_code = kInternal;
    r.result["error_kind"] = "unexpected";
  }
  r.text = "lsawb " + command + ": error: " + e.what() + "\n";
  return r;
}

}  // namespace lsawb::cli
