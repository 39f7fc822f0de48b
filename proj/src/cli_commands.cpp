#include "pcval/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcval/oracle.hpp"
#include "pcval/seq_io.hpp"
#include "pcval/topology.hpp"

namespace pcval::cli {

namespace {

using nlohmann::json;

struct Flags {
  std::string backend, format;
  long max_index = 0;  // 0 = inherit from session config
  long depth = 0;
  std::string seq, seq2, fn, center = "0", at, ring = "v";
  std::string target, gamma, delta, theta1, theta2;
  long index = -2;  // -2 = not given
  std::vector<std::string> fns, samples;
};

Backend parse_backend(const std::string& text) {
  if (text == "q" || text == "Q") return Backend::q();
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(text.substr(3), &used);
      if (used != text.size() - 3) throw std::invalid_argument("trailing characters");
    } catch (const std::logic_error&) {
      throw parse_error("backend must be q or fp:<p>", 0);
    }
    try {
      return Backend::fp(p);
    } catch (const std::invalid_argument& e) {
      throw precondition_error(std::string("backend: ") + e.what());
    }
  }
  throw parse_error("backend must be q or fp:<p>", 0);
}

bool known_fixture(const std::string& name) {
  for (const auto& [n, d] : PCSeq::fixture_catalog())
    if (n == name) return true;
  return false;
}

PCSeq resolve_seq(const std::string& spec, const Backend& b, long max_index) {
  if (!spec.empty() && spec[0] == '@') return load_sequence_spec(spec.substr(1), b, max_index);
  if (!known_fixture(spec)) throw parse_error("unknown sequence '" + spec + "' (use E1..E5 or @file)", 0);
  return PCSeq::fixture(spec, b, max_index);
}

json group_json(const GroupValue& g) {
  return json{{"q", format_rational(g.rational_part())},
              {"m", g.delta_coeff()},
              {"delta", g.delta().to_string()}};
}

json we_json(const WEValue& w) {
  if (w.kind == WEValue::Kind::finite) return group_json(w.value);
  return json{{"kind", w.kind == WEValue::Kind::plus_infinite ? "+inf" : "-inf"},
              {"socle", w.socle},
              {"order", w.socle_order}};
}

json ve_json(const VeValue& v) {
  switch (v.kind()) {
    case VeValue::Kind::rank1:
      return group_json(v.group());
    case VeValue::Kind::rank2:
      return json::array({group_json(v.pair().first()), v.pair().second()});
    case VeValue::Kind::at_limit:
      return json{{"at_limit", v.limit_value().to_string()}};
    case VeValue::Kind::profile:
      return json{{"lambda", v.lambda()}, {"gamma", format_rational(v.gamma())}};
  }
  return json{};
}

const char* criterion_name(EquivReport::Criterion c) {
  switch (c) {
    case EquivReport::Criterion::breadth_mismatch: return "breadth_mismatch";
    case EquivReport::Criterion::ball_match: return "ball_match";
    case EquivReport::Criterion::ball_mismatch: return "ball_mismatch";
    case EquivReport::Criterion::limit_kind_mismatch: return "limit_kind_mismatch";
    case EquivReport::Criterion::series_limits: return "series_limits";
    case EquivReport::Criterion::definitional: return "definitional";
  }
  return "";
}

const char* reason_name(RankReport::Reason r) {
  switch (r) {
    case RankReport::Reason::transcendental: return "transcendental";
    case RankReport::Reason::infinite_breadth: return "infinite-breadth";
    case RankReport::Reason::torsion: return "torsion";
    case RankReport::Reason::non_torsion: return "non-torsion";
  }
  return "";
}

std::string profile_line(long lambda, const Rational& gamma, long from) {
  std::ostringstream os;
  os << "v(phi(s_n)) = ";
  if (lambda == 0)
    os << format_rational(gamma);
  else {
    if (lambda != 1) os << lambda << "*";
    os << "delta_n";
    if (sgn(gamma) > 0) os << " + " << format_rational(gamma);
    if (sgn(gamma) < 0) os << " - " << format_rational(-gamma);
  }
  os << " for n >= " << from;
  return os.str();
}

/// One command's worth of output: a verdict line shared verbatim between the
/// text and structured renderings, extra text lines, and the structured doc.
struct Report {
  std::string verdict;
  std::vector<std::string> lines;
  json doc = json::object();
  int status = 0;
};

Report cmd_val(const Flags& f, const Backend& b) {
  Report r;
  FieldElem x = FieldElem::parse(f.fn, b);
  r.verdict = "val = " + x.val().to_string();
  r.lines.push_back("elem = " + x.to_string());
  r.doc["elem"] = x.to_string();
  r.doc["val"] = x.val().to_string();
  return r;
}

Report cmd_eval(const Flags& f, const Backend& b, long max_index) {
  Report r;
  RationalFunction phi = RationalFunction::parse(f.fn, b);
  FieldElem x;
  if (!f.at.empty())
    x = FieldElem::parse(f.at, b);
  else if (!f.seq.empty() && f.index >= 0)
    x = resolve_seq(f.seq, b, max_index).term(f.index).value;
  else
    throw parse_error("eval needs --at <elem> or --seq <s> --index <n>", 0);
  r.doc["phi"] = phi.to_string();
  r.doc["at"] = x.to_string();
  try {
    FieldElem y = phi.eval(x);
    r.verdict = "value = " + y.to_string();
    r.lines.push_back("val = " + y.val().to_string());
    r.doc["pole"] = false;
    r.doc["value"] = y.to_string();
    r.doc["val"] = y.val().to_string();
  } catch (const pole_error&) {
    r.verdict = "pole at " + x.to_string();
    r.doc["pole"] = true;
  }
  return r;
}

Report cmd_profile(const Flags& f, const Backend& b, long max_index) {
  Report r;
  PCSeq e = resolve_seq(f.seq, b, max_index);
  ValueProfile vp = value_profile(RationalFunction::parse(f.fn, b), e);
  r.doc["lambda"] = vp.lambda;
  r.doc["gamma"] = format_rational(vp.gamma);
  r.doc["from_index"] = vp.from_index;
  r.doc["certified"] = vp.certified;
  if (!vp.certified) {
    r.verdict = "uncertified: " + vp.detail;
    r.doc["detail"] = vp.detail;
    r.status = 4;
    return r;
  }
  r.verdict = profile_line(vp.lambda, vp.gamma, vp.from_index);
  return r;
}

Report cmd_degdom(const Flags& f, const Backend& b, long max_index) {
  Report r;
  PCSeq e = resolve_seq(f.seq, b, max_index);
  Degdom d = degdom(RationalFunction::parse(f.fn, b), e);
  r.verdict = "degdom = " + std::to_string(d.value);
  r.doc["value"] = d.value;
  r.doc["certified"] = d.certified;
  r.doc["certified_at"] = d.certified_at;
  if (d.certified)
    r.lines.push_back("certified at n = " + std::to_string(d.certified_at));
  else {
    r.verdict += " (uncertified)";
    r.status = 4;
  }
  return r;
}

Report cmd_we(const Flags& f, const Backend& b, long max_index) {
  Report r;
  PCSeq e = resolve_seq(f.seq, b, max_index);
  WEValue w = w_e(RationalFunction::parse(f.fn, b), e);
  r.verdict = "w_E = " + w.to_string();
  r.doc["value"] = we_json(w);
  r.doc["certified"] = w.certified;
  if (!w.detail.empty()) r.doc["detail"] = w.detail;
  if (!w.certified) {
    r.verdict += " (uncertified: " + w.detail + ")";
    r.status = 4;
  }
  return r;
}

Report cmd_ve(const Flags& f, const Backend& b, long max_index) {
  Report r;
  PCSeq e = resolve_seq(f.seq, b, max_index);
  RationalFunction phi = RationalFunction::parse(f.fn, b);
  VeValue v = v_e(phi, e);
  MemberVerdict m = member(phi, e, RingSide::V);
  r.verdict = v.to_string() + (m.value ? " => in V_E" : " => NOT in V_E");
  r.doc["value"] = ve_json(v);
  r.doc["in_v"] = m.value;
  r.doc["certified"] = v.certified && m.certified;
  if (!v.certified || !m.certified) r.status = 4;
  return r;
}

Report cmd_member(const Flags& f, const Backend& b, long max_index) {
  Report r;
  if (f.ring != "v" && f.ring != "w") throw parse_error("--ring must be v or w", 0);
  PCSeq e = resolve_seq(f.seq, b, max_index);
  RingSide side = f.ring == "v" ? RingSide::V : RingSide::W;
  MemberVerdict m = member(RationalFunction::parse(f.fn, b), e, side);
  std::string ring = side == RingSide::V ? "V_E" : "W_E";
  r.verdict = "in " + ring + ": " + (m.value ? "yes" : "no");
  r.doc["ring"] = f.ring;
  r.doc["value"] = m.value;
  r.doc["certified"] = m.certified;
  if (!m.detail.empty()) {
    r.lines.push_back(m.detail);
    r.doc["detail"] = m.detail;
  }
  if (!m.certified) {
    r.verdict += " (uncertified)";
    r.status = 4;
  }
  return r;
}

Report cmd_rank(const Flags& f, const Backend& b, long max_index) {
  Report r;
  PCSeq e = resolve_seq(f.seq, b, max_index);
  RankReport rr = rank_report(e);
  r.verdict = rr.to_string();
  r.doc["rank"] = rr.rank;
  r.doc["reason"] = reason_name(rr.reason);
  if (!rr.notes_delta.empty()) r.doc["delta"] = rr.notes_delta;
  if (rr.minimal_polynomial) {
    r.lines.push_back("minimal polynomial: " + rr.minimal_polynomial->to_string());
    r.doc["minimal_polynomial"] = rr.minimal_polynomial->to_string();
  }
  if (!rr.overring.empty()) {
    r.lines.push_back("overring: " + rr.overring);
    r.doc["overring"] = rr.overring;
  }
  if (rr.witness) {
    r.lines.push_back("witness in W_E minus V_E: " + rr.witness->to_string());
    r.doc["witness"] = rr.witness->to_string();
  }
  if (!rr.notes.empty()) {
    r.lines.push_back(rr.notes);
    r.doc["notes"] = rr.notes;
  }
  return r;
}

Report cmd_equiv(const Flags& f, const Backend& b, long max_index, long depth) {
  Report r;
  PCSeq e = resolve_seq(f.seq, b, max_index);
  PCSeq g = resolve_seq(f.seq2, b, max_index);
  EquivReport er = equivalent(e, g, depth);
  std::string why = er.detail.empty() ? criterion_name(er.criterion) : er.detail;
  r.verdict = std::string(er.value ? "equivalent" : "not equivalent") + " (" + why + ")";
  r.doc["value"] = er.value;
  r.doc["criterion"] = criterion_name(er.criterion);
  r.doc["detail"] = er.detail;
  if (er.criterion == EquivReport::Criterion::definitional) r.status = 4;
  return r;
}

Report cmd_monomial(const Flags& f, const Backend& b) {
  Report r;
  RationalFunction phi = RationalFunction::parse(f.fn, b);
  FieldElem center = FieldElem::parse(f.center, b);
  Breadth delta = Breadth::parse(f.delta);
  MonomialVal mv = monomial_val(phi, center, delta);
  r.verdict = "w = " + mv.value.to_string();
  r.doc["value"] = group_json(mv.value);
  r.doc["num_argmin"] = mv.num_argmin;
  r.doc["den_argmin"] = mv.den_argmin;
  std::ostringstream os;
  os << "minimum attained at numerator coefficients [";
  for (std::size_t i = 0; i < mv.num_argmin.size(); ++i) os << (i ? " " : "") << mv.num_argmin[i];
  os << "], denominator [";
  for (std::size_t i = 0; i < mv.den_argmin.size(); ++i) os << (i ? " " : "") << mv.den_argmin[i];
  os << "]";
  r.lines.push_back(os.str());
  return r;
}

std::string law_text(long lambda, const Rational& gamma) {
  std::ostringstream os;
  if (lambda == 0) return format_rational(gamma);
  if (lambda != 1) os << lambda << "*";
  os << "theta";
  if (sgn(gamma) > 0) os << " + " << format_rational(gamma);
  if (sgn(gamma) < 0) os << " - " << format_rational(-gamma);
  return os.str();
}

Report cmd_annulus(const Flags& f, const Backend& b, long max_index) {
  Report r;
  RationalFunction phi = RationalFunction::parse(f.fn, b);
  if (!f.seq.empty()) {
    PCSeq e = resolve_seq(f.seq, b, max_index);
    StableAnnulus sa = stable_annulus(phi, e);
    r.verdict = "v(phi(x)) = " + law_text(sa.lambda, sa.gamma) + " for theta = v(x - beta) in (" +
                format_rational(sa.delta_prime) + ", " + e.breadth().to_string() + ")";
    r.doc["lambda"] = sa.lambda;
    r.doc["gamma"] = format_rational(sa.gamma);
    r.doc["delta_prime"] = format_rational(sa.delta_prime);
    r.doc["upper"] = e.breadth().to_string();
    return r;
  }
  if (f.theta1.empty() || f.theta2.empty())
    throw parse_error("annulus needs --seq or --center with --theta1/--theta2", 0);
  FieldElem s = FieldElem::parse(f.center, b);
  Rational t1 = parse_rational(f.theta1);
  ExtRat t2 = f.theta2 == "inf" ? ExtRat::infinity() : ExtRat(parse_rational(f.theta2));
  AnnulusLaw law = annulus_law(phi, s, t1, t2);
  r.verdict = "v(phi(x)) = " + law_text(law.lambda, law.gamma) + " for theta = v(x - s) in (" +
              format_rational(t1) + ", " + t2.to_string() + ")";
  r.doc["lambda"] = law.lambda;
  r.doc["gamma"] = format_rational(law.gamma);
  r.doc["theta1"] = format_rational(t1);
  r.doc["theta2"] = t2.to_string();
  return r;
}

Report cmd_omega(const Flags& f, const Backend& b, long max_index) {
  Report r;
  PCSeq e = resolve_seq(f.seq, b, max_index);
  FieldElem s = FieldElem::parse(f.center, b);
  Rational gamma = parse_rational(f.gamma);
  bool in = omega_membership(e, s, gamma);
  OmegaSet set{s, gamma};
  RationalFunction w = omega_witness_function(s, gamma, b);
  bool agree = in_B(w, RingDescriptor::ve(e)) == in;
  r.verdict = "V_E in " + set.to_string() + ": " + (in ? "yes" : "no");
  r.lines.push_back("equal to B(" + w.to_string() + "): " + (agree ? "agree at E" : "DISAGREE at E"));
  r.doc["member"] = in;
  r.doc["s"] = s.to_string();
  r.doc["gamma"] = format_rational(gamma);
  r.doc["witness_fn"] = w.to_string();
  r.doc["agree"] = agree;
  return r;
}

Report cmd_converge(const Flags& f, const Backend& b, long max_index, long depth) {
  Report r;
  PCSeq e = resolve_seq(f.seq, b, max_index);
  if (f.fns.empty()) throw parse_error("converge needs at least one --fn", 0);
  std::vector<RationalFunction> fns;
  for (const std::string& t : f.fns) fns.push_back(RationalFunction::parse(t, b));
  ConvergenceReport rep = convergence_scan(e, fns, depth);
  if (!rep.all_decided) {
    r.verdict = "undecided at depth " + std::to_string(rep.depth);
    r.status = 4;
  } else {
    r.verdict = std::string("converges to the limit verdicts: ") + (rep.all_match ? "yes" : "no") +
                " (depth " + std::to_string(rep.depth) + ")";
  }
  r.lines.push_back(rep.to_string());
  r.doc["depth"] = rep.depth;
  r.doc["all_match"] = rep.all_match;
  r.doc["all_decided"] = rep.all_decided;
  json rows = json::array();
  for (const ConvergenceRow& row : rep.rows)
    rows.push_back(json{{"fn", row.fn},
                        {"stable_value", row.stable_value},
                        {"stable_from", row.stable_from},
                        {"undecided", row.undecided},
                        {"limit_value", row.limit_value},
                        {"matches", row.matches},
                        {"poles", row.poles}});
  r.doc["rows"] = rows;
  return r;
}

Report cmd_enumerate(const Flags& f, const Backend& b) {
  Report r;
  RationalFunction phi = RationalFunction::parse(f.fn, b);
  Rational target = parse_rational(f.target);
  FieldElem center = FieldElem::parse(f.center, b);
  std::vector<IncreasingCandidate> cs = enumerate_increasing(phi, target, center);
  r.verdict = std::to_string(cs.size()) + " candidate breadth(s) hit the target " +
              format_rational(target);
  json arr = json::array();
  for (const IncreasingCandidate& c : cs) {
    std::ostringstream os;
    os << "delta = " << format_rational(c.delta) << " at center " << c.center.to_string()
       << " (lambda " << c.lambda << ", gamma " << format_rational(c.gamma) << ", interval "
       << c.interval << ")";
    r.lines.push_back(os.str());
    arr.push_back(json{{"center", c.center.to_string()},
                       {"delta", format_rational(c.delta)},
                       {"lambda", c.lambda},
                       {"gamma", format_rational(c.gamma)},
                       {"interval", c.interval}});
  }
  r.doc["candidates"] = arr;
  return r;
}

Report cmd_separate(const Flags& f, const Backend& b, long max_index) {
  Report r;
  PCSeq e = resolve_seq(f.seq, b, max_index);
  std::vector<RationalFunction> fns;
  for (const std::string& t : f.fns) fns.push_back(RationalFunction::parse(t, b));
  std::vector<PCSeq> sample;
  for (const std::string& t : f.samples) sample.push_back(resolve_seq(t, b, max_index));
  SeparationWitness w = separator(e, fns, sample);
  if (w.verified)
    r.verdict = "separated " + std::to_string(sample.size()) + " ring(s) with " +
                std::to_string(w.parts.size()) + " part(s)";
  else {
    r.verdict = "verification failed: " + w.detail;
    r.status = 4;
  }
  r.lines.push_back(w.to_string());
  r.doc["verified"] = w.verified;
  r.doc["detail"] = w.detail;
  json parts = json::array();
  for (const WitnessPart& p : w.parts) {
    json pj{{"kind", p.kind == WitnessPart::Kind::omega ? "omega" : "basic"},
            {"e_inside", p.e_inside},
            {"covers", p.covers},
            {"note", p.note}};
    if (p.omega) pj["omega"] = json{{"s", p.omega->s.to_string()}, {"gamma", format_rational(p.omega->gamma)}};
    json fj = json::array();
    for (const RationalFunction& g : p.fns) fj.push_back(g.to_string());
    pj["fns"] = fj;
    parts.push_back(pj);
  }
  r.doc["parts"] = parts;
  return r;
}

Report cmd_residue_sep(const Flags& f, const Backend& b) {
  Report r;
  FieldElem s = FieldElem::parse(f.center, b);
  Rational delta = parse_rational(f.delta);
  RationalFunction psi = residue_separator(s, delta, b);
  r.verdict = "psi = " + psi.to_string();
  r.lines.push_back("psi(x) in V exactly when v(x - " + s.to_string() + ") < " +
                    format_rational(delta));
  r.doc["psi"] = psi.to_string();
  r.doc["s"] = s.to_string();
  r.doc["delta"] = format_rational(delta);
  r.doc["p"] = b.p;
  return r;
}

Report cmd_intr_check(const Flags& f, const Backend& b, long max_index) {
  Report r;
  RationalFunction phi = RationalFunction::parse(f.fn, b);
  std::vector<PCSeq> sample;
  for (const std::string& t : f.samples) sample.push_back(resolve_seq(t, b, max_index));
  IntRReport rep = intr_consistency(phi, sample);
  r.verdict = std::string("consistent: ") + (rep.consistent ? "yes" : "no");
  r.lines.push_back(rep.to_string());
  r.doc["consistent"] = rep.consistent;
  r.doc["all_probes_member"] = rep.all_probes_member;
  if (!rep.counterexample.empty()) r.doc["counterexample"] = rep.counterexample;
  if (!rep.detail.empty()) r.doc["detail"] = rep.detail;
  return r;
}

Report cmd_fixtures() {
  Report r;
  const auto& cat = PCSeq::fixture_catalog();
  r.verdict = std::to_string(cat.size()) + " fixtures";
  json arr = json::array();
  for (const auto& [name, desc] : cat) {
    r.lines.push_back(name + "  " + desc);
    arr.push_back(json{{"name", name}, {"description", desc}});
  }
  r.doc["fixtures"] = arr;
  return r;
}

void add_session_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--backend", f.backend, "coefficient field: q or fp:<p>");
  sub->add_option("--max-index", f.max_index, "sequence scan bound (>= 8)");
  sub->add_option("--depth", f.depth, "definitional scan depth");
  sub->add_option("--format", f.format, "text or json");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "val",      "eval",      "profile",  "degdom",    "we",        "ve",
      "member",   "rank",      "equiv",    "monomial",  "annulus",   "omega",
      "converge", "enumerate", "separate", "residue-sep", "intr-check", "fixtures"};
  return names;
}

SessionConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open config file '" + path + "'", 0);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error(std::string("config: ") + e.what(), 0);
  }
  SessionConfig cfg;
  if (j.contains("backend")) cfg.backend = parse_backend(j.at("backend").get<std::string>());
  if (j.contains("max_index")) cfg.max_index = j.at("max_index").get<long>();
  if (j.contains("depth")) cfg.depth = j.at("depth").get<long>();
  if (j.contains("format")) {
    std::string fmt = j.at("format").get<std::string>();
    if (fmt != "text" && fmt != "json" && fmt != "structured")
      throw parse_error("config: format must be text or json", 0);
    cfg.json = fmt != "text";
  }
  return cfg;
}

RunResult run(const std::string& command, const std::vector<std::string>& args, SessionConfig cfg) {
  RunResult out;
  Flags f;
  CLI::App app{"pseudo-convergent sequence valuations"};
  app.require_subcommand(1);
  std::string chosen;
  for (const std::string& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, "");
    add_session_flags(sub, f);
    if (name == "val" || name == "eval" || name == "profile" || name == "degdom" ||
        name == "we" || name == "ve" || name == "member" || name == "monomial" ||
        name == "annulus" || name == "enumerate" || name == "intr-check") {
      sub->add_option("--fn", f.fn, "rational function (field element for val)")->required();
    }
    if (name == "converge" || name == "separate")
      sub->add_option("--fn", f.fns, "rational function (repeatable)");
    if (name == "profile" || name == "degdom" || name == "we" || name == "ve" ||
        name == "member" || name == "rank" || name == "equiv" || name == "omega" ||
        name == "converge" || name == "separate")
      sub->add_option("--seq", f.seq, "sequence: fixture name or @file")->required();
    if (name == "eval" || name == "annulus") sub->add_option("--seq", f.seq, "sequence: fixture name or @file");
    if (name == "equiv") sub->add_option("--seq2", f.seq2, "second sequence")->required();
    if (name == "eval") {
      sub->add_option("--at", f.at, "evaluation point (ground-field element)");
      sub->add_option("--index", f.index, "evaluate at sequence term s_n");
    }
    if (name == "monomial" || name == "annulus" || name == "omega" || name == "enumerate" ||
        name == "residue-sep")
      sub->add_option("--center", f.center, "expansion center (default 0)");
    if (name == "monomial") sub->add_option("--delta", f.delta, "weight: rational, a+b*sqrt(d), or inf")->required();
    if (name == "residue-sep") sub->add_option("--delta", f.delta, "exclusion radius (rational)")->required();
    if (name == "annulus") {
      sub->add_option("--theta1", f.theta1, "lower radius");
      sub->add_option("--theta2", f.theta2, "upper radius or inf");
    }
    if (name == "omega") sub->add_option("--gamma", f.gamma, "radius of the omega set")->required();
    if (name == "enumerate") sub->add_option("--target", f.target, "target value")->required();
    if (name == "member") sub->add_option("--ring", f.ring, "v or w (default v)");
    if (name == "separate" || name == "intr-check")
      sub->add_option("--sample", f.samples, "sample sequence (repeatable)");
    sub->callback([&chosen, name] { chosen = name; });
  }

  std::vector<std::string> tokens;
  tokens.push_back(command);
  for (const std::string& a : args) tokens.push_back(a);
  std::reverse(tokens.begin(), tokens.end());

  try {
    try {
      app.parse(tokens);
    } catch (const CLI::CallForHelp&) {
      out.out = app.help();
      return out;
    } catch (const CLI::ParseError& e) {
      throw parse_error(e.what(), 0);
    }

    if (!f.backend.empty()) cfg.backend = parse_backend(f.backend);
    if (f.max_index > 0) cfg.max_index = f.max_index;
    if (f.depth > 0) cfg.depth = f.depth;
    if (!f.format.empty()) {
      if (f.format != "text" && f.format != "json" && f.format != "structured")
        throw parse_error("--format must be text or json", 0);
      cfg.json = f.format != "text";
    }
    if (cfg.max_index < 8) throw precondition_error("max_index must be at least 8");
    if (cfg.depth < 1) throw precondition_error("depth must be positive");

    Report r;
    const Backend& b = cfg.backend;
    if (chosen == "val") r = cmd_val(f, b);
    else if (chosen == "eval") r = cmd_eval(f, b, cfg.max_index);
    else if (chosen == "profile") r = cmd_profile(f, b, cfg.max_index);
    else if (chosen == "degdom") r = cmd_degdom(f, b, cfg.max_index);
    else if (chosen == "we") r = cmd_we(f, b, cfg.max_index);
    else if (chosen == "ve") r = cmd_ve(f, b, cfg.max_index);
    else if (chosen == "member") r = cmd_member(f, b, cfg.max_index);
    else if (chosen == "rank") r = cmd_rank(f, b, cfg.max_index);
    else if (chosen == "equiv") r = cmd_equiv(f, b, cfg.max_index, cfg.depth);
    else if (chosen == "monomial") r = cmd_monomial(f, b);
    else if (chosen == "annulus") r = cmd_annulus(f, b, cfg.max_index);
    else if (chosen == "omega") r = cmd_omega(f, b, cfg.max_index);
    else if (chosen == "converge") r = cmd_converge(f, b, cfg.max_index, cfg.depth);
    else if (chosen == "enumerate") r = cmd_enumerate(f, b);
    else if (chosen == "separate") r = cmd_separate(f, b, cfg.max_index);
    else if (chosen == "residue-sep") r = cmd_residue_sep(f, b);
    else if (chosen == "intr-check") r = cmd_intr_check(f, b, cfg.max_index);
    else if (chosen == "fixtures") r = cmd_fixtures();
    else throw parse_error("unknown command '" + command + "'", 0);

    out.status = r.status;
    if (cfg.json) {
      r.doc["command"] = chosen;
      r.doc["verdict"] = r.verdict;
      r.doc["status"] = r.status;
      out.out = r.doc.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << r.verdict << "\n";
      for (const std::string& line : r.lines) os << line << "\n";
      out.out = os.str();
    }
  } catch (const parse_error& e) {
    out.status = 3;
    out.err = std::string("parse error: ") + e.what() + "\n";
  } catch (const precondition_error& e) {
    out.status = 2;
    out.err = std::string("precondition violated: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    out.status = 2;
    out.err = std::string("precondition violated: ") + e.what() + "\n";
  }
  return out;
}

int main_entry(int argc, const char* const* argv) {
  std::vector<std::string> tokens(argv + 1, argv + argc);
  if (tokens.empty() || tokens[0] == "--help" || tokens[0] == "-h") {
    std::ostream& os = tokens.empty() ? std::cerr : std::cout;
    os << "usage: pcval <command> [flags]\ncommands:";
    for (const std::string& n : command_names()) os << " " << n;
    os << "\nshared flags: --backend q|fp:<p> --max-index N --depth N --format text|json\n";
    return tokens.empty() ? 3 : 0;
  }
  SessionConfig cfg;
  if (const char* path = std::getenv("PCVAL_CONFIG")) {
    try {
      cfg = load_config(path);
    } catch (const parse_error& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return 3;
    }
  }
  RunResult r = run(tokens[0], {tokens.begin() + 1, tokens.end()}, cfg);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}

}  // namespace pcval::cli
