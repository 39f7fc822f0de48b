#include "pcval/seq_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pcval {

namespace {

using nlohmann::json;

Rational rat_field(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("missing field '") + key + "'", 0);
  if (!j.at(key).is_string())
    throw parse_error(std::string("field '") + key + "' must be a \"p/q\" string", 0);
  return parse_rational(j.at(key).get<std::string>());
}

std::string str_field(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("missing field '") + key + "'", 0);
  if (!j.at(key).is_string())
    throw parse_error(std::string("field '") + key + "' must be a string", 0);
  return j.at(key).get<std::string>();
}

GaugeSpec parse_gauge(const json& j) {
  std::string kind = str_field(j, "kind");
  if (!j.contains("params") || !j.at("params").is_object())
    throw parse_error("gauge needs a params object", 0);
  const json& p = j.at("params");
  if (kind == "dyadic") return GaugeSpec::dyadic(rat_field(p, "limit"), rat_field(p, "scale"));
  if (kind == "linear") return GaugeSpec::linear(rat_field(p, "slope"));
  if (kind == "quad_irr") {
    Breadth b = Breadth::parse(str_field(p, "target"));
    if (!b.is_quad_irr()) throw parse_error("quad_irr gauge target must be irrational", 0);
    return GaugeSpec::quad_irr(b.quad_irr());
  }
  throw parse_error("unknown gauge kind '" + kind + "'", 0);
}

std::string kind_key(SeqKind k) {
  switch (k) {
    case SeqKind::single_term: return "single_term";
    case SeqKind::partial_sum: return "partial_sum";
    case SeqKind::cauchy_to_k: return "cauchy_to_k";
    case SeqKind::cauchy_series: return "cauchy_series";
  }
  return "?";
}

json gauge_json(const GaugeSpec& g) {
  json j;
  if (g.is_dyadic()) {
    j["kind"] = "dyadic";
    j["params"] = {{"limit", format_rational(g.dyadic_params().limit)},
                   {"scale", format_rational(g.dyadic_params().scale)}};
  } else if (g.is_linear()) {
    j["kind"] = "linear";
    j["params"] = {{"slope", format_rational(g.linear_params().slope)}};
  } else {
    j["kind"] = "quad_irr";
    j["params"] = {{"target", g.quad_irr_params().target.to_string()}};
  }
  return j;
}

}  // namespace

PCSeq parse_sequence_spec(const std::string& text, const std::string& name, const Backend& b,
                          long max_index) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("sequence spec is not valid JSON: ") + e.what(), 0);
  }
  if (!j.is_object()) throw parse_error("sequence spec must be a JSON object", 0);

  std::string kind = str_field(j, "kind");
  for (SeqKind k : {SeqKind::single_term, SeqKind::partial_sum, SeqKind::cauchy_to_k,
                    SeqKind::cauchy_series})
    if (kind == to_string(k)) kind = kind_key(k);
  PCSeq seq = [&]() -> PCSeq {
    if (kind == "single_term") {
      FieldElem beta = j.contains("beta") ? FieldElem::parse(str_field(j, "beta"), b)
                                          : FieldElem::parse("0", b);
      if (!j.contains("gauge")) throw parse_error("missing field 'gauge'", 0);
      return PCSeq::single_term(name, std::move(beta), parse_gauge(j.at("gauge")), b, max_index);
    }
    if (kind == "partial_sum") {
      if (!j.contains("gauge")) throw parse_error("missing field 'gauge'", 0);
      return PCSeq::partial_sum(name, parse_gauge(j.at("gauge")), b, max_index);
    }
    if (kind == "cauchy_to_k") {
      FieldElem beta = FieldElem::parse(str_field(j, "beta"), b);
      Rational slope(1);
      if (j.contains("gauge")) {
        GaugeSpec g = parse_gauge(j.at("gauge"));
        if (!g.is_linear())
          throw parse_error("cauchy_to_k takes a linear gauge", 0);
        slope = g.linear_params().slope;
      }
      return PCSeq::cauchy_to_k(name, std::move(beta), slope, b, max_index);
    }
    if (kind == "cauchy_series") {
      Rational a = rat_field(j, "binom_exponent");
      std::optional<RationalFunction> mp;
      if (j.contains("minimal_polynomial"))
        mp = RationalFunction::parse(str_field(j, "minimal_polynomial"), b);
      return PCSeq::cauchy_series(name, a, b, std::move(mp), max_index);
    }
    throw parse_error("unknown sequence kind '" + kind + "'", 0);
  }();

  if (j.contains("declared_type")) {
    std::string want = str_field(j, "declared_type");
    if (want != to_string(seq.declared_type()))
      throw precondition_error("declared_type '" + want + "' does not match kind '" + kind +
                               "' (which is " + to_string(seq.declared_type()) + ")");
  }
  return seq;
}

PCSeq load_sequence_spec(const std::string& path, const Backend& b, long max_index) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open sequence spec '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence_spec(buf.str(), std::filesystem::path(path).stem().string(), b, max_index);
}

std::string sequence_spec_text(const PCSeq& e) {
  json j;
  j["kind"] = kind_key(e.kind());
  j["declared_type"] = to_string(e.declared_type());
  if (e.kind() != SeqKind::cauchy_series) j["gauge"] = gauge_json(e.gauge_spec());
  if (e.pseudo_limit() && e.kind() != SeqKind::cauchy_series)
    j["beta"] = e.pseudo_limit()->to_string();
  if (e.binom_exponent()) j["binom_exponent"] = format_rational(*e.binom_exponent());
  if (e.minimal_polynomial()) j["minimal_polynomial"] = e.minimal_polynomial()->to_string();
  return j.dump(2) + "\n";
}

void save_sequence_spec(const PCSeq& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write sequence spec '" + path + "'", 0);
  out << sequence_spec_text(e);
}

}  // namespace pcval
