#pragma once

#include <string>

#include "pcval/pcv.hpp"

namespace pcval {

/// Sequence spec files are JSON key/value trees. Rationals travel as "p/q"
/// strings so values survive round trips bit for bit.
///
/// Fields: kind ("single_term", "partial_sum", "cauchy_to_k", "cauchy_series"),
/// beta (ground-field expression; term kinds with a declared pseudo-limit),
/// gauge {kind: "dyadic"|"quad_irr"|"linear", params: {...}},
/// declared_type (optional; must match the kind when present),
/// minimal_polynomial and binom_exponent (series kind only).
PCSeq parse_sequence_spec(const std::string& text, const std::string& name, const Backend& b,
                          long max_index);

/// Reads the file at path; the sequence is named after the file stem.
PCSeq load_sequence_spec(const std::string& path, const Backend& b, long max_index);

std::string sequence_spec_text(const PCSeq& e);
void save_sequence_spec(const PCSeq& e, const std::string& path);

}  // namespace pcval
