#pragma once

#include <nlohmann/json.hpp>

#include "bjq/numeric.hpp"
#include "bjq/quantize.hpp"

namespace bjq {

using nlohmann::json;

// Exact term-list forms; rationals travel as "num/den" strings so round
// trips are bit-exact.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json ncpoly_to_json(const NCPolynomial& p);
NCPolynomial ncpoly_from_json(const json& j);

json phasepoly_to_json(const PhasePolynomial& p);
PhasePolynomial phasepoly_from_json(const json& j);

/// Parses the canonical text form emitted by NCPolynomial::to_string.
/// The text of a normal form reads unambiguously as a commutative
/// expression, so this goes through the observable grammar and reinterprets
/// each exponent pair as a normal-ordered monomial.
NCPolynomial ncpoly_from_text(const std::string& text, int n);

json gvh_report_to_json(const GvhReport& report);

json wavefunction_to_json(const numeric::Wavefunction& psi);
numeric::Wavefunction wavefunction_from_json(const json& j);

json phase_samples_to_json(const numeric::PhaseSamples& h);
numeric::PhaseSamples phase_samples_from_json(const json& j);

}  // namespace bjq
