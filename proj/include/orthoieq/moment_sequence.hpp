#ifndef ORTHOIEQ_MOMENT_SEQUENCE_HPP
#define ORTHOIEQ_MOMENT_SEQUENCE_HPP

#include "orthoieq/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace orthoieq {

enum class MomentSource { Analytic, Quadrature, Contour };

std::string to_string(MomentSource source);

/// Moments m_0..m_N of a normalized weight.
template <Field F>
struct MomentSequence {
    std::vector<F> values;
    MomentSource source = MomentSource::Analytic;
    /// Per-entry error estimates (Quadrature source only; empty otherwise).
    std::vector<Real> errors;
    /// Winding number (Contour source only).
    int winding = 0;
    std::string weight_id;

    std::size_t size() const noexcept { return values.size(); }
    const F& operator[](std::size_t n) const { return values.at(n); }

    /// Largest per-entry error estimate; zero for analytic sequences.
    Real max_error() const;
};

/// Throws InsufficientMomentsError unless m holds at least `required` entries.
template <Field F>
void require_moments(const MomentSequence<F>& m, std::size_t required, const char* what);

/// Wraps a plain list as an analytic sequence (tests and hand-built inputs).
template <Field F>
MomentSequence<F> make_moments(std::vector<F> values, std::string id = "custom");

/// Float view of an exact sequence.
MomentSequence<Complex> to_float(const MomentSequence<Rational>& m);

}  // namespace orthoieq

#endif  // ORTHOIEQ_MOMENT_SEQUENCE_HPP
