#pragma once

#include <span>
#include <string>
#include <variant>

#include "genform/generalized.hpp"

namespace genform {

// Any object the calculus manipulates. Scalar fields are degree-0 ordinary forms.
using Value = std::variant<OrdinaryForm, VectorField, GeneralizedForm, GeneralizedVector>;

enum class ValueKind { form, vector, gform, gvector };

inline ValueKind kind_of(const Value& v) { return static_cast<ValueKind>(v.index()); }
const char* kind_name(ValueKind kind);
const ChartRef& chart_of(const Value& v);
bool is_zero(const Value& v);

// Canonical DSL text. Polynomials list terms in graded order, forms list basis
// keys in increasing order, and negative leading coefficients are explicit ("-1*dx").
std::string format(const ScalarField& f);
std::string format(const OrdinaryForm& a);
std::string format(const VectorField& v);
std::string format(const GeneralizedForm& a);
std::string format(const GeneralizedVector& v);
// Like the overloads above, except a standalone zero vector renders as "0*@x" so that
// it re-parses as a vector.
std::string format(const Value& v);
// "chart x, y k=1"
std::string format(const Chart& chart);

// Substitutes a point into every coefficient; the result has constant coefficients.
ScalarField evaluate_at(const ScalarField& f, std::span<const Rational> point);
Value evaluate_at(const Value& v, std::span<const Rational> point);

}  // namespace genform
