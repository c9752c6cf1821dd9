#include <sstream>

#include "genform/error.hpp"
#include "genform/value.hpp"

namespace genform {

const char* kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::form: return "form";
    case ValueKind::vector: return "vector";
    case ValueKind::gform: return "generalized form";
    case ValueKind::gvector: return "generalized vector";
  }
  return "value";
}

const ChartRef& chart_of(const Value& v) {
  return std::visit([](const auto& x) -> const ChartRef& { return x.chart(); }, v);
}

bool is_zero(const Value& v) {
  return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

namespace {

std::string monomial_text(const Chart& chart, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += chart.coordinates[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

// Term without its sign, with an optional trailing basis factor.
std::string unsigned_term(const Rational& magnitude, const std::string& mono, const std::string& basis) {
  std::string out;
  const bool unit = magnitude == 1;
  if (mono.empty() && basis.empty()) return to_string(magnitude);
  if (!unit) out = to_string(magnitude);
  for (const auto* part : {&mono, &basis}) {
    if (part->empty()) continue;
    if (!out.empty()) out += '*';
    out += *part;
  }
  return out;
}

// Leading negative terms keep an explicit coefficient: "-1*x", "-3*dx".
std::string leading_negative(const Rational& magnitude, const std::string& mono, const std::string& basis) {
  std::string out = "-" + to_string(magnitude);
  for (const auto* part : {&mono, &basis}) {
    if (!part->empty()) out += '*' + *part;
  }
  return out;
}

// Appends one signed summand to a running sum.
void append_term(std::string& out, int sign, const std::string& body_unsigned, const std::string& body_leading_negative) {
  if (out.empty()) {
    out = sign < 0 ? body_leading_negative : body_unsigned;
  } else {
    out += sign < 0 ? " - " : " + ";
    out += body_unsigned;
  }
}

// One coefficient polynomial times a basis element ("" for scalars).
void append_coefficient(std::string& out, const ScalarField& f, const std::string& basis) {
  const auto terms = f.terms();
  if (terms.size() == 1) {
    const auto& t = terms.front();
    const Rational mag = abs(t.coefficient);
    const std::string mono = monomial_text(*f.chart(), t.exponents);
    append_term(out, sgn(t.coefficient), unsigned_term(mag, mono, basis), leading_negative(mag, mono, basis));
  } else {
    const std::string body = "(" + format(f) + ")*" + basis;
    append_term(out, 1, body, body);
  }
}

std::string basis_text(const Chart& chart, const IndexSet& key) {
  std::string out;
  for (int i : key) {
    if (!out.empty()) out += '^';
    out += "d" + chart.coordinates[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

std::string format(const ScalarField& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    const Rational mag = abs(t.coefficient);
    const std::string mono = monomial_text(*f.chart(), t.exponents);
    append_term(out, sgn(t.coefficient), unsigned_term(mag, mono, ""), leading_negative(mag, mono, ""));
  }
  return out;
}

std::string format(const OrdinaryForm& a) {
  if (a.is_zero()) return "0";
  if (a.degree() == 0) return format(a.as_scalar());
  std::string out;
  for (const auto& [key, f] : a.components()) append_coefficient(out, f, basis_text(*a.chart(), key));
  return out;
}

std::string format(const VectorField& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (int i = 0; i < v.dimension(); ++i)
    if (!v[i].is_zero()) append_coefficient(out, v[i], "@" + v.chart()->coordinates[static_cast<std::size_t>(i)]);
  return out;
}

std::string format(const GeneralizedForm& a) {
  return "[" + format(a.ordinary()) + " ; " + format(a.companion()) + "]";
}

std::string format(const GeneralizedVector& v) {
  return "{" + format(v.field()) + " ; " + format(v.scalar()) + "}";
}

std::string format(const Value& v) {
  if (const auto* field = std::get_if<VectorField>(&v); field && field->is_zero())
    return "0*@" + field->chart()->coordinates.front();
  return std::visit([](const auto& x) { return format(x); }, v);
}

std::string format(const Chart& chart) {
  std::string out = "chart ";
  for (std::size_t i = 0; i < chart.coordinates.size(); ++i) {
    if (i) out += ", ";
    out += chart.coordinates[i];
  }
  return out + " k=" + to_string(chart.k);
}

ScalarField evaluate_at(const ScalarField& f, std::span<const Rational> point) {
  return ScalarField::constant(f.chart(), evaluate(f, point));
}

namespace {

OrdinaryForm evaluate_form(const OrdinaryForm& a, std::span<const Rational> point) {
  OrdinaryForm out = OrdinaryForm::zero(a.chart(), a.degree());
  for (const auto& [key, f] : a.components()) out += OrdinaryForm::basis(evaluate_at(f, point), key);
  return out;
}

VectorField evaluate_vector(const VectorField& v, std::span<const Rational> point) {
  std::vector<ScalarField> components;
  for (const auto& c : v.components()) components.push_back(evaluate_at(c, point));
  return VectorField::from_components(v.chart(), std::move(components));
}

}  // namespace

Value evaluate_at(const Value& v, std::span<const Rational> point) {
  if (point.size() != static_cast<std::size_t>(chart_of(v)->dimension()))
    throw Error(ErrorCode::length_mismatch, "point arity does not match the chart dimension");
  struct Visitor {
    std::span<const Rational> point;
    Value operator()(const OrdinaryForm& a) const { return evaluate_form(a, point); }
    Value operator()(const VectorField& x) const { return evaluate_vector(x, point); }
    Value operator()(const GeneralizedForm& a) const {
      return GeneralizedForm(a.degree(), evaluate_form(a.ordinary(), point), evaluate_form(a.companion(), point));
    }
    Value operator()(const GeneralizedVector& x) const {
      return GeneralizedVector(evaluate_vector(x.field(), point), evaluate_at(x.scalar(), point));
    }
  };
  return std::visit(Visitor{point}, v);
}

}  // namespace genform
