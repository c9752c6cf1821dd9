#include "genform/harness/identities.hpp"

#include <algorithm>

#include "genform/error.hpp"

namespace genform::harness {

// ---------------------------------------------------------------------------
// Operator sets

namespace {

// The k-term sign is flipped on even degrees only; a flip on every degree keeps
// the alternation that makes d^2 vanish and would go unnoticed.
GeneralizedForm d_flipped_k(const GeneralizedForm& a) {
  const int p = a.degree();
  OrdinaryForm first = d(a.ordinary());
  first += a.chart()->k * a.companion();
  return {p + 1, std::move(first), d(a.companion())};
}

GeneralizedForm contract_flipped_v0(const GeneralizedVector& v, const GeneralizedForm& a) {
  const int p = a.degree();
  OrdinaryForm second = contract(v.field(), a.companion());
  second -= Rational(p * parity_sign(p - 1)) * (v.scalar() * a.ordinary());
  return {p - 1, contract(v.field(), a.ordinary()), std::move(second)};
}

GeneralizedForm d_standard(const GeneralizedForm& a) { return d(a); }

GeneralizedForm contract_standard(const GeneralizedVector& v, const GeneralizedForm& a) { return contract(v, a); }

}  // namespace

Operators Operators::for_mutation(Mutation m) {
  switch (m) {
    case Mutation::flip_d_k_term: return {d_flipped_k, contract_standard};
    case Mutation::flip_contract_v0_term: return {d_standard, contract_flipped_v0};
    case Mutation::none: break;
  }
  return {d_standard, contract_standard};
}

GeneralizedForm Operators::lie_cartan(const GeneralizedVector& v, const GeneralizedForm& a) const {
  return contract(v, d(a)) + d(contract(v, a));
}

const char* degenerate_name(Degenerate d) {
  switch (d) {
    case Degenerate::none: return "none";
    case Degenerate::zero_vector: return "zero-vector";
    case Degenerate::zero_form: return "zero-form";
    case Degenerate::k_zero: return "k-zero";
    case Degenerate::zero_scalar_part: return "zero-scalar-part";
  }
  return "?";
}

TrialPlan TrialPlan::schedule(std::uint64_t index, int dimension) {
  const std::uint64_t m = static_cast<std::uint64_t>(dimension) + 2;
  TrialPlan plan;
  plan.index = index;
  plan.p = static_cast<int>(index % m) - 1;
  plan.q = static_cast<int>((index / m) % m) - 1;
  plan.r = static_cast<int>((index / (m * m)) % m) - 1;
  static constexpr Degenerate cycle[] = {Degenerate::none,   Degenerate::zero_vector,      Degenerate::zero_form,
                                         Degenerate::k_zero, Degenerate::zero_scalar_part, Degenerate::none,
                                         Degenerate::none};
  plan.degenerate = cycle[index % 7];
  return plan;
}

// ---------------------------------------------------------------------------
// Inputs

const Value& Inputs::get(std::string_view name) const {
  for (const auto& [n, v] : values)
    if (n == name) return v;
  throw Error(ErrorCode::invalid_argument, "missing input '" + std::string(name) + "'");
}

namespace {

template <class T>
const T& typed(const Inputs& in, std::string_view name) {
  const T* p = std::get_if<T>(&in.get(name));
  if (!p) throw Error(ErrorCode::invalid_argument, "input '" + std::string(name) + "' has the wrong kind");
  return *p;
}

}  // namespace

const GeneralizedForm& Inputs::gform(std::string_view name) const { return typed<GeneralizedForm>(*this, name); }
const GeneralizedVector& Inputs::gvector(std::string_view name) const { return typed<GeneralizedVector>(*this, name); }
const OrdinaryForm& Inputs::form(std::string_view name) const { return typed<OrdinaryForm>(*this, name); }
const VectorField& Inputs::vector(std::string_view name) const { return typed<VectorField>(*this, name); }

ScalarField Inputs::scalar(std::string_view name) const {
  const OrdinaryForm& f = form(name);
  return f.is_zero() ? ScalarField::zero(chart) : f.as_scalar();
}

std::string Inputs::render() const {
  std::string out = format(*chart) + "\n";
  for (const auto& [name, v] : values) out += name + " = " + format(v) + "\n";
  return out;
}

Inputs Inputs::from_session(const dsl::Session& session) {
  Inputs in;
  in.chart = session.chart;
  for (const auto& def : session.definitions) in.add(def.name, def.value);
  return in;
}

// ---------------------------------------------------------------------------
// Identity table

namespace {

// Trial-aware wrappers that apply the forced degenerate cases.
GeneralizedForm first_gform(Generator& g, const TrialPlan& plan, int degree) {
  GeneralizedForm a = g.gform(degree);
  return plan.degenerate == Degenerate::zero_form ? GeneralizedForm::zero(g.chart(), degree) : a;
}

GeneralizedVector gvec(Generator& g, const TrialPlan& plan, bool first) {
  GeneralizedVector v = g.gvector();
  if (first && plan.degenerate == Degenerate::zero_vector) return GeneralizedVector::zero(g.chart());
  if (plan.degenerate == Degenerate::zero_scalar_part) return {v.field(), ScalarField::zero(g.chart())};
  return v;
}

Value scalar_value(const ScalarField& f) { return OrdinaryForm::scalar(f); }

Check check(std::string label, Value lhs, Value rhs) { return {std::move(label), std::move(lhs), std::move(rhs)}; }

GeneralizedForm signed_form(int sign, const GeneralizedForm& a) { return sign > 0 ? a : -a; }

// --- generators ---

Inputs gen_a(Generator& g, const TrialPlan& plan) {
  Inputs in{g.chart(), {}};
  in.add("a", first_gform(g, plan, plan.p));
  return in;
}

Inputs gen_ab(Generator& g, const TrialPlan& plan) {
  Inputs in = gen_a(g, plan);
  in.add("b", g.gform(plan.q));
  return in;
}

Inputs gen_abc(Generator& g, const TrialPlan& plan) {
  Inputs in = gen_ab(g, plan);
  in.add("c", g.gform(plan.r));
  return in;
}

Inputs gen_scale(Generator& g, const TrialPlan& plan) {
  Inputs in{g.chart(), {}};
  in.add("a0", first_gform(g, plan, 0));
  in.add("b0", g.gform(0));
  in.add("V", gvec(g, plan, true));
  return in;
}

Inputs gen_Va(Generator& g, const TrialPlan& plan) {
  Inputs in{g.chart(), {}};
  in.add("V", gvec(g, plan, true));
  in.add("a", first_gform(g, plan, plan.p));
  return in;
}

Inputs gen_Vab(Generator& g, const TrialPlan& plan) {
  Inputs in = gen_Va(g, plan);
  in.add("b", g.gform(plan.q));
  return in;
}

Inputs gen_VWa(Generator& g, const TrialPlan& plan) {
  Inputs in{g.chart(), {}};
  in.add("V", gvec(g, plan, true));
  in.add("W", gvec(g, plan, false));
  in.add("a", first_gform(g, plan, plan.p));
  return in;
}

Inputs gen_linear(Generator& g, const TrialPlan& plan) {
  Inputs in = gen_VWa(g, plan);
  in.add("mu", scalar_value(g.scalar()));
  return in;
}

Inputs gen_bilinear(Generator& g, const TrialPlan& plan) {
  Inputs in{g.chart(), {}};
  in.add("V", gvec(g, plan, true));
  in.add("W", gvec(g, plan, false));
  in.add("U", gvec(g, plan, false));
  in.add("c1", scalar_value(ScalarField::constant(g.chart(), g.constant())));
  in.add("c2", scalar_value(ScalarField::constant(g.chart(), g.constant())));
  return in;
}

Inputs gen_UVW(Generator& g, const TrialPlan& plan) {
  Inputs in{g.chart(), {}};
  in.add("U", gvec(g, plan, true));
  in.add("V", gvec(g, plan, false));
  in.add("W", gvec(g, plan, false));
  return in;
}

Inputs gen_embedding(Generator& g, const TrialPlan& plan) {
  Inputs in{g.chart(), {}};
  OrdinaryForm alpha = g.form(std::max(plan.p, 0));
  if (plan.degenerate == Degenerate::zero_form) alpha = OrdinaryForm::zero(g.chart(), alpha.degree());
  in.add("alpha", alpha);
  in.add("beta", g.form(std::max(plan.q, 0)));
  VectorField v = g.vector();
  if (plan.degenerate == Degenerate::zero_vector) v = VectorField::zero(g.chart());
  in.add("v", v);
  in.add("w", g.vector());
  return in;
}

// --- evaluators ---

std::vector<Check> eval_unit(const Operators&, const Inputs& in) {
  const auto& a = in.gform("a");
  const auto one = GeneralizedForm::one(in.chart);
  return {check("(1,0)^a = a", wedge(one, a), a), check("a^(1,0) = a", wedge(a, one), a),
          check("0^a = 0", wedge(GeneralizedForm::zero(in.chart, 0), a), GeneralizedForm::zero(in.chart, a.degree()))};
}

std::vector<Check> eval_graded_commutative(const Operators&, const Inputs& in) {
  const auto& a = in.gform("a");
  const auto& b = in.gform("b");
  return {check("a^b = (-1)^{pq} b^a", wedge(a, b), signed_form(parity_sign(a.degree() * b.degree()), wedge(b, a)))};
}

std::vector<Check> eval_associative(const Operators&, const Inputs& in) {
  const auto& a = in.gform("a");
  const auto& b = in.gform("b");
  const auto& c = in.gform("c");
  return {check("(a^b)^c = a^(b^c)", wedge(wedge(a, b), c), wedge(a, wedge(b, c)))};
}

std::vector<Check> eval_nilpotent(const Operators& ops, const Inputs& in) {
  const auto& a = in.gform("a");
  return {check("d(d(a)) = 0", ops.d(ops.d(a)), GeneralizedForm::zero(in.chart, a.degree() + 2))};
}

std::vector<Check> eval_d_leibniz(const Operators& ops, const Inputs& in) {
  const auto& a = in.gform("a");
  const auto& b = in.gform("b");
  return {check("d(a^b) = da^b + (-1)^p a^db", ops.d(wedge(a, b)),
                wedge(ops.d(a), b) + signed_form(parity_sign(a.degree()), wedge(a, ops.d(b))))};
}

std::vector<Check> eval_scale_composition(const Operators&, const Inputs& in) {
  const auto& a0 = in.gform("a0");
  const auto& b0 = in.gform("b0");
  const auto& v = in.gvector("V");
  return {check("a0(b0 V) = (a0^b0) V", scale(a0, scale(b0, v)), scale(wedge(a0, b0), v))};
}

std::vector<Check> eval_contract_leibniz(const Operators& ops, const Inputs& in) {
  const auto& v = in.gvector("V");
  const auto& a = in.gform("a");
  const auto& b = in.gform("b");
  return {check("I(a^b) = (Ia)^b + (-1)^p a^(Ib)", ops.contract(v, wedge(a, b)),
                wedge(ops.contract(v, a), b) + signed_form(parity_sign(a.degree()), wedge(a, ops.contract(v, b))))};
}

std::vector<Check> eval_contract_linear(const Operators& ops, const Inputs& in) {
  const auto& v = in.gvector("V");
  const auto& w = in.gvector("W");
  const auto& a = in.gform("a");
  const ScalarField mu = in.scalar("mu");
  return {check("I_{V+mu W} a = I_V a + mu I_W a", ops.contract(add_scaled(v, mu, w), a),
                ops.contract(v, a) + mu * ops.contract(w, a))};
}

std::vector<Check> eval_cartan_closed_form(const Operators& ops, const Inputs& in) {
  const auto& v = in.gvector("V");
  const auto& a = in.gform("a");
  return {check("I d a + d I a = closed form", ops.lie_cartan(v, a), lie_cartan_expanded(v, a))};
}

std::vector<Check> eval_residual(const Operators& ops, const Inputs& in) {
  const auto& v = in.gvector("V");
  const auto& w = in.gvector("W");
  const auto& a = in.gform("a");
  const int p = a.degree();
  const Rational& k = in.chart->k;
  const GeneralizedVector u(bracket(v.field(), w.field()) + k * (v.scalar() * w.field()),
                            apply(v.field(), w.scalar()) - apply(w.field(), v.scalar()));
  const GeneralizedForm residual =
      ops.lie_cartan(v, ops.contract(w, a)) - ops.contract(w, ops.lie_cartan(v, a)) - ops.contract(u, a);
  const OrdinaryForm transported = lie(v.scalar() * w.field(), a.ordinary());
  const GeneralizedForm expected(p - 1, OrdinaryForm::zero(in.chart, p - 1),
                                 parity_sign(p) > 0 ? -transported : transported);
  return {check("residual = -(-1)^p (0, L_{v0 w1} a_p)", residual, expected)};
}

std::vector<Check> eval_corrected_consistency(const Operators& ops, const Inputs& in) {
  const auto& v = in.gvector("V");
  const auto& a = in.gform("a");
  const int p = a.degree();
  OrdinaryForm correction = -(v.scalar() * d(a.ordinary()));
  correction += Rational(p) * wedge(d(OrdinaryForm::scalar(v.scalar())), a.ordinary());
  correction *= Rational(parity_sign(p));
  const GeneralizedForm from_cartan =
      ops.lie_cartan(v, a) + GeneralizedForm(p, OrdinaryForm::zero(in.chart, p), std::move(correction));
  return {check("Lc + correction = closed form", from_cartan, lie(v, a))};
}

std::vector<Check> eval_lie_leibniz(const Operators&, const Inputs& in) {
  const auto& v = in.gvector("V");
  const auto& a = in.gform("a");
  const auto& b = in.gform("b");
  return {check("L(a^b) = La^b + a^Lb", lie(v, wedge(a, b)), wedge(lie(v, a), b) + wedge(a, lie(v, b)))};
}

std::vector<Check> eval_lie_derivation(const Operators& ops, const Inputs& in) {
  const auto& v = in.gvector("V");
  const auto& w = in.gvector("W");
  const auto& a = in.gform("a");
  return {check("L_V I_W - I_W L_V = I_{L_V W}", lie(v, ops.contract(w, a)) - ops.contract(w, lie(v, a)),
                ops.contract(lie(v, w), a))};
}

std::vector<Check> eval_lie_commutator(const Operators&, const Inputs& in) {
  const auto& v = in.gvector("V");
  const auto& w = in.gvector("W");
  const auto& a = in.gform("a");
  return {check("[L_V, L_W] = L_{V,W}", lie(v, lie(w, a)) - lie(w, lie(v, a)), lie(commutator(v, w), a))};
}

std::vector<Check> eval_commutator_bilinear(const Operators&, const Inputs& in) {
  const auto& v = in.gvector("V");
  const auto& w = in.gvector("W");
  const auto& u = in.gvector("U");
  const Rational c1 = in.scalar("c1").constant_term();
  const Rational c2 = in.scalar("c2").constant_term();
  return {
      check("{V,W} = -{W,V}", commutator(v, w), -commutator(w, v)),
      check("{c1 V + c2 U, W} = c1 {V,W} + c2 {U,W}", commutator(c1 * v + c2 * u, w),
            c1 * commutator(v, w) + c2 * commutator(u, w)),
      check("{V, c1 W + c2 U} = c1 {V,W} + c2 {V,U}", commutator(v, c1 * w + c2 * u),
            c1 * commutator(v, w) + c2 * commutator(v, u)),
  };
}

std::vector<Check> eval_jacobi(const Operators&, const Inputs& in) {
  const auto& u = in.gvector("U");
  const auto& v = in.gvector("V");
  const auto& w = in.gvector("W");
  return {check("{U,{V,W}} + {V,{W,U}} + {W,{U,V}} = 0",
                commutator(u, commutator(v, w)) + commutator(v, commutator(w, u)) + commutator(w, commutator(u, v)),
                GeneralizedVector::zero(in.chart))};
}

std::vector<Check> eval_embedding(const Operators& ops, const Inputs& in) {
  const auto& alpha = in.form("alpha");
  const auto& beta = in.form("beta");
  const auto& v = in.vector("v");
  const auto& w = in.vector("w");
  return {
      check("wedge", wedge(embed(alpha), embed(beta)), embed(wedge(alpha, beta))),
      check("d", ops.d(embed(alpha)), embed(d(alpha))),
      check("I", ops.contract(embed(v), embed(alpha)), embed(contract(v, alpha))),
      check("L", lie(embed(v), embed(alpha)), embed(lie(v, alpha))),
      check("Lc", ops.lie_cartan(embed(v), embed(alpha)), embed(lie(v, alpha))),
      check("Lv", lie(embed(v), embed(w)), embed(bracket(v, w))),
      check("comm", commutator(embed(v), embed(w)), embed(bracket(v, w))),
  };
}

constexpr Identity table[] = {
    {"P1", "wedge unit and zero", gen_a, eval_unit},
    {"P2", "graded commutativity of the wedge product", gen_ab, eval_graded_commutative},
    {"P3", "associativity of the wedge product", gen_abc, eval_associative},
    {"P4", "nilpotency d^2 = 0", gen_a, eval_nilpotent},
    {"P5", "Leibniz rule for d", gen_ab, eval_d_leibniz},
    {"P6", "composition of generalized scalar multiplication", gen_scale, eval_scale_composition},
    {"P7", "I_V is an antiderivation", gen_Vab, eval_contract_leibniz},
    {"P8", "I_V is linear over ordinary scalars", gen_linear, eval_contract_linear},
    {"P9", "Cartan composition equals its closed form", gen_Va, eval_cartan_closed_form},
    {"P10", "contraction failure of the uncorrected Lie derivative", gen_VWa, eval_residual},
    {"P11", "two expressions of the corrected Lie derivative agree", gen_Va, eval_corrected_consistency},
    {"P12", "Leibniz rule for the corrected Lie derivative", gen_Vab, eval_lie_leibniz},
    {"P13", "corrected Lie derivative commutes with contraction up to I_{L_V W}", gen_VWa, eval_lie_derivation},
    {"P14", "commutator of Lie derivatives is the Lie derivative along {V,W}", gen_VWa, eval_lie_commutator},
    {"P15", "generalized commutator is antisymmetric and bilinear", gen_bilinear, eval_commutator_bilinear},
    {"P16", "Jacobi identity for the generalized commutator", gen_UVW, eval_jacobi},
    {"P17", "ordinary calculus embeds for v0 = 0 and zero companions", gen_embedding, eval_embedding},
};

}  // namespace

std::span<const Identity> identities() { return table; }

const Identity& find_identity(std::string_view id) {
  for (const auto& identity : table)
    if (identity.id == id) return identity;
  throw Error(ErrorCode::unknown_identity, "unknown identity '" + std::string(id) + "'");
}

}  // namespace genform::harness
