#include "enumera/triangle.hpp"

#include <sstream>
#include <stdexcept>

#include "enumera/formulas.hpp"

namespace enumera {

Derivation Derivation::constant(long long v, std::string note) {
    Derivation d;
    d.kind = Kind::constant;
    d.value = v;
    d.note = std::move(note);
    return d;
}

Derivation Derivation::call(std::string op, std::vector<Derivation> args) {
    Derivation d;
    d.kind = Kind::call;
    d.op = std::move(op);
    d.args = std::move(args);
    return d;
}

Derivation Derivation::product(std::vector<Derivation> factors) {
    Derivation d;
    d.kind = Kind::product;
    d.args = std::move(factors);
    return d;
}

namespace {

long long arg_int(const Derivation& d) { return to_int64(d.eval()); }

}  // namespace

BigInt Derivation::eval() const {
    switch (kind) {
        case Kind::constant:
            return BigInt(value);
        case Kind::product: {
            BigInt r = 1;
            for (const Derivation& f : args) r *= f.eval();
            return r;
        }
        case Kind::call:
            break;
    }
    if (op == "dual_surface_degree")
        return dual_surface_degree(arg_int(args[0]), arg_int(args[1]), arg_int(args[2]));
    if (op == "dejonquieres")
        return dejonquieres(arg_int(args[0]), arg_int(args[1]), arg_int(args[2]));
    if (op == "plucker_flexes")
        return plucker_flexes(arg_int(args[0]), arg_int(args[1]), arg_int(args[2]));
    if (op == "plucker_dual_degree")
        return plucker_dual_degree(arg_int(args[0]), arg_int(args[1]), arg_int(args[2]));
    if (op == "polar_tangency_correction")
        return polar_tangency_correction(args[0].eval(), args[1].eval());
    if (op == "riemann_hurwitz_branch_count")
        return riemann_hurwitz_branch_count(arg_int(args[0]));
    if (op == "pencil_nodal_count") {
        PencilBudget b;
        b.chi_surface = arg_int(args[0]);
        b.chi_generic_fibre = arg_int(args[1]);
        b.chi_base = arg_int(args[2]);
        for (size_t i = 3; i < args.size(); ++i) b.special_fibres.push_back(arg_int(args[i]));
        return pencil_nodal_count(b);
    }
    if (op == "binomial") return binomial(arg_int(args[0]), arg_int(args[1]));
    if (op == "factorial") return factorial(arg_int(args[0]));
    throw std::logic_error("Derivation: unknown operation '" + op + "'");
}

std::string Derivation::text() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::constant:
            out << value;
            if (!note.empty()) out << " [" << note << "]";
            break;
        case Kind::product:
            for (size_t i = 0; i < args.size(); ++i) {
                if (i) out << " * ";
                bool wrap = args[i].kind == Kind::product;
                if (wrap) out << "(";
                out << args[i].text();
                if (wrap) out << ")";
            }
            break;
        case Kind::call:
            out << op << "(";
            for (size_t i = 0; i < args.size(); ++i) {
                if (i) out << ", ";
                out << args[i].text();
            }
            out << ")";
            break;
    }
    return out.str();
}

namespace {

using D = Derivation;

D pencil_with_tangency() {
    // Elliptic pencil budget: blown-up plane chi 12, elliptic fibre chi 0,
    // rational base chi 2, one 3-nodal and one 2-nodal special member.
    return D::call("pencil_nodal_count",
                   {D::constant(12), D::constant(0), D::constant(2), D::constant(3),
                    D::constant(2)});
}

D pencil_with_triple_contact() {
    return D::call("pencil_nodal_count",
                   {D::constant(12), D::constant(0), D::constant(2), D::constant(3),
                    D::constant(3)});
}

std::vector<TriangleEntry> delta1_entries() {
    std::vector<TriangleEntry> v;
    v.push_back({"V(delta_P=1)", 9, 1,
                 D::call("dual_surface_degree", {D::constant(3), D::constant(0), D::constant(1)})});
    v.push_back({"V(delta_W=1)", 4, 1,
                 D::constant(4, "pencils of split nodal curves, one per base point on the double line")});
    v.push_back({"V(tau_E,2=1)", 4, 2,
                 D::call("riemann_hurwitz_branch_count", {D::constant(3)})});
    return v;
}

std::vector<TriangleEntry> delta2_entries() {
    std::vector<TriangleEntry> v;
    v.push_back({"V(delta_P=2)", 9, 1,
                 D::constant(9, "lines on the cuspidal cubic surface avoiding its double point")});
    v.push_back({"V(delta_W=2)", 6, 1,
                 D::call("binomial", {D::constant(4), D::constant(2)})});
    v.push_back({"V(delta_P=1, delta_W=1)", 36, 1,
                 D::product({D::constant(4, "split pencils on the ruled side"),
                             D::call("dual_surface_degree",
                                     {D::constant(3), D::constant(0), D::constant(1)})})});
    v.push_back(
        {"V(delta_P=1, tau_E,2=1)", 28, 2,
         D::call("polar_tangency_correction",
                 {D::product({D::call("dual_surface_degree",
                                      {D::constant(3), D::constant(0), D::constant(1)}),
                              D::call("dejonquieres",
                                      {D::constant(3), D::constant(0), D::constant(1)})}),
                  D::constant(4, "degree of the everywhere-tangent excess curve")})});
    v.push_back({"V(delta_W=1, tau_E,2=1)", 8, 2,
                 D::product({D::constant(4, "split pencils on the ruled side"),
                             D::constant(2, "tangent members of a pencil cutting a degree-2 series "
                                            "on the double line")})});
    v.push_back({"V(tau_E,3=1)", 3, 3,
                 D::call("plucker_flexes", {D::constant(3), D::constant(1), D::constant(0)})});
    v.push_back({"V(W+W_a+W_b, delta_W=2)", 0, 1,
                 D::constant(0, "component contracted away from the plane part")});
    return v;
}

std::vector<TriangleEntry> delta3_entries() {
    std::vector<TriangleEntry> v;
    v.push_back({"V(delta_P=3)", 6, 1, D::call("factorial", {D::constant(3)})});
    v.push_back({"V(delta_P=2, delta_W=1)", 36, 1,
                 D::product({D::constant(9, "conic-line pencil choices, one point on each simple line"),
                             D::constant(4, "split pencils on the ruled side")})});
    v.push_back({"V(delta_P=1, delta_W=2)", 54, 1,
                 D::product({D::call("binomial", {D::constant(4), D::constant(2)}),
                             D::call("dual_surface_degree",
                                     {D::constant(3), D::constant(0), D::constant(1)})})});
    v.push_back({"V(delta_P=2, tau_E,2=1)", 18, 2,
                 D::product({D::constant(9, "conic-line pencil choices"),
                             D::constant(2, "tangent members of a conic pencil cutting a degree-2 "
                                            "series on the double line")})});
    v.push_back({"V(delta_P=1, delta_W=1, tau_E,2=1)", 56, 2,
                 D::product({D::constant(4, "split pencils on the ruled side"),
                             D::constant(2, "tangent members per pencil"), pencil_with_tangency()})});
    v.push_back({"V(delta_P=1, tau_E,3=1)", 18, 3,
                 D::product({pencil_with_triple_contact(),
                             D::call("plucker_flexes",
                                     {D::constant(3), D::constant(1), D::constant(0)})})});
    v.push_back({"V(W+W_a+W_b, delta_W=3)", 6, 1,
                 D::call("binomial", {D::constant(4), D::constant(2)})});
    return v;
}

}  // namespace

std::vector<TriangleEntry> triangle_entries(int delta) {
    std::vector<TriangleEntry> v;
    switch (delta) {
        case 1: v = delta1_entries(); break;
        case 2: v = delta2_entries(); break;
        case 3: v = delta3_entries(); break;
        default:
            throw std::invalid_argument("triangle_entries: delta must be 1, 2 or 3");
    }
    for (const TriangleEntry& e : v) {
        if (e.multiplicity < 1 || e.multiplicity > 3)
            throw std::logic_error("triangle entry '" + e.label + "': multiplicity out of range");
        BigInt got = e.derivation.eval();
        if (got != e.p_degree)
            throw std::logic_error("triangle entry '" + e.label + "': derivation " +
                                   e.derivation.text() + " = " + got.str() + " != " +
                                   std::to_string(e.p_degree));
    }
    return v;
}

ComponentLedger triangle_ledger(int delta) {
    static const long long totals[4] = {0, 21, 132, 304};
    ComponentLedger ledger;
    ledger.target_name = "plane quartics through twelve points on a triangle, delta=" +
                         std::to_string(delta);
    ledger.target_degree = totals[delta];
    for (const TriangleEntry& e : triangle_entries(delta)) {
        if (e.p_degree == 0) continue;  // reported separately, contributes nothing
        ledger.entries.push_back({e.label, e.p_degree, e.multiplicity, e.derivation.text()});
    }
    ledger.validate();
    return ledger;
}

}  // namespace enumera
