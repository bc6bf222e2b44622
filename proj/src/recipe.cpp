#include "fatpoints/recipe.hpp"

namespace fatpoints {

int CurveComponent::vanishing_order_at(const ProjPoint& p) const {
    if (const Line* l = std::get_if<Line>(&geom)) return l->contains(p) ? 1 : 0;
    return std::get<HomPoly>(geom).vanishing_order(p);
}

HomPoly CurveComponent::form() const {
    if (const Line* l = std::get_if<Line>(&geom)) return HomPoly::from_line(*l);
    return std::get<HomPoly>(geom);
}

std::string CurveComponent::str() const {
    std::string head = std::to_string(multiplicity) + "*";
    if (const Line* l = std::get_if<Line>(&geom)) return head + l->str();
    return head + "(" + std::get<HomPoly>(geom).str() + ")";
}

int CurveRecipe::computed_degree() const {
    int d = 0;
    for (const auto& c : components) d += c.multiplicity * c.degree();
    return d;
}

int multiplicity_at(const CurveRecipe& r, const ProjPoint& p) {
    int total = 0;
    for (const auto& c : r.components) total += c.multiplicity * c.vanishing_order_at(p);
    return total;
}

std::vector<RecipeAuditFailure> audit_recipe(const CurveRecipe& r,
                                             const std::vector<ProjPoint>& points) {
    std::vector<RecipeAuditFailure> fails;
    for (const auto& c : r.components) {
        if (c.multiplicity < 1) fails.push_back({"component with multiplicity < 1: " + c.str()});
        if (const HomPoly* h = std::get_if<HomPoly>(&c.geom)) {
            if (h->is_zero()) fails.push_back({"zero polynomial component"});
            if (h->degree() < 2)
                fails.push_back({"polynomial component of degree < 2 should be a Line"});
        }
    }
    if (r.computed_degree() != r.declared_degree)
        fails.push_back({"declared degree " + std::to_string(r.declared_degree) +
                         " != component degree sum " + std::to_string(r.computed_degree())});
    for (const auto& p : points) {
        int m = multiplicity_at(r, p);
        if (r.multiplicity_exact ? (m != r.declared_point_multiplicity)
                                 : (m < r.declared_point_multiplicity))
            fails.push_back({"multiplicity " + std::to_string(m) + " at " + p.str() +
                             (r.multiplicity_exact ? " != " : " < ") +
                             std::to_string(r.declared_point_multiplicity)});
    }
    return fails;
}

}  // namespace fatpoints
