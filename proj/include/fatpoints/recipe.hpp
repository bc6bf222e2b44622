#pragma once

#include <variant>

#include "fatpoints/poly.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

// One component of a witness curve: a line or a higher-degree polynomial
// curve, taken with a positive multiplicity.
struct CurveComponent {
    std::variant<Line, HomPoly> geom;
    int multiplicity = 1;

    int degree() const {
        return std::holds_alternative<Line>(geom) ? 1 : std::get<HomPoly>(geom).degree();
    }
    // Vanishing order of the single component (multiplicity not applied).
    int vanishing_order_at(const ProjPoint& p) const;
    HomPoly form() const;  // defining form, canonical integer coefficients
    std::string str() const;
};

// A formal nonnegative-integer combination of components representing the
// curve F used as a nonemptiness witness: degree sum(mult * comp degree) and
// a declared multiplicity at every configuration point, either exact or
// at-least.
struct CurveRecipe {
    std::vector<CurveComponent> components;
    int declared_degree = 0;
    int declared_point_multiplicity = 0;
    bool multiplicity_exact = true;  // false: at-least

    int computed_degree() const;
};

// Total vanishing order of the recipe at p: sum over components of
// multiplicity times the component's vanishing order.
int multiplicity_at(const CurveRecipe& r, const ProjPoint& p);

struct RecipeAuditFailure {
    std::string what;
};

// Checks the degree identity and, at every given point, the declared
// multiplicity (== when exact, >= otherwise). Empty result means the recipe
// is a valid witness: its form F is nonzero, has the declared degree, and
// F^m vanishes to order >= m * declared_point_multiplicity everywhere.
std::vector<RecipeAuditFailure> audit_recipe(const CurveRecipe& r,
                                             const std::vector<ProjPoint>& points);

}  // namespace fatpoints
