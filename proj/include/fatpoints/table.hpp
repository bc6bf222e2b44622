#pragma once

#include <functional>

#include "fatpoints/kconfig.hpp"
#include "fatpoints/recipe.hpp"

namespace fatpoints {

struct RatInterval {
    Rat lo, hi;
};

// One row of the catalogue of Waldschmidt constants of standard
// k-configurations of types (a), (a,b), (a,b,c). A row carries its parameter
// guard, the closed-form value (or two-sided interval), the (mu, d) pair its
// stabilization argument runs at, and whether a witness-curve recipe is
// bound to it.
struct TableRow {
    int id = 0;
    std::string pattern;    // e.g. "(1,b,2b)"
    std::string note;       // side condition on the parameters
    std::string mechanism;  // how the engine pins the value
    bool any_k_configuration = false;  // holds for every k-configuration of the type
    bool has_recipe = true;
    bool recipe_exact = true;
    bool is_interval = false;
    std::function<bool(const KConfigType&)> guard;
    std::function<Rat(const KConfigType&)> value;            // single-value rows
    std::function<RatInterval(const KConfigType&)> interval; // interval rows
    // Stabilization pair (mu, d): alpha(m*mu*X) == m*d for every m >= 1.
    std::function<std::pair<int, int>(const KConfigType&)> mu_d;
    std::function<bool(const KConfigType&)> degenerate_parameter;
};

const std::vector<TableRow>& table_rows();

// The unique matching row, or nullptr when the type is uncatalogued.
// Throws logic_error if two guards overlap (catalogue inconsistency).
const TableRow* match_table_row(const KConfigType& t);

// The witness curve F bound to the type's row: line components in the
// three-line notation, plus interpolated kernel curves where the row needs
// them. Throws for uncatalogued types and for (2,3,5), which has no recipe.
CurveRecipe build_recipe(const KConfigType& t);

// Default search cap for alpha scans involving this type: recipe degree + 2
// when a recipe exists, else 4 * (sum of multiplicities).
int default_degree_cap(const KConfigType& t, int multiplicity);

}  // namespace fatpoints
