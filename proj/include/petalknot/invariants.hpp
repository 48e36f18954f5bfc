#pragma once

#include "petalknot/laurent.hpp"
#include "petalknot/planar.hpp"

#include <string>

namespace petalknot {

inline constexpr int kDefaultBracketBudget = 24;

// Kauffman bracket in the variable A of the diagram as given (not reduced;
// the bracket is only a regular-isotopy invariant). Throws BudgetError when
// the diagram has more crossings than the budget.
Laurent kauffman_bracket(const PlanarDiagram& pd, int max_crossings = kDefaultBracketBudget);

// Jones polynomial, exponents counted in powers of t^(1/2) (knots always land
// on even entries, i.e. integer powers of t; this is asserted). The diagram is
// R1/R2-reduced first; the budget applies to the reduced diagram.
Laurent jones(const PlanarDiagram& pd, int max_crossings = kDefaultBracketBudget);

// Alexander polynomial from the Wirtinger presentation, exact, normalized to
// the symmetric representative with positive leading coefficient.
Laurent alexander(const PlanarDiagram& pd);

// |alexander(-1)|
BigInt determinant(const PlanarDiagram& pd);

// Exact knot-identification key.
struct Fingerprint {
    BigInt det;
    Laurent alex;  // symmetric in t
    Laurent jones; // exponents in t^(1/2)

    bool operator==(const Fingerprint& o) const {
        return det == o.det && alex == o.alex && jones == o.jones;
    }
    bool operator!=(const Fingerprint& o) const { return !(*this == o); }
    bool operator<(const Fingerprint& o) const;
    std::string str() const;
};

Fingerprint fingerprint(const PlanarDiagram& pd, int max_crossings = kDefaultBracketBudget);

// Fingerprint of the mirror knot: t -> 1/t on the Jones polynomial.
Fingerprint mirrored(const Fingerprint& f);

} // namespace petalknot
