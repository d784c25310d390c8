#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bockstein/cdtype.hpp"
#include "bockstein/groups.hpp"

namespace bockstein {

/// dim_G of the cd-type: the supremum of phi over sigma(G).
ExtInt dim(const CdType& f, const GroupExpr& g);
ExtInt dim(const BocksteinFn& phi, const BocksteinFamily& family);

/// phi(Z_p) - phi(Z_p^inf), either 0 or 1.
int deficiency(const CdType& f, Prime p);
bool p_regular(const CdType& f, Prime p);
bool p_singular(const CdType& f, Prime p);

struct PowerReport {
  enum class Kind : std::uint8_t { Basic, Exceptional };

  ExtInt base_norm;
  Kind kind = Kind::Basic;
  /// power_norms[k - 1] is the norm of the k-th power.
  std::vector<ExtInt> power_norms;
};

PowerReport power_report(const CdType& f, std::uint64_t k_max);

/// The testing space T_n(G) as the wedge of Phi(H, n) over H in sigma(G).
CdType test_space(const GroupExpr& g, ExtInt n);

/// ||F [+] T_n(G)|| - n; requires ||F|| - dim_G F < n.
ExtInt testing_dim(const CdType& f, const GroupExpr& g, ExtInt n);

/// ||Phi(G, n) [+] Phi(G', m)|| for n >= m >= 2.
ExtInt fundamental_product_dim(const BasisKind& g, ExtInt n, const BasisKind& g2, ExtInt m);
/// dim_G Phi(G', m) + n.
ExtInt fundamental_product_formula(const BasisKind& g, ExtInt n, const BasisKind& g2, ExtInt m);

bool is_full_valued(const CdType& f);

/// Necessary conditions for the cd-type of an ANR compactum. Passing does
/// not certify that an ANR of this type exists.
struct AnrReport {
  bool admissible = true;
  /// "a": phi(Z_(p)) = phi(Z_p) at every prime; "b": phi >= phi(Q);
  /// "c": norm 2 forces the type of a 2-dimensional full-valued compactum.
  std::vector<std::string> violated;
};

AnrReport anr_admissible(const CdType& f);

/// Right-hand sides of the four dimension bounds for a map f: X -> Y.
/// The third bound holds only for principal ideal domains with unity.
struct FibrationBounds {
  ExtInt dim_g_by_fiber_dim;
  ExtInt dim_by_fiber_dim_g;
  ExtInt pid_bound;
  ExtInt general_bound;
  bool pid_with_unity = false;
};

FibrationBounds fibration_bounds(ExtInt dim_g_y, ExtInt dim_y, ExtInt max_fiber_dim, ExtInt max_fiber_dim_g,
                                 bool pid_with_unity);

}  // namespace bockstein
