#ifndef SKT_CATALOG_HPP
#define SKT_CATALOG_HPP

#include <string>
#include <vector>

#include "skt/hermitian.hpp"
#include "skt/twist.hpp"

namespace skt {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Published registry entry. `expected` flags document the classification
/// the model is guaranteed to have; catalog_get re-verifies them on load.
struct CatalogEntry {
  std::string name;
  std::string parameter_doc;  // empty when the entry takes no parameter
  std::string summary;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Built-in models. Names and parameters:
///   flat_torus <n>               abelian 2n-dim, Kaehler (2 <= n <= 6)
///   hopf                         u(1)+su(2), dim 4, strong (dH = 0), LCK
///   product_kahler_hopf <m>      T^{2m} x hopf, strong of every order
///   solvable_nonunimodular       dim 6 solvable, delta theta != 0
HermitianModel catalog_get(const std::string& name, int parameter = 0);

/// Torus twist families used by the fibration conditions. `family`:
///   t4_t2     dim-8 base T^4 x T^2 with a T^2 fiber, F^1 = e^0^e^1 (null
///             self-wedge), F^2 = fiber-base Kaehler form   [condition eq48]
///   t2k_t2    T^{2k} x T^2 base, F^1 = omega_{2k}, F^2 = omega_2 [eq410]
///   t2k_t4    T^{2k} x T^4 base, F^1 = omega_{2k}, F^2 = omega_4 [eq411,
///             classifies at degree k+1]
/// beta_inv = (p1, p2, q1, q2) are the exact integer matrix entries.
TwistSpec catalog_twist(const std::string& family, int k,
                        const DiophantineInstance& beta_inv);

}  // namespace skt

#endif
