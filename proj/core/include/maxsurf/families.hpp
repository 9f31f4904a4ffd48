// Catalog of concrete double-periodic maximal surfaces with expected metadata.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maxsurf/genmat.hpp"
#include "maxsurf/singular.hpp"
#include "maxsurf/surface.hpp"

namespace maxsurf {

/// Named parameter values for a catalog family.
using Params = std::map<std::string, double>;

/// One named parameter with its admissible open range (lower, upper).
struct ParameterSpec {
  std::string name;
  double lower;
  double upper;
  double default_value;
};

/// Metadata a freshly built catalog surface is expected to satisfy.
struct ExpectedMetadata {
  std::optional<double> discriminant;  ///< matrix families only
  std::optional<double> theta;         ///< matrix families only, closed form
  std::optional<double> period_x;
  std::optional<double> period_y;
  /// Classification shared by all singular points, when applicable.
  std::optional<SingularType> singular_type;
  /// Expected causal sector counts around any singular point.
  std::optional<SectorCensus> census;
  /// Representative singular points; the full set repeats with the periods.
  std::vector<PlanePoint> singular_cell;
  /// Bound on |u| when the family is confined to a slab.
  std::optional<double> slab_bound;
};

/// One verification step of verify_entry.
struct VerifyCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Itemized verification outcome for one catalog entry.
struct VerifyReport {
  std::string entry;
  Params params;
  bool ok;
  std::vector<VerifyCheck> checks;
};

/// A catalog family: a named builder with admissible parameters and the
/// metadata its surfaces are expected to satisfy.
struct CatalogEntry {
  std::string name;     ///< stable identifier, e.g. "snsn"
  std::string summary;  ///< one-line description
  std::vector<ParameterSpec> parameters;
  /// Builds the surface from a fully resolved parameter map.
  std::function<std::unique_ptr<Surface>(const Params&)> build;
  /// Expected metadata for a fully resolved parameter map.
  std::function<ExpectedMetadata(const Params&)> expected;
  /// Optional family-specific checks appended by verify_entry.
  std::function<void(const Surface&, const Params&, std::vector<VerifyCheck>&)>
      extra_checks;
};

/// Displayed generating matrices of the elliptic and degenerate families.
/// Parameters are the profile moduli; every matrix is generating.
Mat3 snsn_family_matrix(double k, double m);
Mat3 sncn_family_matrix(double k, double m);
Mat3 cncn_family_matrix(double k, double m);
Mat3 sinsin1_family_matrix();
Mat3 one_periodic_family_matrix(double a, double alpha);
Mat3 tanh_scherk_family_matrix();

/// Builds the full catalog: catenoid, one-periodic, sinsin, sinsin1,
/// tanh-scherk, cncn, sncn, snsn.
std::vector<CatalogEntry> build_catalog();

/// Finds a catalog entry by name; nullptr if unknown.  The pointer refers
/// into a static catalog instance.
const CatalogEntry* find_entry(const std::string& name);

/// Completes user-given parameters with defaults and validates ranges.
/// Throws std::invalid_argument for unknown names or out-of-range values.
Params resolve_params(const CatalogEntry& e, const Params& given);

/// Resolves parameters and builds the entry's surface.
std::unique_ptr<Surface> build_entry(const CatalogEntry& e,
                                     const Params& given = {});

/// Runs the invariant battery against the expected metadata: generating
/// matrix, discriminant, module, PDE residuals, periods, singular-point
/// lattice, classification, sector census, slab bound, and the entry's own
/// extra checks.  Every step appears in the report; ok is true iff all
/// passed.
VerifyReport verify_entry(const CatalogEntry& e, const Params& given = {});

}  // namespace maxsurf
