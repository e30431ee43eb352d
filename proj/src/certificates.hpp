#pragma once

#include "sphere_triangulation.hpp"
#include "tet_mesh.hpp"

#include <optional>

namespace wct {

/// Abstract tetrahedral complex on the vertex ids of a target link L.  Its
/// existence certifies that L cannot be the link of a vertex in a
/// 3-well-centered mesh (One-Ring Necessary Condition):
///   (i)   manifold with boundary,
///   (ii)  boundary equals L's triangle set,
///   (iii) every tet has at least two facets in L.
struct CertificateComplex {
  std::vector<std::array<int, 4>> tets;
};

struct CertificateCheck {
  bool valid = false;
  std::string first_failure;
};

CertificateCheck verify_certificate(const CertificateComplex& k,
                                    const SphereTriangulation& link);

struct SearchLimits {
  int max_pool = 4096;           // candidate tets considered
  long long max_nodes = 50'000'000;  // DFS nodes before giving up
};

/// Exhaustive exact-cover search over the candidate pool (4-subsets of L's
/// vertices with >= 2 facets among L's triangles; condition (iii) confines
/// every certificate to this pool, so exhausting it decides existence).
/// Deterministic given L.  Throws SearchCap when a limit is hit, which is
/// distinct from "no certificate exists".
std::optional<CertificateComplex> search_certificate(
    const SphereTriangulation& link, const SearchLimits& limits = {});

/// Max degree >= m-3 blocks any 2-well-centered neighborhood.
bool nminus3_blocked(const SphereTriangulation& link);

/// m-2 tets closed around a common edge (open=false), or the same fan with
/// one tet removed (open=true).  Boundary degree lists are
/// (m-2, m-2, 4, ..., 4) and (m-1, m-1, 4, ..., 4, 3, 3) respectively.
struct BandFamily {
  CertificateComplex certificate;
  SphereTriangulation boundary;
};

BandFamily generate_band_family(int m, bool open = false);

struct EdgeAuditEntry {
  int vertex = -1;
  int incident_edges = 0;
  bool below_wc3_bound = false;  // < 7 edges: cannot be 3-well-centered
  bool below_wc2_bound = false;  // < 9 edges: cannot be 2-well-centered
};

/// One entry per interior vertex.
std::vector<EdgeAuditEntry> min_edge_audit(const TetMesh& mesh);

}  // namespace wct
