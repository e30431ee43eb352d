#pragma once

#include "certificates.hpp"

#include <optional>

namespace wct {

struct EmbeddingOptions {
  int restarts = 64;
  double margin = 0.05;      // required inner product between adjacent rays
  int max_iterations = 5000;
  unsigned long long seed = 0;
};

/// Heuristic search for unit vectors (one per link vertex) such that every
/// adjacent pair subtends an acute angle at the origin and the coned star is
/// a proper (non-inverted) embedding.  Success certifies that the link
/// permits a 2-well-centered neighborhood via the isosceles placement; a
/// nullopt result is inconclusive.
std::optional<std::vector<Vec3>> acute_link_embedding(
    const SphereTriangulation& link, const EmbeddingOptions& opts = {});

/// Same machinery with a 3-well-centeredness objective: searches for vertex
/// positions making every tet of the coned star 3-well-centered.  Success
/// yields a realizability witness; failure is inconclusive.
std::optional<std::vector<Vec3>> wc3_link_embedding(
    const SphereTriangulation& link, const EmbeddingOptions& opts = {});

/// True when the coned star over the given positions is consistently
/// oriented (no inverted tet) and radially covers the sphere exactly once.
bool star_embedding_ok(const SphereTriangulation& link,
                       const std::vector<Vec3>& pos);

enum class Wc3Status { Blocked, Unknown, Realized };
enum class Wc2Status { Blocked, Unknown, Feasible };

const char* to_string(Wc3Status s);
const char* to_string(Wc2Status s);

struct LinkClassification {
  SphereTriangulation link;
  std::vector<int> degrees;
  std::string canonical;
  Wc3Status wc3 = Wc3Status::Unknown;
  std::optional<CertificateComplex> wc3_certificate;
  std::optional<std::vector<Vec3>> wc3_witness;
  Wc2Status wc2 = Wc2Status::Unknown;
  bool wc2_degree_blocked = false;
  std::optional<std::vector<Vec3>> wc2_embedding;
};

struct ClassifyOptions {
  bool attempt_witnesses = false;
  EmbeddingOptions embedding;
  SearchLimits limits;
};

/// Certificate search decides wc3 BLOCKED; the degree obstruction decides
/// wc2 BLOCKED; optional optimization provides REALIZED / FEASIBLE
/// witnesses.  Everything else stays UNKNOWN (the heuristics are one-sided).
LinkClassification classify_link(const SphereTriangulation& link,
                                 const ClassifyOptions& opts = {});

}  // namespace wct
