#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fforge/sym_eigen.hpp"
#include "fforge/tree.hpp"

namespace fforge {

enum class TreeType { TypeI, TypeII, Degenerate };

enum class FedReason {
  OK,
  MultipleMinima,
  MultipleMaxima,
  DistanceBelowDiameter,
  DegenerateEigenspace,
};

/// How trees whose second Laplacian eigenvalue is not simple are judged.
/// Strict refuses a verdict (never satisfied); Projection tries every
/// diameter-realizing leaf pair through the eigenspace projection.
enum class DegeneratePolicy { Strict, Projection };

struct Tolerances {
  double zero = 1e-8;  // relative to the sup norm of the vector
  double mult = 1e-9;  // absolute eigenvalue clustering width
};

struct FedVerdict {
  bool satisfied = false;
  int m = 0;               // argmin vertex (representative when tied)
  int M = 0;               // argmax vertex
  int extrema_distance = 0;
  int diameter = 0;
  FedReason reason = FedReason::OK;
};

/// Characteristic location: a vertex for type I, an edge for type II
/// (oriented so the positive endpoint comes first).
struct Characteristic {
  int vertex = 0;
  std::pair<int, int> edge{0, 0};
};

struct FiedlerReport {
  double lambda2 = 0.0;
  int multiplicity = 1;
  std::vector<double> vector;  // unit norm, first significant entry positive
  TreeType tree_type = TreeType::TypeI;
  Characteristic characteristic;
  std::vector<int> zero_set;
  std::vector<int> argmin_set;
  std::vector<int> argmax_set;
  FedVerdict fed;
};

/// L = D - A. Integer entries, rows sum to zero exactly.
SymMatrix laplacian(const Tree& tree);

/// Second-smallest Laplacian eigenvalue. Requires n >= 2.
double algebraic_connectivity(const Tree& tree);

/// Full second-eigenpair report: eigenvalue cluster, sign-normalized vector,
/// type I/II classification (simple case), extrema sets and the FED verdict.
FiedlerReport fiedler(const Tree& tree,
                      DegeneratePolicy policy = DegeneratePolicy::Projection,
                      const Tolerances& tol = {});

/// Classifies a simple second eigenvector: type I returns the unique zero
/// vertex with a neighbor outside the zero set, type II the unique
/// sign-change edge. Retries once with a 10x coarser zero threshold before
/// throwing StructureViolation.
std::pair<TreeType, Characteristic> classify_tree_type(const Tree& tree,
                                                       std::span<const double> phi,
                                                       const Tolerances& tol = {});

/// FED verdict: satisfied iff some pair of extremal vertices (argmin,
/// argmax, ties within tol.zero of the extreme values) lies at diameter
/// distance. Degenerate eigenspaces go through the policy.
FedVerdict check_fed(const Tree& tree,
                     DegeneratePolicy policy = DegeneratePolicy::Projection,
                     const Tolerances& tol = {});

/// Fallback verdict for a degenerate second eigenspace: projects e_u - e_v
/// for every ordered leaf pair (u, v) at diameter distance onto the
/// eigenspace and accepts the first projection in which u is maximal and v
/// minimal (tied symmetric siblings allowed).
FedVerdict degenerate_fed_heuristic(const Tree& tree, const EigenResult& eig,
                                    int cluster_begin, int cluster_size,
                                    const Tolerances& tol = {});

const char* to_string(TreeType t);
const char* to_string(FedReason r);
const char* to_string(DegeneratePolicy p);

}  // namespace fforge
