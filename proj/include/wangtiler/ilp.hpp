#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wangtiler/extensions.hpp"
#include "wangtiler/tileset.hpp"

namespace wangtiler {

enum class VarKind : std::uint8_t { kBinary, kContinuous };

struct Variable {
  std::string name;
  VarKind kind = VarKind::kBinary;
  double lower = 0.0;
  double upper = 1.0;

  bool operator==(const Variable&) const = default;
};

struct Term {
  double coef = 0.0;
  int var = 0;

  bool operator==(const Term&) const = default;
};

enum class Sense : std::uint8_t { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kEqual;
  double rhs = 0.0;

  bool operator==(const Constraint&) const = default;
};

enum class ObjectiveSense : std::uint8_t { kNone, kMaximize, kMinimize };

struct Objective {
  ObjectiveSense sense = ObjectiveSense::kNone;
  std::vector<Term> terms;
  double constant = 0.0;

  bool operator==(const Objective&) const = default;
};

enum class Formulation : std::uint8_t { kDecision, kMaxRect, kMaxCover, kMaxCsp };

std::string_view formulation_name(Formulation f);
/// Accepts "decision", "maxrect", "maxcover", "maxcsp" (underscored forms too).
Formulation parse_formulation(std::string_view text);

struct ModelSpec {
  TileSet tileset;
  int height = 1;
  int width = 1;
  Formulation formulation = Formulation::kDecision;
  std::vector<Extension> extensions;
};

/// Solver-agnostic linear model. Placement variables come first, named
/// x_i_j_k with 1-based (i, j) and 0-based tile k, so that
/// x_index(r, c, k) = (r * width + c) * num_tiles + k for 0-based (r, c).
struct IlpModel {
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  Objective objective;

  // Grid shape; zero for models not produced by build_model.
  int height = 0;
  int width = 0;
  int num_tiles = 0;

  int x_index(int row, int col, TileId tile) const {
    return (row * width + col) * num_tiles + tile;
  }
  const Constraint* find_constraint(std::string_view name) const;
  int find_variable(std::string_view name) const;  ///< -1 when absent

  /// Structural equality of variables, constraints and objective.
  bool same_model(const IlpModel& other) const;
};

/// Builds the formulation with its extensions appended. Constraint names:
///   v_i_j_l / h_i_j_l   vertical / horizontal color constraints
///   occ_i_j             occupancy (anchor occ_1_1 in max_rect)
///   rect_i_j            rectangularity cut
///   vp_, vm_, hp_, hm_  the split absolute values of max_csp
///   ft_, fb_, st_, dt_, fc_, fbc_, ec_, dc_, pn_, pw_, pvh_, pvv_, pk_  extensions
/// Rows with no terms that hold trivially (0 = 0) are omitted.
/// Throws std::invalid_argument for bad shapes or incompatible extensions.
IlpModel build_model(const ModelSpec& spec);

/// Deterministic text in the CPLEX LP format.
std::string emit_lp(const IlpModel& model);

/// Reads the subset of the LP format that emit_lp produces.
IlpModel parse_lp(std::string_view text);

struct Evaluation {
  bool feasible = true;
  double objective = 0.0;
  std::vector<std::string> violated;
};

/// Maps a tiling to its 0/1 placement vector, sets continuous variables to
/// their smallest feasible values and checks every constraint.
Evaluation evaluate_assignment(const IlpModel& model, const Tiling& tiling);

}  // namespace wangtiler
