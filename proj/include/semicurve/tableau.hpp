#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semicurve/numset.hpp"

namespace semicurve {

enum class Step : char { Up = 'U', Right = 'R' };

/// Step i (i = 1, 2, ...) is Up when i is a gap, Right when it is a member.
/// The path runs to max(2 g_T, c_T), which closes the diagram.
std::vector<Step> dyck_path(const CofiniteSet& t);

/// Young diagram in English convention: rows()[0] is the uppermost row.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  YoungDiagram(std::vector<int> rows, int grid_rows, int grid_cols);

  const std::vector<int>& rows() const { return rows_; }
  int grid_rows() const { return grid_rows_; }
  int grid_cols() const { return grid_cols_; }
  int boxes() const;

  /// Nonzero row lengths, i.e. the partition.
  std::vector<int> partition() const;
  /// Conjugate partition, computed by column counts.
  std::vector<int> transpose() const;

 private:
  std::vector<int> rows_;
  int grid_rows_ = 0;
  int grid_cols_ = 0;
};

/// Row for gap l_i has l_i - i boxes (the positive members below l_i).
YoungDiagram diagram(const CofiniteSet& t);
int weight_via_diagram(const CofiniteSet& t);

/// diagram(S) without its uppermost row, i.e. the contributions of
/// l_1, ..., l_{g-1}. Requires g >= 1.
YoungDiagram t1_subdiagram(const CofiniteSet& s);

/// t1(K(S)) is the conjugate of t1(S).
bool verify_transpose(const NumericalSemigroup& s);

/// (c - 1 - g, g - 1): uppermost rows of the diagrams of S and K(S).
/// Throws std::logic_error if the computed diagrams disagree.
std::pair<int, int> top_row_lengths(const NumericalSemigroup& s);

/// Text art: '#' marks boxes of the top row, '*' the remaining boxes,
/// '.' empty grid cells.
std::string render_text(const YoungDiagram& d);

}  // namespace semicurve
