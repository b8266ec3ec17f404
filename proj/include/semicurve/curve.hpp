#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semicurve/linalg.hpp"
#include "semicurve/numset.hpp"
#include "semicurve/poly.hpp"
#include "semicurve/series.hpp"

namespace semicurve {

/// A rational curve t -> (f_0 : ... : f_n) whose only singular point is
/// the image P of t = 0, unibranch there.
class CurveParametrization {
 public:
  /// Needs n >= 1, gcd(f_0, ..., f_n) = 1 and a nonconstant ratio.
  explicit CurveParametrization(std::vector<Poly> f);

  const std::vector<Poly>& coords() const { return f_; }
  int n() const { return static_cast<int>(f_.size()) - 1; }
  int degree() const;

  /// Projective change of coordinates giving f_0(0) = 1 and f_i(0) = 0.
  CurveParametrization normalized() const;
  bool is_normalized() const;

 private:
  std::vector<Poly> f_;
};

struct RationalFunction {
  Poly num;
  Poly den;
};

struct LocalAlgebraOptions {
  int initial_order = 0;  // 0: 4 * degree + 8
  int max_order = 512;
};

/// O_P inside Q[[t]] / t^N, as a valuation-echelon basis: strictly
/// increasing valuations, each element monic at its valuation.
class LocalAlgebra {
 public:
  LocalAlgebra(std::vector<TruncatedSeries> basis, int order, NumericalSemigroup s);

  int order() const { return order_; }
  const std::vector<TruncatedSeries>& basis() const { return basis_; }
  const NumericalSemigroup& semigroup() const { return semigroup_; }
  int genus() const { return semigroup_.genus(); }
  int conductor() const { return semigroup_.conductor(); }
  int multiplicity() const { return semigroup_.multiplicity(); }

  /// Element of the basis with valuation v, if v is in S and below c.
  const TruncatedSeries* at(int v) const;

  /// Reduces s mod t^c against the basis. The coefficients left over sit
  /// at gaps; s lies in O_P iff all of them vanish.
  TruncatedSeries reduce(TruncatedSeries s) const;

 private:
  std::vector<TruncatedSeries> basis_;
  std::vector<int> index_;  // valuation -> basis index or -1
  int order_;
  NumericalSemigroup semigroup_;
};

/// Throws std::runtime_error("truncation insufficient ...") when the map is
/// not birational onto its image or the value set does not stabilise by
/// max_order.
LocalAlgebra local_algebra(const CurveParametrization& c, const LocalAlgebraOptions& opt = {});

/// A normalized parametrization together with its local algebra at P.
struct Curve {
  CurveParametrization param;
  LocalAlgebra local;
};
Curve make_curve(const CurveParametrization& c, const LocalAlgebraOptions& opt = {});

int genus(const Curve& c);
int multiplicity(const Curve& c);
CofiniteSet k_set_of_curve(const Curve& c);
/// Pole orders of the regular differentials at P, ascending.
std::vector<int> pole_orders_of_differentials(const Curve& c);

/// f/h in O_P. False when f/h has a pole at P; throws InputError when f and
/// h both vanish at 0.
bool membership(const Curve& c, const Poly& f, const Poly& h);

/// Values of the Q-span of `gens` mod t^n (all of valuation >= 0).
std::vector<int> span_valuations(std::vector<TruncatedSeries> gens);

// --- pencils ---------------------------------------------------------------

enum class BasePoint { None, Removable, NonRemovable };
std::string to_string(BasePoint b);

struct Pencil {
  Poly f;  // normalized: f(0) = 0, h(0) != 0
  Poly h;
  int valuation = 0;                // v(f/h) >= 1
  std::vector<int> extra_values;    // v(A_P) minus S
  int degree = 0;
  BasePoint base_point = BasePoint::None;
};

/// Degree of the pencil <1, f/h>, allowing a base point at P:
/// k = #(v(A_P) \ S) + deg h + max(0, deg f - deg h), A_P = O_P + (f/h) O_P.
Pencil pencil_degree(const Curve& c, const Poly& f, const Poly& h);

struct NonRemovablePencil {
  Pencil pencil;          // <1, t^2>
  int r = -1;             // -1: f_0 has no tail
  int s = -1;             // -1: f_1 has no tail
  int formula_degree = 0;  // 2 + g - (min(r, s) + 1) / 2
};

/// The pencil <1, t^2> with its non-removable base point when the
/// multiplicity is 2 and the parity conditions on r and s hold.
std::optional<NonRemovablePencil> non_removable_pencil(const Curve& c);

struct MapDegree {
  int degree = 0;
  bool samples_agree = true;
};

/// Degree of t -> (g_0 : ... : g_k) onto its image, via the gcd of
/// g_i(t) g_j(t0) - g_i(t0) g_j(t) at three seeded rational t0.
/// Throws InputError("constant map").
MapDegree map_degree(std::span<const Poly> coords, std::uint64_t seed = 1);

// --- hyperelliptic test ----------------------------------------------------

enum class Verdict { Yes, No, Undetermined };
std::string to_string(Verdict v);

struct HyperellipticAnswer {
  Verdict verdict = Verdict::Undetermined;
  std::optional<Poly> witness;  // h with t^2/h in O_P
  std::string note;
};

/// Searches h = 1 + alpha t + beta t^2 with t^2/h in O_P over Q.
HyperellipticAnswer is_hyperelliptic_curve(const Curve& c);

// --- gonality ----------------------------------------------------------------

struct GonalityOptions {
  int random_candidates = 24;
  std::uint64_t seed = 1;
};

struct GonalityBounds {
  int lower = 0;
  int upper = 0;
  std::optional<Pencil> witness;  // attains `upper`
  std::string witness_source;
  int candidates_tried = 0;
  bool exact() const { return lower == upper; }
};

GonalityBounds gonality_bounds(const Curve& c, const GonalityOptions& opt = {});

/// min over a >= 1 of a + #((a + S) \ S): no pencil with v(f/h) = a does better.
int valuation_lower_bound(const NumericalSemigroup& s);

// --- scrolls -----------------------------------------------------------------

/// Coefficients on x_0, ..., x_n.
using LinearForm = Vector;

/// A 2 x k matrix of linear forms; the scroll is where it has rank < 2.
struct ScrollLayout {
  std::vector<int> blocks;  // empty when the matrix is not catalecticant
  std::array<std::vector<LinearForm>, 2> rows;

  int columns() const { return static_cast<int>(rows[0].size()); }
  std::string name() const;  // "S_{4,2,1}"
};

/// Block i takes m_i + 1 consecutive coordinates: top row gets the first
/// m_i of them, bottom row the last m_i.
ScrollLayout catalecticant(std::span<const int> blocks);

/// All 2x2 minors vanish identically on the parametrization.
bool verify_scroll_containment(const CurveParametrization& c, const ScrollLayout& layout);

struct ScrollWitness {
  int codimension = 0;        // dim U
  std::vector<Poly> u_basis;  // U inside <f_1, ..., f_n>
  /// Entries f_0 phi and f_1 phi for phi in {1} + U / f_0, as polynomials.
  std::array<std::vector<Poly>, 2> entries;
  std::optional<ScrollLayout> layout;  // when every entry is a linear form
  bool minors_vanish = false;
};

/// Throws InputError("irrational roots unsupported") unless f_0 splits.
ScrollWitness scroll_codimension(const Curve& c);

struct BiellipticEmbedding {
  CurveParametrization curve;
  ScrollLayout layout;
  bool symmetric = false;
  int m = 0;
  int n = 0;
  int ambient = 0;  // P^ambient
  int degree = 0;
};

/// Monomial realization x = t^4, y = t^6, z = t^(2g-3) (symmetric) or
/// z = t^(2g-1), u = t^(2g+1). Needs S bielliptic of genus >= 5.
BiellipticEmbedding bielliptic_embedding(const NumericalSemigroup& s);

// --- linear series -----------------------------------------------------------

struct LinearSeriesReport {
  int dimension = 0;
  int degree = 0;
  int degree_at_p = 0;
  bool base_point_free = false;
  std::vector<Poly> map_coords;
  MapDegree map;
};

/// Series spanned by `space` (1 must be in the span, every element regular
/// at P); degree counted point by point.
LinearSeriesReport linear_series(const Curve& c, std::span<const RationalFunction> space,
                                 std::uint64_t seed = 1);

/// V = <1, u^2, u^3, u^4>. Throws InputError("u does not define the
/// construction") unless u^2, u^3 lie in O_P.
LinearSeriesReport g83_construction(const Curve& c, const RationalFunction& u, std::uint64_t seed = 1);

/// V = <1, x_1, x_2, x_1^2> with x_i = f_i / f_0, the default g^3_8 candidate.
LinearSeriesReport g83_default(const Curve& c, std::uint64_t seed = 1);

}  // namespace semicurve
