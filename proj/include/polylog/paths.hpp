#ifndef POLYLOG_PATHS_HPP
#define POLYLOG_PATHS_HPP

#include "polylog/numerics.hpp"

#include <iosfwd>
#include <vector>

namespace polylog {

struct discontinuity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Letter { s0, s1, s0_inv, s1_inv };

Letter inverse_letter(Letter l);
std::string letter_name(Letter l);

/// Free-group word in the standard loop generators around 0 and 1.
struct MonodromyWord {
  std::vector<Letter> letters;

  MonodromyWord() = default;
  explicit MonodromyWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

  MonodromyWord inverse() const;
  /// Parses whitespace-separated tokens s0, s1, s0^-1, s1^-1.
  static MonodromyWord parse(const std::string& text);
  std::string str() const;
};

/// One contour piece: a straight line or a circular arc.  Arcs are
/// parameterized as center + radius * e^{i theta(t)} with theta running
/// linearly from angle_start to angle_end (orientation from the sign of the
/// difference).  A regularized endpoint flag marks an endpoint that is
/// allowed to sit at a singular point.
struct PathSegment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;

  Complex line_start, line_end;

  Complex center;
  Real radius;
  Real angle_start, angle_end;

  bool regularized_start = false;
  bool regularized_end = false;

  static PathSegment line(Complex a, Complex b);
  static PathSegment arc(Complex center, Real radius, Real angle_start, Real angle_end);

  Complex start() const;
  Complex end() const;
  Complex point_at(const Real& t) const;       // t in [0, 1]
  Complex derivative_at(const Real& t) const;  // d z / d t
  Real length() const;

  /// Minimum distance from the segment's trace to p.
  Real min_distance(const Complex& p) const;

  PathSegment reversed() const;
};

/// Piecewise contour based (by default) at 1/2; consecutive segments must
/// meet end-to-start.
struct Path {
  Complex basepoint{Real(1) / 2, Real(0)};
  std::vector<PathSegment> segments;

  Path() = default;
  explicit Path(Complex base) : basepoint(std::move(base)) {}

  bool empty() const { return segments.empty(); }
  Complex start() const { return segments.empty() ? basepoint : segments.front().start(); }
  Complex end() const { return segments.empty() ? basepoint : segments.back().end(); }
  Real length() const;

  void append(PathSegment seg);
};

/// Clearance radius for a path with respect to a set of singular points:
/// 10^-3 of the shortest pairwise distance among the singular points and the
/// path endpoints (distinct pairs only).
Real default_clearance(const Path& path, const std::vector<Complex>& singular);

/// Checks segment-to-segment continuity and that the path keeps at least
/// `clearance` away from every singular point (regularized endpoints exempt
/// at their own segment).  clearance < 0 selects the default rule.
void validate_path(const Path& path, const std::vector<Complex>& singular,
                   Real clearance = Real(-1));

Path compose(const Path& a, const Path& b);
Path invert(const Path& p);

/// Splits segment `index` at interior parameter t in (0,1); the result traces
/// the same contour (used by reparameterization-invariance tests).
Path subdivide(const Path& p, std::size_t index, const Real& t);

/// sigma_0(t) = e^{2 pi i t}/2 and sigma_1(t) = 1 - e^{2 pi i t}/2 as arcs
/// based at 1/2, plus their orientation-reversed inverses.
Path standard_loop(Letter l);
Path word_to_path(const MonodromyWord& word);

/// Straight route from a to b with deterministic semicircular detours
/// inserted where the segment would pass too close to one of the points to
/// avoid.  Endpoints themselves may come arbitrarily close to those points.
Path route_between(const Complex& a, const Complex& b, const std::vector<Complex>& avoid);

/// Line-oriented path file format:
///   # comment
///   basepoint <re> <im>
///   line <re1> <im1> <re2> <im2>
///   arc <center_re> <center_im> <radius> <angle_start> <angle_end>
Path read_path(std::istream& in);
Path read_path_file(const std::string& filename);
void write_path(std::ostream& out, const Path& p, unsigned digits);

}  // namespace polylog

#endif
