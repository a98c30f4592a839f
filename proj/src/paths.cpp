#include "polylog/paths.hpp"

#include <boost/math/constants/constants.hpp>

#include <fstream>
#include <sstream>

namespace polylog {

namespace {

Real pi_here() { return boost::math::constants::pi<Real>(); }

Real continuity_eps(const Complex& at) {
  // Arc endpoints are transcendental, so "exact" matching is checked at a
  // tolerance a little above the precision of the stored values.
  unsigned digits = std::min(at.re.precision(), at.im.precision());
  return std::max(Real(1), abs(at)) * pow(Real(10), -static_cast<int>(digits) + 6);
}

}  // namespace

Letter inverse_letter(Letter l) {
  switch (l) {
    case Letter::s0: return Letter::s0_inv;
    case Letter::s1: return Letter::s1_inv;
    case Letter::s0_inv: return Letter::s0;
    case Letter::s1_inv: return Letter::s1;
  }
  throw std::logic_error("inverse_letter");
}

std::string letter_name(Letter l) {
  switch (l) {
    case Letter::s0: return "s0";
    case Letter::s1: return "s1";
    case Letter::s0_inv: return "s0^-1";
    case Letter::s1_inv: return "s1^-1";
  }
  throw std::logic_error("letter_name");
}

MonodromyWord MonodromyWord::inverse() const {
  MonodromyWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(inverse_letter(*it));
  return w;
}

MonodromyWord MonodromyWord::parse(const std::string& text) {
  MonodromyWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "s0")
      w.letters.push_back(Letter::s0);
    else if (tok == "s1")
      w.letters.push_back(Letter::s1);
    else if (tok == "s0^-1" || tok == "s0i")
      w.letters.push_back(Letter::s0_inv);
    else if (tok == "s1^-1" || tok == "s1i")
      w.letters.push_back(Letter::s1_inv);
    else
      throw std::invalid_argument("MonodromyWord: unknown letter '" + tok + "'");
  }
  return w;
}

std::string MonodromyWord::str() const {
  std::string s;
  for (Letter l : letters) {
    if (!s.empty()) s += ' ';
    s += letter_name(l);
  }
  return s;
}

PathSegment PathSegment::line(Complex a, Complex b) {
  PathSegment s;
  s.kind = Kind::Line;
  s.line_start = std::move(a);
  s.line_end = std::move(b);
  return s;
}

PathSegment PathSegment::arc(Complex center, Real radius, Real angle_start, Real angle_end) {
  if (!(radius > 0)) throw std::domain_error("PathSegment::arc: radius must be positive");
  if (angle_start == angle_end)
    throw std::domain_error("PathSegment::arc: empty angular range");
  PathSegment s;
  s.kind = Kind::Arc;
  s.center = std::move(center);
  s.radius = std::move(radius);
  s.angle_start = std::move(angle_start);
  s.angle_end = std::move(angle_end);
  return s;
}

Complex PathSegment::start() const {
  if (kind == Kind::Line) return line_start;
  return center + Complex(radius * cos(angle_start), radius * sin(angle_start));
}

Complex PathSegment::end() const {
  if (kind == Kind::Line) return line_end;
  return center + Complex(radius * cos(angle_end), radius * sin(angle_end));
}

Complex PathSegment::point_at(const Real& t) const {
  if (kind == Kind::Line) return line_start + (line_end - line_start) * t;
  Real th = angle_start + (angle_end - angle_start) * t;
  return center + Complex(radius * cos(th), radius * sin(th));
}

Complex PathSegment::derivative_at(const Real& t) const {
  if (kind == Kind::Line) return line_end - line_start;
  Real th = angle_start + (angle_end - angle_start) * t;
  Real dth = angle_end - angle_start;
  return Complex(-radius * sin(th) * dth, radius * cos(th) * dth);
}

Real PathSegment::length() const {
  if (kind == Kind::Line) return abs(line_end - line_start);
  return radius * fabs(angle_end - angle_start);
}

Real PathSegment::min_distance(const Complex& p) const {
  if (kind == Kind::Line) {
    Complex v = line_end - line_start;
    Real vv = norm(v);
    if (vv.is_zero()) return abs(p - line_start);
    Complex w = p - line_start;
    Real t = (w.re * v.re + w.im * v.im) / vv;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    return abs(p - (line_start + v * t));
  }
  // Arc: if the angle of p lies inside the swept range (mod 2 pi) the
  // distance is | |p-c| - r |, otherwise distance to the closer endpoint.
  Complex d = p - center;
  Real dist_c = abs(d);
  Real lo = angle_start, hi = angle_end;
  if (lo > hi) std::swap(lo, hi);
  if (hi - lo >= 2 * pi_here()) return fabs(dist_c - radius);
  if (!dist_c.is_zero()) {
    Real a = arg(d);
    Real two_pi = 2 * pi_here();
    // Representative of a congruent mod 2 pi lying in [lo, lo + 2 pi).
    Real k = floor((a - lo) / two_pi);
    Real a0 = a - k * two_pi;
    if (a0 >= lo && a0 <= hi) return fabs(dist_c - radius);
  }
  return std::min(abs(p - start()), abs(p - end()));
}

PathSegment PathSegment::reversed() const {
  PathSegment s = *this;
  if (kind == Kind::Line) {
    std::swap(s.line_start, s.line_end);
  } else {
    std::swap(s.angle_start, s.angle_end);
  }
  std::swap(s.regularized_start, s.regularized_end);
  return s;
}

Real Path::length() const {
  Real total = 0;
  for (const auto& s : segments) total += s.length();
  return total;
}

void Path::append(PathSegment seg) { segments.push_back(std::move(seg)); }

Real default_clearance(const Path& path, const std::vector<Complex>& singular) {
  std::vector<Complex> pts = singular;
  pts.push_back(path.start());
  pts.push_back(path.end());
  Real best = -1;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Real d = abs(pts[i] - pts[j]);
      if (d.is_zero()) continue;
      if (best < 0 || d < best) best = d;
    }
  if (best < 0) best = 1;
  return best / 1000;
}

void validate_path(const Path& path, const std::vector<Complex>& singular, Real clearance) {
  if (path.segments.empty()) return;
  if (clearance < 0) clearance = default_clearance(path, singular);

  Complex at = path.basepoint;
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const PathSegment& seg = path.segments[i];
    Complex s = seg.start();
    if (abs(s - at) > continuity_eps(at))
      throw discontinuity_error("validate_path: segment " + std::to_string(i) +
                                " does not start where the previous one ends");
    for (const Complex& p : singular) {
      Real d = seg.min_distance(p);
      if (d >= clearance) continue;
      // A regularized endpoint may approach (or touch) a singular point.
      bool at_start = abs(seg.start() - p) <= d + clearance / 16;
      bool at_end = abs(seg.end() - p) <= d + clearance / 16;
      if ((seg.regularized_start && at_start) || (seg.regularized_end && at_end)) continue;
      throw singularity_error("validate_path: segment " + std::to_string(i) +
                              " passes within clearance of a singular point");
    }
    at = seg.end();
  }
}

Path compose(const Path& a, const Path& b) {
  if (a.segments.empty()) {
    Path r = b;
    r.basepoint = a.basepoint;
    return r;
  }
  if (!b.segments.empty() && abs(a.end() - b.start()) > continuity_eps(a.end()))
    throw discontinuity_error("compose: endpoint of first path does not match start of second");
  Path r = a;
  for (const auto& s : b.segments) r.append(s);
  return r;
}

Path invert(const Path& p) {
  Path r(p.end());
  for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it)
    r.append(it->reversed());
  return r;
}

Path subdivide(const Path& p, std::size_t index, const Real& t) {
  if (index >= p.segments.size()) throw std::out_of_range("subdivide: segment index");
  if (!(t > 0) || !(t < 1)) throw std::domain_error("subdivide: t must be interior");
  Path r(p.basepoint);
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    const PathSegment& seg = p.segments[i];
    if (i != index) {
      r.append(seg);
      continue;
    }
    if (seg.kind == PathSegment::Kind::Line) {
      Complex mid = seg.point_at(t);
      PathSegment first = PathSegment::line(seg.line_start, mid);
      PathSegment second = PathSegment::line(mid, seg.line_end);
      first.regularized_start = seg.regularized_start;
      second.regularized_end = seg.regularized_end;
      r.append(first);
      r.append(second);
    } else {
      Real mid_angle = seg.angle_start + (seg.angle_end - seg.angle_start) * t;
      PathSegment first = PathSegment::arc(seg.center, seg.radius, seg.angle_start, mid_angle);
      PathSegment second = PathSegment::arc(seg.center, seg.radius, mid_angle, seg.angle_end);
      first.regularized_start = seg.regularized_start;
      second.regularized_end = seg.regularized_end;
      r.append(first);
      r.append(second);
    }
  }
  return r;
}

Path standard_loop(Letter l) {
  Real pi = pi_here();
  Path p;
  Real half = Real(1) / 2;
  switch (l) {
    case Letter::s0:
      p.append(PathSegment::arc(Complex(Real(0), Real(0)), half, Real(0), 2 * pi));
      break;
    case Letter::s0_inv:
      p.append(PathSegment::arc(Complex(Real(0), Real(0)), half, Real(0), -2 * pi));
      break;
    case Letter::s1:
      p.append(PathSegment::arc(Complex(Real(1), Real(0)), half, pi, 3 * pi));
      break;
    case Letter::s1_inv:
      p.append(PathSegment::arc(Complex(Real(1), Real(0)), half, pi, -pi));
      break;
  }
  return p;
}

Path word_to_path(const MonodromyWord& word) {
  Path p;
  for (Letter l : word.letters) p = compose(p, standard_loop(l));
  return p;
}

Path route_between(const Complex& a, const Complex& b, const std::vector<Complex>& avoid) {
  Path p(a);
  if (a == b) return p;
  Complex v = b - a;
  Real vv = norm(v);

  // Transversal close approaches, sorted along the segment.
  struct Crossing {
    Real t_enter, t_exit;
    Complex point;
    Real r;
  };
  std::vector<Crossing> crossings;
  for (const Complex& s : avoid) {
    Real r = Real(1) / 8;
    Real da = abs(a - s), db = abs(b - s);
    if (!da.is_zero()) r = std::min(r, da / 2);
    if (!db.is_zero()) r = std::min(r, db / 2);
    Complex w = s - a;
    Real tp = (w.re * v.re + w.im * v.im) / vv;  // foot of the perpendicular
    if (tp <= 0 || tp >= 1) continue;
    Real d = abs(a + v * tp - s);
    if (d >= r) continue;
    // Intersections with |z - s| = r: t = tp +- h with h^2 = (r^2 - d^2)/|v|^2.
    Real h = sqrt((r * r - d * d) / vv);
    crossings.push_back({tp - h, tp + h, s, r});
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& x, const Crossing& y) { return x.t_enter < y.t_enter; });

  Complex at = a;
  for (const auto& c : crossings) {
    Complex p_enter = a + v * c.t_enter;
    Complex p_exit = a + v * c.t_exit;
    if (at != p_enter) p.append(PathSegment::line(at, p_enter));
    Real th_enter = arg(p_enter - c.point);
    Real th_exit = arg(p_exit - c.point);
    // Shortest deterministic arc; a diameter crossing takes the +pi side.
    Real dth = th_exit - th_enter;
    Real pi = pi_here();
    if (dth > pi) dth -= 2 * pi;
    if (dth <= -pi) dth += 2 * pi;
    p.append(PathSegment::arc(c.point, c.r, th_enter, th_enter + dth));
    at = p.segments.back().end();
  }
  if (!(at == b)) p.append(PathSegment::line(at, b));
  return p;
}

Path read_path(std::istream& in) {
  Path p;
  bool have_any = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto firstc = trimmed.find_first_not_of(" \t\r");
    if (firstc == std::string::npos) continue;
    if (trimmed[firstc] == '#') continue;
    std::istringstream ls(trimmed);
    std::string kw;
    ls >> kw;
    auto next_real = [&]() {
      std::string tok;
      if (!(ls >> tok))
        throw std::invalid_argument("path file line " + std::to_string(lineno) +
                                    ": missing number");
      return Real(tok);
    };
    if (kw == "basepoint") {
      Real re = next_real(), im = next_real();
      p.basepoint = Complex(re, im);
    } else if (kw == "line") {
      Real r1 = next_real(), i1 = next_real(), r2 = next_real(), i2 = next_real();
      p.append(PathSegment::line(Complex(r1, i1), Complex(r2, i2)));
      have_any = true;
    } else if (kw == "arc") {
      Real cr = next_real(), ci = next_real(), rad = next_real();
      Real a0 = next_real(), a1 = next_real();
      p.append(PathSegment::arc(Complex(cr, ci), rad, a0, a1));
      have_any = true;
    } else {
      throw std::invalid_argument("path file line " + std::to_string(lineno) +
                                  ": unknown keyword '" + kw + "'");
    }
  }
  if (have_any && abs(p.start() - p.basepoint) > continuity_eps(p.basepoint))
    throw discontinuity_error("path file: first segment does not start at the basepoint");
  return p;
}

Path read_path_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw std::invalid_argument("cannot open path file '" + filename + "'");
  return read_path(in);
}

void write_path(std::ostream& out, const Path& p, unsigned digits) {
  out << "basepoint " << to_string(p.basepoint.re, digits) << ' '
      << to_string(p.basepoint.im, digits) << '\n';
  for (const auto& s : p.segments) {
    if (s.kind == PathSegment::Kind::Line) {
      out << "line " << to_string(s.line_start.re, digits) << ' '
          << to_string(s.line_start.im, digits) << ' ' << to_string(s.line_end.re, digits)
          << ' ' << to_string(s.line_end.im, digits) << '\n';
    } else {
      out << "arc " << to_string(s.center.re, digits) << ' ' << to_string(s.center.im, digits)
          << ' ' << to_string(s.radius, digits) << ' ' << to_string(s.angle_start, digits)
          << ' ' << to_string(s.angle_end, digits) << '\n';
    }
  }
}

}  // namespace polylog
