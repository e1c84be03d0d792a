#include "acs/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "acs/bounds.hpp"
#include "acs/combinatorics.hpp"
#include "acs/error.hpp"
#include "acs/field.hpp"
#include "acs/verify.hpp"

namespace acs {

namespace {

using Vec = std::vector<FieldElement>;

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

void require_ground_set(std::uint64_t v, const char* what) {
  if (v > kMaxGroundSet)
    throw Error(ErrorCode::ParamsInvalid,
                std::string(what) + " needs " + std::to_string(v) + " points, above " + std::to_string(kMaxGroundSet));
}

// Coordinate vectors indexed base q with coordinate 0 most significant, so
// index order is lexicographic order of the coordinates.
std::uint64_t vec_index(const Vec& x, std::uint32_t q) {
  std::uint64_t r = 0;
  for (auto c : x) r = r * q + c;
  return r;
}

Vec vec_at(std::uint64_t index, std::uint32_t q, std::uint32_t len) {
  Vec x(len);
  for (std::uint32_t i = len; i-- > 0;) {
    x[i] = static_cast<FieldElement>(index % q);
    index /= q;
  }
  return x;
}

// Scales so the first nonzero coordinate is 1; returns false for the zero vector.
bool normalize(const GaloisField& f, Vec& x) {
  for (auto c : x)
    if (c != 0) {
      const FieldElement s = f.inv(c);
      for (auto& y : x) y = f.mul(y, s);
      return true;
    }
  return false;
}

bool is_normalized(const Vec& x) {
  for (auto c : x)
    if (c != 0) return c == 1;
  return false;
}

// Projective points of PG(dim-1, f) as normalized vectors in lexicographic order.
std::vector<Vec> projective_points(const GaloisField& f, std::uint32_t dim) {
  std::vector<Vec> pts;
  const std::uint64_t total = ipow(f.order(), dim);
  for (std::uint64_t i = 1; i < total; ++i) {
    Vec x = vec_at(i, f.order(), dim);
    if (is_normalized(x)) pts.push_back(std::move(x));
  }
  return pts;
}

// Blocks through every pair of points, generated by `line(a, b)`, each pair visited once.
template <typename LineFn>
std::vector<std::vector<Point>> pairwise_lines(std::uint32_t npts, LineFn line) {
  std::vector<bool> covered(std::size_t{npts} * npts, false);
  std::vector<std::vector<Point>> blocks;
  for (Point a = 0; a < npts; ++a)
    for (Point b = a + 1; b < npts; ++b) {
      if (covered[std::size_t{a} * npts + b]) continue;
      std::vector<Point> l = line(a, b);
      std::sort(l.begin(), l.end());
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) covered[std::size_t{l[i]} * npts + l[j]] = true;
      blocks.push_back(std::move(l));
    }
  return blocks;
}

}  // namespace

SetSystem trivial_ts(std::uint32_t v, std::uint32_t w) {
  if (w < 1 || v < w) throw Error(ErrorCode::ParamsInvalid, "trivial scheme needs v >= w >= 1");
  std::vector<std::vector<Point>> blocks;
  for (Point j = w - 1; j < v; ++j) {
    std::vector<Point> b(w - 1);
    for (Point i = 0; i + 1 < w; ++i) b[i] = i;
    b.push_back(j);
    blocks.push_back(std::move(b));
  }
  return SetSystem::create(v, w, std::move(blocks));
}

DesignDescriptor describe_pg_lines(std::uint32_t n, std::uint32_t q) {
  const std::uint64_t v = (ipow(q, n + 1) - 1) / (q - 1);
  return {DesignFamily::PgLines, n, q, {}, 2, static_cast<std::uint32_t>(v), q + 1, 1};
}

DesignDescriptor describe_ag_lines(std::uint32_t n, std::uint32_t q) {
  return {DesignFamily::AgLines, n, q, {}, 2, static_cast<std::uint32_t>(ipow(q, n)), q, 1};
}

DesignDescriptor describe_inversive_plane(std::uint32_t q) {
  return {DesignFamily::InversivePlane, 2, q, {}, 3, q * q + 1, q + 1, 1};
}

DesignDescriptor describe_hermitian_unital(std::uint32_t q) {
  return {DesignFamily::HermitianUnital, 2, q, {}, 2, q * q * q + 1, q + 1, 1};
}

SetSystem pg_lines(std::uint32_t n, std::uint32_t q) {
  if (n < 2) throw Error(ErrorCode::ParamsInvalid, "projective geometry needs n >= 2");
  const GaloisField f(q);
  std::uint64_t npts = 1;
  for (std::uint32_t i = 0; i < n && npts <= kMaxGroundSet; ++i) npts = npts * q + 1;
  require_ground_set(npts, "projective geometry");

  const std::uint32_t dim = n + 1;
  const std::vector<Vec> pts = projective_points(f, dim);
  std::vector<std::int32_t> index_of(ipow(q, dim), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) index_of[vec_index(pts[i], q)] = static_cast<std::int32_t>(i);

  auto blocks = pairwise_lines(static_cast<std::uint32_t>(pts.size()), [&](Point a, Point b) {
    std::vector<Point> line{a};
    for (FieldElement lambda = 0; lambda < q; ++lambda) {
      Vec x(dim);
      for (std::uint32_t i = 0; i < dim; ++i) x[i] = f.add(pts[b][i], f.mul(lambda, pts[a][i]));
      normalize(f, x);
      line.push_back(static_cast<Point>(index_of[vec_index(x, q)]));
    }
    return line;
  });
  return SetSystem::create(static_cast<std::uint32_t>(pts.size()), q + 1, std::move(blocks));
}

SetSystem ag_lines(std::uint32_t n, std::uint32_t q) {
  if (n < 2) throw Error(ErrorCode::ParamsInvalid, "affine geometry needs n >= 2");
  const GaloisField f(q);
  std::uint64_t npts = 1;
  for (std::uint32_t i = 0; i < n && npts <= kMaxGroundSet; ++i) npts *= q;
  require_ground_set(npts, "affine geometry");

  auto blocks = pairwise_lines(static_cast<std::uint32_t>(npts), [&](Point a, Point b) {
    const Vec pa = vec_at(a, q, n), pb = vec_at(b, q, n);
    std::vector<Point> line;
    for (FieldElement lambda = 0; lambda < q; ++lambda) {
      Vec x(n);
      for (std::uint32_t i = 0; i < n; ++i) x[i] = f.add(pa[i], f.mul(lambda, f.sub(pb[i], pa[i])));
      line.push_back(static_cast<Point>(vec_index(x, q)));
    }
    return line;
  });
  return SetSystem::create(static_cast<std::uint32_t>(npts), q, std::move(blocks));
}

SetSystem inversive_plane(std::uint32_t q) {
  if (!GaloisField::supported(q)) throw Error(ErrorCode::UnsupportedFieldOrder, "q=" + std::to_string(q));
  const GaloisField f(q * q);
  const std::uint32_t order = q * q;
  const Point infinity = order;

  std::vector<FieldElement> subline;
  for (FieldElement x = 0; x < order; ++x)
    if (f.pow(x, q) == x) subline.push_back(x);

  std::set<std::vector<Point>> circles;
  auto emit = [&](auto map) {
    std::vector<Point> c;
    c.reserve(q + 1);
    for (auto z : subline) c.push_back(map(z));
    c.push_back(map(infinity));
    std::sort(c.begin(), c.end());
    circles.insert(std::move(c));
  };
  for (FieldElement a = 1; a < order; ++a)
    for (FieldElement b = 0; b < order; ++b)
      emit([&](Point z) { return z == infinity ? infinity : f.add(f.mul(a, z), b); });
  // z -> (az + b) / (z + d) with ad - b != 0
  for (FieldElement a = 0; a < order; ++a)
    for (FieldElement b = 0; b < order; ++b)
      for (FieldElement d = 0; d < order; ++d) {
        if (f.mul(a, d) == b) continue;
        emit([&](Point z) -> Point {
          if (z == infinity) return a;
          const FieldElement den = f.add(z, d);
          if (den == 0) return infinity;
          return f.div(f.add(f.mul(a, z), b), den);
        });
      }
  std::vector<std::vector<Point>> blocks(circles.begin(), circles.end());
  return SetSystem::create(order + 1, q + 1, std::move(blocks));
}

SetSystem hermitian_unital(std::uint32_t q) {
  if (!GaloisField::supported(q)) throw Error(ErrorCode::UnsupportedFieldOrder, "q=" + std::to_string(q));
  const GaloisField f(q * q);
  const std::vector<Vec> plane = projective_points(f, 3);

  std::vector<Vec> curve;
  for (const auto& x : plane) {
    FieldElement s = 0;
    for (auto c : x) s = f.add(s, f.pow(c, q + 1));
    if (s == 0) curve.push_back(x);
  }
  std::vector<std::vector<Point>> blocks;
  for (const auto& line : plane) {
    std::vector<Point> meet;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      FieldElement s = 0;
      for (std::uint32_t j = 0; j < 3; ++j) s = f.add(s, f.mul(line[j], curve[i][j]));
      if (s == 0) meet.push_back(static_cast<Point>(i));
    }
    if (meet.size() >= 2) blocks.push_back(std::move(meet));
  }
  return SetSystem::create(static_cast<std::uint32_t>(curve.size()), q + 1, std::move(blocks));
}

std::pair<SetSystem, ExtensionCertificate> extend_design(const SetSystem& base, std::uint32_t d, std::uint32_t t,
                                                         DesignDescriptor descriptor) {
  if (t < 1) throw Error(ErrorCode::ParamsInvalid, "strength must be positive");
  if (base.empty()) throw Error(ErrorCode::NotADesign, "base system has no blocks");
  const std::uint32_t r = t * t;
  const std::uint32_t w0 = base.w();
  if (d >= r)
    throw Error(ErrorCode::CongruenceViolated, "d=" + std::to_string(d) + " must be at most t^2-1=" + std::to_string(r - 1));
  if ((w0 - 1) % r != 0)
    throw Error(ErrorCode::CongruenceViolated,
                "w=" + std::to_string(w0 + d) + " is not " + std::to_string(d + 1) + " mod " + std::to_string(r));
  const std::uint32_t tau = (w0 + d + r - 1) / r;
  const auto check = verify_design(base, tau, 1);
  if (!check.holds())
    throw Error(ErrorCode::NotADesign, "base is not a " + std::to_string(tau) + "-design with lambda 1: " + check.reason);

  const std::uint32_t v0 = base.v();
  require_ground_set(std::uint64_t{v0} + d, "extension");
  std::vector<std::vector<Point>> blocks;
  blocks.reserve(base.size());
  for (const auto& b : base.blocks()) {
    std::vector<Point> pts = b.points();
    for (Point i = 0; i < d; ++i) pts.push_back(v0 + i);
    blocks.push_back(std::move(pts));
  }
  descriptor.tau = tau;
  descriptor.v = v0;
  descriptor.w = w0;
  descriptor.lambda = 1;
  ExtensionCertificate cert{std::move(descriptor), d, t, tau};
  return {SetSystem::create(v0 + d, w0 + d, std::move(blocks)), std::move(cert)};
}

std::uint32_t design_max_strength(std::uint32_t tau, std::uint32_t w) {
  if (tau < 2) throw Error(ErrorCode::ParamsInvalid, "design strength must be at least 2");
  if (w < 1) throw Error(ErrorCode::ParamsInvalid, "block size must be positive");
  std::uint64_t t = 0;
  while ((t + 1) * (t + 1) * (tau - 1) <= std::uint64_t{w} - 1) ++t;
  return static_cast<std::uint32_t>(t);
}

SetSystem greedy_packing_ts(std::uint32_t v, std::uint32_t w, std::uint32_t t, std::uint64_t budget) {
  SchemeParams::make(t, w, v);
  const BigInt candidates = binom(v, w);
  if (candidates > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "C(" + std::to_string(v) + "," + std::to_string(w) + ")=" + candidates.str() + " candidates exceed budget");
  const std::uint32_t tau = (w + t * t - 1) / (t * t);

  std::vector<std::vector<Point>> accepted;
  std::vector<std::vector<std::uint32_t>> blocks_at(v);
  std::vector<std::uint32_t> meet;
  std::vector<std::uint32_t> touched;

  std::vector<Point> cand = first_combination(w);
  do {
    bool ok = true;
    for (Point p : cand) {
      for (auto b : blocks_at[p]) {
        if (meet[b]++ == 0) touched.push_back(b);
        if (meet[b] >= tau) ok = false;
      }
      if (!ok) break;
    }
    for (auto b : touched) meet[b] = 0;
    touched.clear();
    if (ok) {
      const auto id = static_cast<std::uint32_t>(accepted.size());
      for (Point p : cand) blocks_at[p].push_back(id);
      accepted.push_back(cand);
      meet.push_back(0);
    }
  } while (next_combination_colex(cand, v));
  return SetSystem::create(v, w, std::move(accepted));
}

}  // namespace acs
