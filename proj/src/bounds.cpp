#include "acs/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "acs/error.hpp"

namespace acs {

SchemeParams SchemeParams::make(std::uint32_t t, std::uint32_t w, std::uint32_t v) {
  if (!(v >= w && w >= t && t >= 2))
    throw Error(ErrorCode::ParamsInvalid, "need v >= w >= t >= 2, got t=" + std::to_string(t) +
                                              " w=" + std::to_string(w) + " v=" + std::to_string(v));
  return SchemeParams{t, w, v};
}

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::Ts: return "ts";
    case Scheme::Ipps: return "ipps";
    case Scheme::Cff: return "cff";
  }
  return "?";
}

BigInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt floor_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

std::string format_rational(const Rational& r) {
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

namespace {

std::uint32_t ceil_div(std::uint32_t a, std::uint32_t b) { return (a + b - 1) / b; }

BoundValue upper(std::string name, Rational value, std::string note) {
  BoundValue b{std::move(name), BoundKind::Upper, std::move(value), std::nullopt, true, std::move(note)};
  b.integer_bound = floor_of(b.value);
  return b;
}

BoundValue lower(std::string name, Rational value, std::string note) {
  BoundValue b{std::move(name), BoundKind::Lower, std::move(value), std::nullopt, true, std::move(note)};
  b.integer_bound = ceil_of(b.value);
  return b;
}

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

// C(v, e) / C(w-1, e-1) and its refinement subtracting C(w-1, e).
Rational own_subset_ratio(std::uint32_t v, std::uint32_t w, std::uint32_t e) {
  return ratio(binom(v, e), binom(w - 1, e - 1));
}
Rational double_count_ratio(std::uint32_t v, std::uint32_t w, std::uint32_t e) {
  return ratio(binom(v, e) - binom(w - 1, e), binom(w - 1, e - 1));
}

}  // namespace

std::uint32_t ipps_collins_exponent(const SchemeParams& p) {
  return ceil_div(p.w, p.t * p.t / 4 + ceil_div(p.t, 2));
}

std::uint32_t ipps_new_exponent(const SchemeParams& p) { return ceil_div(p.w, p.t * p.t / 4 + p.t); }

BoundValue ipps_upper_collins(const SchemeParams& p) {
  const std::uint32_t e = ipps_collins_exponent(p);
  const std::uint32_t top = ceil_div(p.w, p.t / 2 + 1) - 1;
  return upper("collins", ratio(binom(p.v, e), binom(top, e - 1)),
               "C(v,e)/C(ceil(w/(floor(t/2)+1))-1,e-1), e=" + std::to_string(e));
}

BoundValue ipps_upper_new(const SchemeParams& p) {
  const std::uint32_t e = ipps_new_exponent(p);
  return upper("new", Rational(binom(p.v, e)),
               "C(v,e), e=" + std::to_string(e) + "; conjectured tight up to a constant (unproven)");
}

BoundValue ts_upper_sw(const SchemeParams& p) {
  const std::uint32_t e = ceil_div(p.w, p.t);
  return upper("sw", own_subset_ratio(p.v, p.w, e), "C(v,e)/C(w-1,e-1), e=ceil(w/t)=" + std::to_string(e));
}

BoundValue ts_upper_collins(const SchemeParams& p) {
  const std::uint32_t e = ceil_div(p.w, p.t * p.t);
  return upper("collins", Rational(binom(p.v, e)), "C(v,e), e=ceil(w/t^2)=" + std::to_string(e));
}

BoundValue ts_upper_general(const SchemeParams& p) {
  const std::uint32_t e = ceil_div(p.w, p.t * p.t);
  return upper("general", double_count_ratio(p.v, p.w, e),
               "(C(v,e)-C(w-1,e))/C(w-1,e-1), e=ceil(w/t^2)=" + std::to_string(e));
}

BoundValue cff_upper_special(std::uint32_t r, std::uint32_t w, std::uint32_t v) {
  if (r < 1 || w < 1 || v < w)
    throw Error(ErrorCode::ParamsInvalid, "need r >= 1 and v >= w >= 1");
  const std::uint32_t e = ceil_div(w, r);
  const std::uint32_t d = w - 1 - r * (e - 1);  // w = r(e-1) + 1 + d, 0 <= d <= r-1

  BoundValue b;
  b.name = "special";
  b.kind = BoundKind::Upper;
  b.value = (v >= d) ? ratio(binom(v - d, e), binom(w - d, e)) : Rational(0);

  std::vector<std::string> holds, fails;
  const BigInt threshold = BigInt(2) * d * e * binom(w, e);
  const bool above = BigInt(v) > threshold;
  if (d <= 1) holds.push_back("(a) d<=1");
  if (BigInt(2) * e * e * d < r) holds.push_back("(b) d<r/(2e^2)");
  if (e == 2 && d < ceil_div(2 * r, 3)) holds.push_back("(c) e=2, d<ceil(2r/3)");

  std::string note = "C(v-d,e)/C(w-d,e), d=" + std::to_string(d) + ", e=" + std::to_string(e) + ", r=" +
                     std::to_string(r) + ";";
  if (!above) fails.push_back("v <= 2de*C(w,e)=" + threshold.str());
  if (holds.empty()) fails.push_back("none of (a) d<=1, (b) d<r/(2e^2), (c) e=2 and d<ceil(2r/3)");
  b.applicable = fails.empty();
  if (b.applicable) {
    b.integer_bound = floor_of(b.value);
    note += " cases:";
    for (const auto& h : holds) note += " " + h;
  } else {
    note += " inapplicable:";
    for (std::size_t i = 0; i < fails.size(); ++i) note += (i ? "; " : " ") + fails[i];
  }
  b.condition_note = std::move(note);
  return b;
}

BoundValue ts_upper_special(const SchemeParams& p) { return cff_upper_special(p.t * p.t, p.w, p.v); }

BoundValue ts_exact_small(const SchemeParams& p) {
  BoundValue b;
  b.name = "exact-small";
  b.kind = BoundKind::Exact;
  b.value = Rational(BigInt(p.v) - p.w + 1);
  b.applicable = p.w <= p.t * p.t;
  if (b.applicable) {
    b.integer_bound = numerator(b.value);
    b.condition_note = "v-w+1, exact since w <= t^2";
  } else {
    b.condition_note = "inapplicable: w > t^2";
  }
  return b;
}

BoundValue ts_lower_trivial(const SchemeParams& p) {
  return lower("trivial-lower", Rational(BigInt(p.v) - p.w + 1), "v-w+1, common (w-1)-core construction");
}

BoundValue ts_lower_packing(const SchemeParams& p) {
  const std::uint32_t e = ceil_div(p.w, p.t * p.t);
  const BigInt den = binom(p.w, e);
  return lower("packing-lower", ratio(binom(p.v, e), den * den),
               "C(v,e)/C(w,e)^2, e=ceil(w/t^2)=" + std::to_string(e) + ", greedy packing");
}

BoundValue cff_upper_eff(const SchemeParams& p) {
  const std::uint32_t e = ceil_div(p.w, p.t);
  return upper("eff", own_subset_ratio(p.v, p.w, e), "C(v,e)/C(w-1,e-1), e=ceil(w/t)=" + std::to_string(e));
}

BoundValue cff_upper_new(const SchemeParams& p) {
  const std::uint32_t e = ceil_div(p.w, p.t);
  return upper("new", double_count_ratio(p.v, p.w, e),
               "(C(v,e)-C(w-1,e))/C(w-1,e-1), e=ceil(w/t)=" + std::to_string(e));
}

BigInt own_subset_min_count(const SchemeParams& p) {
  const std::uint32_t e = ceil_div(p.w, p.t * p.t);
  return binom(p.w - 1, e - 1);
}

std::uint64_t minimal_config_size_bound(std::uint32_t t) {
  // floor((t/2 + 1)^2) = floor((t + 2)^2 / 4)
  const std::uint64_t s = t + 2ULL;
  return s * s / 4;
}

const BoundValue* BoundReport::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

BoundReport bound_report(const SchemeParams& p, Scheme scheme) {
  BoundReport report;
  report.params = p;
  report.scheme = scheme;
  auto& e = report.entries;
  switch (scheme) {
    case Scheme::Ts:
      e = {ts_upper_sw(p), ts_upper_collins(p), ts_upper_general(p), ts_upper_special(p),
           ts_exact_small(p), ts_lower_trivial(p), ts_lower_packing(p)};
      break;
    case Scheme::Ipps:
      e = {ipps_upper_collins(p), ipps_upper_new(p), ts_lower_trivial(p)};
      e.back().condition_note = "v-w+1, traceable construction is parent-identifying";
      break;
    case Scheme::Cff: {
      auto special = cff_upper_special(p.t, p.w, p.v);
      e = {cff_upper_eff(p), cff_upper_new(p), std::move(special), ts_lower_trivial(p)};
      e.back().condition_note = "v-w+1, traceable construction is cover-free";
      break;
    }
  }

  std::optional<BigInt> lo, hi;
  for (const auto& b : e) {
    if (!b.applicable || !b.integer_bound) continue;
    const BigInt& x = *b.integer_bound;
    if (b.kind != BoundKind::Upper && (!lo || x > *lo)) lo = x;
    if (b.kind != BoundKind::Lower && (!hi || x < *hi)) hi = x;
  }
  report.lower = lo.value_or(BigInt(0));
  report.upper = hi.value_or(BigInt(0));
  if (lo && hi && *lo > *hi)
    throw Error(ErrorCode::InconsistentBounds,
                "lower bound " + lo->str() + " exceeds upper bound " + hi->str() + " for t=" + std::to_string(p.t) +
                    " w=" + std::to_string(p.w) + " v=" + std::to_string(p.v));
  report.exact_known = lo && hi && *lo == *hi;
  return report;
}

void render_bound_table(std::ostream& out, const BoundReport& report) {
  out << "name\tvalue\tinteger\tapplicable\tnote\n";
  for (const auto& b : report.entries) {
    out << b.name << '\t' << format_rational(b.value) << '\t'
        << (b.integer_bound ? b.integer_bound->str() : std::string("-")) << '\t' << (b.applicable ? "yes" : "no")
        << '\t' << b.condition_note << '\n';
  }
  if (report.exact_known) {
    out << "status\texact\t" << report.lower.str() << '\n';
  } else {
    out << "status\trange\t" << report.lower.str() << ".." << report.upper.str() << '\n';
  }
}

}  // namespace acs
