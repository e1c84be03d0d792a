#include <doctest.h>

#include "acs/bounds.hpp"
#include "acs/construct.hpp"
#include "acs/error.hpp"
#include "acs/field.hpp"
#include "acs/verify.hpp"
#include "support/naive.hpp"

using namespace acs;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an acs::Error");
  return ErrorCode::ParseError;
}

void check_design(const SetSystem& s, const DesignDescriptor& d, std::size_t m) {
  CHECK(s.v() == d.v);
  CHECK(s.w() == d.w);
  CHECK(s.size() == m);
  CHECK(verify_design(s, d.tau, 1).holds());
}

}  // namespace

TEST_CASE("field axioms hold for every supported order up to 81") {
  for (std::uint32_t q = 2; q <= 81; ++q) {
    if (!GaloisField::supported(q)) continue;
    CAPTURE(q);
    const GaloisField f(q);
    bool ok = true;
    for (FieldElement a = 0; a < q && ok; ++a) {
      ok &= f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
      if (a != 0) ok &= f.mul(a, f.inv(a)) == 1;
      for (FieldElement b = 0; b < q && ok; ++b) {
        ok &= f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        for (FieldElement c = 0; c < q && ok; ++c) {
          ok &= f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
          ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
          ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("field moduli are the lowest monic irreducibles") {
  CHECK(GaloisField(4).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(GaloisField(8).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(GaloisField(9).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(GaloisField(16).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(GaloisField(25).modulus() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(GaloisField(27).modulus() == std::vector<std::uint32_t>{1, 2, 0, 1});
  CHECK(GaloisField(97).order() == 97);
  CHECK(GaloisField(64).characteristic() == 2);
  CHECK(GaloisField(64).degree() == 6);
  for (std::uint32_t bad : {1u, 6u, 12u, 101u, 121u, 128u})
    CHECK(code_of([bad] { GaloisField f(bad); }) == ErrorCode::UnsupportedFieldOrder);
}

TEST_CASE("trivial scheme") {
  const auto s = trivial_ts(10, 4);
  REQUIRE(s.size() == 7);
  for (std::size_t j = 0; j < 7; ++j) CHECK(s.block(j).points() == std::vector<Point>{0, 1, 2, Point(3 + j)});
  CHECK(trivial_ts(4, 4).size() == 1);
  CHECK(trivial_ts(5, 1).size() == 5);
  CHECK(code_of([] { trivial_ts(3, 4); }) == ErrorCode::ParamsInvalid);
}

TEST_CASE("projective geometries") {
  const auto fano = pg_lines(2, 2);
  check_design(fano, describe_pg_lines(2, 2), 7);
  CHECK(fano.block(0).points() == std::vector<Point>{0, 1, 2});
  check_design(pg_lines(2, 4), describe_pg_lines(2, 4), 21);
  check_design(pg_lines(3, 2), describe_pg_lines(3, 2), 35);
  check_design(pg_lines(2, 9), describe_pg_lines(2, 9), 91);
  CHECK(code_of([] { pg_lines(2, 6); }) == ErrorCode::UnsupportedFieldOrder);
  CHECK(code_of([] { pg_lines(1, 3); }) == ErrorCode::ParamsInvalid);
}

TEST_CASE("affine geometries") {
  check_design(ag_lines(2, 3), describe_ag_lines(2, 3), 12);
  check_design(ag_lines(2, 5), describe_ag_lines(2, 5), 30);
  check_design(ag_lines(2, 2), describe_ag_lines(2, 2), 6);
  check_design(ag_lines(3, 3), describe_ag_lines(3, 3), 117);
}

TEST_CASE("inversive planes") {
  check_design(inversive_plane(2), describe_inversive_plane(2), 10);
  check_design(inversive_plane(3), describe_inversive_plane(3), 30);
  check_design(inversive_plane(4), describe_inversive_plane(4), 68);
  check_design(inversive_plane(8), describe_inversive_plane(8), 520);
}

TEST_CASE("hermitian unitals") {
  check_design(hermitian_unital(2), describe_hermitian_unital(2), 12);
  check_design(hermitian_unital(3), describe_hermitian_unital(3), 63);
  check_design(hermitian_unital(4), describe_hermitian_unital(4), 208);
}

TEST_CASE("constructions are deterministic") {
  CHECK(pg_lines(2, 4) == pg_lines(2, 4));
  CHECK(inversive_plane(3) == inversive_plane(3));
  CHECK(greedy_packing_ts(12, 4, 2) == greedy_packing_ts(12, 4, 2));
}

TEST_CASE("design extension") {
  const auto [same, c0] = extend_design(pg_lines(2, 4), 0, 2, describe_pg_lines(2, 4));
  CHECK(same == pg_lines(2, 4));
  CHECK(c0.tau == 2);
  CHECK(c0.base.family == DesignFamily::PgLines);

  const auto [ext, cert] = extend_design(ag_lines(2, 5), 1, 2);
  CHECK(ext.v() == 26);
  CHECK(ext.w() == 6);
  CHECK(ext.size() == 30);
  for (const auto& b : ext.blocks()) CHECK(b.contains(25));
  CHECK(check_extension_certificate(ext, cert).valid);
  CHECK(verify_ts(ext, 2).holds());

  CHECK(code_of([] { extend_design(pg_lines(2, 4), 4, 2); }) == ErrorCode::CongruenceViolated);
  CHECK(code_of([] { extend_design(pg_lines(2, 3), 1, 2); }) == ErrorCode::CongruenceViolated);
  // right width, wrong structure
  const auto lines = SetSystem::create(9, {{0, 1, 2, 3, 4}, {0, 5, 6, 7, 8}});
  CHECK(code_of([&] { extend_design(lines, 0, 2); }) == ErrorCode::NotADesign);
}

TEST_CASE("extension output is a traceability scheme on small instances") {
  for (std::uint32_t d = 0; d <= 3; ++d) {
    const auto [ext, cert] = extend_design(ag_lines(2, 5), d, 2);
    CHECK(ext.w() == 5 + d);
    CHECK(verify_ts(ext, 2).holds());
  }
}

TEST_CASE("design max strength") {
  CHECK(design_max_strength(2, 5) == 2);
  CHECK(design_max_strength(3, 9) == 2);
  CHECK(design_max_strength(2, 2) == 1);
  CHECK(design_max_strength(2, 10) == 3);
  CHECK(code_of([] { design_max_strength(1, 5); }) == ErrorCode::ParamsInvalid);
}

TEST_CASE("greedy packing") {
  const auto g = greedy_packing_ts(30, 5, 2);
  CHECK(g.size() >= 5);
  CHECK(verify_packing(g, 2).holds());
  CHECK(g.block(0).points() == std::vector<Point>{0, 1, 2, 3, 4});

  const auto disjoint = greedy_packing_ts(10, 4, 2);
  CHECK(disjoint.size() == 2);
  CHECK(disjoint.block(1).points() == std::vector<Point>{4, 5, 6, 7});
  CHECK(greedy_packing_ts(5, 5, 2).size() == 1);

  for (std::uint32_t v = 6; v <= 14; ++v) {
    const auto p = greedy_packing_ts(v, 5, 2);
    const auto lower = ts_lower_packing(SchemeParams::make(2, 5, v));
    CHECK(BigInt(p.size()) >= *lower.integer_bound);
    CHECK(verify_packing(p, 2).holds());
    CHECK(verify_ts(p, 2).holds());
  }
  CHECK(code_of([] { greedy_packing_ts(60, 30, 2, 1000); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([] { greedy_packing_ts(6, 3, 4); }) == ErrorCode::ParamsInvalid);
}
