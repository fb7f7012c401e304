#include <doctest.h>

#include <random>

#include "bincollatz/analysis.hpp"
#include "bincollatz/errors.hpp"
#include "oracle.hpp"

using namespace bincollatz;

namespace {

BinaryFraction bits(const char* s) { return BinaryFraction::from_bits(s); }

}  // namespace

TEST_CASE("trajectory of 31 under the binary map") {
  const auto rec = run_trajectory(31, MapKind::Binary, 1000);
  REQUIRE(rec.stopping_time);
  CHECK(*rec.stopping_time == 39);
  CHECK(rec.max_length == 12);
  CHECK(rec.max_length_count() == 3);
  CHECK(rec.lengths[rec.hailstone_index] == 12);
  for (std::size_t i = 0; i < rec.hailstone_index; ++i) CHECK(rec.lengths[i] < 12);
}

TEST_CASE("trajectory stop conventions") {
  CHECK(run_trajectory(5, MapKind::Binary, 10).stopping_time == std::optional<std::size_t>{1});
  const auto ground = run_trajectory(1, MapKind::Collatz, 5);
  CHECK(ground.stopping_time == std::optional<std::size_t>{0});
  REQUIRE(ground.values.size() == 4);
  CHECK(ground.values[1] == 4);
  CHECK(ground.values[2] == 2);
  CHECK(ground.values[3] == 1);

  const auto capped = run_trajectory(27, MapKind::Reduced, 10);
  CHECK_FALSE(capped.stopping_time);
  CHECK(capped.steps() == 10);

  CHECK_THROWS_AS(run_trajectory(4, MapKind::Reduced, 10), DomainError);
  CHECK_THROWS_AS(run_trajectory(3, MapKind::Binary, 0), DomainError);
}

TEST_CASE("trajectory 63728127 reaches the 39-bit hailstone") {
  const auto rec = run_trajectory(63728127, MapKind::Binary, 10000);
  CHECK(rec.lengths[0] == 26);
  CHECK(rec.max_length == 39);
  CHECK(rec.values[rec.hailstone_index] == BigInt("322205345153"));
  CHECK(rec.hailstone_index == 33);
}

TEST_CASE("binary and reduced trajectories agree") {
  for (unsigned long x = 1; x < (1UL << 12); x += 2) {
    const auto b = run_trajectory(x, MapKind::Binary, 100000);
    const auto r = run_trajectory(x, MapKind::Reduced, 100000);
    REQUIRE(b.stopping_time == r.stopping_time);
    REQUIRE(b.lengths == r.lengths);
    REQUIRE(b.stopping_time == std::optional<std::size_t>(*oracle::reduced_stop(x)));
  }
}

TEST_CASE("collatz map counts odd and even steps") {
  const auto rec = run_trajectory(7, MapKind::Collatz, 1000);
  // 7 22 11 34 17 52 26 13 40 20 10 5 16 8 4 2 1
  CHECK(rec.stopping_time == std::optional<std::size_t>{16});
  CHECK(rec.odd_steps == 5);
}

TEST_CASE("head/tail classification") {
  auto r = head_tail_classify(bits("100101"));
  CHECK(r.head == 1);
  CHECK(r.tail == 3);
  CHECK_FALSE(r.predicted_min);
  CHECK(r.predicted_max == -2);
  CHECK(r.within_prediction());

  r = head_tail_classify(bits("111111"));
  CHECK(r.head == 4);
  CHECK(r.tail == 4);
  CHECK(r.predicted_min == std::optional<int>{1});
  CHECK(r.predicted_max == 1);
  CHECK(r.observed_delta == 1);

  r = head_tail_classify(bits("100001"));
  CHECK(r.head == 1);
  CHECK(r.tail == 1);
  CHECK(r.predicted_max == -1);
  CHECK(r.observed_delta == -1);

  CHECK_THROWS_AS(head_tail_classify(bits("10011")), DomainError);
  // the short worked example: (0.1001)_2 loses one digit
  const auto y = bits("1001");
  CHECK(static_cast<int>(binary_step(y).length()) - 4 == -1);
  CHECK(head_tail_table_sum() <= 0);
}

TEST_CASE("head/tail table holds exhaustively for lengths 6 to 16") {
  for (std::size_t ell = 6; ell <= 16; ++ell) {
    for (unsigned long n = (1UL << (ell - 1)) + 1; n < (1UL << ell); n += 2) {
      const auto r = head_tail_classify(BinaryFraction::from_parts(n, ell));
      REQUIRE(r.within_prediction());
      const int head_part = r.branch == MapBranch::Low ? 1 : 2;
      REQUIRE(r.observed_delta == head_part - static_cast<int>(r.valuation));
    }
  }
}

TEST_CASE("audit is clean and independent of worker count") {
  const auto one = audit_length_deltas(3000, 64, 17, 1);
  const auto many = audit_length_deltas(3000, 64, 17, 4);
  CHECK(one.passed());
  CHECK(one.samples == 3000);
  CHECK(one.cell_counts == many.cell_counts);
  CHECK(one.cell_observed_min == many.cell_observed_min);
  CHECK(one.cell_observed_max == many.cell_observed_max);
  CHECK_THROWS_AS(audit_length_deltas(10, 5, 1), DomainError);
}

TEST_CASE("epsilon bound closed form matches its recurrence") {
  CHECK(epsilon_bound(1, 6) == pow2(-7));
  CHECK(epsilon_bound(2, 10) == ExactRational(BigInt(7), BigInt(8)) * pow2(-10));
  CHECK(to_decimal(epsilon_bound(600, 60), 4) == "0.0134");
  CHECK(to_decimal(epsilon_bound(600, 60), 6) == "0.013460");
  for (std::size_t k = 1; k <= 120; ++k) {
    for (std::size_t ell : {1, 6, 60}) REQUIRE(epsilon_bound(k, ell).raw() == oracle::epsilon(k, ell));
  }
}

TEST_CASE("epsilon bound monotone in k, exact scaling in ell") {
  for (std::size_t k = 2; k < 1000; ++k) REQUIRE(epsilon_bound(k, 60) < epsilon_bound(k + 1, 60));
  for (std::size_t k : {1, 2, 77, 600}) {
    CHECK(epsilon_bound(k, 40) == epsilon_bound(k, 60) * pow2(20));
  }
}

TEST_CASE("k* scan") {
  const auto report = kstar_scan(60, 1000, true);
  REQUIRE(report.k_star);
  CHECK(*report.k_star == 600);
  CHECK(to_decimal(*report.c_at_kstar, 6) == "0.507858");
  REQUIRE(report.margins.size() == 600);
  for (std::size_t k = 1; k < 600; ++k) REQUIRE(report.margins[k - 1] <= ExactRational(0));
  CHECK(report.margins.back() > ExactRational(0));
  CHECK(kstar_margin_sign(599, 60) < 0);

  // independent route: mpq comparison against the recurrence oracle
  for (std::size_t k = 1; k <= 600; ++k) {
    const mpq_class c(BigInt(1) << static_cast<mp_bitcnt_t>(oracle::mu(k)), [&] {
      BigInt p = 1;
      for (std::size_t i = 0; i < k; ++i) p *= 3;
      return p;
    }());
    const bool exceeds = mpq_class(1, 2) + oracle::epsilon(k, 60) > c;
    REQUIRE(exceeds == (k == 600));
  }

  const auto small = kstar_scan(4, 1000);
  REQUIRE(small.k_star);
  CHECK(*small.k_star < 600);
  CHECK(*small.k_star == 5);

  CHECK_FALSE(kstar_scan(60, 599).k_star);
}

TEST_CASE("verify_range small cases") {
  const auto five = verify_range(5);
  CHECK(five.converged());
  CHECK(five.verified_count == 16);
  CHECK(five.worst_start == 27);
  CHECK(five.max_stopping_time == *oracle::reduced_stop(27));

  const auto two = verify_range(2);
  CHECK(two.verified_count == 2);
  CHECK(two.converged());

  CHECK_THROWS_AS(verify_range(0), DomainError);
  CHECK_THROWS_AS(verify_range(kMaxVerifyBits + 1), DomainError);
}

TEST_CASE("verify_range matches the oracle and ignores scheduling") {
  std::uint64_t best = 0;
  std::uint64_t worst = 1;
  for (unsigned long x = 1; x < (1UL << 12); x += 2) {
    const auto s = *oracle::reduced_stop(x);
    if (s > best) {
      best = s;
      worst = x;
    }
    REQUIRE(reduced_stopping_time(x, 100000) == std::optional<std::uint64_t>(s));
  }
  RangeOptions options;
  options.workers = 1;
  const auto serial = verify_range(12, options);
  CHECK(serial.max_stopping_time == best);
  CHECK(serial.worst_start == worst);

  options.workers = 3;
  CHECK(verify_range(12, options) == serial);
  // a small memo table forces the unmemoized tail path
  options.table_bits = 6;
  CHECK(verify_range(12, options) == serial);
}

TEST_CASE("verify_range reports a counterexample when the cap is tiny") {
  RangeOptions options;
  options.step_cap = 5;
  const auto r = verify_range(6, options);
  REQUIRE_FALSE(r.converged());
  // smallest odd start needing more than five R-steps
  std::uint64_t expected = 0;
  for (unsigned long x = 1;; x += 2) {
    if (*oracle::reduced_stop(x) > 5) {
      expected = x;
      break;
    }
  }
  CHECK(*r.counterexample == expected);
}

TEST_CASE("reduced_stopping_time survives 128-bit overflow") {
  CHECK(reduced_stopping_time(27, 1000) == std::optional<std::uint64_t>{41});
  CHECK_FALSE(reduced_stopping_time(27, 10));
}

TEST_CASE("family probes") {
  const auto alpha = family_orbit_probe(FamilyTag::Alpha, 100, 1000);
  CHECK(alpha.identity_holds);
  CHECK(alpha.entries.size() == 100);
  const auto beta = family_orbit_probe(FamilyTag::Beta, 100, 1000);
  CHECK(beta.identity_holds);
  const auto gamma = family_orbit_probe(FamilyTag::Gamma, 50, 1'000'000);
  CHECK(gamma.unresolved == 0);
  const auto capped = family_orbit_probe(FamilyTag::Gamma, 5, 1);
  CHECK(capped.unresolved == 5);
  CHECK_THROWS_AS(parse_family_tag("delta"), MalformedInput);
}
