#include "doctest.h"
#include "tsmv/report.hpp"

using namespace tsmv;

namespace {

Verdict fails_verdict() {
  Verdict v;
  v.property = Property::Robustness;
  v.result = CheckResult::Fails;
  v.counterexample = BitInput{{1, 0, 1}, {}};
  v.solve_time_s = 0.128;
  v.vars = 42;
  v.clauses = 99;
  return v;
}

}  // namespace

TEST_CASE("record capture") {
  InstanceRecord r = make_record(fails_verdict(), 3, 1);
  CHECK(r.index == 3);
  CHECK(r.property == "robustness");
  CHECK(r.result == "FAILS");
  CHECK(r.epsilon == 1);
  CHECK(r.eta == -1.0);
  CHECK(r.vars == 42);
  CHECK(r.clauses == 99);
  REQUIRE(r.counterexample_bits.has_value());
  CHECK(*r.counterexample_bits == "101");
}

TEST_CASE("text rendering") {
  InstanceRecord r = make_record(fails_verdict(), 3, 1);
  CHECK(record_text(r) ==
        "[3] robustness eps=1: FAILS witness=101 time=0.13s vars=42 clauses=99");
  CHECK(record_text(r, true) ==
        "[3] robustness eps=1: FAILS witness=101 vars=42 clauses=99");

  Verdict eq;
  eq.property = Property::Equivalence;
  eq.result = CheckResult::Holds;
  eq.vars = 7;
  eq.clauses = 9;
  // No epsilon for equivalence, no witness on a pass.
  CHECK(record_text(make_record(eq, 0), true) ==
        "[0] equivalence: HOLDS vars=7 clauses=9");
}

TEST_CASE("json rendering with fixed key order and explicit nulls") {
  InstanceRecord r = make_record(fails_verdict(), 3, 1);
  CHECK(record_json(r) ==
        "{\"property\":\"robustness\",\"result\":\"FAILS\",\"index\":3,"
        "\"epsilon\":1,\"eta\":null,\"time_s\":0.128000,\"vars\":42,"
        "\"clauses\":99,\"counterexample_bits\":\"101\"}");
  // Deterministic mode zeroes the timing but keeps the field.
  CHECK(record_json(r, true) ==
        "{\"property\":\"robustness\",\"result\":\"FAILS\",\"index\":3,"
        "\"epsilon\":1,\"eta\":null,\"time_s\":0.000000,\"vars\":42,"
        "\"clauses\":99,\"counterexample_bits\":\"101\"}");

  Verdict eq;
  eq.property = Property::Equivalence;
  eq.result = CheckResult::Holds;
  CHECK(record_json(make_record(eq, 1), true) ==
        "{\"property\":\"equivalence\",\"result\":\"HOLDS\",\"index\":1,"
        "\"epsilon\":null,\"eta\":null,\"time_s\":0.000000,\"vars\":0,"
        "\"clauses\":0,\"counterexample_bits\":null}");

  InstanceRecord with_eta = make_record(eq, 2, 2, 0.9);
  CHECK(record_json(with_eta, true).find("\"eta\":0.900000") !=
        std::string::npos);
}

TEST_CASE("summaries count solved and robust instances") {
  Verdict holds;
  holds.result = CheckResult::Holds;
  holds.solve_time_s = 0.2;
  Verdict fails;
  fails.result = CheckResult::Fails;
  fails.solve_time_s = 0.4;
  Verdict timeout;
  timeout.result = CheckResult::Timeout;
  timeout.solve_time_s = 60.0;

  SummaryRow row = summarize({holds, fails, timeout, holds}, 2, 60.0);
  CHECK(row.epsilon == 2);
  CHECK(row.total == 4);
  CHECK(row.solved == 3);
  CHECK(row.robust == 2);
  // Timeouts do not pollute the average.
  CHECK(row.avg_time_s == doctest::Approx((0.2 + 0.4 + 0.2) / 3));

  SummaryRow none = summarize({timeout, timeout}, 5, 60.0);
  CHECK(none.solved == 0);
  CHECK(none.avg_time_s == 0.0);
}

TEST_CASE("summary table layout") {
  SummaryRow a;
  a.epsilon = 1;
  a.total = 20;
  a.solved = 20;
  a.robust = 11;
  a.avg_time_s = 0.03;
  SummaryRow b;
  b.epsilon = 3;
  b.total = 20;
  b.solved = 0;
  b.robust = 0;
  b.budget_s = 60.0;

  CHECK(render_summary_table({a, b}) ==
        "eps   solved  eps-robust  time (sec)\n"
        "1     20      11          0.03\n"
        "3     0       0           >= 60.00\n");
  CHECK(render_summary_table({a, b}, true) ==
        "eps   solved  eps-robust  time (sec)\n"
        "1     20      11          -\n"
        "3     0       0           -\n");
}
