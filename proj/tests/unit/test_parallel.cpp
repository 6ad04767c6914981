#include <cstdlib>
#include <stdexcept>

#include "support.hpp"
#include "cotlar_lab/parallel.hpp"
#include "cotlar_lab/report.hpp"

using namespace testing;

TEST_CASE("chunk streams") {
  auto a = chunk_rng(42, 1, 0);
  auto b = chunk_rng(42, 1, 0);
  CHECK(a() == b());
  CHECK(chunk_rng(42, 1, 0)() != chunk_rng(42, 1, 1)());
  CHECK(chunk_rng(42, 1, 0)() != chunk_rng(42, 2, 0)());
  CHECK(chunk_rng(42, 1, 0)() != chunk_rng(43, 1, 0)());
  CHECK(chunk_count(0, 1024) == 0);
  CHECK(chunk_count(1024, 1024) == 1);
  CHECK(chunk_count(1025, 1024) == 2);
}

TEST_CASE("map_chunks keeps chunk order") {
  for (unsigned threads : {1u, 2u, 8u}) {
    const auto out = map_chunks<std::uint64_t>(100, threads, [](std::size_t c) {
      return chunk_rng(7, 0, c)();
    });
    REQUIRE(out.size() == 100);
    for (std::size_t c = 0; c < out.size(); ++c) CHECK(out[c] == chunk_rng(7, 0, c)());
  }
  CHECK_THROWS_AS(map_chunks<int>(10, 4,
                                  [](std::size_t c) -> int {
                                    if (c == 5) throw std::runtime_error("chunk 5");
                                    return 0;
                                  }),
                  std::runtime_error);
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_threads(3) == 3);
  setenv("COTLAR_LAB_THREADS", "5", 1);
  CHECK(resolve_threads(0) == 5);
  unsetenv("COTLAR_LAB_THREADS");
  CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("report bookkeeping") {
  CheckReport a;
  a.check = "one";
  for (int i = 0; i < 5; ++i) {
    a.total_checked++;
    a.add_violation({{std::to_string(i)}, {{"ok", false}}}, 3);
  }
  CHECK(a.violation_count == 5);
  CHECK(a.violations.size() == 3);
  CHECK(a.total_checked >= a.violations.size());

  CheckReport b;
  b.check = "two";
  b.total_checked = 10;
  b.add_violation({{"x"}, {{"ok", false}, {"check", "inner"}}}, 3);
  const CheckReport parts[] = {a, b};
  const CheckReport merged = merge_sections("all", "u", parts, 10);
  CHECK(merged.total_checked == 15);
  CHECK(merged.violation_count == 6);
  CHECK(merged.violations[0].observed["check"] == "one");
  CHECK(merged.violations.back().observed["check"] == "inner");
  CHECK(merged.stats["sections"]["two"]["violation_count"] == 1);

  const json body = report_body(merged);
  CHECK(body["witness"].is_null());
  CHECK(!body.contains("elapsed_ms"));
  const Violation v = violation_from_json(violation_to_json(merged.violations[0]));
  CHECK(v.inputs == merged.violations[0].inputs);
  CHECK(v.observed == merged.violations[0].observed);
}
