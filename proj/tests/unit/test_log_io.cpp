#include "doctest.h"

#include <sstream>

#include "proxyalign/error.hpp"
#include "proxyalign/event_log.hpp"
#include "proxyalign/log_io.hpp"

using namespace proxyalign;

namespace {
const std::string kFixtures = PROXYALIGN_FIXTURES;
}

TEST_CASE("event log merges duplicate variants and keeps canonical order") {
  EventLogBuilder b;
  b.add_trace(make_trace({"a", "b"}));
  b.add_trace(make_trace({"b"}));
  b.add_trace(make_trace({"a", "b"}));
  b.add_variant(make_trace({"b"}), 3);
  const auto log = b.build();
  REQUIRE(log.variant_count() == 2);
  CHECK(log.total_traces() == 6);
  CHECK(log[0].trace == make_trace({"b"}));
  CHECK(log[0].multiplicity == 4);
  CHECK(log.multiplicity(make_trace({"a", "b"})) == 2);
  CHECK(log.multiplicity(make_trace({"c"})) == 0);
  CHECK_THROWS_AS(EventLog({{make_trace({"a"}), 0}}), InvalidArgument);
}

TEST_CASE("XES fixture") {
  const auto log = log_io::load_event_log(kFixtures + "/l1.xes");
  CHECK(log.variant_count() == 4);
  CHECK(log.total_traces() == 5);
  CHECK(log.multiplicity(make_trace({"a", "b", "e"})) == 2);
  CHECK(log.multiplicity(make_trace({"a", "c", "c", "b", "d", "e"})) == 1);
}

TEST_CASE("CSV fixture sorts events numerically within each case") {
  const auto csv = log_io::load_event_log(kFixtures + "/l1.csv");
  const auto xes = log_io::load_event_log(kFixtures + "/l1.xes");
  CHECK(csv == xes);
}

TEST_CASE("CSV with custom columns, delimiter and ISO timestamps") {
  std::istringstream in(
      "id;name;ts;extra\n"
      "c1;b;2024-01-01T10:00:00;x\n"
      "c1;a;2024-01-01T09:00:00;x\n"
      "\"c2\";\"a;b\";2024-01-02T00:00:00;y\n");
  const auto log = log_io::parse_csv(in, {"id", "name", "ts", ';'});
  CHECK(log.multiplicity(make_trace({"a", "b"})) == 1);
  CHECK(log.multiplicity(make_trace({"a;b"})) == 1);
}

TEST_CASE("CSV numeric order column does not sort as text") {
  std::istringstream in("case,activity,timestamp\n1,x,10\n1,y,9\n");
  CHECK(log_io::parse_csv(in).multiplicity(make_trace({"y", "x"})) == 1);
}

TEST_CASE("CSV errors") {
  std::istringstream missing("case,act\n1,a\n");
  CHECK_THROWS_AS(log_io::parse_csv(missing), ParseError);
  std::istringstream short_row("case,activity,timestamp\n1,a\n");
  try {
    log_io::parse_csv(short_row);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("XES errors carry a line number") {
  std::istringstream broken("<log>\n<trace>\n<event>\n</trace>\n</log>\n");
  try {
    log_io::parse_xes(broken);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() > 0);
  }
  std::istringstream unnamed(
      "<log><trace><event><string key=\"org:resource\" value=\"r\"/></event></trace></log>");
  CHECK_THROWS_AS(log_io::parse_xes(unnamed), ParseError);
}

TEST_CASE("XES traces without events are empty variants") {
  std::istringstream in("<log><trace/><trace><event><string key=\"concept:name\" value=\"a\"/></event></trace></log>");
  const auto log = log_io::parse_xes(in);
  CHECK(log.multiplicity(Trace{}) == 1);
  CHECK(log.multiplicity(make_trace({"a"})) == 1);
}

TEST_CASE("variant text round trip") {
  const auto log = EventLog({{Trace{}, 2}, {make_trace({"a", "b"}), 5}, {make_trace({"c"}), 1}});
  std::ostringstream out;
  log_io::write_variants(out, log);
  std::istringstream in("# comment\n" + out.str());
  CHECK(log_io::parse_variants(in) == log);

  std::istringstream bad("x\ta\n");
  CHECK_THROWS_AS(log_io::parse_variants(bad), ParseError);
}

TEST_CASE("missing files are IO errors") {
  try {
    log_io::load_event_log(kFixtures + "/does-not-exist.xes");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}
