#include "cce/external_strategy.hpp"
#include "cce/simulate.hpp"

#include <doctest.h>

#include <chrono>

using namespace cce;
using namespace std::chrono_literals;

namespace {

std::vector<std::string> stub(std::string mode) { return {CCE_STUB_STRATEGY, std::move(mode)}; }

}  // namespace

TEST_CASE("echo stub returns its candidate with namespaced dimensions") {
  ExternalClient client("ext", stub("echo"));
  const auto out = client.query("int x = ", 5);
  REQUIRE(out.size() == 1);
  CHECK(out[0].text == "Echo");
  CHECK(out[0].strategies == std::vector<std::string>{"ext"});
  CHECK(out[0].scores.at("ext.score") == 1.5);
  CHECK(out[0].ranks.at("ext") == 1);
  CHECK(client.query("more", 5).size() == 1);
  CHECK(client.timeouts() == 0);
  CHECK(client.protocol_errors() == 0);
}

TEST_CASE("six returned candidates are truncated to k") {
  ExternalClient client("ext", stub("six"));
  const auto out = client.query("x", 5);
  REQUIRE(out.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(out[i].text == "c" + std::to_string(i));
    CHECK(out[i].ranks.at("ext") == i + 1);
  }
  CHECK(client.query("x", 2).size() == 2);
  CHECK(client.query("x", 0).empty());
}

TEST_CASE("a silent child times out with an empty list and is restarted") {
  ExternalClient client("ext", stub("silent"), 200ms);
  const auto start = std::chrono::steady_clock::now();
  CHECK(client.query("x", 5).empty());
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(elapsed >= 200ms);
  CHECK(elapsed < 2000ms);
  CHECK(client.timeouts() == 1);
  CHECK(client.query("x", 5).empty());
  CHECK(client.timeouts() == 2);
}

TEST_CASE("malformed responses yield an empty list and a protocol error") {
  ExternalClient garbage("ext", stub("garbage"));
  CHECK(garbage.query("x", 5).empty());
  CHECK(garbage.protocol_errors() == 1);
  ExternalClient badscore("ext", stub("badscore"));
  CHECK(badscore.query("x", 5).empty());
  CHECK(badscore.protocol_errors() == 1);
}

TEST_CASE("a missing executable yields empty lists") {
  ExternalClient client("ext", {"/nonexistent/strategy"}, 300ms);
  CHECK(client.query("x", 5).empty());
}

TEST_CASE("external strategy sessions take part in gathering") {
  const ExternalStrategy ext("ext", stub("echo"), {"score"}, "score");
  CHECK(ext.id() == "ext");
  CHECK(ext.dimensions() == std::vector<std::string>{"ext.score"});
  CHECK(ext.primary_dimension() == "ext.score");
  const std::vector<const Strategy*> strategies = {&ext};
  SessionSet sessions(strategies);
  const auto merged = sessions.gather("int x = ", 5);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].text == "Echo");
}
