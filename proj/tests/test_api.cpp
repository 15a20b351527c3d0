#include <gtest/gtest.h>

#include <httplib.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <thread>

#include "envsolve/api.hpp"
#include "envsolve/server.hpp"
#include "support/schema_check.hpp"

using namespace envsolve;
using api::json;

namespace {

const api::ServiceConfig kConfig{};

json call(std::string_view op, const json& body, int expected_status = 200) {
  const api::Reply r = api::dispatch(op, body.dump(), kConfig);
  EXPECT_EQ(r.status, expected_status) << op << ' ' << body.dump() << " -> " << r.body;
  return json::parse(r.body);
}

void expect_valid(const json& value, const std::string& schema) {
  const auto errs = schema_check::validate(value, schema_check::load(schema));
  EXPECT_TRUE(errs.empty()) << schema << ": " << (errs.empty() ? "" : errs.front()) << "\n"
                            << value.dump();
}

}  // namespace

TEST(SchemaCheck, RejectsNonConformingValues) {
  const json schema = schema_check::load("classify");
  EXPECT_FALSE(schema_check::validate(json{{"n", 2}}, schema).empty());
  json c = call("classify", {{"n", 2}, {"p", 0}, {"q", 1}})["payload"];
  EXPECT_TRUE(schema_check::validate(c, schema).empty());
  c["regime"] = "Sideways";
  EXPECT_FALSE(schema_check::validate(c, schema).empty());
  c["regime"] = "Above";
  c["extra"] = 1;
  EXPECT_FALSE(schema_check::validate(c, schema).empty());
  EXPECT_FALSE(schema_check::validate(json{{"ok", true}, {"error", "x"}},
                                      schema_check::load("response"))
                   .empty());
}

TEST(Api, SolveExample) {
  const json r = call("solve", {{"n", 2}, {"p", 3}, {"q", 2}});
  expect_valid(r, "response");
  const json& payload = r["payload"];
  expect_valid(payload, "solve");
  EXPECT_EQ(payload["count"], 2);
  ASSERT_EQ(payload["roots"].size(), 2u);
  EXPECT_NEAR(payload["roots"][0]["value"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(payload["roots"][1]["value"].get<double>(), 2.0, 1e-12);
  EXPECT_EQ(payload["classification"]["regime"], "Below");
}

TEST(Api, ClassifyExample) {
  const json r = call("classify", {{"n", 2}, {"p", 0}, {"q", 1}});
  expect_valid(r["payload"], "classify");
  EXPECT_EQ(r["payload"]["count"], 0);
  EXPECT_EQ(r["payload"]["regime"], "Above");
}

TEST(Api, OddDegreeRegimes) {
  EXPECT_EQ(call("classify", {{"n", 3}, {"p", 3}, {"q", 0}})["payload"]["regime"], "OnAxisOdd");
  EXPECT_EQ(call("classify", {{"n", 3}, {"p", 0}, {"q", 0}})["payload"]["regime"], "Origin");
  EXPECT_EQ(call("classify", {{"n", 3}, {"p", 3}, {"q", 2}})["payload"]["regime"], "OnBranch");
  EXPECT_EQ(call("classify", {{"n", 3}, {"p", 3}, {"q", 1}})["payload"]["count"], 3);
}

TEST(Api, EnvelopePayload) {
  const json r = call("envelope", {{"n", 3}, {"pmin", 0}, {"pmax", 3}, {"samples", 4}});
  const json& payload = r["payload"];
  expect_valid(payload, "envelope");
  ASSERT_EQ(payload["branches"].size(), 2u);
  EXPECT_EQ(payload["branches"][0]["points"].size(), 4u);
  EXPECT_DOUBLE_EQ(payload["branches"][0]["points"][3][1].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(payload["branches"][1]["points"][3][1].get<double>(), -2.0);
  const json even = call("envelope", {{"n", 4}})["payload"];
  expect_valid(even, "envelope");
  EXPECT_EQ(even["branches"].size(), 1u);
  EXPECT_EQ(even["samples"], kConfig.samples);
}

TEST(Api, TangentsPayload) {
  const json payload = call("tangents", {{"n", 2}, {"p", 1}, {"q", -2}})["payload"];
  expect_valid(payload, "tangents");
  ASSERT_EQ(payload["lines"].size(), 2u);
  for (const auto& l : payload["lines"]) {
    const double m = l["slope"];
    const double b = l["intercept"];
    // Each tangent passes through (p,q) = (1,-2) and touches the envelope.
    EXPECT_NEAR(m * 1.0 + b, -2.0, 1e-12);
    EXPECT_NEAR(m * l["touch"]["p"].get<double>() + b, l["touch"]["q"].get<double>(), 1e-12);
  }
}

TEST(Api, DualPayload) {
  const json a = call("dual", {{"point", {{"p", 2}, {"q", 3}}}})["payload"];
  expect_valid(a, "dual");
  EXPECT_EQ(a["dual_line"]["slope"], -2.0);
  EXPECT_EQ(a["dual_line"]["intercept"], 3.0);
  const json b = call("dual", {{"line", {{"slope", 2}, {"intercept", 3}}}})["payload"];
  expect_valid(b, "dual");
  EXPECT_EQ(b["dual_point"]["m"], 2.0);
  EXPECT_EQ(b["dual_point"]["n"], 3.0);
}

TEST(Api, Health) {
  const api::Reply r = api::health();
  EXPECT_EQ(r.status, 200);
  const json body = json::parse(r.body);
  expect_valid(body, "response");
  expect_valid(body["payload"], "health");
}

TEST(Api, MalformedRequestsAre400) {
  for (const char* body : {"", "{", "[1,2]", "{\"n\":2}", "{\"n\":\"2\",\"p\":1,\"q\":1}",
                           "{\"n\":2.5,\"p\":1,\"q\":1}", "{\"n\":2,\"p\":\"x\",\"q\":1}"}) {
    const api::Reply r = api::dispatch("solve", body, kConfig);
    EXPECT_EQ(r.status, 400) << body;
    const json parsed = json::parse(r.body);
    expect_valid(parsed, "response");
    EXPECT_EQ(parsed["ok"], false);
  }
  call("dual", json::object(), 400);
  call("dual", {{"point", {{"p", 1}, {"q", 1}}}, {"line", {{"slope", 1}, {"intercept", 1}}}}, 400);
  call("envelope", {{"n", 2}, {"samples", 0}}, 400);
}

TEST(Api, DomainErrorsAre422) {
  const json r = call("solve", {{"n", 1}, {"p", 1}, {"q", 1}}, 422);
  expect_valid(r, "response");
  call("classify", {{"n", 0}, {"p", 1}, {"q", 1}}, 422);
  call("envelope", {{"n", 3}, {"pmin", -1}, {"pmax", 1}}, 422);
  call("solve", {{"n", 2}, {"p", 1}, {"q", 1}, {"tol", -1}}, 422);
}

TEST(Api, UnknownEndpointIs404) { call("factor", {{"n", 2}}, 404); }

TEST(Api, ConfigFromEnvironment) {
  ::setenv("ENVELOPE_TOL", "1e-9", 1);
  ::setenv("ENVELOPE_SAMPLES", "64", 1);
  const api::ServiceConfig c = api::ServiceConfig::from_env();
  EXPECT_EQ(c.tol, 1e-9);
  EXPECT_EQ(c.samples, 64);
  EXPECT_EQ(c.boundary_tol, 1e-9);
  ::setenv("ENVELOPE_SAMPLES", "6.5", 1);
  EXPECT_THROW(api::ServiceConfig::from_env(), FormatError);
  ::setenv("ENVELOPE_TOL", "tight", 1);
  EXPECT_THROW(api::ServiceConfig::from_env(), FormatError);
  ::unsetenv("ENVELOPE_TOL");
  ::unsetenv("ENVELOPE_SAMPLES");
}

class LiveServer : public ::testing::Test {
 protected:
  void SetUp() override {
    static_dir_ = std::filesystem::temp_directory_path() /
                  ("envsolve_static_" + std::to_string(::getpid()));
    std::filesystem::create_directories(static_dir_);
    std::ofstream(static_dir_ / "index.html") << "<html>explorer</html>";
    server_ = std::make_unique<Server>(kConfig, static_dir_);
    port_ = server_->bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->listen(); });
    for (int i = 0; i < 200 && !server_->running(); ++i) {
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    ASSERT_TRUE(server_->running());
  }

  void TearDown() override {
    server_->stop();
    if (thread_.joinable()) thread_.join();
    std::filesystem::remove_all(static_dir_);
  }

  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_connection_timeout(5);
    c.set_read_timeout(10);
    return c;
  }

  std::filesystem::path static_dir_;
  std::unique_ptr<Server> server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(LiveServer, RoundTripMatchesDispatch) {
  auto c = client();
  const std::string body = R"({"n":2,"p":3,"q":2})";
  const auto res = c.Post("/api/solve", body, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, api::dispatch("solve", body, kConfig).body);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
}

TEST_F(LiveServer, StatusCodesAndHealth) {
  auto c = client();
  auto bad = c.Post("/api/solve", "{", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  auto domain = c.Post("/api/solve", R"({"n":1,"p":1,"q":1})", "application/json");
  ASSERT_TRUE(domain);
  EXPECT_EQ(domain->status, 422);
  auto missing = c.Post("/api/nothing", "{}", "application/json");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  auto health = c.Get("/api/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(json::parse(health->body)["payload"]["status"], "healthy");
  auto preflight = c.Options("/api/solve");
  ASSERT_TRUE(preflight);
  EXPECT_EQ(preflight->status, 204);
  EXPECT_EQ(preflight->get_header_value("Access-Control-Allow-Origin"), "*");
}

TEST_F(LiveServer, ServesStaticDirectory) {
  auto c = client();
  auto res = c.Get("/index.html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, "<html>explorer</html>");
}

TEST_F(LiveServer, ConcurrentRequests) {
  std::atomic<int> good{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      auto c = client();
      for (int i = 0; i < 10; ++i) {
        const json req{{"n", 2 + t % 5}, {"p", 1.0 + i}, {"q", -0.5 * i}};
        auto res = c.Post("/api/solve", req.dump(), "application/json");
        if (res && res->status == 200 &&
            res->body == api::dispatch("solve", req.dump(), kConfig).body) {
          ++good;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(good.load(), 80);
}
