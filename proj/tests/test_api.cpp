#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <filesystem>
#include <thread>
#include <unistd.h>

#include "wpl/http_api.hpp"

using namespace wpl;

namespace {

// server on an ephemeral port for the lifetime of the fixture
struct Served {
  SessionStore store;
  httplib::Server srv;
  std::thread th;
  int port = 0;
  explicit Served(std::string snapshot = {}) : store(std::move(snapshot)) {
    install_routes(srv, store);
    port = srv.bind_to_any_port("127.0.0.1");
    th = std::thread([this] { srv.listen_after_bind(); });
    srv.wait_until_ready();
  }
  ~Served() {
    srv.stop();
    th.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port);
    c.set_read_timeout(60, 0);
    return c;
  }
};

json body(const httplib::Result& r) {
  REQUIRE(r);
  return json::parse(r->body);
}

httplib::Result post(httplib::Client& c, const std::string& path, const json& j) {
  return c.Post(path, j.dump(), "application/json");
}

std::string create(httplib::Client& c, const json& descriptor) {
  auto r = post(c, "/sessions", {{"descriptor", descriptor}});
  REQUIRE(r);
  REQUIRE(r->status == 201);
  return body(r)["id"].get<std::string>();
}

}  // namespace

TEST_CASE("session object: reflect, undo, replay") {
  Session s("x", "2,2,2,2,2");
  const std::string fresh = s.state().dump();
  auto after = s.reflect({{"vertex", 7}});
  CHECK(after["history"] == json::array({7}));
  CHECK(after.contains("step"));
  auto undone = s.undo();
  CHECK(undone.dump() == fresh);
  CHECK_THROWS_AS(s.undo(), ApiError);

  Session a("y", "2,3,5"), b("y", "2,3,5");
  for (int v : {8, 1, 4}) a.reflect({{"vertex", v}});
  b.replay({8, 1, 4});
  CHECK(a.state().dump() == b.state().dump());
  CHECK(a.checks().dump() == b.checks().dump());
}

TEST_CASE("session errors") {
  CHECK_THROWS_AS(Session("z", "2,x"), ApiError);
  Session s("z", "2,3");
  try {
    s.reflect({{"vertex", 99}});
    FAIL("expected an error");
  } catch (const ApiError& e) {
    CHECK(e.status == 409);
  }
  try {
    s.reflect({{"vertex", "one"}});
    FAIL("expected an error");
  } catch (const ApiError& e) {
    CHECK(e.status == 400);
  }
}

TEST_CASE("http round trip") {
  Served sv;
  auto c = sv.client();
  const std::string id = create(c, {{"weights", {2, 2, 2, 2, 2}}, {"lambdas", {"1", "2", "3"}}});

  auto g = c.Get("/sessions/" + id);
  REQUIRE(g);
  CHECK(g->status == 200);
  CHECK(g->get_header_value("Content-Type") == "application/json; charset=utf-8");
  const std::string fresh = g->body;

  auto ck = body(c.Get("/sessions/" + id + "/checks"));
  CHECK(ck["canonical"] == true);
  CHECK(ck["central_simples"] == "5");

  auto r = post(c, "/sessions/" + id + "/reflect", {{"vertex", 7}});
  REQUIRE(r);
  CHECK(r->status == 200);
  auto st = json::parse(r->body);
  bool has34 = false;
  for (const auto& s : st["state"]["summands"])
    has34 = has34 || (s["degree"] == "3" && s["rank"] == "4");
  CHECK(has34);
  CHECK(body(c.Get("/sessions/" + id + "/checks"))["central_simples"] == "0");

  auto u = post(c, "/sessions/" + id + "/undo", json::object());
  REQUIRE(u);
  CHECK(u->status == 200);
  CHECK(u->body == fresh);
  CHECK(c.Get("/sessions/" + id)->body == fresh);
  CHECK(body(c.Get("/sessions/" + id + "/checks"))["central_simples"] == "5");
}

TEST_CASE("http error statuses") {
  Served sv;
  auto c = sv.client();
  CHECK(c.Get("/sessions/nope")->status == 404);
  CHECK(post(c, "/sessions/nope/reflect", {{"vertex", 1}})->status == 404);
  CHECK(c.Get("/sessions/nope/checks")->status == 404);
  CHECK(post(c, "/sessions", json::object())->status == 400);
  CHECK(c.Post("/sessions", "{not json", "application/json")->status == 400);
  CHECK(post(c, "/sessions", {{"descriptor", "2,0"}})->status == 400);

  const std::string id = create(c, "2,3,7");
  auto r = post(c, "/sessions/" + id + "/reflect", {{"vertex", 12}});
  CHECK(r->status == 409);
  CHECK(json::parse(r->body).contains("error"));
  CHECK(post(c, "/sessions/" + id + "/undo", json::object())->status == 409);
}

TEST_CASE("concurrent requests on one session and across sessions") {
  Served sv;
  auto c0 = sv.client();
  const std::string shared = create(c0, "2,3,4");
  std::atomic<int> ok{0};
  std::vector<std::thread> ts;
  for (int k = 0; k < 6; ++k)
    ts.emplace_back([&, k] {
      auto c = sv.client();
      if (k % 2 == 0) {
        // reflect and undo the sink: after every pair the state is T_can again
        for (int i = 0; i < 3; ++i) {
          if (post(c, "/sessions/" + shared + "/reflect", {{"vertex", 8}})->status == 200) ++ok;
          if (post(c, "/sessions/" + shared + "/undo", json::object())->status == 200) ++ok;
        }
      } else {
        const std::string own = create(c, "2,2,3");
        for (int v : {6, 1}) ok += post(c, "/sessions/" + own + "/reflect", {{"vertex", v}})->status == 200;
        ok += c.Get("/sessions/" + shared + "/checks")->status == 200;
      }
    });
  for (auto& t : ts) t.join();
  // undo may race ahead of reflect and get 409, but no request may break the session
  auto st = body(c0.Get("/sessions/" + shared));
  Session ref("r", "2,3,4");
  ref.replay(st["history"].get<std::vector<int>>());
  json mine = ref.state();
  CHECK(mine["state"] == st["state"]);
  CHECK(ok >= 9);
  CHECK(sv.store.size() == 4);
}

TEST_CASE("snapshot persistence") {
  namespace fs = std::filesystem;
  const fs::path snap = fs::temp_directory_path() / ("wpl_snap_" + std::to_string(::getpid()) + ".json");
  fs::remove(snap);
  std::string id, before;
  {
    Served sv(snap.string());
    auto c = sv.client();
    id = create(c, "2,3,5");
    for (int v : {8, 1}) post(c, "/sessions/" + id + "/reflect", {{"vertex", v}});
    before = c.Get("/sessions/" + id)->body;
  }
  REQUIRE(fs::exists(snap));
  {
    Served sv(snap.string());
    auto c = sv.client();
    CHECK(c.Get("/sessions/" + id)->body == before);
    // fresh ids continue after the restored ones
    CHECK(create(c, "2,3") != id);
  }
  fs::remove(snap);
}
