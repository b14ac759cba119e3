#include "wpl/http_api.hpp"

#include <httplib.h>

namespace wpl {

namespace {
void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json; charset=utf-8");
}

template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const ApiError& e) {
      send(res, e.status, e.body);
    } catch (const json::exception& e) {
      send(res, 400, {{"error", std::string("malformed JSON: ") + e.what()}});
    } catch (const std::exception& e) {
      send(res, 500, {{"error", e.what()}});
    }
  };
}

json body_of(const httplib::Request& req) { return req.body.empty() ? json::object() : json::parse(req.body); }
}  // namespace

void install_routes(httplib::Server& srv, SessionStore& store, const std::string& static_dir) {
  srv.Post("/sessions", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    send(res, 201, store.create(body_of(req)));
  }));
  srv.Get(R"(/sessions/([^/]+))", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    send(res, 200, store.get(req.matches[1])->state());
  }));
  srv.Post(R"(/sessions/([^/]+)/reflect)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    auto s = store.get(req.matches[1]);
    json out = s->reflect(body_of(req));
    store.persist();
    send(res, 200, out);
  }));
  srv.Post(R"(/sessions/([^/]+)/undo)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    auto s = store.get(req.matches[1]);
    json out = s->undo();
    store.persist();
    send(res, 200, out);
  }));
  srv.Get(R"(/sessions/([^/]+)/checks)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    send(res, 200, store.get(req.matches[1])->checks());
  }));
  if (!static_dir.empty()) srv.set_mount_point("/", static_dir);
}

}  // namespace wpl
