#pragma once
// Routes of the JSON API on top of a SessionStore.

#include "wpl/session.hpp"

namespace httplib {
class Server;
}

namespace wpl {

// POST /sessions, GET /sessions/{id}, POST /sessions/{id}/reflect, POST /sessions/{id}/undo,
// GET /sessions/{id}/checks; optional static directory served at /
void install_routes(httplib::Server& srv, SessionStore& store, const std::string& static_dir = {});

}  // namespace wpl
