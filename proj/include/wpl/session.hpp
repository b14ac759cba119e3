#pragma once
// In-memory reflection sessions behind the HTTP API.  Every response is a
// function of (descriptor, history); the stored states only save recomputation.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wpl/json_io.hpp"
#include "wpl/tilting.hpp"

namespace wpl {

struct ApiError : std::runtime_error {
  int status;
  json body;
  ApiError(int s, const std::string& msg, json extra = json::object());
};

class Session {
 public:
  Session(std::string id, const json& descriptor);

  const std::string& id() const { return id_; }
  json state();                       // GET /sessions/{id}
  json reflect(const json& request);  // {"vertex": n}
  json undo();
  json checks();                      // live invariant panel
  json record();                      // {id, descriptor, history} for snapshots
  void replay(const std::vector<int>& history);

 private:
  json state_locked() const;
  json checks_locked();

  std::mutex mu_;
  std::string id_;
  json descriptor_;
  std::shared_ptr<const K0> k0_;
  std::vector<ConcreteTilting> states_;  // states_[0] is T_can
  std::vector<int> history_;
  std::vector<StepReport> steps_;
  std::map<std::size_t, json> checks_cache_;  // keyed by history length
};

class SessionStore {
 public:
  explicit SessionStore(std::string snapshot_path = {});

  json create(const json& request);  // {"descriptor": ...}
  std::shared_ptr<Session> get(const std::string& id);
  void persist();                    // no-op without a snapshot path
  std::size_t size();

 private:
  std::mutex mu_, persist_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  long next_ = 1;
  std::string snapshot_;
};

}  // namespace wpl
