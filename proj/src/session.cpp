#include "wpl/session.hpp"

#include <cstdio>
#include <fstream>

namespace wpl {

ApiError::ApiError(int s, const std::string& msg, json extra)
    : std::runtime_error(msg), status(s), body(std::move(extra)) {
  body["error"] = msg;
}

namespace {
json trace_json(const std::vector<Attempt>& tr) {
  json a = json::array();
  for (const auto& x : tr) a.push_back(to_json(x));
  return a;
}

json normalize_descriptor(const json& d) {
  // keep the request's own spelling out of the state; store the parsed form
  WeightDescriptor w = descriptor_from_json(d);
  json lam = json::array();
  for (const auto& l : w.lambdas()) lam.push_back(to_string(l));
  return {{"weights", w.weights()}, {"lambdas", lam}};
}
}  // namespace

Session::Session(std::string id, const json& descriptor) : id_(std::move(id)) {
  try {
    descriptor_ = normalize_descriptor(descriptor);
    k0_ = std::make_shared<K0>(descriptor_from_json(descriptor_));
  } catch (const std::exception& e) {
    throw ApiError(400, std::string("bad descriptor: ") + e.what());
  }
  states_.push_back(canonical_tilting(k0_));
}

json Session::state_locked() const {
  json j;
  j["id"] = id_;
  j["descriptor"] = descriptor_;
  j["history"] = history_;
  j["state"] = state_json(states_.back());
  return j;
}

json Session::state() {
  std::lock_guard lk(mu_);
  return state_locked();
}

json Session::reflect(const json& request) {
  if (!request.is_object() || !request.contains("vertex") || !request.at("vertex").is_number_integer())
    throw ApiError(400, "request needs an integer \"vertex\"");
  const int v = request.at("vertex").get<int>();
  std::lock_guard lk(mu_);
  try {
    auto r = huebner_reflect(states_.back(), v);
    states_.push_back(std::move(r.state));
    history_.push_back(v);
    steps_.push_back(r.report);
    json j = state_locked();
    j["step"] = to_json(r.report);
    return j;
  } catch (const ReflectionError& e) {
    if (e.kind == ReflectionError::Kind::InvalidVertex) throw ApiError(409, e.what());
    throw ApiError(422, e.what(), {{"trace", trace_json(e.trace)}});
  }
}

json Session::undo() {
  std::lock_guard lk(mu_);
  if (history_.empty()) throw ApiError(409, "nothing to undo");
  states_.pop_back();
  history_.pop_back();
  steps_.pop_back();
  // cached panels beyond this point belong to the abandoned branch
  checks_cache_.erase(checks_cache_.upper_bound(history_.size()), checks_cache_.end());
  return state_locked();
}

json Session::checks_locked() {
  auto it = checks_cache_.find(history_.size());
  if (it != checks_cache_.end()) return it->second;
  const auto& t = states_.back();
  auto rep = tilting_numeric_report(*k0_, t.datum);
  auto sp = spectral_report(*k0_, t.datum);
  int bij = 0, arrows = 0;
  for (const auto& a : bijection_profile(*k0_, t.datum)) {
    arrows += a.count;
    if (a.verdict == ArrowVerdict::Bijective) bij += a.count;
  }
  json j;
  j["width"] = rep.width ? to_string(*rep.width) : "undefined";
  j["pbar"] = std::to_string(k0_->descriptor().pbar());
  j["central_simples"] = std::to_string(rep.central_simples);
  j["central_simples_bound"] = std::to_string(k0_->n() - 2);
  j["canonical"] = rep.canonical;
  if (rep.canonical_twist) j["canonical_twist"] = k0_->descriptor().str(*rep.canonical_twist);
  j["homogeneous"] = sp.homogeneous;
  j["huebner_identities"] = rep.huebner_rank_identity && rep.huebner_dual_identity;
  j["bijective_arrows"] = std::to_string(bij);
  j["arrows"] = std::to_string(arrows);
  j["coxeter_polynomial"] = to_json(sp.coxeter_polynomial);
  checks_cache_[history_.size()] = j;
  return j;
}

json Session::checks() {
  std::lock_guard lk(mu_);
  json j = checks_locked();
  j["id"] = id_;
  j["history"] = history_;
  return j;
}

json Session::record() {
  std::lock_guard lk(mu_);
  return {{"id", id_}, {"descriptor", descriptor_}, {"history", history_}};
}

void Session::replay(const std::vector<int>& history) {
  for (int v : history) reflect({{"vertex", v}});
}

SessionStore::SessionStore(std::string snapshot_path) : snapshot_(std::move(snapshot_path)) {
  if (snapshot_.empty()) return;
  std::ifstream in(snapshot_);
  if (!in) return;
  json j = json::parse(in);
  next_ = j.value("next", 1L);
  for (const auto& s : j.at("sessions")) {
    auto sess = std::make_shared<Session>(s.at("id").get<std::string>(), s.at("descriptor"));
    sess->replay(s.at("history").get<std::vector<int>>());
    sessions_[sess->id()] = sess;
  }
}

json SessionStore::create(const json& request) {
  if (!request.is_object() || !request.contains("descriptor")) throw ApiError(400, "request needs \"descriptor\"");
  std::string id;
  {
    std::lock_guard lk(mu_);
    id = "s" + std::to_string(next_++);
  }
  auto s = std::make_shared<Session>(id, request.at("descriptor"));
  {
    std::lock_guard lk(mu_);
    sessions_[id] = s;
  }
  persist();
  return s->state();
}

std::shared_ptr<Session> SessionStore::get(const std::string& id) {
  std::lock_guard lk(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ApiError(404, "unknown session " + id);
  return it->second;
}

std::size_t SessionStore::size() {
  std::lock_guard lk(mu_);
  return sessions_.size();
}

void SessionStore::persist() {
  if (snapshot_.empty()) return;
  std::vector<std::shared_ptr<Session>> all;
  long next;
  {
    std::lock_guard lk(mu_);
    for (auto& [k, s] : sessions_) all.push_back(s);
    next = next_;
  }
  std::lock_guard plk(persist_mu_);
  json arr = json::array();
  for (auto& s : all) arr.push_back(s->record());
  const std::string tmp = snapshot_ + ".tmp";
  {
    std::ofstream out(tmp);
    out << json{{"next", next}, {"sessions", arr}}.dump(1) << "\n";
  }
  std::rename(tmp.c_str(), snapshot_.c_str());
}

}  // namespace wpl
