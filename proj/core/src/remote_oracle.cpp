// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/remote_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <semaphore>
#include <thread>

#include "httplib.h"
#include "nlohmann/json.hpp"

namespace beliefbank {

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("remote endpoint '" + url + "' needs a scheme");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

struct RemoteOracle::Impl {
  Impl(std::string url, RemoteConfig cfg)
      : endpoint(split_endpoint(url)),
        config(cfg),
        slots(static_cast<std::ptrdiff_t>(std::max<std::uint32_t>(1, cfg.max_in_flight))) {}

  Endpoint endpoint;
  RemoteConfig config;
  std::counting_semaphore<1024> slots;
};

std::string remote_request_body(const Query& query) {
  nlohmann::ordered_json body;
  body["question"] = query.question_text;
  body["context"] = query.context ? nlohmann::ordered_json(*query.context)
                                  : nlohmann::ordered_json(nullptr);
  body["options"] = {"yes", "no"};
  return body.dump();
}

OracleAnswer parse_remote_answer(const std::string& body) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw OracleError(OracleErrorKind::Malformed,
                      std::string("response is not JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw OracleError(OracleErrorKind::Malformed, "response is not an object");
  }
  const auto answer = doc.find("answer");
  if (answer == doc.end()) {
    throw OracleError(OracleErrorKind::Malformed, "response lacks 'answer'");
  }
  if (answer->is_null()) {
    throw OracleError(OracleErrorKind::Refusal, "model declined to answer");
  }
  if (!answer->is_string() ||
      (answer->get<std::string>() != "yes" && answer->get<std::string>() != "no")) {
    throw OracleError(OracleErrorKind::Malformed,
                      "'answer' must be \"yes\" or \"no\"");
  }
  const auto confidence = doc.find("confidence");
  if (confidence == doc.end() || !confidence->is_number()) {
    throw OracleError(OracleErrorKind::Malformed,
                      "'confidence' must be a number");
  }
  const double c = confidence->get<double>();
  if (!(c >= 0.0 && c <= 1.0)) {
    throw OracleError(OracleErrorKind::Malformed,
                      "'confidence' " + std::to_string(c) + " outside [0,1]");
  }
  return {to_label(answer->get<std::string>() == "yes"), c};
}

RemoteOracle::RemoteOracle(std::string endpoint, RemoteConfig config)
    : impl_(std::make_unique<Impl>(std::move(endpoint), config)) {}

RemoteOracle::~RemoteOracle() = default;

OracleAnswer RemoteOracle::ask_once(const Query& query) {
  const auto& cfg = impl_->config;
  httplib::Client client(impl_->endpoint.origin);
  const auto timeout = std::chrono::milliseconds(cfg.timeout_ms);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  requests_.fetch_add(1);
  impl_->slots.acquire();
  auto result = client.Post(impl_->endpoint.path, remote_request_body(query),
                            "application/json");
  impl_->slots.release();

  if (!result) {
    const auto err = result.error();
    if (err == httplib::Error::Read || err == httplib::Error::ConnectionTimeout) {
      throw OracleError(OracleErrorKind::Timeout, httplib::to_string(err));
    }
    throw OracleError(OracleErrorKind::Transport, httplib::to_string(err));
  }
  if (result->status < 200 || result->status >= 300) {
    throw OracleError(OracleErrorKind::Status,
                      "HTTP " + std::to_string(result->status),
                      result->status >= 500);
  }
  return parse_remote_answer(result->body);
}

OracleAnswer RemoteOracle::ask(const Query& query) {
  const auto& cfg = impl_->config;
  std::uint32_t backoff = cfg.backoff_ms;
  for (std::uint32_t attempt = 0;; ++attempt) {
    try {
      return ask_once(query);
    } catch (const OracleError& e) {
      if (!e.retriable() || attempt >= cfg.max_retries) throw;
    }
    retries_.fetch_add(1);
    std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
    backoff = std::min(cfg.max_backoff_ms, backoff * 2);
  }
}

OracleAnswer remote_ask(const std::string& endpoint, const Query& query,
                        const RemoteConfig& config) {
  RemoteOracle oracle(endpoint, config);
  return oracle.ask(query);
}

}  // namespace beliefbank
