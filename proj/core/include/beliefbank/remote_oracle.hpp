// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

#include "beliefbank/oracle.hpp"

namespace beliefbank {

struct RemoteConfig {
  std::uint32_t timeout_ms = 5000;
  std::uint32_t max_retries = 3;
  std::uint32_t backoff_ms = 100;
  std::uint32_t max_backoff_ms = 2000;
  std::uint32_t max_in_flight = 8;
};

/// Client for a model served over HTTP.
///
/// POSTs {"question", "context", "options": ["yes","no"]} and expects
/// {"answer": "yes"|"no", "confidence": [0,1]}. Timeouts, connection
/// failures and 5xx statuses are retried with capped exponential backoff;
/// malformed bodies and refusals ("answer": null) are not.
class RemoteOracle : public Oracle {
 public:
  /// `endpoint` is a full URL, e.g. "http://localhost:8080/ask".
  RemoteOracle(std::string endpoint, RemoteConfig config = {});
  ~RemoteOracle() override;

  RemoteOracle(const RemoteOracle&) = delete;
  RemoteOracle& operator=(const RemoteOracle&) = delete;

  OracleAnswer ask(const Query& query) override;

  /// Retries performed across all calls so far.
  std::uint64_t retries() const { return retries_.load(); }
  std::uint64_t requests() const { return requests_.load(); }

 private:
  OracleAnswer ask_once(const Query& query);

  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::atomic<std::uint64_t> retries_{0};
  std::atomic<std::uint64_t> requests_{0};
};

/// One-shot call with a fresh client.
OracleAnswer remote_ask(const std::string& endpoint, const Query& query,
                        const RemoteConfig& config = {});

/// Parses a response body, enforcing the answer/confidence contract.
OracleAnswer parse_remote_answer(const std::string& body);

/// Request body for a query.
std::string remote_request_body(const Query& query);

}  // namespace beliefbank
