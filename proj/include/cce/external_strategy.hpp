#pragma once

#include "cce/candidate.hpp"

#include <chrono>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

// Client for a child process speaking newline-delimited JSON on its
// standard streams. Request:
//   {"id":<int>,"context":<string>,"max_candidates":<int>}
// Response:
//   {"id":<int>,"candidates":[{"text":<string>,"scores":{<dim>:<float>}}]}
// Score dimensions come back namespaced as "<strategy id>.<dim>".
class ExternalClient {
 public:
  ExternalClient(std::string strategy_id, std::vector<std::string> argv,
                 std::chrono::milliseconds timeout = std::chrono::milliseconds(2000));
  ~ExternalClient();
  ExternalClient(const ExternalClient&) = delete;
  ExternalClient& operator=(const ExternalClient&) = delete;

  // Timeouts and protocol errors yield an empty list and a log line. After
  // a timeout the child is restarted on the next call.
  std::vector<Candidate> query(std::string_view context, std::size_t k);

  std::size_t timeouts() const { return timeouts_; }
  std::size_t protocol_errors() const { return protocol_errors_; }

 private:
  void start();
  void stop();
  bool read_line(std::string& line, std::chrono::steady_clock::time_point deadline);

  std::string id_;
  std::vector<std::string> argv_;
  std::chrono::milliseconds timeout_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  long next_request_ = 1;
  std::size_t timeouts_ = 0;
  std::size_t protocol_errors_ = 0;
};

class ExternalStrategy final : public Strategy {
 public:
  ExternalStrategy(std::string id, std::vector<std::string> argv,
                   std::vector<std::string> dimensions, std::string primary,
                   std::chrono::milliseconds timeout = std::chrono::milliseconds(2000));

  std::string_view id() const override { return id_; }
  std::vector<std::string> dimensions() const override;
  std::string primary_dimension() const override { return id_ + "." + primary_; }
  // Each session owns one child process.
  std::unique_ptr<StrategySession> new_session() const override;

 private:
  std::string id_;
  std::vector<std::string> argv_;
  std::vector<std::string> dimensions_;
  std::string primary_;
  std::chrono::milliseconds timeout_;
};

}  // namespace cce
