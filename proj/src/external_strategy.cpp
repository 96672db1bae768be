#include "cce/external_strategy.hpp"

#include "cce/common.hpp"

#include <json.hpp>
#include <spdlog/spdlog.h>

#include <cerrno>
#include <csignal>
#include <cstring>
#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace cce {

using nlohmann::json;

ExternalClient::ExternalClient(std::string strategy_id, std::vector<std::string> argv,
                               std::chrono::milliseconds timeout)
    : id_(std::move(strategy_id)), argv_(std::move(argv)), timeout_(timeout) {
  if (argv_.empty()) throw ConfigError("external strategy '" + id_ + "': empty command");
}

ExternalClient::~ExternalClient() { stop(); }

void ExternalClient::start() {
  int in_pipe[2];
  int out_pipe[2];
  if (pipe(in_pipe) != 0) throw Error("external strategy: pipe failed");
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    throw Error("external strategy: pipe failed");
  }
  std::vector<char*> args;
  for (auto& a : argv_) args.push_back(a.data());
  args.push_back(nullptr);
  const pid_t pid = fork();
  if (pid < 0) throw Error("external strategy: fork failed");
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execvp(args[0], args.data());
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  fcntl(in_pipe[1], F_SETFD, FD_CLOEXEC);
  fcntl(out_pipe[0], F_SETFD, FD_CLOEXEC);
  pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  buffer_.clear();
}

void ExternalClient::stop() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  to_child_ = from_child_ = -1;
  if (pid_ > 0) {
    kill(pid_, SIGKILL);
    waitpid(pid_, nullptr, 0);
  }
  pid_ = -1;
}

bool ExternalClient::read_line(std::string& line,
                               std::chrono::steady_clock::time_point deadline) {
  for (;;) {
    if (auto nl = buffer_.find('\n'); nl != std::string::npos) {
      line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return true;
    }
    const auto left =
        std::chrono::ceil<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) return false;
    pollfd p{from_child_, POLLIN, 0};
    const int r = poll(&p, 1, static_cast<int>(left.count()));
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) return false;
    char buf[4096];
    const ssize_t n = read(from_child_, buf, sizeof buf);
    if (n <= 0) return false;
    buffer_.append(buf, static_cast<std::size_t>(n));
  }
}

std::vector<Candidate> ExternalClient::query(std::string_view context, std::size_t k) {
  if (k == 0) return {};
  if (pid_ < 0) start();
  const long request_id = next_request_++;
  const std::string request =
      json{{"id", request_id}, {"context", std::string(context)}, {"max_candidates", k}}.dump() +
      "\n";
  const auto deadline = std::chrono::steady_clock::now() + timeout_;
  std::signal(SIGPIPE, SIG_IGN);
  if (write(to_child_, request.data(), request.size()) != static_cast<ssize_t>(request.size())) {
    ++protocol_errors_;
    spdlog::error("external strategy '{}': write failed", id_);
    stop();
    return {};
  }
  std::string line;
  for (;;) {
    if (!read_line(line, deadline)) {
      ++timeouts_;
      spdlog::warn("external strategy '{}': no response to request {} within {} ms", id_,
                   request_id, timeout_.count());
      stop();
      return {};
    }
    json resp = json::parse(line, nullptr, false);
    if (resp.is_discarded() || !resp.is_object() || !resp.contains("id") ||
        !resp["id"].is_number_integer()) {
      ++protocol_errors_;
      spdlog::error("external strategy '{}': malformed response", id_);
      return {};
    }
    if (resp["id"].get<long>() < request_id) continue;  // stale answer to a timed-out request
    if (resp["id"].get<long>() != request_id || !resp.contains("candidates") ||
        !resp["candidates"].is_array()) {
      ++protocol_errors_;
      spdlog::error("external strategy '{}': malformed response", id_);
      return {};
    }
    std::vector<RankedEntry> entries;
    for (const auto& c : resp["candidates"]) {
      if (entries.size() == k) break;
      if (!c.is_object() || !c.contains("text") || !c["text"].is_string() ||
          c["text"].get<std::string>().empty()) {
        ++protocol_errors_;
        spdlog::error("external strategy '{}': malformed candidate", id_);
        return {};
      }
      RankedEntry e{c["text"].get<std::string>(), {}};
      if (c.contains("scores")) {
        if (!c["scores"].is_object()) {
          ++protocol_errors_;
          spdlog::error("external strategy '{}': malformed scores", id_);
          return {};
        }
        for (const auto& [dim, v] : c["scores"].items()) {
          if (!v.is_number()) {
            ++protocol_errors_;
            spdlog::error("external strategy '{}': non-numeric score '{}'", id_, dim);
            return {};
          }
          e.scores.emplace(id_ + "." + dim, v.get<double>());
        }
      }
      entries.push_back(std::move(e));
    }
    return make_candidates(id_, std::move(entries));
  }
}

ExternalStrategy::ExternalStrategy(std::string id, std::vector<std::string> argv,
                                   std::vector<std::string> dimensions, std::string primary,
                                   std::chrono::milliseconds timeout)
    : id_(std::move(id)),
      argv_(std::move(argv)),
      dimensions_(std::move(dimensions)),
      primary_(std::move(primary)),
      timeout_(timeout) {}

std::vector<std::string> ExternalStrategy::dimensions() const {
  std::vector<std::string> out;
  for (const auto& d : dimensions_) out.push_back(id_ + "." + d);
  return out;
}

namespace {

class ExternalSession final : public StrategySession {
 public:
  ExternalSession(std::string id, std::vector<std::string> argv, std::chrono::milliseconds t)
      : id_(id), client_(std::move(id), std::move(argv), t) {}
  std::string_view id() const override { return id_; }
  std::vector<Candidate> query(std::string_view prefix, std::size_t k) override {
    return client_.query(prefix, k);
  }

 private:
  std::string id_;
  ExternalClient client_;
};

}  // namespace

std::unique_ptr<StrategySession> ExternalStrategy::new_session() const {
  return std::make_unique<ExternalSession>(id_, argv_, timeout_);
}

}  // namespace cce
