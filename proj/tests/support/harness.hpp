#pragma once

// Helpers for tests that drive the CLI binary and the HTTP service.

#include <httplib.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "sesforge/service/server.hpp"
#include "support.hpp"

namespace sesforge::testing {

struct ProcessResult {
    int code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

// Runs the sesforge CLI against `registry`, capturing stdout, stderr and the exit code.
inline ProcessResult run_cli(const std::filesystem::path& registry, const std::vector<std::string>& args) {
    static int counter = 0;
    const auto err_file = std::filesystem::temp_directory_path() /
                          ("sesforge-cli-stderr-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::string cmd = "SESFORGE_REGISTRY=" + shell_quote(registry.string()) + " " + shell_quote(SESFORGE_CLI);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>" + shell_quote(err_file.string());

    ProcessResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = read_file(err_file);
    std::filesystem::remove(err_file);
    return r;
}

// A service instance on an ephemeral port, served from a background thread.
class RunningService {
public:
    explicit RunningService(service::ServiceConfig cfg) : server_(prepare(std::move(cfg))) {
        port_ = server_.bind();
        thread_ = std::thread([this] { server_.run(); });
        server_.wait_until_ready();
    }

    ~RunningService() {
        server_.stop();
        thread_.join();
    }

    RunningService(const RunningService&) = delete;
    RunningService& operator=(const RunningService&) = delete;

    int port() const { return port_; }

    httplib::Client client() const {
        httplib::Client c("127.0.0.1", port_);
        c.set_read_timeout(30, 0);
        return c;
    }

private:
    static service::ServiceConfig prepare(service::ServiceConfig cfg) {
        cfg.host = "127.0.0.1";
        cfg.port = 0;
        return cfg;
    }

    service::Server server_;
    int port_ = 0;
    std::thread thread_;
};

inline std::string manifest_hash(const std::filesystem::path& registry) {
    return store::sha256_hex(read_file(registry / "manifest.txt"));
}

}  // namespace sesforge::testing
